#pragma once

// Exact rank computations for boundary matrices. Rows are given sparsely as
// (column, coefficient) pairs with columns strictly increasing.

#include <cstdint>
#include <utility>
#include <vector>

namespace mnf::detail {

using SparseRow = std::vector<std::pair<std::uint32_t, std::int32_t>>;

/// Rank over GF(2) by elimination on bit-packed rows.
std::int64_t rank_gf2(const std::vector<SparseRow>& rows, std::size_t ncols);
/// Rank over GF(p), p an odd prime below 2^16.
std::int64_t rank_mod_p(const std::vector<SparseRow>& rows, std::uint32_t p);
/// Rank over the rationals by fraction-free elimination on big integers.
std::int64_t rank_rational(const std::vector<SparseRow>& rows);

}  // namespace mnf::detail
