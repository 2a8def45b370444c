#include "linalg.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>

namespace mnf::detail {

std::int64_t rank_gf2(const std::vector<SparseRow>& rows, std::size_t ncols) {
  const std::size_t words = (ncols + 63) / 64;
  if (words == 0) return 0;
  // pivot_at[c] = offset of the stored pivot row whose lowest set bit is c
  std::vector<std::int64_t> pivot_at(ncols, -1);
  std::vector<std::uint64_t> pivots;
  std::vector<std::uint64_t> row(words);
  std::int64_t rank = 0;
  for (const auto& sparse : rows) {
    std::fill(row.begin(), row.end(), 0);
    for (auto [col, val] : sparse) {
      if (val & 1) row[col / 64] ^= std::uint64_t{1} << (col % 64);
    }
    std::size_t w = 0;
    for (;;) {
      while (w < words && row[w] == 0) ++w;
      if (w == words) break;
      const std::size_t lead = w * 64 + std::countr_zero(row[w]);
      const std::int64_t at = pivot_at[lead];
      if (at < 0) {
        pivot_at[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.insert(pivots.end(), row.begin(), row.end());
        ++rank;
        break;
      }
      // bits below `lead` are zero in both rows
      for (std::size_t k = w; k < words; ++k) row[k] ^= pivots[at + k];
    }
  }
  return rank;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::int64_t rank_mod_p(const std::vector<SparseRow>& rows, std::uint32_t p) {
  using Row = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::uint32_t max_col = 0;
  for (const auto& r : rows)
    for (auto [c, v] : r) max_col = std::max(max_col, c + 1);
  std::vector<std::int64_t> pivot_of(max_col, -1);
  std::vector<Row> pivots;
  Row row, next;
  for (const auto& sparse : rows) {
    row.clear();
    for (auto [c, v] : sparse) {
      std::int64_t val = v % static_cast<std::int64_t>(p);
      if (val < 0) val += p;
      if (val) row.emplace_back(c, static_cast<std::uint32_t>(val));
    }
    while (!row.empty()) {
      const std::int64_t at = pivot_of[row.front().first];
      if (at < 0) {
        // normalize so the lead coefficient is 1
        const std::uint32_t inv = inverse_mod(row.front().second, p);
        for (auto& [c, v] : row) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const Row& piv = pivots[at];
      const std::uint64_t factor = row.front().second;  // piv lead is 1
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          next.push_back(row[i++]);
        } else {
          std::uint64_t sub = factor * piv[j].second % p;
          std::uint64_t base = 0;
          std::uint32_t col = piv[j].first;
          if (i < row.size() && row[i].first == col) base = row[i++].second;
          ++j;
          std::uint32_t val = static_cast<std::uint32_t>((base + p - sub) % p);
          if (val) next.emplace_back(col, val);
        }
      }
      std::swap(row, next);
    }
  }
  return static_cast<std::int64_t>(pivots.size());
}

std::int64_t rank_rational(const std::vector<SparseRow>& rows) {
  using boost::multiprecision::cpp_int;
  using Row = std::vector<std::pair<std::uint32_t, cpp_int>>;
  std::uint32_t max_col = 0;
  for (const auto& r : rows)
    for (auto [c, v] : r) max_col = std::max(max_col, c + 1);
  std::vector<std::int64_t> pivot_of(max_col, -1);
  std::vector<Row> pivots;
  Row row, next;
  for (const auto& sparse : rows) {
    row.clear();
    for (auto [c, v] : sparse) {
      if (v != 0) row.emplace_back(c, cpp_int(v));
    }
    while (!row.empty()) {
      const std::int64_t at = pivot_of[row.front().first];
      if (at < 0) {
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const Row& piv = pivots[at];
      // row := a*row - b*piv with a = lead(piv), b = lead(row); no fractions
      const cpp_int a = piv.front().second;
      const cpp_int b = row.front().second;
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          next.emplace_back(row[i].first, a * row[i].second);
          ++i;
        } else {
          cpp_int val = -b * piv[j].second;
          std::uint32_t col = piv[j].first;
          if (i < row.size() && row[i].first == col) val += a * row[i++].second;
          ++j;
          if (val != 0) next.emplace_back(col, std::move(val));
        }
      }
      cpp_int g = 0;
      for (const auto& [c, v] : next) g = gcd(g, abs(v));
      if (g > 1)
        for (auto& [c, v] : next) v /= g;
      std::swap(row, next);
    }
  }
  return static_cast<std::int64_t>(pivots.size());
}

}  // namespace mnf::detail
