#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mnf/complex.hpp"
#include "mnf/homology.hpp"

namespace mnf {

/// Largest number of minimal non-faces accepted by the lattice code.
inline constexpr int kMaxLatticeGenerators = 24;

/**
 * The lattice of all unions of minimal non-faces, ordered by inclusion, with
 * ∅ as its bottom. `below(k)` is the set of non-face indices i with
 * M_i ⊆ element(k), as a bitmask over [m].
 */
class LcmLattice {
 public:
  /// Throws TooLarge if c has more than kMaxLatticeGenerators non-faces.
  explicit LcmLattice(const MnfComplex& c);

  int size() const { return static_cast<int>(elements_.size()); }
  /// Elements in normal order; element(0) is ∅.
  const std::vector<VertexSet>& elements() const { return elements_; }
  VertexSet element(int k) const { return elements_[k]; }
  std::uint32_t below(int k) const { return below_[k]; }
  std::optional<int> index_of(VertexSet s) const;
  bool contains(VertexSet s) const { return index_of(s).has_value(); }
  VertexSet top() const { return elements_.back(); }
  int n() const { return n_; }
  int m() const { return m_; }
  /// The i-th minimal non-face (atom of the lattice).
  VertexSet generator(int i) const { return generators_[i]; }

 private:
  int n_;
  int m_;
  std::vector<VertexSet> elements_;
  std::vector<std::uint32_t> below_;
  std::vector<VertexSet> generators_;
};

/// An abstract simplicial complex on vertices 0..num_vertices-1 given by its
/// faces (chains of the interval), the empty face included.
struct OrderComplex {
  /// Lattice indices of the vertices.
  std::vector<int> vertices;
  std::vector<std::vector<std::uint32_t>> faces;
};

/// Order complex of the open interval (∅, s). Throws NotInLattice.
OrderComplex interval_order_complex(const LcmLattice& l, VertexSet s);

/// dim H̃_i((∅,s)) over f if s ∈ L, else 0. By convention h_{-2}(∅) = 1.
std::int64_t lattice_h(const LcmLattice& l, int i, VertexSet s, FieldSpec f = FieldSpec::gf2());
std::int64_t lattice_h(const MnfComplex& c, int i, VertexSet s, FieldSpec f = FieldSpec::gf2());

/// All h_i(s) for one s ∈ L, as reduced Betti numbers of the interval.
/// Computed on the crosscut complex of the atoms below s. Throws NotInLattice.
BettiVector interval_homology(const LcmLattice& l, VertexSet s, FieldSpec f = FieldSpec::gf2());
/// Same numbers from the full order complex of chains; slow, used for checking.
BettiVector interval_homology_by_chains(const LcmLattice& l, VertexSet s, FieldSpec f = FieldSpec::gf2());

/// Nonzero multigraded Betti numbers β_{i,S} = h_{i-2}(S).
class BettiTable {
 public:
  void set(int i, VertexSet s, std::int64_t value);
  std::int64_t at(int i, VertexSet s) const;
  const std::map<std::pair<int, VertexSet>, std::int64_t>& entries() const { return entries_; }
  /// β_0, β_1, ..., up to the last nonzero index.
  std::vector<std::int64_t> totals() const;

 private:
  std::map<std::pair<int, VertexSet>, std::int64_t> entries_;
};

BettiTable betti_table(const MnfComplex& c, FieldSpec f = FieldSpec::gf2());

struct DualityViolation {
  int i;
  VertexSet s;
  std::int64_t left;   // h_{i-2}(S)
  std::int64_t right;  // h_{n-d-i-2}(S̄)
  bool operator==(const DualityViolation&) const = default;
};

/// Checks h_{i-2}(S) = h_{n-d-i-2}(S̄) for S ∈ L ∪ {complements of L} and
/// 0 <= i <= n-d. Empty result iff the identity holds everywhere.
std::vector<DualityViolation> check_duality(const MnfComplex& c, FieldSpec f = FieldSpec::gf2());

}  // namespace mnf
