#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mnf/vertex_set.hpp"

namespace mnf {

/**
 * A simplicial complex on the ground set {0, ..., n-1}, represented by its
 * minimal non-faces. The non-faces form an antichain of sets of size >= 2 and
 * are kept in normal order, so two equal complexes compare equal.
 *
 * The complex {∅} is `MnfComplex(0, {})`. The void complex has no
 * representation.
 */
class MnfComplex {
 public:
  MnfComplex() = default;
  /// Validates and normal-orders `sets`. Throws RangeViolation,
  /// SizeViolation or AntichainViolation.
  MnfComplex(int n, std::vector<VertexSet> sets);
  /// Same, from 1-based label lists.
  static MnfComplex from_labels(int n, const std::vector<std::vector<int>>& sets);
  /// Complex whose maximal faces are `facets` (which need not be an antichain).
  /// Every vertex of [n] must lie in some facet.
  static MnfComplex from_facets(int n, std::span<const VertexSet> facets);

  int n() const { return n_; }
  int m() const { return static_cast<int>(mnf_.size()); }
  std::span<const VertexSet> mnf() const { return mnf_; }
  const VertexSet& operator[](int i) const { return mnf_[i]; }
  VertexSet ground() const { return VertexSet::range(n_); }

  bool operator==(const MnfComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> mnf_;
};

/// Throws RangeViolation unless `s` ⊆ [n].
void check_range(const MnfComplex& c, VertexSet s);

bool is_face(const MnfComplex& c, VertexSet s);

/// Calls `f(face)` for every face, the empty face first, each face before its
/// supersets. Throws TooLarge after `limit` faces.
void for_each_face(const MnfComplex& c, const std::function<void(VertexSet)>& f,
                   std::size_t limit = std::size_t{1} << 24);
/// All faces in normal order.
std::vector<VertexSet> faces(const MnfComplex& c);
/// All inclusion-maximal faces, in normal order.
std::vector<VertexSet> facets(const MnfComplex& c);

/// Maximal face size minus one; -1 for {∅}.
int dimension(const MnfComplex& c);
/// dimension + 1
inline int d_of(const MnfComplex& c) { return dimension(c) + 1; }
bool is_pure(const MnfComplex& c);
/// Number of faces with k vertices, for k = 0 .. dimension+1.
std::vector<std::int64_t> f_vector(const MnfComplex& c);
/// m - (n - d)
int alpha(const MnfComplex& c);
/// Some vertex lies in no minimal non-face.
bool is_cone(const MnfComplex& c);
/// Number of minimal non-faces containing each vertex.
std::vector<int> vertex_degrees(const MnfComplex& c);

/// Rename vertex v to perm[v]; perm must be a permutation of [n].
MnfComplex relabel(const MnfComplex& c, std::span<const int> perm);

std::string to_string(const MnfComplex& c);

}  // namespace mnf
