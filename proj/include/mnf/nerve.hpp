#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mnf/complex.hpp"

namespace mnf {

/**
 * Nerve of the minimal non-faces: a complex on [m] in which a set of indices
 * is a face iff the corresponding non-faces share a vertex. Stored by its
 * facets in normal order.
 */
struct NerveComplex {
  int m = 0;
  std::vector<VertexSet> facets;

  bool is_face(VertexSet s) const;
  /// Largest facet size minus one; -1 when m = 0.
  int dimension() const;
  /// Edges of the 1-skeleton, as index pairs.
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const NerveComplex&) const = default;
};

NerveComplex nerve(const MnfComplex& c);

/// F_v = { j : v ∈ M_j } for every vertex v.
std::vector<VertexSet> facet_sets(const MnfComplex& c);

/// Complex whose vertex/non-face incidence is the transpose of the nerve's
/// facet/vertex incidence. Throws Irrecoverable when some nerve vertex lies
/// in fewer than two facets.
MnfComplex transpose_reconstruct(const NerveComplex& nv);

/// Every pair of vertices is separated by some minimal non-face; false when
/// n >= 2 and some vertex lies in no non-face.
bool is_point_separating(const MnfComplex& c);

struct UnsuspensionStep {
  enum class Kind { RemoveIsolated, MergeDoubledVertex };
  Kind kind;
  /// RemoveIsolated: the removed non-face, in the labels of the input.
  VertexSet set;
  /// MergeDoubledVertex: the vertex kept (-1 when the removed vertex lay in
  /// no non-face) and the vertex removed, in the labels of the input.
  int kept = -1;
  int removed = -1;
  bool operator==(const UnsuspensionStep&) const = default;
};

struct UnsuspensionLog {
  /// Vertices of the input that survive, in increasing order; the reduced
  /// complex uses their positions in this list as labels.
  std::vector<int> survivors;
  std::vector<UnsuspensionStep> steps;
};

struct Unsuspension {
  MnfComplex reduced;
  UnsuspensionLog log;
};

/// Removes isolated non-faces, doubled vertices and vertices in no non-face.
Unsuspension unsuspend(const MnfComplex& c);
/// Re-applies the suspensions recorded in `log` to `reduced`; the result
/// equals the original input of unsuspend.
MnfComplex replay(const MnfComplex& reduced, const UnsuspensionLog& log);

struct JoinDecomposition {
  /// One factor per connected component of the nerve, each with the map back
  /// to the input's vertices.
  std::vector<MnfComplex> factors;
  std::vector<std::vector<int>> factor_vertices;
  /// Full simplex on the vertices in no non-face (n = 0 if there are none).
  MnfComplex free_simplex;
  std::vector<int> free_vertices;
};

JoinDecomposition join_decompose(const MnfComplex& c);
bool is_join_irreducible(const MnfComplex& c);

int nerve_max_degree(const MnfComplex& c);
/// Maximum number of pairwise disjoint edges of the nerve's 1-skeleton.
int nerve_matching_number(const MnfComplex& c);
int matching_number(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Largest k such that the nerve has a k-simplex facet T whose every vertex
/// lies in exactly one further facet, an edge leaving T.
std::optional<int> detect_pd_pattern(const NerveComplex& nv);

/// DOT graph of the nerve: one node per non-face, one edge per intersecting
/// pair labeled by the shared vertices.
std::string nerve_dot(const MnfComplex& c);

}  // namespace mnf
