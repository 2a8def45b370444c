#pragma once

#include <vector>

#include "mnf/complex.hpp"

namespace mnf {

/// A complex on a compacted ground set together with the map back to the
/// vertices of the complex it came from (to_original[new] = old, 0-based).
struct Relabeled {
  MnfComplex complex;
  std::vector<int> to_original;
};

/// Vertices of b are shifted by a.n().
MnfComplex join(const MnfComplex& a, const MnfComplex& b);
/// Doubles vertex v (0-based). The new vertex is n.
MnfComplex one_point_suspension(const MnfComplex& c, int v);
/// join(c, ∂Δ¹); the new vertices are n and n+1.
MnfComplex two_point_suspension(const MnfComplex& c);
/// Throws NotAFace unless f is a face.
Relabeled link(const MnfComplex& c, VertexSet f);
Relabeled induced(const MnfComplex& c, VertexSet w);

// Named families. Vertex layout for the cross-polytope based ones:
// x_i = 2i-2, y_i = 2i-1 (0-based), apex = 2d.

/// ∂Δᵏ on k+1 vertices; k = 0 gives {∅}.
MnfComplex simplex_boundary(int k);
MnfComplex cross_polytope(int d);
/// Cross-polytope with a pyramid over the facet {x_1..x_d}; α = d.
MnfComplex pd_sphere(int d);
/// Boundary of the cyclic d-polytope on n vertices (Gale evenness).
MnfComplex cyclic_boundary(int d, int n);
/// Codimension-3 sphere with cyclic-window non-faces; m odd, m >= 5.
MnfComplex codim3_sphere(int m);
/// Boundary of the k-th cross-polytope minus the facet {x_1..x_k}.
MnfComplex cross_minus_facet(int k);
/// Facets of the cyclic polytope boundary via Gale's evenness condition.
std::vector<VertexSet> gale_facets(int d, int n);

}  // namespace mnf
