#pragma once

#include <string>
#include <vector>

#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "mnf/nerve.hpp"

namespace battery {

struct Named {
  std::string name;
  mnf::MnfComplex complex;
};

// The fixed list of spheres used across the tests.
inline std::vector<Named> spheres() {
  using namespace mnf;
  std::vector<Named> out;
  out.push_back({"pentagon", MnfComplex::from_labels(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}})});
  for (int d = 2; d <= 5; ++d) out.push_back({"pd" + std::to_string(d), pd_sphere(d)});
  for (int d = 1; d <= 5; ++d) out.push_back({"cross" + std::to_string(d), cross_polytope(d)});
  for (int k = 1; k <= 5; ++k) out.push_back({"simplex" + std::to_string(k), simplex_boundary(k)});
  out.push_back({"cyclic4_7", cyclic_boundary(4, 7)});
  out.push_back({"cyclic6_9", cyclic_boundary(6, 9)});
  for (int m : {5, 7, 9}) out.push_back({"codim3_" + std::to_string(m), codim3_sphere(m)});
  return out;
}

// Nerves compared up to renumbering the minimal non-faces.
inline mnf::CanonicalKey nerve_key(const mnf::MnfComplex& c) {
  // each facet gets a private extra vertex so every set has at least two elements
  const auto nv = mnf::nerve(c);
  const int f = static_cast<int>(nv.facets.size());
  std::vector<mnf::VertexSet> sets;
  for (int j = 0; j < f; ++j) sets.push_back(nv.facets[j].with(nv.m + j));
  return mnf::canonical_key(mnf::MnfComplex(nv.m + f, sets));
}

}  // namespace battery
