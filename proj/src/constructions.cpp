#include "mnf/constructions.hpp"

#include <algorithm>
#include <string>

#include "mnf/errors.hpp"

namespace mnf {

namespace {

VertexSet shift(VertexSet s, int by) { return VertexSet(s.bits() << by); }

// Restricts `sets` to the vertices in `keep` and renumbers them 0..|keep|-1.
VertexSet compress(VertexSet s, const std::vector<int>& new_label) {
  VertexSet t;
  s.for_each([&](int v) { t = t.with(new_label[v]); });
  return t;
}

Relabeled compact(int n, VertexSet keep, const std::vector<VertexSet>& sets) {
  std::vector<int> new_label(n, -1);
  std::vector<int> to_original;
  keep.for_each([&](int v) {
    new_label[v] = static_cast<int>(to_original.size());
    to_original.push_back(v);
  });
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(compress(s, new_label));
  return {MnfComplex(static_cast<int>(to_original.size()), std::move(out)), std::move(to_original)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

MnfComplex join(const MnfComplex& a, const MnfComplex& b) {
  if (a.n() + b.n() > kMaxVertices) throw TooLarge("join exceeds " + std::to_string(kMaxVertices) + " vertices");
  std::vector<VertexSet> sets(a.mnf().begin(), a.mnf().end());
  for (VertexSet s : b.mnf()) sets.push_back(shift(s, a.n()));
  return MnfComplex(a.n() + b.n(), std::move(sets));
}

MnfComplex one_point_suspension(const MnfComplex& c, int v) {
  if (v < 0 || v >= c.n()) throw RangeViolation("suspension vertex outside the ground set");
  if (c.n() + 1 > kMaxVertices) throw TooLarge("suspension exceeds vertex limit");
  std::vector<VertexSet> sets;
  sets.reserve(c.m());
  for (VertexSet s : c.mnf()) sets.push_back(s.contains(v) ? s.with(c.n()) : s);
  return MnfComplex(c.n() + 1, std::move(sets));
}

MnfComplex two_point_suspension(const MnfComplex& c) { return join(c, simplex_boundary(1)); }

Relabeled link(const MnfComplex& c, VertexSet f) {
  if (!is_face(c, f)) throw NotAFace(f.to_string() + " is not a face");
  VertexSet verts;
  for (int v = 0; v < c.n(); ++v) {
    if (!f.contains(v) && is_face(c, f.with(v))) verts = verts.with(v);
  }
  std::vector<VertexSet> restricted;
  for (VertexSet s : c.mnf()) {
    VertexSet t = s - f;
    if (t.is_subset_of(verts)) restricted.push_back(t);
  }
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
  std::vector<VertexSet> minimal;
  for (VertexSet t : restricted) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](VertexSet u) { return u.is_subset_of(t); }))
      minimal.push_back(t);
  }
  return compact(c.n(), verts, minimal);
}

Relabeled induced(const MnfComplex& c, VertexSet w) {
  check_range(c, w);
  std::vector<VertexSet> sets;
  for (VertexSet s : c.mnf()) {
    if (s.is_subset_of(w)) sets.push_back(s);
  }
  return compact(c.n(), w, sets);
}

MnfComplex simplex_boundary(int k) {
  require(k >= 0, "simplex_boundary needs k >= 0");
  if (k == 0) return MnfComplex(0, {});
  if (k + 1 > kMaxVertices) throw TooLarge("simplex exceeds vertex limit");
  return MnfComplex(k + 1, {VertexSet::range(k + 1)});
}

MnfComplex cross_polytope(int d) {
  require(d >= 1, "cross_polytope needs d >= 1");
  if (2 * d > kMaxVertices) throw TooLarge("cross-polytope exceeds vertex limit");
  std::vector<VertexSet> sets;
  for (int i = 0; i < d; ++i) sets.push_back(VertexSet{2 * i, 2 * i + 1});
  return MnfComplex(2 * d, std::move(sets));
}

MnfComplex pd_sphere(int d) {
  require(d >= 2, "pd_sphere needs d >= 2");
  if (2 * d + 1 > kMaxVertices) throw TooLarge("pd_sphere exceeds vertex limit");
  const int apex = 2 * d;
  std::vector<VertexSet> sets;
  VertexSet xs;
  for (int i = 0; i < d; ++i) {
    sets.push_back(VertexSet{2 * i, 2 * i + 1});
    sets.push_back(VertexSet{apex, 2 * i + 1});
    xs = xs.with(2 * i);
  }
  sets.push_back(xs);
  return MnfComplex(2 * d + 1, std::move(sets));
}

std::vector<VertexSet> gale_facets(int d, int n) {
  require(d >= 1 && n >= d + 1, "cyclic polytope needs n >= d+1 >= 2");
  if (n > 24) throw TooLarge("cyclic polytope limited to 24 vertices");
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s(bits);
    if (s.size() != d) continue;
    bool even = true;
    int last_gap = -1;
    int between = 0;
    for (int v = 0; v < n && even; ++v) {
      if (s.contains(v)) {
        ++between;
      } else {
        if (last_gap >= 0 && between % 2 != 0) even = false;
        last_gap = v;
        between = 0;
      }
    }
    if (even) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MnfComplex cyclic_boundary(int d, int n) {
  auto fs = gale_facets(d, n);
  return MnfComplex::from_facets(n, fs);
}

MnfComplex codim3_sphere(int m) {
  if (m < 5 || m % 2 == 0) throw InvalidParameter("m must be odd ≥ 5");
  if (m > kMaxVertices) throw TooLarge("codim3 sphere exceeds vertex limit");
  const int s = (m + 1) / 2;
  std::vector<VertexSet> sets;
  for (int i = 1; i <= m; ++i) {
    VertexSet w;
    for (int j = 1; j <= s - 1; ++j) w = w.with((i + j - 1) % m);  // ν(i+j), 0-based
    sets.push_back(w);
  }
  return MnfComplex(m, std::move(sets));
}

MnfComplex cross_minus_facet(int k) {
  require(k >= 2, "cross_minus_facet needs k >= 2");
  if (2 * k > kMaxVertices) throw TooLarge("cross_minus_facet exceeds vertex limit");
  std::vector<VertexSet> sets;
  VertexSet xs;
  for (int i = 0; i < k; ++i) {
    sets.push_back(VertexSet{2 * i, 2 * i + 1});
    xs = xs.with(2 * i);
  }
  sets.push_back(xs);
  return MnfComplex(2 * k, std::move(sets));
}

}  // namespace mnf
