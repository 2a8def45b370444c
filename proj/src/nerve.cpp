#include "mnf/nerve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mnf/constructions.hpp"
#include "mnf/errors.hpp"

namespace mnf {

namespace {

std::vector<std::uint64_t> adjacency(const MnfComplex& c) {
  std::vector<std::uint64_t> adj(c.m(), 0);
  for (int j = 0; j < c.m(); ++j)
    for (int k = j + 1; k < c.m(); ++k)
      if (c[j].intersects(c[k])) {
        adj[j] |= std::uint64_t{1} << k;
        adj[k] |= std::uint64_t{1} << j;
      }
  return adj;
}

void check_nerve_size(const MnfComplex& c) {
  if (c.m() > kMaxVertices) throw TooLarge("nerve limited to 64 minimal non-faces");
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void best_matching(std::uint64_t avail, const std::vector<std::uint64_t>& adj, int current, int& best) {
  // drop vertices without an available neighbor
  std::uint64_t live = 0;
  for (std::uint64_t b = avail; b; b &= b - 1) {
    int v = std::countr_zero(b);
    if (adj[v] & avail) live |= std::uint64_t{1} << v;
  }
  best = std::max(best, current);
  if (current + std::popcount(live) / 2 <= best || live == 0) return;
  const int v = std::countr_zero(live);
  for (std::uint64_t nb = adj[v] & live; nb; nb &= nb - 1) {
    int u = std::countr_zero(nb);
    best_matching(live & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u), adj, current + 1, best);
  }
  best_matching(live & ~(std::uint64_t{1} << v), adj, current, best);
}

}  // namespace

bool NerveComplex::is_face(VertexSet s) const {
  return std::any_of(facets.begin(), facets.end(), [&](VertexSet f) { return s.is_subset_of(f); });
}

int NerveComplex::dimension() const {
  int best = 0;
  for (VertexSet f : facets) best = std::max(best, f.size());
  return best - 1;
}

std::vector<std::pair<int, int>> NerveComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (is_face(VertexSet{j, k})) out.emplace_back(j, k);
  return out;
}

std::vector<VertexSet> facet_sets(const MnfComplex& c) {
  check_nerve_size(c);
  std::vector<VertexSet> out(c.n());
  for (int j = 0; j < c.m(); ++j) c[j].for_each([&](int v) { out[v] = out[v].with(j); });
  return out;
}

NerveComplex nerve(const MnfComplex& c) {
  auto fs = facet_sets(c);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  NerveComplex out;
  out.m = c.m();
  for (VertexSet f : fs) {
    if (f.empty()) continue;
    bool maximal = std::none_of(fs.begin(), fs.end(), [&](VertexSet g) { return g != f && f.is_subset_of(g); });
    if (maximal) out.facets.push_back(f);
  }
  if (out.facets.empty()) out.facets.push_back(VertexSet{});
  return out;
}

MnfComplex transpose_reconstruct(const NerveComplex& nv) {
  if (nv.facets.size() > static_cast<std::size_t>(kMaxVertices))
    throw Irrecoverable("nerve has more than 64 facets");
  std::vector<VertexSet> sets(nv.m);
  for (std::size_t i = 0; i < nv.facets.size(); ++i)
    nv.facets[i].for_each([&](int j) {
      if (j < nv.m) sets[j] = sets[j].with(static_cast<int>(i));
    });
  for (int j = 0; j < nv.m; ++j) {
    if (sets[j].size() < 2)
      throw Irrecoverable("nerve vertex " + std::to_string(j + 1) + " lies in fewer than two facets");
  }
  try {
    return MnfComplex(static_cast<int>(nv.facets.size()), std::move(sets));
  } catch (const AntichainViolation& e) {
    throw Irrecoverable(std::string("transposed incidence is not an antichain: ") + e.what());
  }
}

bool is_point_separating(const MnfComplex& c) {
  if (c.n() < 2) return true;
  auto fs = facet_sets(c);
  if (std::any_of(fs.begin(), fs.end(), [](VertexSet f) { return f.empty(); })) return false;
  std::sort(fs.begin(), fs.end());
  return std::adjacent_find(fs.begin(), fs.end()) == fs.end();
}

Unsuspension unsuspend(const MnfComplex& c) {
  check_nerve_size(c);
  UnsuspensionLog log;
  std::vector<VertexSet> sets(c.mnf().begin(), c.mnf().end());
  VertexSet alive = c.ground();

  // isolated non-faces: undone two-point suspensions (plus one-point
  // suspensions of the new pair when the set has more than two vertices)
  std::vector<VertexSet> kept_sets;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    bool isolated = true;
    for (std::size_t k = 0; k < sets.size() && isolated; ++k)
      if (k != j && sets[j].intersects(sets[k])) isolated = false;
    if (isolated) {
      log.steps.push_back({UnsuspensionStep::Kind::RemoveIsolated, sets[j], -1, -1});
      alive = alive - sets[j];
    } else {
      kept_sets.push_back(sets[j]);
    }
  }
  sets = std::move(kept_sets);

  // doubled vertices: equal F_v; keep the smallest label of each class
  std::map<std::uint64_t, int> first_with;
  for (int v = 0; v < c.n(); ++v) {
    if (!alive.contains(v)) continue;
    std::uint64_t fv = 0;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[j].contains(v)) fv |= std::uint64_t{1} << j;
    if (fv == 0) {
      log.steps.push_back({UnsuspensionStep::Kind::MergeDoubledVertex, {}, -1, v});
      alive = alive.without(v);
      continue;
    }
    auto [it, fresh] = first_with.emplace(fv, v);
    if (!fresh) {
      log.steps.push_back({UnsuspensionStep::Kind::MergeDoubledVertex, {}, it->second, v});
      alive = alive.without(v);
      for (auto& s : sets) s = s.without(v);
    }
  }

  Relabeled r = induced(MnfComplex(c.n(), sets), alive);
  log.survivors = r.to_original;
  return {std::move(r.complex), std::move(log)};
}

MnfComplex replay(const MnfComplex& reduced, const UnsuspensionLog& log) {
  if (static_cast<int>(log.survivors.size()) != reduced.n())
    throw InvalidParameter("unsuspension log does not match the reduced complex");
  int n = reduced.n();
  std::vector<VertexSet> sets;
  for (VertexSet s : reduced.mnf()) {
    VertexSet t;
    s.for_each([&](int v) { t = t.with(log.survivors[v]); });
    sets.push_back(t);
  }
  for (auto it = log.steps.rbegin(); it != log.steps.rend(); ++it) {
    if (it->kind == UnsuspensionStep::Kind::RemoveIsolated) {
      sets.push_back(it->set);
      n += it->set.size();
    } else {
      if (it->kept >= 0)
        for (auto& s : sets)
          if (s.contains(it->kept)) s = s.with(it->removed);
      n += 1;
    }
  }
  return MnfComplex(n, std::move(sets));
}

JoinDecomposition join_decompose(const MnfComplex& c) {
  check_nerve_size(c);
  std::vector<int> parent(c.m());
  std::iota(parent.begin(), parent.end(), 0);
  for (int j = 0; j < c.m(); ++j)
    for (int k = j + 1; k < c.m(); ++k)
      if (c[j].intersects(c[k])) parent[find(parent, j)] = find(parent, k);
  std::map<int, VertexSet> support;  // root -> vertices covered by the component
  for (int j = 0; j < c.m(); ++j) support[find(parent, j)] |= c[j];
  std::vector<VertexSet> parts;
  VertexSet covered;
  for (const auto& [root, verts] : support) {
    parts.push_back(verts);
    covered |= verts;
  }
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  JoinDecomposition out;
  for (VertexSet part : parts) {
    Relabeled r = induced(c, part);
    out.factors.push_back(std::move(r.complex));
    out.factor_vertices.push_back(std::move(r.to_original));
  }
  const VertexSet free = c.ground() - covered;
  out.free_vertices = free.members();
  out.free_simplex = MnfComplex(free.size(), {});
  return out;
}

bool is_join_irreducible(const MnfComplex& c) {
  auto jd = join_decompose(c);
  return jd.factors.size() + (jd.free_vertices.empty() ? 0 : 1) <= 1;
}

int nerve_max_degree(const MnfComplex& c) {
  check_nerve_size(c);
  int best = 0;
  for (std::uint64_t a : adjacency(c)) best = std::max(best, std::popcount(a));
  return best;
}

int matching_number(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count > 64) throw TooLarge("matching limited to 64 vertices");
  std::vector<std::uint64_t> adj(vertex_count, 0);
  for (auto [a, b] : edges) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  int best = 0;
  best_matching(VertexSet::range(vertex_count).bits(), adj, 0, best);
  return best;
}

int nerve_matching_number(const MnfComplex& c) {
  check_nerve_size(c);
  auto adj = adjacency(c);
  int best = 0;
  best_matching(VertexSet::range(c.m()).bits(), adj, 0, best);
  return best;
}

std::optional<int> detect_pd_pattern(const NerveComplex& nv) {
  std::optional<int> best;
  for (VertexSet t : nv.facets) {
    if (t.size() < 2) continue;
    bool ok = true;
    t.for_each([&](int v) {
      if (!ok) return;
      int others = 0;
      for (VertexSet f : nv.facets) {
        if (f == t || !f.contains(v)) continue;
        ++others;
        if (f.size() != 2 || f.intersects(t.without(v))) ok = false;
      }
      if (others != 1) ok = false;
    });
    if (ok && (!best || t.size() - 1 > *best)) best = t.size() - 1;
  }
  return best;
}

std::string nerve_dot(const MnfComplex& c) {
  std::ostringstream out;
  out << "graph nerve {\n";
  for (int j = 0; j < c.m(); ++j) out << "  M" << j + 1 << " [label=\"" << c[j].to_string() << "\"];\n";
  for (int j = 0; j < c.m(); ++j)
    for (int k = j + 1; k < c.m(); ++k)
      if (c[j].intersects(c[k]))
        out << "  M" << j + 1 << " -- M" << k + 1 << " [label=\"" << (c[j] & c[k]).to_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mnf
