#include "mnf/complex.hpp"

#include <algorithm>
#include <string>

#include "mnf/errors.hpp"

namespace mnf {

namespace {

// Non-faces grouped by their largest member: a face S extended by v (v larger
// than every member of S) stays a face iff no non-face with maximum v lies
// inside S ∪ {v}.
class FaceWalker {
 public:
  explicit FaceWalker(const MnfComplex& c) : n_(c.n()), by_top_(c.n()) {
    for (VertexSet s : c.mnf()) by_top_[s.span() - 1].push_back(s);
  }

  template <class F>
  void run(F&& visit, std::size_t limit) {
    std::size_t count = 0;
    walk(VertexSet{}, 0, visit, count, limit);
  }

 private:
  template <class F>
  void walk(VertexSet s, int from, F& visit, std::size_t& count, std::size_t limit) {
    if (++count > limit) throw TooLarge("face enumeration exceeded " + std::to_string(limit) + " faces");
    visit(s);
    for (int v = from; v < n_; ++v) {
      VertexSet t = s.with(v);
      bool ok = true;
      for (VertexSet mset : by_top_[v]) {
        if (mset.is_subset_of(t)) {
          ok = false;
          break;
        }
      }
      if (ok) walk(t, v + 1, visit, count, limit);
    }
  }

  int n_;
  std::vector<std::vector<VertexSet>> by_top_;
};

}  // namespace

MnfComplex::MnfComplex(int n, std::vector<VertexSet> sets) : n_(n), mnf_(std::move(sets)) {
  if (n < 0 || n > kMaxVertices)
    throw RangeViolation("ground set size " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
  const VertexSet ground = VertexSet::range(n);
  for (VertexSet s : mnf_) {
    if (!s.is_subset_of(ground))
      throw RangeViolation("non-face " + s.to_string() + " not inside [" + std::to_string(n) + "]");
    if (s.size() < 2) throw SizeViolation("non-face " + s.to_string() + " has fewer than two vertices");
  }
  std::sort(mnf_.begin(), mnf_.end());
  for (std::size_t i = 0; i < mnf_.size(); ++i) {
    for (std::size_t j = i + 1; j < mnf_.size(); ++j) {
      // sorted by size, so only mnf_[i] ⊆ mnf_[j] is possible
      if (mnf_[i].is_subset_of(mnf_[j])) {
        if (mnf_[i] == mnf_[j]) throw AntichainViolation("duplicate non-face " + mnf_[i].to_string());
        throw AntichainViolation("non-face " + mnf_[i].to_string() + " is contained in " +
                                 mnf_[j].to_string());
      }
    }
  }
}

MnfComplex MnfComplex::from_labels(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    for (int v : s) {
      if (v < 1 || v > n)
        throw RangeViolation("vertex label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    out.push_back(VertexSet::from_labels(s));
  }
  return MnfComplex(n, std::move(out));
}

MnfComplex MnfComplex::from_facets(int n, std::span<const VertexSet> facet_list) {
  if (facet_list.empty()) throw InvalidParameter("a complex needs at least the empty face");
  // Non-faces are exactly the transversals of the facet complements.
  std::vector<VertexSet> transversals{VertexSet{}};
  std::vector<VertexSet> edges;
  for (VertexSet f : facet_list) edges.push_back(f.complement(n));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (VertexSet e : edges) {
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if (t.intersects(e)) {
        next.push_back(t);
      } else {
        e.for_each([&](int v) { next.push_back(t.with(v)); });
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    transversals.clear();
    for (VertexSet t : next) {
      bool minimal = std::none_of(transversals.begin(), transversals.end(),
                                  [&](VertexSet u) { return u.is_subset_of(t); });
      if (minimal) transversals.push_back(t);
    }
  }
  return MnfComplex(n, std::move(transversals));
}

void check_range(const MnfComplex& c, VertexSet s) {
  if (!s.is_subset_of(c.ground()))
    throw RangeViolation("set " + s.to_string() + " not inside [" + std::to_string(c.n()) + "]");
}

bool is_face(const MnfComplex& c, VertexSet s) {
  check_range(c, s);
  return std::none_of(c.mnf().begin(), c.mnf().end(), [&](VertexSet m) { return m.is_subset_of(s); });
}

void for_each_face(const MnfComplex& c, const std::function<void(VertexSet)>& f, std::size_t limit) {
  FaceWalker(c).run(f, limit);
}

std::vector<VertexSet> faces(const MnfComplex& c) {
  std::vector<VertexSet> out;
  FaceWalker(c).run([&](VertexSet s) { out.push_back(s); }, std::size_t{1} << 24);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> facets(const MnfComplex& c) {
  std::vector<VertexSet> out;
  FaceWalker(c).run(
      [&](VertexSet s) {
        for (int v = 0; v < c.n(); ++v) {
          if (!s.contains(v) && is_face(c, s.with(v))) return;
        }
        out.push_back(s);
      },
      std::size_t{1} << 24);
  std::sort(out.begin(), out.end());
  return out;
}

int dimension(const MnfComplex& c) {
  int best = 0;
  FaceWalker(c).run([&](VertexSet s) { best = std::max(best, s.size()); }, std::size_t{1} << 24);
  return best - 1;
}

bool is_pure(const MnfComplex& c) {
  auto fs = facets(c);
  return std::all_of(fs.begin(), fs.end(), [&](VertexSet f) { return f.size() == fs.front().size(); });
}

std::vector<std::int64_t> f_vector(const MnfComplex& c) {
  std::vector<std::int64_t> out;
  FaceWalker(c).run(
      [&](VertexSet s) {
        if (static_cast<int>(out.size()) <= s.size()) out.resize(s.size() + 1, 0);
        ++out[s.size()];
      },
      std::size_t{1} << 24);
  return out;
}

int alpha(const MnfComplex& c) { return c.m() - (c.n() - d_of(c)); }

std::vector<int> vertex_degrees(const MnfComplex& c) {
  std::vector<int> deg(c.n(), 0);
  for (VertexSet s : c.mnf()) s.for_each([&](int v) { ++deg[v]; });
  return deg;
}

bool is_cone(const MnfComplex& c) {
  VertexSet covered;
  for (VertexSet s : c.mnf()) covered |= s;
  return covered != c.ground();
}

MnfComplex relabel(const MnfComplex& c, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != c.n()) throw InvalidParameter("permutation has wrong length");
  std::vector<VertexSet> out;
  out.reserve(c.m());
  for (VertexSet s : c.mnf()) {
    VertexSet t;
    s.for_each([&](int v) { t = t.with(perm[v]); });
    out.push_back(t);
  }
  return MnfComplex(c.n(), std::move(out));
}

std::string to_string(const MnfComplex& c) {
  std::string out = "n=" + std::to_string(c.n()) + " [";
  for (int i = 0; i < c.m(); ++i) {
    if (i) out += ' ';
    out += c[i].to_string();
  }
  return out + "]";
}

}  // namespace mnf
