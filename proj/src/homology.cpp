#include "mnf/homology.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"
#include "mnf/errors.hpp"

namespace mnf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Boundary of a face: each codimension-one face with its incidence sign.
struct MaskFaces {
  template <class F>
  static void boundary(VertexSet s, F&& f) {
    int j = 0;
    s.for_each([&](int v) { f(s.without(v), (j++ % 2) ? -1 : 1); });
  }
};

struct ListFaces {
  template <class F>
  static void boundary(const std::vector<std::uint32_t>& s, F&& f) {
    std::vector<std::uint32_t> t(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::copy(s.begin(), s.begin() + j, t.begin());
      std::copy(s.begin() + j + 1, s.end(), t.begin() + j);
      f(t, (j % 2) ? -1 : 1);
    }
  }
};

std::int64_t rank_of(const std::vector<detail::SparseRow>& rows, std::size_t ncols, FieldSpec f) {
  if (rows.empty() || ncols == 0) return 0;
  if (f.characteristic() == 2) return detail::rank_gf2(rows, ncols);
  if (f.is_rational()) return detail::rank_rational(rows);
  return detail::rank_mod_p(rows, f.characteristic());
}

// levels[k] holds the faces with k vertices, sorted; levels[0] = {∅}.
template <class Traits, class Face>
std::int64_t level_boundary_rank(const std::vector<std::vector<Face>>& levels, std::size_t k, FieldSpec f) {
  // ∂ from faces with k vertices to faces with k-1 vertices
  if (k == 0 || k >= levels.size()) return 0;
  const auto& lower = levels[k - 1];
  std::vector<detail::SparseRow> rows;
  rows.reserve(levels[k].size());
  for (const Face& s : levels[k]) {
    detail::SparseRow row;
    Traits::boundary(s, [&](const Face& t, int sign) {
      auto it = std::lower_bound(lower.begin(), lower.end(), t);
      row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
    });
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rank_of(rows, lower.size(), f);
}

template <class Traits, class Face>
BettiVector betti_of_levels(const std::vector<std::vector<Face>>& levels, FieldSpec f) {
  for (const auto& level : levels) {
    if (level.size() > kMaxFacesPerDimension)
      throw TooLarge("more than " + std::to_string(kMaxFacesPerDimension) + " faces in one dimension");
  }
  std::size_t top = levels.size();
  while (top > 0 && levels[top - 1].empty()) --top;
  BettiVector out;
  if (top == 0) return out;  // void complex; not produced by the library
  std::vector<std::int64_t> ranks(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) ranks[k] = level_boundary_rank<Traits>(levels, k, f);
  out.dims.resize(top);
  for (std::size_t k = 0; k < top; ++k)
    out.dims[k] = static_cast<std::int64_t>(levels[k].size()) - ranks[k] - ranks[k + 1];
  return out;
}

template <class Face>
std::vector<std::vector<Face>> split_levels(std::vector<Face> faces, auto size_of) {
  std::vector<std::vector<Face>> levels;
  for (auto& s : faces) {
    std::size_t k = size_of(s);
    if (levels.size() <= k) levels.resize(k + 1);
    levels[k].push_back(std::move(s));
  }
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

std::vector<std::vector<VertexSet>> mask_levels(std::span<const VertexSet> faces) {
  return split_levels(std::vector<VertexSet>(faces.begin(), faces.end()),
                      [](VertexSet s) { return static_cast<std::size_t>(s.size()); });
}

bool is_sphere_betti(const BettiVector& b, int dim) {
  if (b.top() != dim) return false;
  for (int i = -1; i <= dim; ++i)
    if (b(i) != (i == dim ? 1 : 0)) return false;
  return true;
}

std::int64_t euler_of(std::span<const VertexSet> faces) {
  std::int64_t chi = 0;
  for (VertexSet s : faces) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) throw InvalidParameter("field characteristic must be a prime below 65536");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& name) {
  if (name == "rat" || name == "Q") return rationals();
  if (name.size() > 2 && name.rfind("gf", 0) == 0) {
    const std::string digits = name.substr(2);
    if (digits.size() > 5 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InvalidParameter("bad field '" + name + "'");
    return gf(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw InvalidParameter("bad field '" + name + "' (expected gf2, gf<p> or rat)");
}

std::string FieldSpec::name() const { return is_rational() ? "rat" : "gf" + std::to_string(p_); }

std::int64_t boundary_rank(const MnfComplex& c, int i, FieldSpec f) {
  auto levels = mask_levels(faces(c));
  if (i < 0) return 0;
  return level_boundary_rank<MaskFaces>(levels, static_cast<std::size_t>(i) + 1, f);
}

BettiVector reduced_betti(const MnfComplex& c, FieldSpec f) {
  return betti_of_levels<MaskFaces>(mask_levels(faces(c)), f);
}

BettiVector reduced_betti_of_faces(std::span<const VertexSet> face_list, FieldSpec f) {
  return betti_of_levels<MaskFaces>(mask_levels(face_list), f);
}

BettiVector reduced_betti_of_faces(const std::vector<std::vector<std::uint32_t>>& face_list, FieldSpec f) {
  auto levels = split_levels(face_list, [](const std::vector<std::uint32_t>& s) { return s.size(); });
  return betti_of_levels<ListFaces>(levels, f);
}

std::int64_t reduced_euler_characteristic(const MnfComplex& c) {
  auto fs = faces(c);
  return euler_of(fs);
}

bool is_homology_sphere(const MnfComplex& c, FieldSpec f) {
  const auto all = faces(c);
  int d = 0;
  for (VertexSet s : all) d = std::max(d, s.size());
  // a (d-1)-sphere has reduced Euler characteristic (-1)^(d-1)
  const std::int64_t sphere_chi = (d % 2 == 1) ? 1 : -1;
  if (euler_of(all) != sphere_chi) return false;
  if (!is_pure(c)) return false;

  std::vector<VertexSet> link_faces;
  // links of large faces are small; test those first
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const VertexSet face = *it;
    const int link_dim = d - 1 - face.size();
    link_faces.clear();
    for (VertexSet g : all) {
      if (face.is_subset_of(g)) link_faces.push_back(g - face);
    }
    const std::int64_t chi = euler_of(link_faces);
    if (chi != ((link_dim % 2 == 0) ? 1 : -1)) return false;
    if (link_dim <= 0) {
      // {∅} or a set of points; the link of a face in a pure complex has no edges here
      if (link_dim == 0 && link_faces.size() != 3) return false;
      continue;
    }
    if (!is_sphere_betti(reduced_betti_of_faces(link_faces, f), link_dim)) return false;
  }
  return true;
}

}  // namespace mnf
