#include <gtest/gtest.h>

#include <random>

#include "battery.hpp"
#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "mnf/errors.hpp"
#include "mnf/homology.hpp"
#include "oracles.hpp"

using namespace mnf;

namespace {

MnfComplex pentagon() { return MnfComplex::from_labels(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}); }

const FieldSpec kFields[] = {FieldSpec::gf2(), FieldSpec::gf(3), FieldSpec::gf(65521), FieldSpec::rationals()};

MnfComplex random_complex(int n, int m, std::mt19937& rng) {
  std::vector<VertexSet> sets;
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
  for (int tries = 0; tries < 300 && static_cast<int>(sets.size()) < m; ++tries) {
    VertexSet s(pick(rng));
    if (s.size() < 2) continue;
    bool ok = true;
    for (VertexSet t : sets)
      if (t.is_subset_of(s) || s.is_subset_of(t)) ok = false;
    if (ok) sets.push_back(s);
  }
  return MnfComplex(n, sets);
}

std::vector<long long> as_ll(const BettiVector& b) { return {b.dims.begin(), b.dims.end()}; }

// RP^2 with 6 vertices: homology depends on the characteristic.
MnfComplex rp2() {
  std::vector<VertexSet> fs;
  const int tris[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  for (auto& t : tris) fs.push_back(VertexSet{t[0], t[1], t[2]});
  return MnfComplex::from_facets(6, fs);
}

}  // namespace

TEST(Field, Parse) {
  EXPECT_EQ(FieldSpec::parse("gf2"), FieldSpec::gf2());
  EXPECT_EQ(FieldSpec::parse("gf7"), FieldSpec::gf(7));
  EXPECT_EQ(FieldSpec::parse("rat"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_THROW(FieldSpec::parse("gf4"), InvalidParameter);
  EXPECT_THROW(FieldSpec::parse("gf65537"), InvalidParameter);
  EXPECT_THROW(FieldSpec::parse("real"), InvalidParameter);
  EXPECT_EQ(FieldSpec::gf(5).name(), "gf5");
}

TEST(BoundaryRank, Examples) {
  const MnfComplex tri = simplex_boundary(2);
  EXPECT_EQ(boundary_rank(tri, 0), 1);
  EXPECT_EQ(boundary_rank(tri, 1), 2);
  EXPECT_EQ(boundary_rank(MnfComplex(0, {}), 0), 0);
}

TEST(ReducedBetti, Examples) {
  EXPECT_EQ(reduced_betti(pentagon()).dims, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(reduced_betti(cross_polytope(3)).dims, (std::vector<std::int64_t>{0, 0, 0, 1}));
  EXPECT_EQ(reduced_betti(MnfComplex(0, {})).dims, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(reduced_betti(MnfComplex(3, {})).dims, (std::vector<std::int64_t>{0, 0, 0, 0}));
  for (auto x : reduced_betti(cross_minus_facet(3)).dims) EXPECT_EQ(x, 0);
  const BettiVector b = reduced_betti(pentagon());
  EXPECT_EQ(b(1), 1);
  EXPECT_EQ(b(7), 0);
  EXPECT_EQ(b(-3), 0);
}

TEST(ReducedBetti, FieldDependence) {
  const MnfComplex p = rp2();
  EXPECT_EQ(reduced_betti(p, FieldSpec::gf2()).dims, (std::vector<std::int64_t>{0, 0, 1, 1}));
  EXPECT_EQ(reduced_betti(p, FieldSpec::gf(3)).dims, (std::vector<std::int64_t>{0, 0, 0, 0}));
  EXPECT_EQ(reduced_betti(p, FieldSpec::rationals()).dims, (std::vector<std::int64_t>{0, 0, 0, 0}));
  EXPECT_EQ(as_ll(reduced_betti(p, FieldSpec::gf(3))), oracle::betti(p, 3));
  EXPECT_FALSE(is_homology_sphere(p, FieldSpec::gf2()));
}

TEST(ReducedBetti, AgainstDenseOracle) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    MnfComplex c = random_complex(2 + trial % 8, 1 + trial % 7, rng);
    EXPECT_EQ(as_ll(reduced_betti(c, FieldSpec::gf2())), oracle::betti(c, 2)) << to_string(c);
    EXPECT_EQ(as_ll(reduced_betti(c, FieldSpec::gf(3))), oracle::betti(c, 3)) << to_string(c);
    EXPECT_EQ(as_ll(reduced_betti(c, FieldSpec::rationals())), oracle::betti(c, 1000003)) << to_string(c);
  }
}

TEST(ReducedBetti, EulerPoincare) {
  std::mt19937 rng(4);
  std::vector<MnfComplex> cs;
  for (const auto& b : battery::spheres()) cs.push_back(b.complex);
  for (int k = 0; k < 60; ++k) cs.push_back(random_complex(2 + k % 9, 1 + k % 8, rng));
  for (const auto& c : cs)
    for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
      const BettiVector b = reduced_betti(c, f);
      std::int64_t chi = 0;
      for (int i = -1; i <= b.top(); ++i) chi += (((i + 2) % 2) ? -1 : 1) * b(i);
      std::int64_t from_f = 0;
      const auto fv = f_vector(c);
      for (std::size_t k = 0; k < fv.size(); ++k) from_f += (k % 2 ? 1 : -1) * fv[k];
      EXPECT_EQ(chi, from_f) << to_string(c);
      EXPECT_EQ(reduced_euler_characteristic(c), chi);
    }
}

TEST(ReducedBetti, LabelIndependent) {
  for (const auto& b : battery::spheres())
    EXPECT_EQ(reduced_betti(b.complex), reduced_betti(canonical_form(b.complex))) << b.name;
}

TEST(ReducedBetti, KunnethForJoins) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    MnfComplex a = random_complex(1 + trial % 5, 1 + trial % 4, rng);
    MnfComplex b = random_complex(1 + (trial / 5) % 5, 1 + trial % 3, rng);
    const BettiVector ba = reduced_betti(a), bb = reduced_betti(b), bj = reduced_betti(join(a, b));
    for (int k = -1; k <= bj.top(); ++k) {
      std::int64_t want = 0;
      for (int i = -1; i <= ba.top(); ++i) want += ba(i) * bb(k - 1 - i);
      EXPECT_EQ(bj(k), want) << to_string(a) << " * " << to_string(b) << " at " << k;
    }
  }
}

TEST(HomologySphere, Examples) {
  for (FieldSpec f : kFields) {
    EXPECT_TRUE(is_homology_sphere(pentagon(), f));
    EXPECT_TRUE(is_homology_sphere(pd_sphere(3), f));
    EXPECT_TRUE(is_homology_sphere(cyclic_boundary(4, 7), f));
    EXPECT_TRUE(is_homology_sphere(cross_polytope(3), f));
    EXPECT_TRUE(is_homology_sphere(join(pentagon(), pentagon()), f));
    for (int k = 2; k <= 5; ++k) EXPECT_FALSE(is_homology_sphere(cross_minus_facet(k), f));
  }
  EXPECT_TRUE(is_homology_sphere(MnfComplex(0, {})));
  EXPECT_FALSE(is_homology_sphere(MnfComplex(3, {})));
}

TEST(HomologySphere, BatteryProperties) {
  for (const auto& b : battery::spheres()) {
    const MnfComplex& c = b.complex;
    EXPECT_TRUE(is_homology_sphere(c, FieldSpec::gf2())) << b.name;
    EXPECT_TRUE(is_homology_sphere(c, FieldSpec::rationals())) << b.name;
    EXPECT_EQ(reduced_betti(c, FieldSpec::gf2()), reduced_betti(c, FieldSpec::rationals())) << b.name;
    EXPECT_TRUE(is_pure(c));
    EXPECT_GE(alpha(c), 0);
    EXPECT_FALSE(is_cone(c));
  }
}

TEST(HomologySphere, AgainstLinkOracle) {
  std::mt19937 rng(33);
  int spheres = 0;
  for (int trial = 0; trial < 400; ++trial) {
    MnfComplex c = random_complex(2 + trial % 6, 1 + trial % 6, rng);
    const bool want = oracle::homology_sphere(c);
    spheres += want;
    EXPECT_EQ(is_homology_sphere(c), want) << to_string(c);
  }
  EXPECT_GT(spheres, 0);
}

TEST(Homology, FaceLists) {
  std::vector<std::vector<std::uint32_t>> two_points{{}, {0}, {1}};
  EXPECT_EQ(reduced_betti_of_faces(two_points, FieldSpec::gf2()).dims, (std::vector<std::int64_t>{0, 1}));
  std::vector<VertexSet> just_empty{VertexSet{}};
  EXPECT_EQ(reduced_betti_of_faces(just_empty, FieldSpec::gf2()).dims, (std::vector<std::int64_t>{1}));
}
