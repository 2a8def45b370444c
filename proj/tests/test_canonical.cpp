#include <gtest/gtest.h>

#include <random>

#include "battery.hpp"
#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "oracles.hpp"

using namespace mnf;

namespace {

MnfComplex pentagon() { return MnfComplex::from_labels(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}); }

MnfComplex random_antichain(int n, int m, std::mt19937& rng) {
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

}  // namespace

TEST(Canonical, RelabeledPentagonHasSameKey) {
  std::vector<int> perm{1, 2, 3, 4, 0};
  EXPECT_EQ(canonical_key(pentagon()), canonical_key(relabel(pentagon(), perm)));
}

TEST(Canonical, DistinguishesDifferentComplexes) {
  auto square = MnfComplex::from_labels(4, {{1, 2}, {3, 4}});
  EXPECT_NE(canonical_key(pentagon()), canonical_key(square));
  EXPECT_NE(canonical_key(pd_sphere(3)), canonical_key(one_point_suspension(pd_sphere(2), 0)));
  EXPECT_FALSE(are_isomorphic(pd_sphere(3), one_point_suspension(pd_sphere(2), 0)));
}

TEST(Canonical, HexRoundTrip) {
  CanonicalKey k = canonical_key(cyclic_boundary(4, 7));
  EXPECT_EQ(CanonicalKey::from_hex(k.hex()), k);
}

TEST(Canonical, CanonicalFormIsIsomorphicAndStable) {
  for (const auto& b : battery::spheres()) {
    MnfComplex cf = canonical_form(b.complex);
    EXPECT_EQ(canonical_key(cf), canonical_key(b.complex)) << b.name;
    EXPECT_EQ(canonical_form(cf), cf) << b.name;
    const auto lab = canonical_labeling(b.complex);
    EXPECT_EQ(relabel(b.complex, lab), cf) << b.name;
  }
}

TEST(Canonical, InvariantUnderAllRelabelingsSmall) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;  // up to 6, all n! permutations
    MnfComplex c = random_antichain(n, 2 + trial % 5, rng);
    const CanonicalKey key = canonical_key(c);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ASSERT_EQ(canonical_key(relabel(c, perm)), key) << to_string(c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // all 5040 relabelings of a 7-vertex sphere
  const MnfComplex c = pd_sphere(3);
  const CanonicalKey key = canonical_key(c);
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ASSERT_EQ(canonical_key(relabel(c, perm)), key);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937 rng(99);
  std::vector<MnfComplex> pool;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 6;
    const int m = 1 + trial % 6;
    if (n + m > 14) continue;
    pool.push_back(random_antichain(n, m, rng));
    // add a random relabeling so equal classes show up
    pool.push_back(relabel(pool.back(), oracle::random_perm(n, rng)));
  }
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a; b < pool.size() && b < a + 12; ++b) {
      const bool brute = oracle::brute_canonical(pool[a]) == oracle::brute_canonical(pool[b]);
      EXPECT_EQ(canonical_key(pool[a]) == canonical_key(pool[b]), brute)
          << to_string(pool[a]) << " vs " << to_string(pool[b]);
      EXPECT_EQ(are_isomorphic(pool[a], pool[b]), brute);
    }
  }
}

TEST(Canonical, HighlySymmetricInputs) {
  // large automorphism groups exercise the pruning of the search
  for (int d = 1; d <= 8; ++d) {
    MnfComplex c = cross_polytope(d);
    std::mt19937 rng(d);
    EXPECT_EQ(canonical_key(c), canonical_key(relabel(c, oracle::random_perm(c.n(), rng))));
  }
  MnfComplex all_pairs_6 = [] {
    std::vector<VertexSet> s;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) s.push_back(VertexSet{a, b});
    return MnfComplex(6, s);
  }();
  EXPECT_EQ(canonical_form(all_pairs_6), all_pairs_6);
  MnfComplex c9 = codim3_sphere(9);
  std::mt19937 rng(1);
  EXPECT_EQ(canonical_key(c9), canonical_key(relabel(c9, oracle::random_perm(9, rng))));
}
