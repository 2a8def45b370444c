#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <numeric>
#include <sstream>

#include <unistd.h>

#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "mnf/enumerator.hpp"
#include "mnf/errors.hpp"
#include "mnf/lcm_lattice.hpp"
#include "mnf/nerve.hpp"
#include "oracles.hpp"

using namespace mnf;

namespace {

MnfComplex pentagon() { return MnfComplex::from_labels(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}); }

std::vector<CensusRecord> run(const CensusConfig& cfg, CensusSummary* summary = nullptr) {
  std::vector<CensusRecord> out;
  CensusSummary s = enumerate(cfg, [&](const CensusRecord& r) { out.push_back(r); });
  if (summary) *summary = s;
  return out;
}

std::string jsonl(const std::vector<CensusRecord>& rs) {
  std::string out;
  for (const auto& r : rs) out += r.to_json().dump() + "\n";
  return out;
}

std::set<CanonicalKey> keys(const std::vector<CensusRecord>& rs) {
  std::set<CanonicalKey> out;
  for (const auto& r : rs) out.insert(r.key);
  return out;
}

std::set<std::vector<std::uint64_t>> classes_of(const std::vector<CensusRecord>& rs) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& r : rs) out.insert(oracle::brute_canonical(r.complex));
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mnf_test_" + name + "_" + std::to_string(::getpid()))).string();
}

}  // namespace

TEST(Census, TierOneExamples) {
  CensusConfig cfg;
  cfg.n_max = 5;
  cfg.m_max = 5;
  cfg.require_unsuspended = true;
  auto rs = run(cfg);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].key, canonical_key(pentagon()));
  EXPECT_EQ(rs[0].alpha, 2);
  cfg.n_max = 4;
  cfg.m_max = 8;
  EXPECT_TRUE(run(cfg).empty());
}

TEST(Census, MatchesNaiveOracle) {
  struct Mode {
    CensusMode mode;
    bool unsuspended, irreducible;
  };
  for (Mode md : {Mode{CensusMode::AllComplexes, false, false}, Mode{CensusMode::AllComplexes, true, false},
                  Mode{CensusMode::AllComplexes, false, true}, Mode{CensusMode::HomologySpheres, false, false},
                  Mode{CensusMode::HomologySpheres, true, false}, Mode{CensusMode::HomologySpheres, false, true}}) {
    CensusConfig cfg;
    cfg.n_max = 5;
    cfg.m_max = 4;
    cfg.mode = md.mode;
    cfg.require_unsuspended = md.unsuspended;
    cfg.require_join_irreducible = md.irreducible;
    CensusSummary summary;
    auto rs = run(cfg, &summary);
    const auto want = oracle::classes(5, 4, md.mode != CensusMode::AllComplexes, md.unsuspended, md.irreducible);
    EXPECT_EQ(classes_of(rs), want) << cfg.to_json().dump();
    EXPECT_EQ(rs.size(), want.size()) << cfg.to_json().dump();
    EXPECT_EQ(summary.records, static_cast<std::int64_t>(rs.size()));
    EXPECT_EQ(summary.duplicates_dropped, 0);
  }
}

TEST(Census, RecordsAreSortedAndConsistent) {
  CensusConfig cfg;
  cfg.n_max = 6;
  cfg.m_max = 6;
  cfg.mode = CensusMode::HomologySpheres;
  auto rs = run(cfg);
  ASSERT_FALSE(rs.empty());
  for (std::size_t k = 1; k < rs.size(); ++k) EXPECT_LT(rs[k - 1].key, rs[k].key);
  for (const auto& r : rs) {
    EXPECT_EQ(r.alpha, r.m - (r.n - r.d));
    EXPECT_EQ(CensusRecord::of(r.complex, FieldSpec::gf2()), r);
    EXPECT_EQ(CensusRecord::from_json(r.to_json()), r);
    EXPECT_TRUE(r.flags.homology_sphere);
    EXPECT_TRUE(check_duality(r.complex).empty());
  }
  // brute-force isomorph-freeness
  EXPECT_EQ(classes_of(rs).size(), rs.size());
}

TEST(Census, PruneAblationKeepsClasses) {
  using Rule = bool PruneRules::*;
  const Rule rules[] = {&PruneRules::point_separating, &PruneRules::covering,   &PruneRules::nerve_degree,
                        &PruneRules::matching,         &PruneRules::vertex_degree,
                        &PruneRules::complement_closure, &PruneRules::m_bound};
  for (bool unsuspended : {true, false}) {
    CensusConfig base;
    base.n_max = 6;
    base.m_max = 6;
    base.require_unsuspended = unsuspended;
    CensusSummary full;
    const auto want = keys(run(base, &full));
    CensusConfig none = base;
    for (Rule r : rules) none.rules.*r = false;
    CensusSummary bare;
    EXPECT_EQ(keys(run(none, &bare)), want);
    EXPECT_GT(bare.nodes_visited, full.nodes_visited);
    for (Rule r : rules) {
      CensusConfig cfg = base;
      cfg.rules.*r = false;
      EXPECT_EQ(keys(run(cfg)), want);
    }
  }
}

TEST(Census, ThreadsDoNotChangeOutput) {
  CensusConfig cfg;
  cfg.n_max = 6;
  cfg.m_max = 6;
  const std::string one = jsonl(run(cfg));
  cfg.threads = 3;
  EXPECT_EQ(jsonl(run(cfg)), one);
  cfg.split_depth = 1;
  EXPECT_EQ(jsonl(run(cfg)), one);
}

TEST(Census, CheckpointResume) {
  CensusConfig cfg;
  cfg.n_max = 6;
  cfg.m_max = 6;
  cfg.mode = CensusMode::HomologySpheres;
  const std::string want = jsonl(run(cfg));

  const std::string path = temp_path("ckpt");
  std::filesystem::remove(path);
  cfg.checkpoint_path = path;
  CensusSummary first;
  cfg.stop_after_tasks = 1;
  auto partial = run(cfg, &first);
  EXPECT_TRUE(partial.empty());
  EXPECT_FALSE(first.complete);
  ASSERT_GT(first.tasks_total, 2);
  cfg.stop_after_tasks = first.tasks_total / 2;
  cfg.resume = true;
  CensusSummary second;
  run(cfg, &second);
  EXPECT_FALSE(second.complete);
  EXPECT_EQ(second.tasks_done, 1 + first.tasks_total / 2);

  std::vector<CensusRecord> out;
  CensusSummary last = resume(path, [&](const CensusRecord& r) { out.push_back(r); });
  EXPECT_TRUE(last.complete);
  EXPECT_EQ(jsonl(out), want);
  // resuming a finished checkpoint emits the same again
  out.clear();
  resume(path, [&](const CensusRecord& r) { out.push_back(r); }, 2);
  EXPECT_EQ(jsonl(out), want);

  CensusConfig other = cfg;
  other.n_max = 5;
  other.stop_after_tasks.reset();
  EXPECT_THROW(run(other), ConfigMismatch);

  // truncate: drop the end line
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  {
    std::ofstream f(path, std::ios::trunc);
    f << text.substr(0, text.rfind("end "));
  }
  EXPECT_THROW(resume(path, [](const CensusRecord&) {}), CheckpointCorrupt);
  {
    std::ofstream f(path, std::ios::trunc);
    f << "garbage\n";
  }
  EXPECT_THROW(resume(path, [](const CensusRecord&) {}), CheckpointCorrupt);
  std::filesystem::remove(path);
  EXPECT_THROW(resume(path, [](const CensusRecord&) {}), CheckpointCorrupt);
}

TEST(Census, Bounds) {
  CensusConfig cfg;
  cfg.n_max = 11;
  EXPECT_THROW(run(cfg), BoundsExceeded);
  cfg.n_max = 5;
  cfg.m_max = 11;
  EXPECT_THROW(run(cfg), BoundsExceeded);
  cfg.m_max = 5;
  cfg.threads = 0;
  EXPECT_THROW(run(cfg), InvalidParameter);
}

TEST(Census, ConfigJsonRoundTrip) {
  CensusConfig cfg;
  cfg.n_max = 7;
  cfg.m_max = 8;
  cfg.field = FieldSpec::gf(3);
  cfg.mode = CensusMode::Codim3Only;
  cfg.require_join_irreducible = true;
  cfg.rules.matching = false;
  const CensusConfig back = CensusConfig::from_json(cfg.to_json());
  EXPECT_EQ(back.to_json(), cfg.to_json());
  EXPECT_EQ(back.hash(), cfg.hash());
  CensusConfig other = cfg;
  other.m_max = 7;
  EXPECT_NE(other.hash(), cfg.hash());
  // threads and checkpoint location do not affect the result, so not the hash
  other = cfg;
  other.threads = 4;
  other.checkpoint_path = "/tmp/x";
  EXPECT_EQ(other.hash(), cfg.hash());
}

TEST(Census, SmallCodimensions) {
  auto c3 = census_codim3(6);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].key, canonical_key(codim3_sphere(5)));
  Codim2Report c2 = census_codim2(6);
  EXPECT_TRUE(c2.all_two_simplex_joins);
  EXPECT_FALSE(c2.any_unsuspended);
  std::set<CanonicalKey> want;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; a + b + 2 <= 6; ++b) want.insert(canonical_key(join(simplex_boundary(a), simplex_boundary(b))));
  EXPECT_EQ(keys(c2.classes), want);
  EXPECT_TRUE(want.count(canonical_key(MnfComplex::from_labels(4, {{1, 2}, {3, 4}}))));
}

TEST(Census, UnsuspendedOutputProperties) {
  CensusConfig cfg;
  cfg.n_max = 7;
  cfg.m_max = 7;
  cfg.require_unsuspended = true;
  for (const auto& r : run(cfg)) {
    const MnfComplex& c = r.complex;
    EXPECT_GE(r.alpha, 2);
    EXPECT_EQ(canonical_key(transpose_reconstruct(nerve(c))), r.key);
    std::int64_t bound = 2 * r.alpha, power = 1;
    for (int k = 0; k < r.alpha; ++k) power *= 2 * r.alpha;
    EXPECT_LE(r.m, bound + power);
    if (r.alpha == 2) EXPECT_EQ(r.key, canonical_key(pentagon()));
    if (r.alpha == 3) EXPECT_EQ(r.key, canonical_key(pd_sphere(3)));
    const auto k = detect_pd_pattern(nerve(c));
    if (k && r.flags.join_irreducible) EXPECT_EQ(r.key, canonical_key(pd_sphere(*k + 1)));
  }
}
