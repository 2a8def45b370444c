#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "mnf/canonical.hpp"
#include "mnf/complex.hpp"
#include "mnf/homology.hpp"

namespace mnf {

enum class CensusMode { AllComplexes, HomologySpheres, Codim3Only };

/// Early rejections used by the search. Every rule is a necessary condition
/// for the objects being searched for, so switching one off only costs time.
struct PruneRules {
  /// Unsuspended filter: non-faces must separate points (leaf).
  bool point_separating = true;
  /// Spheres are not cones: every vertex in some non-face (leaf).
  bool covering = true;
  /// Spheres: every non-face meets at most α others (interior + leaf).
  bool nerve_degree = true;
  /// Matching number of the nerve graph at most α (interior + leaf).
  bool matching = true;
  /// Every vertex lies in at most α+1 non-faces (interior + leaf).
  bool vertex_degree = true;
  /// Spheres: the complement of each non-face is a union of non-faces
  /// (leaf); no non-face of size n-1 (candidate filter).
  bool complement_closure = true;
  /// Unsuspended spheres: m <= 2α + (2α)^α (leaf).
  bool m_bound = true;

  bool operator==(const PruneRules&) const = default;
};

struct CensusConfig {
  int n_max = 5;
  int m_max = 5;
  FieldSpec field = FieldSpec::gf2();
  CensusMode mode = CensusMode::HomologySpheres;
  bool require_unsuspended = false;
  bool require_join_irreducible = false;
  /// Restrict sphere searches to n - d = codim (Codim3Only sets 3).
  std::optional<int> codim;
  PruneRules rules;
  std::optional<std::string> checkpoint_path;
  /// Continue from an existing checkpoint instead of starting over.
  bool resume = false;
  int threads = 1;
  /// Depth of the search tree at which independent tasks are cut.
  int split_depth = 2;
  /// Stop after this many tasks have finished in this run (for interruption tests).
  std::optional<int> stop_after_tasks;

  /// Hash of everything that affects the task list and the output.
  std::uint64_t hash() const;
  nlohmann::json to_json() const;
  static CensusConfig from_json(const nlohmann::json& j);
};

struct CensusFlags {
  bool homology_sphere = false;
  bool unsuspended = false;
  bool join_irreducible = false;
  bool point_separating = false;
  bool operator==(const CensusFlags&) const = default;
};

struct CensusRecord {
  CanonicalKey key;
  int n = 0;
  int d = 0;
  int m = 0;
  int alpha = 0;
  CensusFlags flags;
  /// Canonical representative.
  MnfComplex complex;

  nlohmann::json to_json() const;
  static CensusRecord from_json(const nlohmann::json& j);
  /// Builds the record (key, invariants, flags) of a complex.
  static CensusRecord of(const MnfComplex& c, FieldSpec field);
  bool operator==(const CensusRecord&) const = default;
};

struct CensusSummary {
  std::map<std::tuple<int, int, int>, std::int64_t> counts;  // (n, m, alpha) -> records
  std::int64_t records = 0;
  std::int64_t nodes_visited = 0;
  std::int64_t duplicates_dropped = 0;
  int tasks_total = 0;
  int tasks_done = 0;
  bool complete = false;
  double wall_seconds = 0;

  nlohmann::json to_json() const;
};

using RecordSink = std::function<void(const CensusRecord&)>;

/// Emits one record per isomorphism class satisfying the configuration, in
/// canonical-key order, once the search is complete. Throws BoundsExceeded,
/// CheckpointCorrupt or ConfigMismatch.
CensusSummary enumerate(const CensusConfig& cfg, const RecordSink& sink);
/// Continues the run recorded in `checkpoint_path` with its stored configuration.
CensusSummary resume(const std::string& checkpoint_path, const RecordSink& sink, int threads = 1);

/// Unsuspended homology spheres with n - d = 3 and n <= n_max.
std::vector<CensusRecord> census_codim3(int n_max, FieldSpec field = FieldSpec::gf2());

struct Codim2Report {
  std::vector<CensusRecord> classes;
  /// Every class is the join of exactly two simplex boundaries.
  bool all_two_simplex_joins = true;
  /// Some class is unsuspended (never expected).
  bool any_unsuspended = false;
};
/// Homology spheres with n - d = 2 and n <= n_max.
Codim2Report census_codim2(int n_max, FieldSpec field = FieldSpec::gf2());

}  // namespace mnf
