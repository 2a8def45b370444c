#include "mnf/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "mnf/constructions.hpp"
#include "mnf/errors.hpp"
#include "mnf/io.hpp"
#include "mnf/nerve.hpp"

namespace mnf {

namespace {

constexpr int kMaxCensusN = 10;
constexpr int kMaxCensusM = 10;
constexpr const char* kCheckpointMagic = "mnf-census-checkpoint";
constexpr int kCheckpointVersion = 1;

std::string mode_name(CensusMode mode) {
  switch (mode) {
    case CensusMode::AllComplexes:
      return "all-complexes";
    case CensusMode::HomologySpheres:
      return "homology-spheres";
    case CensusMode::Codim3Only:
      return "codim3-only";
  }
  return "?";
}

CensusMode parse_mode(const std::string& s) {
  if (s == "all-complexes") return CensusMode::AllComplexes;
  if (s == "homology-spheres") return CensusMode::HomologySpheres;
  if (s == "codim3-only") return CensusMode::Codim3Only;
  throw InvalidParameter("unknown census mode '" + s + "'");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

// All permutations of [n], stored row by row.
class PermTable {
 public:
  explicit PermTable(int n) : n_(n) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      data_.insert(data_.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
    count_ = n == 0 ? 1 : data_.size() / n;
  }
  std::size_t size() const { return count_; }
  VertexSet apply(std::uint32_t perm, VertexSet s) const {
    const std::uint8_t* p = data_.data() + static_cast<std::size_t>(perm) * n_;
    std::uint64_t out = 0;
    for (std::uint64_t b = s.bits(); b; b &= b - 1) out |= std::uint64_t{1} << p[std::countr_zero(b)];
    return VertexSet(out);
  }

 private:
  int n_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
};

// Partial set system at one node of the search tree.
struct Node {
  int m = 0;
  int last = -1;  // index of the last candidate added
  std::array<VertexSet, kMaxCensusM> sets{};
  std::array<std::uint32_t, kMaxCensusM> adj{};  // nerve adjacency
  std::array<int, kMaxCensusN> vdeg{};
  std::array<std::uint64_t, (1 << kMaxCensusN) / 64> face_bits{};
  std::array<int, kMaxCensusN + 1> faces_of_size{};
  int d = 0;  // current maximal face size

  int last_size() const { return m == 0 ? 0 : sets[m - 1].size(); }
  bool is_face(std::uint64_t mask) const { return (face_bits[mask / 64] >> (mask % 64)) & 1u; }
};

using Group = std::vector<std::uint32_t>;

struct Task {
  int n = 0;
  std::vector<int> path;  // candidate indices from the root
};

class Search {
 public:
  Search(const CensusConfig& cfg, int n) : cfg_(cfg), n_(n), perms_(n) {
    sphere_ = cfg.mode != CensusMode::AllComplexes;
    if (cfg.mode == CensusMode::Codim3Only) codim_ = 3;
    if (cfg.codim) codim_ = cfg.codim;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      VertexSet s(bits);
      if (s.size() < 2) continue;
      if (sphere_ && cfg.rules.complement_closure && s.size() == n - 1) continue;
      candidates_.push_back(s);
    }
    std::sort(candidates_.begin(), candidates_.end());
    root_group_.resize(perms_.size());
    std::iota(root_group_.begin(), root_group_.end(), 0u);
  }

  Node root() const {
    Node node;
    const std::uint64_t total = std::uint64_t{1} << n_;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      node.face_bits[mask / 64] |= std::uint64_t{1} << (mask % 64);
      ++node.faces_of_size[std::popcount(mask)];
    }
    node.d = n_;
    return node;
  }
  const Group& root_group() const { return root_group_; }
  int candidate_count() const { return static_cast<int>(candidates_.size()); }

  // Runs the subtree below `node`. With `task_depth`, nodes at that depth are
  // not entered but handed to `on_task`.
  template <class OnTask>
  void dfs(const Node& node, const Group& group, std::vector<CensusRecord>& out, std::int64_t& nodes,
           int task_depth, std::vector<int>& path, OnTask&& on_task) const {
    if (task_depth >= 0 && node.m == task_depth) {
      on_task(path);
      return;
    }
    ++nodes;
    evaluate(node, out);
    if (node.m == cfg_.m_max) return;
    std::optional<Group> wider;
    for (int c = node.last + 1; c < candidate_count(); ++c) {
      Node child;
      if (!extend(node, c, child)) continue;
      const Group* g = &group;
      if (candidates_[c].size() != node.last_size()) {
        if (!wider) wider = stabilizer(node, group);
        g = &*wider;
      }
      if (!is_canonical(child, *g)) continue;
      path.push_back(c);
      dfs(child, *g, out, nodes, task_depth, path, on_task);
      path.pop_back();
    }
  }

  // Recomputes the node and symmetry group reached by `path`.
  std::pair<Node, Group> rebuild(const std::vector<int>& path) const {
    Node node = root();
    Group group = root_group_;
    for (int c : path) {
      Node child;
      if (!extend(node, c, child)) throw CheckpointCorrupt("task path is not a valid search node");
      if (candidates_[c].size() != node.last_size()) group = stabilizer(node, group);
      node = child;
    }
    return {node, std::move(group)};
  }

 private:
  // Adds candidate c; false if the result is not an antichain or is pruned.
  bool extend(const Node& node, int c, Node& child) const {
    const VertexSet s = candidates_[c];
    for (int j = 0; j < node.m; ++j)
      if (node.sets[j].is_subset_of(s)) return false;
    child = node;
    child.last = c;
    child.sets[node.m] = s;
    for (int j = 0; j < node.m; ++j) {
      if (node.sets[j].intersects(s)) {
        child.adj[j] |= 1u << node.m;
        child.adj[node.m] |= 1u << j;
      }
    }
    s.for_each([&](int v) { ++child.vdeg[v]; });
    const std::uint64_t rest = VertexSet::range(n_).bits() & ~s.bits();
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t t = s.bits() | sub;
      std::uint64_t& word = child.face_bits[t / 64];
      const std::uint64_t bit = std::uint64_t{1} << (t % 64);
      if (word & bit) {
        word &= ~bit;
        --child.faces_of_size[std::popcount(t)];
      }
      if (sub == 0) break;
    }
    while (child.d > 0 && child.faces_of_size[child.d] == 0) --child.d;
    child.m = node.m + 1;
    return !pruned(child);
  }

  int target_d(const Node& node) const { return codim_ ? std::min(node.d, n_ - *codim_) : node.d; }

  // Monotone conditions: once violated, no extension can satisfy the filters.
  bool pruned(const Node& node) const {
    const PruneRules& r = cfg_.rules;
    if (codim_ && node.d < n_ - *codim_) return true;
    const int alpha_bound = cfg_.m_max - n_ + target_d(node);
    if (r.matching && alpha_bound < 0) return true;
    if (r.vertex_degree) {
      for (int v = 0; v < n_; ++v)
        if (node.vdeg[v] > alpha_bound + 1) return true;
    }
    if (sphere_ && r.nerve_degree) {
      for (int j = 0; j < node.m; ++j)
        if (std::popcount(node.adj[j]) > alpha_bound) return true;
    }
    if (r.matching && node.m / 2 > alpha_bound && matching(node) > alpha_bound) return true;
    return false;
  }

  static int matching(const Node& node) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < node.m; ++j)
      for (int k = j + 1; k < node.m; ++k)
        if ((node.adj[j] >> k) & 1u) edges.emplace_back(j, k);
    return matching_number(node.m, edges);
  }

  // Sets of the last size block, i.e. those with the size of the last set.
  static int block_start(const Node& node) {
    int start = node.m;
    const int size = node.last_size();
    while (start > 0 && node.sets[start - 1].size() == size) --start;
    return start;
  }

  bool block_image_less(const Node& node, int start, std::uint32_t perm) const {
    std::array<VertexSet, kMaxCensusM> img;
    const int len = node.m - start;
    for (int j = 0; j < len; ++j) img[j] = perms_.apply(perm, node.sets[start + j]);
    std::sort(img.begin(), img.begin() + len);
    return std::lexicographical_compare(img.begin(), img.begin() + len, node.sets.begin() + start,
                                        node.sets.begin() + node.m);
  }

  // The node is the minimum of its orbit, comparing normal-ordered lists of
  // sets lexicographically. Elements of `group` fix all smaller blocks.
  bool is_canonical(const Node& node, const Group& group) const {
    const int start = block_start(node);
    for (std::uint32_t perm : group)
      if (block_image_less(node, start, perm)) return false;
    return true;
  }

  Group stabilizer(const Node& node, const Group& group) const {
    if (node.m == 0) return group;
    const int start = block_start(node);
    const int len = node.m - start;
    Group out;
    std::array<VertexSet, kMaxCensusM> img;
    for (std::uint32_t perm : group) {
      for (int j = 0; j < len; ++j) img[j] = perms_.apply(perm, node.sets[start + j]);
      std::sort(img.begin(), img.begin() + len);
      if (std::equal(img.begin(), img.begin() + len, node.sets.begin() + start)) out.push_back(perm);
    }
    return out;
  }

  MnfComplex to_complex(const Node& node) const {
    return MnfComplex(n_, std::vector<VertexSet>(node.sets.begin(), node.sets.begin() + node.m));
  }

  bool point_separating(const Node& node) const {
    std::array<std::uint32_t, kMaxCensusN> fv{};
    for (int j = 0; j < node.m; ++j) node.sets[j].for_each([&](int v) { fv[v] |= 1u << j; });
    if (n_ < 2) return true;
    for (int v = 0; v < n_; ++v) {
      if (fv[v] == 0) return false;
      for (int u = 0; u < v; ++u)
        if (fv[u] == fv[v]) return false;
    }
    return true;
  }

  // Cheap necessary conditions for a sphere leaf, then the full test.
  bool sphere_leaf(const Node& node) const {
    const PruneRules& r = cfg_.rules;
    if (node.m == 0) return false;  // a simplex on n >= 1 vertices is a cone
    if (codim_ && n_ - node.d != *codim_) return false;
    const int a = node.m - n_ + node.d;
    if (r.covering) {
      for (int v = 0; v < n_; ++v)
        if (node.vdeg[v] == 0) return false;
    }
    if (cfg_.require_unsuspended && r.point_separating && !point_separating(node)) return false;
    if (r.vertex_degree) {
      for (int v = 0; v < n_; ++v)
        if (node.vdeg[v] > a + 1) return false;
    }
    if (r.nerve_degree) {
      for (int j = 0; j < node.m; ++j)
        if (std::popcount(node.adj[j]) > a) return false;
    }
    if (r.matching && matching(node) > a) return false;
    if (r.complement_closure) {
      const VertexSet ground = VertexSet::range(n_);
      for (int j = 0; j < node.m; ++j) {
        const VertexSet comp = ground - node.sets[j];
        VertexSet covered;
        for (int k = 0; k < node.m; ++k)
          if (node.sets[k].is_subset_of(comp)) covered |= node.sets[k];
        if (covered != comp) return false;
      }
    }
    if (cfg_.require_unsuspended && r.m_bound) {
      std::int64_t bound = 2 * a;
      std::int64_t power = 1;
      for (int k = 0; k < a; ++k) power *= 2 * a;
      if (node.m > bound + power) return false;
    }
    return is_homology_sphere(to_complex(node), cfg_.field);
  }

  void evaluate(const Node& node, std::vector<CensusRecord>& out) const {
    if (sphere_ && !sphere_leaf(node)) return;
    if (cfg_.require_unsuspended && !sphere_ && cfg_.rules.point_separating && !point_separating(node)) return;
    const MnfComplex c = to_complex(node);
    if (cfg_.require_unsuspended && !is_point_separating(c)) return;
    if (cfg_.require_join_irreducible && !is_join_irreducible(c)) return;
    out.push_back(CensusRecord::of(c, cfg_.field));
  }

  const CensusConfig& cfg_;
  int n_;
  bool sphere_ = false;
  std::optional<int> codim_;
  PermTable perms_;
  std::vector<VertexSet> candidates_;
  Group root_group_;
};

// ---- checkpoint file -------------------------------------------------------

struct CheckpointState {
  std::uint64_t config_hash = 0;
  nlohmann::json config;
  std::vector<bool> done;
  std::vector<std::vector<CensusRecord>> records;  // per task
};

void write_checkpoint(const std::string& path, const CheckpointState& st) {
  std::ostringstream out;
  out << kCheckpointMagic << ' ' << kCheckpointVersion << '\n';
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(st.config_hash));
  out << "config " << hash << ' ' << st.config.dump() << '\n';
  out << "tasks " << st.done.size() << ' ';
  for (bool b : st.done) out << (b ? '1' : '0');
  out << '\n';
  std::size_t count = 0;
  for (std::size_t t = 0; t < st.records.size(); ++t) {
    if (!st.done[t]) continue;
    for (const auto& r : st.records[t]) {
      out << "record " << t << ' ' << r.to_json().dump() << '\n';
      ++count;
    }
  }
  out << "end " << count << '\n';
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write checkpoint '" + tmp + "'");
    f << out.str();
    f.flush();
    if (!f) throw Error("cannot write checkpoint '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

CheckpointState read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointCorrupt("cannot open checkpoint '" + path + "'");
  CheckpointState st;
  std::string line;
  auto fail = [&](const std::string& why) -> CheckpointCorrupt {
    return CheckpointCorrupt("checkpoint '" + path + "': " + why);
  };
  if (!std::getline(in, line) || line != std::string(kCheckpointMagic) + " " + std::to_string(kCheckpointVersion))
    throw fail("bad header");
  if (!std::getline(in, line) || line.rfind("config ", 0) != 0 || line.size() < 24) throw fail("bad config line");
  try {
    st.config_hash = std::stoull(line.substr(7, 16), nullptr, 16);
    st.config = nlohmann::json::parse(line.substr(24));
  } catch (const std::exception&) {
    throw fail("bad config line");
  }
  if (!std::getline(in, line) || line.rfind("tasks ", 0) != 0) throw fail("bad task line");
  {
    std::istringstream ts(line.substr(6));
    std::size_t total = 0;
    std::string bitmap;
    if (!(ts >> total)) throw fail("bad task line");
    ts >> bitmap;
    if (bitmap.size() != total) throw fail("task bitmap has wrong length");
    for (char ch : bitmap) {
      if (ch != '0' && ch != '1') throw fail("bad task bitmap");
      st.done.push_back(ch == '1');
    }
    st.records.resize(total);
  }
  std::size_t count = 0;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.rfind("end ", 0) == 0) {
      std::size_t stated = 0;
      try {
        stated = std::stoull(line.substr(4));
      } catch (const std::exception&) {
        throw fail("bad end line");
      }
      if (stated != count) throw fail("record count mismatch");
      ended = true;
      break;
    }
    if (line.rfind("record ", 0) != 0) throw fail("unexpected line");
    const auto space = line.find(' ', 7);
    if (space == std::string::npos) throw fail("bad record line");
    try {
      const std::size_t t = std::stoull(line.substr(7, space - 7));
      if (t >= st.records.size() || !st.done[t]) throw fail("record for an unfinished task");
      st.records[t].push_back(CensusRecord::from_json(nlohmann::json::parse(line.substr(space + 1))));
    } catch (const CheckpointCorrupt&) {
      throw;
    } catch (const std::exception&) {
      throw fail("bad record line");
    }
    ++count;
  }
  if (!ended) throw fail("truncated (no end line)");
  return st;
}

void validate(const CensusConfig& cfg) {
  if (cfg.n_max < 0 || cfg.m_max < 0) throw InvalidParameter("census bounds must be non-negative");
  if (cfg.n_max > kMaxCensusN || cfg.m_max > kMaxCensusM)
    throw BoundsExceeded("census bounds limited to n_max <= 10 and m_max <= 10");
  if (cfg.threads < 1) throw InvalidParameter("threads must be >= 1");
  if (cfg.split_depth < 1) throw InvalidParameter("split depth must be >= 1");
  if (cfg.codim && *cfg.codim < 1) throw InvalidParameter("codimension must be >= 1");
}

}  // namespace

// ---- config and records ----------------------------------------------------

nlohmann::json CensusConfig::to_json() const {
  nlohmann::json j;
  j["n_max"] = n_max;
  j["m_max"] = m_max;
  j["field"] = field.name();
  j["mode"] = mode_name(mode);
  j["require_unsuspended"] = require_unsuspended;
  j["require_join_irreducible"] = require_join_irreducible;
  j["codim"] = codim ? nlohmann::json(*codim) : nlohmann::json(nullptr);
  j["split_depth"] = split_depth;
  j["rules"] = {{"point_separating", rules.point_separating}, {"covering", rules.covering},
                {"nerve_degree", rules.nerve_degree},         {"matching", rules.matching},
                {"vertex_degree", rules.vertex_degree},       {"complement_closure", rules.complement_closure},
                {"m_bound", rules.m_bound}};
  return j;
}

CensusConfig CensusConfig::from_json(const nlohmann::json& j) {
  CensusConfig cfg;
  cfg.n_max = j.at("n_max").get<int>();
  cfg.m_max = j.at("m_max").get<int>();
  cfg.field = FieldSpec::parse(j.at("field").get<std::string>());
  cfg.mode = parse_mode(j.at("mode").get<std::string>());
  cfg.require_unsuspended = j.at("require_unsuspended").get<bool>();
  cfg.require_join_irreducible = j.at("require_join_irreducible").get<bool>();
  if (!j.at("codim").is_null()) cfg.codim = j.at("codim").get<int>();
  cfg.split_depth = j.at("split_depth").get<int>();
  const auto& r = j.at("rules");
  cfg.rules.point_separating = r.at("point_separating").get<bool>();
  cfg.rules.covering = r.at("covering").get<bool>();
  cfg.rules.nerve_degree = r.at("nerve_degree").get<bool>();
  cfg.rules.matching = r.at("matching").get<bool>();
  cfg.rules.vertex_degree = r.at("vertex_degree").get<bool>();
  cfg.rules.complement_closure = r.at("complement_closure").get<bool>();
  cfg.rules.m_bound = r.at("m_bound").get<bool>();
  return cfg;
}

std::uint64_t CensusConfig::hash() const { return fnv1a(to_json().dump()); }

nlohmann::json CensusRecord::to_json() const {
  return {{"key", key.hex()},
          {"n", n},
          {"d", d},
          {"m", m},
          {"alpha", alpha},
          {"flags",
           {{"homology_sphere", flags.homology_sphere},
            {"unsuspended", flags.unsuspended},
            {"join_irreducible", flags.join_irreducible},
            {"point_separating", flags.point_separating}}},
          {"mnf", mnf_json(complex)}};
}

CensusRecord CensusRecord::from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.key = CanonicalKey::from_hex(j.at("key").get<std::string>());
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.m = j.at("m").get<int>();
  r.alpha = j.at("alpha").get<int>();
  const auto& f = j.at("flags");
  r.flags.homology_sphere = f.at("homology_sphere").get<bool>();
  r.flags.unsuspended = f.at("unsuspended").get<bool>();
  r.flags.join_irreducible = f.at("join_irreducible").get<bool>();
  r.flags.point_separating = f.at("point_separating").get<bool>();
  r.complex = MnfComplex::from_labels(r.n, j.at("mnf").get<std::vector<std::vector<int>>>());
  return r;
}

CensusRecord CensusRecord::of(const MnfComplex& c, FieldSpec field) {
  CensusRecord r;
  r.key = canonical_key(c);
  r.complex = canonical_form(c);
  r.n = c.n();
  r.d = d_of(c);
  r.m = c.m();
  r.alpha = r.m - (r.n - r.d);
  r.flags.homology_sphere = is_homology_sphere(c, field);
  r.flags.unsuspended = unsuspend(c).log.steps.empty();
  r.flags.join_irreducible = is_join_irreducible(c);
  r.flags.point_separating = is_point_separating(c);
  return r;
}

nlohmann::json CensusSummary::to_json() const {
  nlohmann::json counts_json = nlohmann::json::array();
  for (const auto& [k, v] : counts)
    counts_json.push_back({{"n", std::get<0>(k)}, {"m", std::get<1>(k)}, {"alpha", std::get<2>(k)}, {"count", v}});
  return {{"records", records},
          {"nodes_visited", nodes_visited},
          {"duplicates_dropped", duplicates_dropped},
          {"tasks_total", tasks_total},
          {"tasks_done", tasks_done},
          {"complete", complete},
          {"counts", counts_json}};
}

// ---- driver ------------------------------------------------------------------

CensusSummary enumerate(const CensusConfig& cfg, const RecordSink& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  CensusSummary summary;

  // Shallow part of the tree: evaluated directly, and cut into tasks.
  std::vector<std::unique_ptr<Search>> searches(cfg.n_max + 1);
  std::vector<CensusRecord> shallow;
  std::vector<Task> tasks;
  for (int n = 1; n <= cfg.n_max; ++n) {
    searches[n] = std::make_unique<Search>(cfg, n);
    const Search& s = *searches[n];
    std::vector<int> path;
    s.dfs(s.root(), s.root_group(), shallow, summary.nodes_visited, cfg.split_depth, path,
          [&](const std::vector<int>& p) { tasks.push_back({n, p}); });
  }
  summary.tasks_total = static_cast<int>(tasks.size());

  CheckpointState ck;
  ck.config_hash = cfg.hash();
  ck.config = cfg.to_json();
  ck.done.assign(tasks.size(), false);
  ck.records.resize(tasks.size());
  if (cfg.resume) {
    if (!cfg.checkpoint_path) throw InvalidParameter("resume needs a checkpoint path");
    CheckpointState old = read_checkpoint(*cfg.checkpoint_path);
    if (old.config_hash != ck.config_hash) throw ConfigMismatch("checkpoint was written for a different configuration");
    if (old.done.size() != tasks.size()) throw CheckpointCorrupt("checkpoint task count does not match");
    ck.done = std::move(old.done);
    ck.records = std::move(old.records);
  }

  std::vector<int> pending;
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (!ck.done[t]) pending.push_back(static_cast<int>(t));

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<int> finished_this_run{0};
  std::atomic<std::int64_t> nodes{0};
  std::exception_ptr failure;
  const int limit = cfg.stop_after_tasks.value_or(static_cast<int>(pending.size()));

  auto worker = [&]() {
    for (;;) {
      if (finished_this_run.load() >= limit) return;
      const std::size_t slot = next.fetch_add(1);
      if (slot >= pending.size() || static_cast<int>(slot) >= limit) return;
      const int t = pending[slot];
      try {
        const Search& s = *searches[tasks[t].n];
        auto [node, group] = s.rebuild(tasks[t].path);
        std::vector<CensusRecord> found;
        std::int64_t local_nodes = 0;
        std::vector<int> path = tasks[t].path;
        s.dfs(node, group, found, local_nodes, -1, path, [](const std::vector<int>&) {});
        nodes += local_nodes;
        std::lock_guard lock(mu);
        ck.records[t] = std::move(found);
        ck.done[t] = true;
        if (cfg.checkpoint_path) write_checkpoint(*cfg.checkpoint_path, ck);
        ++finished_this_run;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (cfg.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < cfg.threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (cfg.checkpoint_path && pending.empty()) write_checkpoint(*cfg.checkpoint_path, ck);

  summary.nodes_visited += nodes.load();
  summary.tasks_done = static_cast<int>(std::count(ck.done.begin(), ck.done.end(), true));
  summary.complete = summary.tasks_done == summary.tasks_total;
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!summary.complete) return summary;

  std::vector<CensusRecord> all = std::move(shallow);
  for (auto& rs : ck.records)
    for (auto& r : rs) all.push_back(std::move(r));
  std::sort(all.begin(), all.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.key < b.key; });
  std::vector<CensusRecord> unique;
  for (auto& r : all) {
    if (!unique.empty() && unique.back().key == r.key) {
      ++summary.duplicates_dropped;
      continue;
    }
    unique.push_back(std::move(r));
  }
  for (const auto& r : unique) {
    ++summary.counts[{r.n, r.m, r.alpha}];
    ++summary.records;
    sink(r);
  }
  return summary;
}

CensusSummary resume(const std::string& checkpoint_path, const RecordSink& sink, int threads) {
  CheckpointState st = read_checkpoint(checkpoint_path);
  CensusConfig cfg = CensusConfig::from_json(st.config);
  if (cfg.hash() != st.config_hash) throw CheckpointCorrupt("checkpoint configuration does not match its hash");
  cfg.checkpoint_path = checkpoint_path;
  cfg.resume = true;
  cfg.threads = threads;
  return enumerate(cfg, sink);
}

std::vector<CensusRecord> census_codim3(int n_max, FieldSpec field) {
  CensusConfig cfg;
  cfg.n_max = n_max;
  cfg.m_max = kMaxCensusM;
  cfg.field = field;
  cfg.mode = CensusMode::Codim3Only;
  cfg.require_unsuspended = true;
  std::vector<CensusRecord> out;
  enumerate(cfg, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

Codim2Report census_codim2(int n_max, FieldSpec field) {
  CensusConfig cfg;
  cfg.n_max = n_max;
  cfg.m_max = kMaxCensusM;
  cfg.field = field;
  cfg.mode = CensusMode::HomologySpheres;
  cfg.codim = 2;
  Codim2Report report;
  enumerate(cfg, [&](const CensusRecord& r) { report.classes.push_back(r); });
  for (const auto& r : report.classes) {
    const JoinDecomposition jd = join_decompose(r.complex);
    bool two_simplices = jd.factors.size() == 2 && jd.free_vertices.empty();
    for (const auto& f : jd.factors) {
      if (!are_isomorphic(f, simplex_boundary(f.n() - 1))) two_simplices = false;
    }
    if (!two_simplices) report.all_two_simplex_joins = false;
    if (r.flags.unsuspended) report.any_unsuspended = true;
  }
  return report;
}

}  // namespace mnf
