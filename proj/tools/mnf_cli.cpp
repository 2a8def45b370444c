#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "mnf/enumerator.hpp"
#include "mnf/errors.hpp"
#include "mnf/io.hpp"
#include "mnf/nerve.hpp"

namespace {

constexpr int kExitLimit = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mnf::MnfComplex generate(const std::string& family, const std::vector<int>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw UsageError("gen " + family + " takes " + std::to_string(k) + " integer parameter(s)");
  };
  if (family == "simplex") {
    need(1);
    return mnf::simplex_boundary(p[0]);
  }
  if (family == "cross") {
    need(1);
    return mnf::cross_polytope(p[0]);
  }
  if (family == "pd") {
    need(1);
    return mnf::pd_sphere(p[0]);
  }
  if (family == "cyclic") {
    need(2);
    return mnf::cyclic_boundary(p[0], p[1]);
  }
  if (family == "codim3") {
    need(1);
    return mnf::codim3_sphere(p[0]);
  }
  if (family == "cross-minus-facet") {
    need(1);
    return mnf::cross_minus_facet(p[0]);
  }
  throw UsageError("unknown family '" + family + "'");
}

std::string log_line(const mnf::UnsuspensionStep& s) {
  using Kind = mnf::UnsuspensionStep::Kind;
  if (s.kind == Kind::RemoveIsolated) return "# remove-isolated " + s.set.to_string();
  const std::string kept = s.kept < 0 ? "-" : std::to_string(s.kept + 1);
  return "# merge-doubled kept=" + kept + " removed=" + std::to_string(s.removed + 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial complexes by minimal non-faces"};
  app.require_subcommand(1);

  std::string field_name = "gf2";
  std::string path_a, path_b;

  auto* analyze = app.add_subcommand("analyze", "Print a JSON report for a complex file");
  bool skip_lcm = false;
  analyze->add_option("file", path_a, "Complex file")->required();
  analyze->add_option("--field", field_name, "gf2, gf<p> or rat");
  analyze->add_flag("--skip-lcm", skip_lcm, "Omit the lcm-lattice block");

  auto* gen = app.add_subcommand("gen", "Write a named complex to standard output");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family, "simplex|cross|pd|cyclic|codim3|cross-minus-facet")->required();
  gen->add_option("params", params, "Integer parameters");

  auto* census = app.add_subcommand("census", "Enumerate complexes up to isomorphism (JSONL)");
  mnf::CensusConfig cfg;
  bool spheres = false, all = false, codim3 = false, resume_flag = false;
  int codim = 0;
  std::string out_path, checkpoint;
  std::optional<int> stop_after;
  census->add_option("--n-max", cfg.n_max, "Largest vertex count")->required();
  census->add_option("--m-max", cfg.m_max, "Largest number of minimal non-faces")->required();
  auto* sph = census->add_flag("--spheres", spheres, "Homology spheres only (default)");
  auto* al = census->add_flag("--all", all, "All complexes");
  auto* c3 = census->add_flag("--codim3", codim3, "Homology spheres with n - d = 3");
  sph->excludes(al)->excludes(c3);
  al->excludes(c3);
  census->add_option("--codim", codim, "Restrict spheres to n - d = CODIM");
  census->add_flag("--unsuspended", cfg.require_unsuspended, "Only unsuspended complexes");
  census->add_flag("--join-irreducible", cfg.require_join_irreducible, "Only join-irreducible complexes");
  census->add_option("--field", field_name, "gf2, gf<p> or rat");
  census->add_option("--out", out_path, "Output file (default: standard output)");
  census->add_option("--checkpoint", checkpoint, "Checkpoint file");
  census->add_flag("--resume", resume_flag, "Continue from --checkpoint");
  census->add_option("--threads", cfg.threads, "Worker threads");
  census->add_option("--split-depth", cfg.split_depth, "Search depth at which tasks are cut");
  census->add_option("--stop-after-tasks", stop_after, "Stop after this many tasks (testing)");

  auto* iso = app.add_subcommand("iso", "Exit 0 if two complex files are isomorphic, else 1");
  iso->add_option("a", path_a)->required();
  iso->add_option("b", path_b)->required();

  auto* unsusp = app.add_subcommand("unsuspend", "Print the unsuspended complex and the log as comments");
  unsusp->add_option("file", path_a)->required();

  auto* nerve_cmd = app.add_subcommand("nerve", "Print the nerve of the minimal non-faces");
  bool dot = false;
  nerve_cmd->add_option("file", path_a)->required();
  nerve_cmd->add_flag("--dot", dot, "DOT graph instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const mnf::FieldSpec field = mnf::FieldSpec::parse(field_name);
    if (*analyze) {
      const auto c = mnf::read_complex_file(path_a);
      std::cout << mnf::analysis_report(c, {field, !skip_lcm}).dump(2) << "\n";
    } else if (*gen) {
      std::cout << mnf::format_complex(generate(family, params));
    } else if (*census) {
      cfg.field = field;
      cfg.mode = all ? mnf::CensusMode::AllComplexes
                     : (codim3 ? mnf::CensusMode::Codim3Only : mnf::CensusMode::HomologySpheres);
      if (codim > 0) cfg.codim = codim;
      if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
      if (resume_flag && checkpoint.empty()) throw UsageError("--resume needs --checkpoint");
      cfg.resume = resume_flag;
      cfg.stop_after_tasks = stop_after;
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw UsageError("cannot write '" + out_path + "'");
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      const auto summary = mnf::enumerate(cfg, [&](const mnf::CensusRecord& r) { out << r.to_json().dump() << "\n"; });
      out.flush();
      nlohmann::json s = summary.to_json();
      s["wall_ms"] = static_cast<std::int64_t>(summary.wall_seconds * 1000);
      std::cerr << s.dump() << "\n";
    } else if (*iso) {
      const auto a = mnf::read_complex_file(path_a);
      const auto b = mnf::read_complex_file(path_b);
      const bool same = mnf::are_isomorphic(a, b);
      std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? 0 : 1;
    } else if (*unsusp) {
      const auto u = mnf::unsuspend(mnf::read_complex_file(path_a));
      std::cout << mnf::format_complex(u.reduced);
      for (const auto& step : u.log.steps) std::cout << log_line(step) << "\n";
    } else if (*nerve_cmd) {
      const auto c = mnf::read_complex_file(path_a);
      if (dot) {
        std::cout << mnf::nerve_dot(c);
      } else {
        const auto nv = mnf::nerve(c);
        nlohmann::json facets = nlohmann::json::array();
        for (auto f : nv.facets) facets.push_back(mnf::labels_json(f));
        std::cout << nlohmann::json{{"m", nv.m}, {"dim", nv.dimension()}, {"facets", facets}}.dump() << "\n";
      }
    }
  } catch (const mnf::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const mnf::BoundsExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const mnf::ParseError& e) {
    std::cerr << "error: " << (path_a.empty() ? "" : path_a + ": ") << e.what() << "\n";
    return kExitUsage;
  } catch (const mnf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitLimit;
  }
  return 0;
}
