#include "mnf/io.hpp"

#include <fstream>
#include <sstream>

#include "mnf/errors.hpp"
#include "mnf/lcm_lattice.hpp"
#include "mnf/nerve.hpp"

namespace mnf {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

MnfComplex parse_complex(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<VertexSet> sets;
  std::vector<int> set_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::string tok;
    if (n < 0) {
      tokens >> tok;
      if (tok != "n") throw ParseError(line_no, "expected 'n <integer>' header");
      std::string value, extra;
      if (!(tokens >> value)) throw ParseError(line_no, "missing ground-set size");
      if (tokens >> extra) throw ParseError(line_no, "trailing text after ground-set size");
      n = parse_int(value, line_no);
      if (n < 0 || n > kMaxVertices)
        throw ParseError(line_no, "ground-set size must be in 0.." + std::to_string(kMaxVertices));
      continue;
    }
    VertexSet s;
    while (tokens >> tok) {
      const int v = parse_int(tok, line_no);
      if (v < 1 || v > n) throw ParseError(line_no, "vertex " + tok + " outside 1.." + std::to_string(n));
      if (s.contains(v - 1)) throw ParseError(line_no, "vertex " + tok + " repeated");
      s = s.with(v - 1);
    }
    if (s.size() < 2) throw ParseError(line_no, "a minimal non-face needs at least two vertices");
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].is_subset_of(s) || s.is_subset_of(sets[k]))
        throw ParseError(line_no, "non-face " + s.to_string() + " conflicts with line " +
                                      std::to_string(set_lines[k]) + " (" + sets[k].to_string() + ")");
    }
    sets.push_back(s);
    set_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n <integer>' header");
  return MnfComplex(n, std::move(sets));
}

MnfComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

MnfComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_complex(in);
}

std::string format_complex(const MnfComplex& c) {
  std::string out = "n " + std::to_string(c.n()) + "\n";
  for (VertexSet s : c.mnf()) {
    bool first = true;
    s.for_each([&](int v) {
      if (!first) out += ' ';
      out += std::to_string(v + 1);
      first = false;
    });
    out += '\n';
  }
  return out;
}

nlohmann::json labels_json(VertexSet s) { return s.labels(); }

nlohmann::json mnf_json(const MnfComplex& c) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet s : c.mnf()) out.push_back(labels_json(s));
  return out;
}

nlohmann::json analysis_report(const MnfComplex& c, const ReportOptions& opts) {
  using nlohmann::json;
  json r;
  const int d = d_of(c);
  r["n"] = c.n();
  r["d"] = d;
  r["m"] = c.m();
  r["alpha"] = alpha(c);
  r["f_vector"] = f_vector(c);
  json fs = json::array();
  for (VertexSet f : facets(c)) fs.push_back(labels_json(f));
  r["facets"] = fs;
  r["is_pure"] = is_pure(c);
  r["is_cone"] = is_cone(c);
  r["point_separating"] = is_point_separating(c);
  r["unsuspended"] = unsuspend(c).log.steps.empty();

  json factors = json::array();
  const JoinDecomposition jd = join_decompose(c);
  for (std::size_t k = 0; k < jd.factors.size(); ++k) {
    json vertices = json::array();
    for (int v : jd.factor_vertices[k]) vertices.push_back(v + 1);
    factors.push_back({{"vertices", vertices}, {"mnf", mnf_json(jd.factors[k])}});
  }
  if (!jd.free_vertices.empty()) {
    json vertices = json::array();
    for (int v : jd.free_vertices) vertices.push_back(v + 1);
    factors.push_back({{"vertices", vertices}, {"mnf", json::array()}});
  }
  r["join_factors"] = factors;

  const BettiVector betti = reduced_betti(c, opts.field);
  r["homology"] = {{"field", opts.field.name()},
                   {"reduced_betti", betti.dims},
                   {"is_homology_sphere", is_homology_sphere(c, opts.field)}};

  const NerveComplex nv = nerve(c);
  json fsets = json::array();
  for (VertexSet f : facet_sets(c)) fsets.push_back(labels_json(f));
  r["nerve"] = {{"dim", nv.dimension()},
                {"max_degree", nerve_max_degree(c)},
                {"matching_number", nerve_matching_number(c)},
                {"facet_sets", fsets}};

  if (opts.include_lcm) {
    const LcmLattice lattice(c);
    const BettiTable table = betti_table(c, opts.field);
    const auto violations = check_duality(c, opts.field);
    json vs = json::array();
    for (const auto& v : violations)
      vs.push_back({{"i", v.i}, {"S", labels_json(v.s)}, {"left", v.left}, {"right", v.right}});
    r["lcm"] = {{"size", lattice.size()},
                {"total_betti", table.totals()},
                {"duality_ok", violations.empty()},
                {"violations", vs}};
  }
  return r;
}

}  // namespace mnf
