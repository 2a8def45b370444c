#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mnf/complex.hpp"
#include "mnf/homology.hpp"

namespace mnf {

/**
 * Text format for complexes:
 *
 *     # comment
 *     n 5
 *     1 3
 *     1 4
 *
 * The first non-comment line gives the ground-set size; every further line is
 * one minimal non-face as 1-based labels. Errors raise ParseError with the
 * offending line number.
 */
MnfComplex parse_complex(std::istream& in);
MnfComplex parse_complex(const std::string& text);
MnfComplex read_complex_file(const std::string& path);
std::string format_complex(const MnfComplex& c);

/// 1-based label list.
nlohmann::json labels_json(VertexSet s);
nlohmann::json mnf_json(const MnfComplex& c);

struct ReportOptions {
  FieldSpec field = FieldSpec::gf2();
  bool include_lcm = true;
};

/// Full analysis of one complex (see the README for the key list).
nlohmann::json analysis_report(const MnfComplex& c, const ReportOptions& opts = {});

}  // namespace mnf
