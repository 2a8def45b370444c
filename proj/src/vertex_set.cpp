#include "mnf/vertex_set.hpp"

#include "mnf/errors.hpp"

namespace mnf {

VertexSet VertexSet::from_labels(const std::vector<int>& one_based) {
  VertexSet s;
  for (int v : one_based) {
    if (v < 1 || v > kMaxVertices)
      throw RangeViolation("vertex label " + std::to_string(v) + " outside 1.." +
                           std::to_string(kMaxVertices));
    s = s.with(v - 1);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

}  // namespace mnf
