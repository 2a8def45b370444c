#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mnf/complex.hpp"

namespace mnf {

/**
 * Label-independent encoding of a complex: n, m, then the non-faces of a
 * canonical relabeling in normal order. Two complexes have equal keys iff a
 * vertex relabeling maps one onto the other.
 */
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Canonical relabeling: perm[v] is the new label of vertex v.
std::vector<int> canonical_labeling(const MnfComplex& c);
CanonicalKey canonical_key(const MnfComplex& c);
/// relabel(c, canonical_labeling(c))
MnfComplex canonical_form(const MnfComplex& c);
bool are_isomorphic(const MnfComplex& a, const MnfComplex& b);

}  // namespace mnf
