#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mnf/complex.hpp"

namespace mnf {

/// Coefficient field: GF(p) for a prime p < 2^16, or the rationals.
class FieldSpec {
 public:
  static FieldSpec gf2() { return FieldSpec(2); }
  /// Throws InvalidParameter unless p is a prime below 2^16.
  static FieldSpec gf(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(0); }
  /// "gf2", "gf3", ..., "rat"
  static FieldSpec parse(const std::string& name);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Reduced Betti numbers b̃_{-1}, b̃_0, ..., b̃_dim.
struct BettiVector {
  std::vector<std::int64_t> dims;

  /// b̃_i, zero outside the stored range.
  std::int64_t operator()(int i) const {
    int k = i + 1;
    return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
  }
  int top() const { return static_cast<int>(dims.size()) - 2; }
  bool operator==(const BettiVector&) const = default;
};

/// Upper bound on the number of faces of a single dimension handed to the
/// linear algebra; larger complexes raise TooLarge.
inline constexpr std::size_t kMaxFacesPerDimension = 1'000'000;

/// Rank of ∂_i : C_i -> C_{i-1}, including the augmentation ∂_0.
std::int64_t boundary_rank(const MnfComplex& c, int i, FieldSpec f = FieldSpec::gf2());
BettiVector reduced_betti(const MnfComplex& c, FieldSpec f = FieldSpec::gf2());

/// Reduced Betti numbers of a complex given by its full face list (closed
/// under subsets, containing the empty face).
BettiVector reduced_betti_of_faces(std::span<const VertexSet> faces, FieldSpec f);
/// Same for vertex sets given as sorted index lists; used when a complex
/// has more than 64 vertices.
BettiVector reduced_betti_of_faces(const std::vector<std::vector<std::uint32_t>>& faces, FieldSpec f);

/// Pure, and the link of every face F (F = ∅ included) has the reduced
/// homology of a sphere of dimension dim - |F| over f.
bool is_homology_sphere(const MnfComplex& c, FieldSpec f = FieldSpec::gf2());

/// Σ (-1)^i f_i over all faces, the empty face counted in dimension -1.
std::int64_t reduced_euler_characteristic(const MnfComplex& c);

}  // namespace mnf
