#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mnf {

/// Largest supported ground set.
inline constexpr int kMaxVertices = 64;

/**
 * A subset of the ground set, stored as a 64-bit mask. Internally vertices
 * are 0-based; the text formats and reports use 1-based labels.
 *
 * The ordering is the normal order used everywhere in the library:
 * first by cardinality, then colexicographic. For sets of equal size the
 * colex order coincides with the order of the masks as integers.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> zero_based) {
    for (int v : zero_based) bits_ |= bit(v);
  }

  static VertexSet from_labels(const std::vector<int>& one_based);
  /// {0, ..., k-1}
  static constexpr VertexSet range(int k) {
    return VertexSet(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  /// Largest member plus one (0 for the empty set).
  constexpr int span() const { return 64 - std::countl_zero(bits_); }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  /// Complement inside {0, ..., n-1}.
  constexpr VertexSet complement(int n) const { return range(n) - *this; }

  /// Members in increasing order, 0-based.
  std::vector<int> members() const;
  /// Members in increasing order, 1-based.
  std::vector<int> labels() const;
  /// "{1,3,5}" using 1-based labels.
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr std::strong_ordering operator<=>(const VertexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace mnf
