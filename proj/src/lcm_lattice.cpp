#include "mnf/lcm_lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "mnf/errors.hpp"

namespace mnf {

namespace {

constexpr std::size_t kMaxLatticeElements = std::size_t{1} << 20;

void collect_chains(const std::vector<VertexSet>& elems, std::vector<std::uint32_t>& chain,
                    std::vector<std::vector<std::uint32_t>>& out) {
  out.push_back(chain);
  const std::uint32_t start = chain.empty() ? 0 : chain.back() + 1;
  for (std::uint32_t k = start; k < elems.size(); ++k) {
    // elements are in normal order, so only later ones can strictly contain earlier ones
    if (!chain.empty() && !(elems[chain.back()].is_subset_of(elems[k]) && elems[chain.back()] != elems[k])) continue;
    chain.push_back(k);
    collect_chains(elems, chain, out);
    chain.pop_back();
  }
}

}  // namespace

LcmLattice::LcmLattice(const MnfComplex& c) : n_(c.n()), m_(c.m()) {
  if (c.m() > kMaxLatticeGenerators)
    throw TooLarge("lcm-lattice limited to " + std::to_string(kMaxLatticeGenerators) + " minimal non-faces");
  std::unordered_set<VertexSet, VertexSetHash> seen{VertexSet{}};
  std::vector<VertexSet> elems{VertexSet{}};
  for (VertexSet gen : c.mnf()) {
    const std::size_t count = elems.size();
    for (std::size_t k = 0; k < count; ++k) {
      VertexSet u = elems[k] | gen;
      if (seen.insert(u).second) {
        elems.push_back(u);
        if (elems.size() > kMaxLatticeElements) throw TooLarge("lcm-lattice has too many elements");
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  generators_.assign(c.mnf().begin(), c.mnf().end());
  elements_ = std::move(elems);
  below_.resize(elements_.size(), 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (int i = 0; i < m_; ++i) {
      if (c[i].is_subset_of(elements_[k])) below_[k] |= std::uint32_t{1} << i;
    }
  }
}

std::optional<int> LcmLattice::index_of(VertexSet s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

OrderComplex interval_order_complex(const LcmLattice& l, VertexSet s) {
  if (!l.contains(s)) throw NotInLattice(s.to_string() + " is not a union of minimal non-faces");
  OrderComplex out;
  std::vector<VertexSet> inner;
  for (int k = 0; k < l.size(); ++k) {
    VertexSet e = l.element(k);
    if (!e.empty() && e != s && e.is_subset_of(s)) {
      out.vertices.push_back(k);
      inner.push_back(e);
    }
  }
  std::vector<std::uint32_t> chain;
  collect_chains(inner, chain, out.faces);
  return out;
}

BettiVector interval_homology(const LcmLattice& l, VertexSet s, FieldSpec f) {
  if (s.empty()) return {};
  const auto k = l.index_of(s);
  if (!k) throw NotInLattice(s.to_string() + " is not a union of minimal non-faces");
  // Crosscut complex on the atoms below s: sets of atoms whose union is not s.
  // It is homotopy equivalent to the open interval and much smaller.
  std::vector<VertexSet> atoms;
  for (std::uint32_t b = l.below(*k); b; b &= b - 1) atoms.push_back(l.generator(std::countr_zero(b)));
  const int a = static_cast<int>(atoms.size());
  std::vector<VertexSet> faces;
  std::vector<VertexSet> unions(std::size_t{1} << a);
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << a); ++sub) {
    if (sub) unions[sub] = unions[sub & (sub - 1)] | atoms[std::countr_zero(sub)];
    if (unions[sub] != s) faces.push_back(VertexSet(sub));
  }
  return reduced_betti_of_faces(faces, f);
}

BettiVector interval_homology_by_chains(const LcmLattice& l, VertexSet s, FieldSpec f) {
  if (s.empty()) return {};
  OrderComplex oc = interval_order_complex(l, s);
  if (oc.vertices.size() <= static_cast<std::size_t>(kMaxVertices)) {
    std::vector<VertexSet> masks;
    masks.reserve(oc.faces.size());
    for (const auto& chain : oc.faces) {
      VertexSet mask;
      for (std::uint32_t v : chain) mask = mask.with(static_cast<int>(v));
      masks.push_back(mask);
    }
    return reduced_betti_of_faces(masks, f);
  }
  return reduced_betti_of_faces(oc.faces, f);
}

std::int64_t lattice_h(const LcmLattice& l, int i, VertexSet s, FieldSpec f) {
  if (s.empty()) return i == -2 ? 1 : 0;
  if (!l.contains(s)) return 0;
  return interval_homology(l, s, f)(i);
}

std::int64_t lattice_h(const MnfComplex& c, int i, VertexSet s, FieldSpec f) {
  check_range(c, s);
  return lattice_h(LcmLattice(c), i, s, f);
}

void BettiTable::set(int i, VertexSet s, std::int64_t value) {
  if (value > 0) {
    entries_[{i, s}] = value;
  } else {
    entries_.erase({i, s});
  }
}

std::int64_t BettiTable::at(int i, VertexSet s) const {
  auto it = entries_.find({i, s});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> out;
  for (const auto& [key, value] : entries_) {
    const int i = key.first;
    if (static_cast<int>(out.size()) <= i) out.resize(i + 1, 0);
    out[i] += value;
  }
  return out;
}

BettiTable betti_table(const MnfComplex& c, FieldSpec f) {
  LcmLattice l(c);
  BettiTable table;
  table.set(0, VertexSet{}, 1);
  for (int k = 1; k < l.size(); ++k) {
    const VertexSet s = l.element(k);
    const BettiVector h = interval_homology(l, s, f);
    for (int i = -1; i <= h.top(); ++i) table.set(i + 2, s, h(i));
  }
  return table;
}

std::vector<DualityViolation> check_duality(const MnfComplex& c, FieldSpec f) {
  const BettiTable table = betti_table(c, f);
  const LcmLattice l(c);
  const int codim = c.n() - d_of(c);
  std::vector<VertexSet> sets = l.elements();
  for (VertexSet s : l.elements()) sets.push_back(s.complement(c.n()));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<DualityViolation> out;
  for (VertexSet s : sets) {
    const VertexSet comp = s.complement(c.n());
    for (int i = 0; i <= codim; ++i) {
      // β_{i,S} = h_{i-2}(S) and β_{codim-i,S̄} = h_{codim-i-2}(S̄)
      const std::int64_t left = table.at(i, s);
      const std::int64_t right = table.at(codim - i, comp);
      if (left != right) out.push_back({i, s, left, right});
    }
  }
  return out;
}

}  // namespace mnf
