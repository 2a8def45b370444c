#include "mnf/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "mnf/errors.hpp"

namespace mnf {

namespace {

// Individualization-refinement on the bipartite vertex/non-face incidence
// structure. Cells are ordered by isomorphism-invariant signatures, so the
// minimum image over all leaves of the search tree is a canonical form.
class Canonizer {
 public:
  explicit Canonizer(const MnfComplex& c) : c_(c), n_(c.n()), m_(c.m()), twin_(n_ * n_, -1) {
    contains_.resize(n_);
    for (int j = 0; j < m_; ++j) c[j].for_each([&](int v) { contains_[v].push_back(j); });
  }

  std::vector<int> run() {
    std::vector<int> vc(n_, 0);
    std::vector<int> sc(m_);
    for (int j = 0; j < m_; ++j) sc[j] = c_[j].size();
    rank(sc);
    search(std::move(vc), std::move(sc));
    if (n_ == 0) return {};
    return best_perm_;
  }

 private:
  template <class Sig>
  static int rank_by(std::vector<int>& colors, const std::vector<Sig>& sig) {
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sig.size(); ++i)
      colors[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    return static_cast<int>(sorted.size());
  }

  static int rank(std::vector<int>& colors) {
    std::vector<int> sig = colors;
    return rank_by(colors, sig);
  }

  void refine(std::vector<int>& vc, std::vector<int>& sc) const {
    int vclasses = rank(vc);
    int sclasses = rank(sc);
    for (;;) {
      std::vector<std::vector<int>> vsig(n_);
      for (int v = 0; v < n_; ++v) {
        auto& s = vsig[v];
        s.push_back(vc[v]);
        for (int j : contains_[v]) s.push_back(sc[j]);
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<std::vector<int>> ssig(m_);
      for (int j = 0; j < m_; ++j) {
        auto& s = ssig[j];
        s.push_back(sc[j]);
        c_[j].for_each([&](int v) { s.push_back(vc[v]); });
        std::sort(s.begin() + 1, s.end());
      }
      int nv = rank_by(vc, vsig);
      int ns = rank_by(sc, ssig);
      if (nv == vclasses && ns == sclasses) return;
      vclasses = nv;
      sclasses = ns;
    }
  }

  bool transposition_is_automorphism(int u, int v) {
    int& cached = twin_[u * n_ + v];
    if (cached < 0) {
      std::vector<VertexSet> img;
      img.reserve(m_);
      for (VertexSet s : c_.mnf()) {
        VertexSet t = s;
        if (s.contains(u) != s.contains(v)) t = s.contains(u) ? s.without(u).with(v) : s.without(v).with(u);
        img.push_back(t);
      }
      std::sort(img.begin(), img.end());
      cached = std::equal(img.begin(), img.end(), c_.mnf().begin()) ? 1 : 0;
    }
    return cached == 1;
  }

  void search(std::vector<int> vc, std::vector<int> sc) {
    refine(vc, sc);
    // target cell: smallest color shared by several vertices
    std::vector<int> count(n_, 0);
    for (int v = 0; v < n_; ++v) ++count[vc[v]];
    int target = -1;
    for (int col = 0; col < n_; ++col) {
      if (count[col] > 1) {
        target = col;
        break;
      }
    }
    if (target < 0) {
      evaluate(vc);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (vc[v] != target) continue;
      bool redundant = std::any_of(tried.begin(), tried.end(),
                                   [&](int u) { return transposition_is_automorphism(u, v); });
      if (redundant) continue;
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * vc[u] + 1;
      child[v] = 2 * vc[v];
      search(std::move(child), sc);
      tried.push_back(v);
    }
  }

  void evaluate(const std::vector<int>& perm) {
    std::vector<VertexSet> img;
    img.reserve(m_);
    for (VertexSet s : c_.mnf()) {
      VertexSet t;
      s.for_each([&](int v) { t = t.with(perm[v]); });
      img.push_back(t);
    }
    std::sort(img.begin(), img.end());
    if (best_perm_.empty() || img < best_image_) {
      best_image_ = std::move(img);
      best_perm_ = perm;
    }
  }

  const MnfComplex& c_;
  int n_;
  int m_;
  std::vector<std::vector<int>> contains_;
  std::vector<int> twin_;
  std::vector<VertexSet> best_image_;
  std::vector<int> best_perm_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw InvalidParameter("odd-length key");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    throw InvalidParameter(std::string("bad hex digit '") + ch + "'");
  };
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return CanonicalKey(std::move(bytes));
}

std::vector<int> canonical_labeling(const MnfComplex& c) { return Canonizer(c).run(); }

MnfComplex canonical_form(const MnfComplex& c) {
  auto perm = canonical_labeling(c);
  return relabel(c, perm);
}

CanonicalKey canonical_key(const MnfComplex& c) {
  MnfComplex canon = canonical_form(c);
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(c.n()));
  bytes.push_back(static_cast<std::uint8_t>(c.m() >> 8));
  bytes.push_back(static_cast<std::uint8_t>(c.m() & 0xff));
  const int width = (c.n() + 7) / 8;
  for (VertexSet s : canon.mnf()) {
    for (int b = width - 1; b >= 0; --b) bytes.push_back(static_cast<std::uint8_t>(s.bits() >> (8 * b)));
  }
  return CanonicalKey(std::move(bytes));
}

bool are_isomorphic(const MnfComplex& a, const MnfComplex& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mnf
