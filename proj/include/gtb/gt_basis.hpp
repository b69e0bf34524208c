#pragma once

// Orthogonal bases for the graded solution spaces, built by induction on the
// dimension: each element is the monogenic extension of a seed formed from a
// basis element one dimension down, and carries a label recording its branch
// at every dimension step.  On top of the core recursion sit the scalar
// (harmonic) chain bases, gradient-type bases, duality, realification, and
// the union bases for generalized gradient systems.

#include <array>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtb/special_poly.hpp"

namespace gtb {

using GTLabel = std::vector<std::string>;

inline std::string label_str(const GTLabel& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += '|';
    s += l[i];
  }
  return s;
}

struct BasisElement {
  GTLabel label;
  MVPolynomial poly;
};

enum class BasisKind { hodge, harmonic, riesz, gmt };
enum class AlgebraMode { complex_mode, real_mode };

struct BasisMeta {
  BasisKind kind = BasisKind::hodge;
  AlgebraMode mode = AlgebraMode::complex_mode;
  int m = 0;
  int k = 0;
  int s = -1;        // single grade; -1 when the basis spans several grades
  std::set<int> S;   // grade set for union bases
};

struct Basis {
  BasisMeta meta;
  std::vector<BasisElement> elements;

  std::vector<MVPolynomial> polys() const {
    std::vector<MVPolynomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.poly);
    return out;
  }
};

// Convention helpers for the planar variables and frame combinations.
inline MVPolynomial z_plus(int dim) {
  return MVPolynomial::variable(dim, 1) + MVPolynomial::variable(dim, 2, Scalar::i());
}
inline MVPolynomial z_minus(int dim) {
  return MVPolynomial::variable(dim, 1) - MVPolynomial::variable(dim, 2, Scalar::i());
}
inline Multivector w_plus(int dim) {
  Multivector v(dim);
  v.add_term(Blade{1}, Scalar::one());
  v.add_term(Blade{2}, Scalar::i());
  return v;
}
inline Multivector w_minus(int dim) {
  Multivector v(dim);
  v.add_term(Blade{1}, Scalar::one());
  v.add_term(Blade{2}, -Scalar::i());
  return v;
}

// ---------------------------------------------------------------------------
// Core recursion (complex coefficients).

class GtCache {
 public:
  const std::vector<BasisElement>& hodge(int m, int k, int s) {
    std::array<int, 3> key{m, k, s};
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
    auto val = std::make_unique<std::vector<BasisElement>>(build(m, k, s));
    auto [jt, fresh] = memo_.emplace(key, std::move(val));
    return *jt->second;
  }

 private:
  std::vector<BasisElement> build(int m, int k, int s) {
    if (m < 2) throw std::invalid_argument("GtCache: dimension must be at least 2");
    std::vector<BasisElement> out;
    if (k < 0 || s < 0 || s > m) return out;

    if (s == 0 || s == m) {  // boundary grades carry solutions only in degree 0
      if (k != 0) return out;
      GTLabel label;
      for (int t = 0; t < m - 2; ++t) label.push_back(s == 0 ? "direct" : "em");
      label.push_back(s == 0 ? "scalar" : "pseudo");
      MVPolynomial p = s == 0 ? MVPolynomial::one(m) : MVPolynomial::constant(Multivector::pseudoscalar(m));
      out.push_back({std::move(label), std::move(p)});
      return out;
    }

    if (m == 2) {  // s == 1
      MVPolynomial zp = z_plus(2), zm = z_minus(2);
      out.push_back({{"+"}, zp.pow(static_cast<unsigned>(k)).mul_right(w_plus(2))});
      out.push_back({{"-"}, zm.pow(static_cast<unsigned>(k)).mul_right(w_minus(2))});
      return out;
    }

    // m >= 3, 1 <= s <= m-1: lift a basis one dimension down through the
    // graded extension.  First the seeds with vanishing e_m part...
    int n = m - 1;
    MVPolynomial zero = MVPolynomial::zero(m);
    auto lift = [&](const char* tag, int j, const BasisElement& src, MVPolynomial u0, MVPolynomial v0) {
      GTLabel label;
      label.push_back(j >= 0 ? std::string(tag) + ":" + std::to_string(j) : std::string(tag));
      label.insert(label.end(), src.label.begin(), src.label.end());
      InitialDatum d(m, k, s, std::move(u0), std::move(v0));
      out.push_back({std::move(label), ck_extend_hodge(d)});
    };

    for (const auto& src : hodge(n, k, s)) lift("direct", -1, src, src.poly.embed(m), zero);
    for (int j = 0; 2 * j + 1 <= k; ++j)
      for (const auto& src : hodge(n, k - 2 * j - 1, s - 1))
        lift("xhat", j, src, x_power(x_wedge(src.poly.embed(m), n), 2 * j, n), zero);
    for (int j = 0; 2 * j + 2 <= k; ++j)
      for (const auto& src : hodge(n, k - 2 * j - 2, s))
        lift("ycheck", j, src, y_check_factor(src.poly.embed(m), j, s, k - 2 * j - 2, n), zero);

    // ...then the seeds living entirely in the e_m part.
    for (const auto& src : hodge(n, k, s - 1)) lift("em", -1, src, zero, src.poly.embed(m));
    for (int j = 0; 2 * j + 1 <= k; ++j)
      for (const auto& src : hodge(n, k - 2 * j - 1, s))
        lift("xcheck", j, src, zero, x_power(x_bullet(src.poly.embed(m), n), 2 * j, n));
    for (int j = 0; 2 * j + 2 <= k; ++j)
      for (const auto& src : hodge(n, k - 2 * j - 2, s - 1))
        lift("yhat", j, src, zero, y_hat_factor(src.poly.embed(m), j, s - 1, k - 2 * j - 2, n));

    return out;
  }

  std::map<std::array<int, 3>, std::unique_ptr<std::vector<BasisElement>>> memo_;
};

// ---------------------------------------------------------------------------
// Realification: conjugate-paired elements become real/imaginary parts.

inline std::vector<BasisElement> realify(const std::vector<BasisElement>& in) {
  std::vector<BasisElement> out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto& el = in[i];
    if (el.label.empty()) throw std::logic_error("realify: element without label");
    const std::string& tag = el.label.back();
    if (tag == "+") {
      if (i + 1 >= in.size()) throw std::logic_error("realify: unpaired conjugate element");
      const auto& partner = in[i + 1];
      GTLabel expect = el.label;
      expect.back() = "-";
      if (partner.label != expect || !(el.poly.conj_coefficients() == partner.poly))
        throw std::logic_error("realify: conjugate pairing violated");
      GTLabel lre = el.label, lim = el.label;
      lre.back() = "re";
      lim.back() = "im";
      out.push_back({std::move(lre), el.poly.real_part()});
      out.push_back({std::move(lim), el.poly.imag_part()});
      ++i;  // partner consumed
    } else if (tag == "-") {
      throw std::logic_error("realify: conjugate element out of order");
    } else {
      if (!el.poly.is_real()) throw std::logic_error("realify: unpaired element is not real");
      out.push_back(el);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Public basis constructors.

inline Basis gt_basis_hodge(int m, int k, int s, AlgebraMode mode, GtCache* cache = nullptr) {
  GtCache local;
  GtCache& c = cache ? *cache : local;
  Basis b;
  b.meta = {BasisKind::hodge, mode, m, k, s, {}};
  b.elements = c.hodge(m, k, s);
  if (mode == AlgebraMode::real_mode) b.elements = realify(b.elements);
  return b;
}

// Scalar harmonic chain basis in degree n: products of homogenized Gegenbauer
// polynomials along a decreasing chain n >= k_1 >= ... >= k_{m-2} >= 0,
// finished by (x_1 + i x_2)^{k_{m-2}} or its conjugate (a single element when
// the planar degree is zero).
inline std::vector<BasisElement> harmonic_gt_elements(int m, int n) {
  if (m < 2 || n < 0) throw std::invalid_argument("harmonic_gt_elements: bad parameters");
  std::vector<BasisElement> out;
  std::vector<int> chain;  // k_1 .. k_{m-2}
  std::function<void(int)> rec = [&](int prev) {
    if (static_cast<int>(chain.size()) == m - 2) {
      int klast = chain.empty() ? n : chain.back();
      MVPolynomial prod = MVPolynomial::one(m);
      int kj = n;
      for (int t = 0; t < m - 2; ++t) {
        int kj1 = chain[static_cast<std::size_t>(t)];
        Rational nu = rational_of(m - t - 2, 2) + Rational(kj1);
        prod = prod * gegenbauer_homog(kj - kj1, nu, m - t, m);
        kj = kj1;
      }
      GTLabel base;
      for (int v : chain) base.push_back("chain:" + std::to_string(v));
      if (klast == 0) {
        GTLabel l = base;
        l.push_back("0");
        out.push_back({std::move(l), prod});
      } else {
        GTLabel lp = base, lm = base;
        lp.push_back("+");
        lm.push_back("-");
        out.push_back({std::move(lp), prod * z_plus(m).pow(static_cast<unsigned>(klast))});
        out.push_back({std::move(lm), prod * z_minus(m).pow(static_cast<unsigned>(klast))});
      }
      return;
    }
    for (int v = prev; v >= 0; --v) {
      chain.push_back(v);
      rec(v);
      chain.pop_back();
    }
  };
  rec(n);
  return out;
}

inline Basis harmonic_gt_basis(int m, int n, AlgebraMode mode) {
  Basis b;
  b.meta = {BasisKind::harmonic, mode, m, n, 0, {}};
  b.elements = harmonic_gt_elements(m, n);
  if (mode == AlgebraMode::real_mode) b.elements = realify(b.elements);
  return b;
}

// Gradient images of the degree-(k+1) harmonic chain basis: a grade-1 basis
// alternative to the recursive one, spanning the same space.
inline Basis riesz_basis(int m, int k, AlgebraMode mode) {
  Basis b;
  b.meta = {BasisKind::riesz, mode, m, k, 1, {}};
  for (const auto& el : harmonic_gt_elements(m, k + 1)) b.elements.push_back({el.label, dirac(el.poly)});
  if (mode == AlgebraMode::real_mode) b.elements = realify(b.elements);
  return b;
}

// Right multiplication by the pseudoscalar swaps grade s with m-s and
// preserves orthogonality; labels are kept.
inline Basis dual_basis(const Basis& b) {
  Basis d;
  d.meta = b.meta;
  if (b.meta.s >= 0) d.meta.s = b.meta.m - b.meta.s;
  Multivector eM = Multivector::pseudoscalar(b.meta.m);
  for (const auto& el : b.elements) d.elements.push_back({el.label, el.poly.mul_right(eM)});
  return d;
}

// ---------------------------------------------------------------------------
// Union bases for generalized gradient systems: the grade-s bases for s in S
// plus the extra mixed-grade pieces for interior grades whose both neighbours
// lie in S.
inline std::set<int> gmt_extra_grades(int m, const std::set<int>& S) {
  std::set<int> extra;
  for (int s = 1; s <= m - 1; ++s)
    if (S.count(s - 1) && S.count(s + 1)) extra.insert(s);
  return extra;
}

inline Basis gmt_basis(int m, int k, const std::set<int>& S, AlgebraMode mode, GtCache* cache = nullptr) {
  for (int s : S)
    if (s < 0 || s > m) throw std::invalid_argument("gmt_basis: grade set out of range");
  GtCache local;
  GtCache& c = cache ? *cache : local;
  Basis b;
  b.meta = {BasisKind::gmt, mode, m, k, -1, S};
  for (int s : S)
    for (const auto& el : c.hodge(m, k, s)) {
      GTLabel l;
      l.push_back("h:" + std::to_string(s));
      l.insert(l.end(), el.label.begin(), el.label.end());
      b.elements.push_back({std::move(l), el.poly});
    }
  if (k >= 1)
    for (int s : gmt_extra_grades(m, S)) {
      OperatorExpr factor = gmt_factor(k, s, m);
      for (const auto& el : c.hodge(m, k - 1, s)) {
        GTLabel l;
        l.push_back("v:" + std::to_string(s));
        l.insert(l.end(), el.label.begin(), el.label.end());
        b.elements.push_back({std::move(l), factor(el.poly)});
      }
    }
  if (mode == AlgebraMode::real_mode) b.elements = realify(b.elements);
  return b;
}

// The mixed-grade piece alone (empty in degree zero).
inline std::vector<BasisElement> gmt_v_elements(int m, int k, int s, GtCache* cache = nullptr) {
  GtCache local;
  GtCache& c = cache ? *cache : local;
  std::vector<BasisElement> out;
  if (k < 1) return out;
  OperatorExpr factor = gmt_factor(k, s, m);
  for (const auto& el : c.hodge(m, k - 1, s)) {
    GTLabel l;
    l.push_back("v:" + std::to_string(s));
    l.insert(l.end(), el.label.begin(), el.label.end());
    out.push_back({std::move(l), factor(el.poly)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lookup and normalization.

inline const BasisElement* find_by_label(const Basis& b, const GTLabel& label) {
  for (const auto& el : b.elements)
    if (el.label == label) return &el;
  return nullptr;
}

// Rescales every element so its leading coefficient (in the canonical term
// order) becomes one.
inline void normalize_basis(Basis& b) {
  for (auto& el : b.elements) {
    const auto* lead = el.poly.leading_term();
    if (lead) el.poly = el.poly * lead->second.inverse();
  }
}

}  // namespace gtb
