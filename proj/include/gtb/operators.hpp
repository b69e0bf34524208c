#pragma once

// First-order operators on Clifford-valued polynomials.  Every operator takes
// an `nvars` argument restricting it to the variables/indices 1..nvars, so the
// same code serves both the full-dimensional operators and their restrictions
// to the first m-1 axes; nvars = -1 means "all of them".

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gtb/mvpoly.hpp"

namespace gtb {

namespace detail {

inline int resolve_nvars(const MVPolynomial& p, int nvars) {
  if (nvars < 0) return p.dim();
  if (nvars > p.dim()) throw std::invalid_argument("nvars out of range");
  return nvars;
}

enum class BladeAction { full, wedge, bullet };

// r += sum_{j<=nvars} e_j? (d/dx_j p), where e_j? is the geometric, exterior
// or interior action according to `act`.
inline MVPolynomial derivative_like(const MVPolynomial& p, int nvars, BladeAction act) {
  int n = resolve_nvars(p, nvars);
  MVPolynomial r(p.dim());
  for (const auto& [k, c] : p.terms())
    for (int j = 0; j < n; ++j) {
      int ex = k.mono.e[j];
      if (ex == 0) continue;
      Blade jbit = Blade{1} << j;
      bool shared = (k.blade & jbit) != 0;
      if (act == BladeAction::wedge && shared) continue;
      if (act == BladeAction::bullet && !shared) continue;
      auto [bl, sg] = blade_mul(jbit, k.blade);
      Monomial m = k.mono;
      m.e[j] = static_cast<std::uint8_t>(ex - 1);
      Scalar v = c * Scalar(ex);
      if (sg < 0) v = -v;
      r.add_term(m, bl, v);
    }
  return r;
}

// r += sum_{j<=nvars} x_j e_j? p.
inline MVPolynomial multiply_like(const MVPolynomial& p, int nvars, BladeAction act) {
  int n = resolve_nvars(p, nvars);
  MVPolynomial r(p.dim());
  for (const auto& [k, c] : p.terms())
    for (int j = 0; j < n; ++j) {
      Blade jbit = Blade{1} << j;
      bool shared = (k.blade & jbit) != 0;
      if (act == BladeAction::wedge && shared) continue;
      if (act == BladeAction::bullet && !shared) continue;
      auto [bl, sg] = blade_mul(jbit, k.blade);
      Monomial m = k.mono;
      m.e[j] = static_cast<std::uint8_t>(m.e[j] + 1);
      Scalar v = c;
      if (sg < 0) v = -v;
      r.add_term(m, bl, v);
    }
  return r;
}

}  // namespace detail

// Dirac operator sum_j e_j d/dx_j and its grade-raising / grade-lowering parts.
inline MVPolynomial dirac(const MVPolynomial& p, int nvars = -1) {
  return detail::derivative_like(p, nvars, detail::BladeAction::full);
}
inline MVPolynomial dirac_plus(const MVPolynomial& p, int nvars = -1) {
  return detail::derivative_like(p, nvars, detail::BladeAction::wedge);
}
inline MVPolynomial dirac_minus(const MVPolynomial& p, int nvars = -1) {
  return detail::derivative_like(p, nvars, detail::BladeAction::bullet);
}

// Left multiplication by the 1-vector x (geometric / exterior / interior).
inline MVPolynomial x_mult(const MVPolynomial& p, int nvars = -1) {
  return detail::multiply_like(p, nvars, detail::BladeAction::full);
}
inline MVPolynomial x_wedge(const MVPolynomial& p, int nvars = -1) {
  return detail::multiply_like(p, nvars, detail::BladeAction::wedge);
}
inline MVPolynomial x_bullet(const MVPolynomial& p, int nvars = -1) {
  return detail::multiply_like(p, nvars, detail::BladeAction::bullet);
}

// x^n p; even powers of the 1-vector x are the scalar (-|x|^2)^(n/2).
inline MVPolynomial x_power(const MVPolynomial& p, unsigned n, int nvars = -1) {
  int nv = detail::resolve_nvars(p, nvars);
  MVPolynomial r = p;
  if (n >= 2) {
    MVPolynomial r2 = MVPolynomial::norm_sq(p.dim(), nv);
    MVPolynomial factor = MVPolynomial::one(p.dim());
    for (unsigned t = 0; t < n / 2; ++t) factor = factor * r2;
    if ((n / 2) % 2 == 1) factor = -factor;
    r = factor * r;
  }
  if (n % 2 == 1) r = x_mult(r, nv);
  return r;
}

inline MVPolynomial euler(const MVPolynomial& p, int nvars = -1) {
  int n = detail::resolve_nvars(p, nvars);
  MVPolynomial r(p.dim());
  for (const auto& [k, c] : p.terms()) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += k.mono.e[j];
    if (d) r.add_term(k.mono, k.blade, c * Scalar(d));
  }
  return r;
}

inline MVPolynomial laplacian(const MVPolynomial& p, int nvars = -1) {
  int n = detail::resolve_nvars(p, nvars);
  MVPolynomial r(p.dim());
  for (const auto& [k, c] : p.terms())
    for (int j = 0; j < n; ++j) {
      int ex = k.mono.e[j];
      if (ex < 2) continue;
      Monomial m = k.mono;
      m.e[j] = static_cast<std::uint8_t>(ex - 2);
      r.add_term(m, k.blade, c * Scalar(static_cast<long>(ex) * (ex - 1)));
    }
  return r;
}

namespace detail {

// -sum_{j<=nvars} (e_j first?)(e_j second?) applied blade-wise; the two
// fermionic grade-counting operators differ only in which action comes first.
inline MVPolynomial fermi_like(const MVPolynomial& p, int nvars, bool wedge_outside) {
  int n = resolve_nvars(p, nvars);
  MVPolynomial r(p.dim());
  for (const auto& [k, c] : p.terms())
    for (int j = 0; j < n; ++j) {
      Blade jbit = Blade{1} << j;
      bool shared = (k.blade & jbit) != 0;
      // inner action: bullet needs the index present, wedge needs it absent
      if (wedge_outside ? !shared : shared) continue;
      auto [b1, s1] = blade_mul(jbit, k.blade);
      auto [b2, s2] = blade_mul(jbit, b1);
      Scalar v = -c;
      if (s1 * s2 < 0) v = -v;
      r.add_term(k.mono, b2, v);
    }
  return r;
}

}  // namespace detail

// Fermionic Euler operators: -sum (e_j wedge)(e_j bullet) counts the grade
// (eigenvalue s on s-vectors); -sum (e_j bullet)(e_j wedge) counts the
// co-grade (eigenvalue nvars - s).
inline MVPolynomial fermi_plus(const MVPolynomial& p, int nvars = -1) {
  return detail::fermi_like(p, nvars, /*wedge_outside=*/true);
}
inline MVPolynomial fermi_minus(const MVPolynomial& p, int nvars = -1) {
  return detail::fermi_like(p, nvars, /*wedge_outside=*/false);
}

// A = E + grade count (acts as (k + s) on degree-k grade-s terms);
// B = E + co-grade count (acts as (k + nvars - s)).
inline MVPolynomial op_A(const MVPolynomial& p, int nvars = -1) {
  return euler(p, nvars) + fermi_plus(p, nvars);
}
inline MVPolynomial op_B(const MVPolynomial& p, int nvars = -1) {
  return euler(p, nvars) + fermi_minus(p, nvars);
}

// A composable wrapper so tests and the verification layer can build operator
// words, sums and brackets while keeping a printable description.
class OperatorExpr {
 public:
  using Fn = std::function<MVPolynomial(const MVPolynomial&)>;

  OperatorExpr(Fn fn, std::string desc) : fn_(std::move(fn)), desc_(std::move(desc)) {}

  MVPolynomial operator()(const MVPolynomial& p) const { return fn_(p); }
  const std::string& desc() const { return desc_; }

  static OperatorExpr identity() {
    return OperatorExpr([](const MVPolynomial& p) { return p; }, "id");
  }
  static OperatorExpr zero() {
    return OperatorExpr([](const MVPolynomial& p) { return MVPolynomial::zero(p.dim()); }, "0");
  }
  static OperatorExpr scalar_times(const Scalar& c, const std::string& name) {
    return OperatorExpr([c](const MVPolynomial& p) { return p * c; }, name);
  }
  static OperatorExpr mult_left(const MVPolynomial& q, const std::string& name) {
    return OperatorExpr([q](const MVPolynomial& p) { return q * p; }, name);
  }

  friend OperatorExpr compose(const OperatorExpr& f, const OperatorExpr& g) {
    auto ff = f.fn_, gf = g.fn_;
    return OperatorExpr([ff, gf](const MVPolynomial& p) { return ff(gf(p)); },
                        f.desc_ + "∘" + g.desc_);
  }
  friend OperatorExpr operator+(const OperatorExpr& f, const OperatorExpr& g) {
    auto ff = f.fn_, gf = g.fn_;
    return OperatorExpr([ff, gf](const MVPolynomial& p) { return ff(p) + gf(p); },
                        "(" + f.desc_ + "+" + g.desc_ + ")");
  }
  friend OperatorExpr operator-(const OperatorExpr& f, const OperatorExpr& g) {
    auto ff = f.fn_, gf = g.fn_;
    return OperatorExpr([ff, gf](const MVPolynomial& p) { return ff(p) - gf(p); },
                        "(" + f.desc_ + "-" + g.desc_ + ")");
  }
  friend OperatorExpr operator*(const Scalar& c, const OperatorExpr& f) {
    auto ff = f.fn_;
    return OperatorExpr([c, ff](const MVPolynomial& p) { return ff(p) * c; },
                        "(" + c.str() + ")·" + f.desc_);
  }
  friend OperatorExpr anticommutator(const OperatorExpr& f, const OperatorExpr& g) {
    return compose(f, g) + compose(g, f);
  }
  friend OperatorExpr commutator(const OperatorExpr& f, const OperatorExpr& g) {
    return compose(f, g) - compose(g, f);
  }

 private:
  Fn fn_;
  std::string desc_;
};

// Named atoms, each restricted to variables 1..nvars (-1 = all).
inline OperatorExpr op_dirac(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return dirac(p, nvars); }, "D");
}
inline OperatorExpr op_dirac_plus(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return dirac_plus(p, nvars); }, "D+");
}
inline OperatorExpr op_dirac_minus(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return dirac_minus(p, nvars); }, "D-");
}
inline OperatorExpr op_x_mult(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return x_mult(p, nvars); }, "x");
}
inline OperatorExpr op_x_wedge(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return x_wedge(p, nvars); }, "x∧");
}
inline OperatorExpr op_x_bullet(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return x_bullet(p, nvars); }, "x•");
}
inline OperatorExpr op_euler(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return euler(p, nvars); }, "E");
}
inline OperatorExpr op_laplacian(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return laplacian(p, nvars); }, "Δ");
}
inline OperatorExpr op_fermi_plus(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return fermi_plus(p, nvars); }, "F+");
}
inline OperatorExpr op_fermi_minus(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return fermi_minus(p, nvars); }, "F-");
}
inline OperatorExpr op_weighted_euler_a(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return op_A(p, nvars); }, "A");
}
inline OperatorExpr op_weighted_euler_b(int nvars = -1) {
  return OperatorExpr([nvars](const MVPolynomial& p) { return op_B(p, nvars); }, "B");
}
inline OperatorExpr op_x_power(unsigned n, int nvars = -1) {
  return OperatorExpr([n, nvars](const MVPolynomial& p) { return x_power(p, n, nvars); },
                      "x^" + std::to_string(n));
}

}  // namespace gtb
