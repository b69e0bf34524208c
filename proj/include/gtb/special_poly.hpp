#pragma once

// Special polynomials used by the basis construction: homogenized Gegenbauer
// polynomials, the one-variable-up extension multipliers X/X-hat/X-check and
// Y-hat/Y-check, the distinguished degree-raising factors, and the factor
// producing generalized gradient-system bases.

#include <stdexcept>

#include "gtb/ck.hpp"

namespace gtb {

// C_j^nu(0): zero for odd j, (-1)^l (nu)_l / l! for j = 2l.
inline Rational gegenbauer_at_zero(int j, const Rational& nu) {
  if (j < 0) throw std::invalid_argument("gegenbauer_at_zero: negative degree");
  if (j % 2 == 1) return Rational(0);
  int l = j / 2;
  Rational r = pochhammer(nu, static_cast<unsigned>(l)) / Rational(factorial(static_cast<unsigned>(l)));
  if (l % 2 == 1) r = -r;
  return r;
}

// Homogenized Gegenbauer polynomial r^j C_j^nu(x_axis / r) with
// r^2 = x_1^2 + ... + x_axis^2 (the axis variable included):
//   sum_{i=0}^{floor(j/2)} (-1)^i (nu)_{j-i} / (i! (j-2i)!) 2^{j-2i}
//       x_axis^{j-2i} (r^2)^i.
inline MVPolynomial gegenbauer_homog(int j, const Rational& nu, int axis, int dim) {
  if (j < 0) throw std::invalid_argument("gegenbauer_homog: negative degree");
  if (axis < 1 || axis > dim) throw std::invalid_argument("gegenbauer_homog: bad axis");
  MVPolynomial rsq = MVPolynomial::norm_sq(dim, axis);
  MVPolynomial result(dim);
  MVPolynomial rsq_pow = MVPolynomial::one(dim);
  for (int i = 0; 2 * i <= j; ++i) {
    Rational c = pochhammer(nu, static_cast<unsigned>(j - i)) /
                 Rational(factorial(static_cast<unsigned>(i)) *
                          factorial(static_cast<unsigned>(j - 2 * i)));
    c *= Rational(Integer(Integer(1) << (j - 2 * i)));
    if (i % 2 == 1) c = -c;
    result += detail::shift_var_pow(rsq_pow, axis, static_cast<unsigned>(j - 2 * i), Scalar(c));
    rsq_pow = rsq_pow * rsq;
  }
  return result;
}

// The multiplier X_k^j: the extension to dimension m of the power x_under^j
// relative to degree-k monogenic sources, normalized so that X_k^j reproduces
// x_under^j on the hyperplane.  Closed form:
//   X_k^j = mu_k^j ( G_j^{m/2+k-1} + (m+2k-2)/(m+2k+j-2) G_{j-1}^{m/2+k} (x_under e_m) ) (-e_m)^j
// where G are homogenized Gegenbauer polynomials along axis x_m, and
//   mu_k^{2l} = C_{2l}^{m/2+k-1}(0)^{-1},
//   mu_k^{2l+1} = (m+2k+2l-1)/(m+2k-2) * C_{2l}^{m/2+k}(0)^{-1}.
// The closed form degenerates when m+2k-2 = 0 (that is, m = 2 and k = 0,
// where sources are constants); there the series extension is used directly.
inline MVPolynomial X_poly(int k, int j, int m) {
  if (m < 2 || k < 0 || j < 0) throw std::invalid_argument("X_poly: bad parameters");
  if (j == 0) return MVPolynomial::one(m);
  if (m + 2 * k - 2 == 0) return ck_extend_generic(MVPolynomial::x_vector(m, m - 1).pow(static_cast<unsigned>(j)));

  Rational nu1 = rational_of(m, 2) + Rational(k - 1);  // m/2 + k - 1
  Rational nu2 = rational_of(m, 2) + Rational(k);      // m/2 + k
  MVPolynomial g1 = gegenbauer_homog(j, nu1, m, m);
  MVPolynomial g2 = gegenbauer_homog(j - 1, nu2, m, m);

  // x_under e_m = sum_{t<m} x_t e_{tm}
  MVPolynomial xu_em = MVPolynomial::x_vector(m, m - 1).mul_right(Multivector::basis_blade(m, Blade{1} << (m - 1)));

  Rational inner = rational_of(m + 2 * k - 2, m + 2 * k + j - 2);
  MVPolynomial body = g1 + g2 * Scalar(inner) * xu_em;

  Rational mu;
  if (j % 2 == 0) {
    mu = Rational(1) / gegenbauer_at_zero(j, nu1);
  } else {
    int l = (j - 1) / 2;
    mu = rational_of(m + 2 * k + 2 * l - 1, m + 2 * k - 2) / gegenbauer_at_zero(2 * l, nu2);
  }

  MVPolynomial em_bar_pow = MVPolynomial::constant(Multivector::basis_blade(m, Blade{1} << (m - 1), Scalar(-1))).pow(static_cast<unsigned>(j));
  return body * Scalar(mu) * em_bar_pow;
}

// Degree-raising factors built from x powers and the split vector actions.
// Generic forms act through the weighted Euler operators; the specialized
// forms assume the argument is a degree-k grade-s eigenvector (in nvars
// variables) and inline the eigenvalues.
inline MVPolynomial y_check_apply(const MVPolynomial& p, int j, int nvars = -1) {
  MVPolynomial ap = op_A(p, nvars);
  MVPolynomial inner = x_bullet(ap + p * Scalar(2 * j + 2), nvars) + x_wedge(ap, nvars);
  return x_power(inner, 2 * j + 1, nvars);
}

inline MVPolynomial y_hat_apply(const MVPolynomial& p, int j, int nvars = -1) {
  MVPolynomial bp = op_B(p, nvars);
  MVPolynomial inner = x_wedge(bp + p * Scalar(2 * j + 2), nvars) + x_bullet(bp, nvars);
  return x_power(inner, 2 * j + 1, nvars);
}

inline MVPolynomial y_check_factor(const MVPolynomial& p, int j, int s, int k, int nvars) {
  long a = s + k;
  MVPolynomial inner = x_bullet(p, nvars) * Scalar(a + 2 * j + 2) + x_wedge(p, nvars) * Scalar(a);
  return x_power(inner, 2 * j + 1, nvars);
}

inline MVPolynomial y_hat_factor(const MVPolynomial& p, int j, int s, int k, int nvars) {
  long b = k + nvars - s;
  MVPolynomial inner = x_wedge(p, nvars) * Scalar(b + 2 * j + 2) + x_bullet(p, nvars) * Scalar(b);
  return x_power(inner, 2 * j + 1, nvars);
}

inline OperatorExpr op_y_check(int j, int nvars = -1) {
  return OperatorExpr([j, nvars](const MVPolynomial& p) { return y_check_apply(p, j, nvars); },
                      "ycheck:" + std::to_string(j));
}

inline OperatorExpr op_y_hat(int j, int nvars = -1) {
  return OperatorExpr([j, nvars](const MVPolynomial& p) { return y_hat_apply(p, j, nvars); },
                      "yhat:" + std::to_string(j));
}

// One-variable-up extension multipliers.  Each acts by left multiplication
// and split vector actions in the first m-1 variables on an x_m-free source
// whose own parameters are (s, k); the result equals the monogenic extension
// of the corresponding seed.  Degree raised: j for the X family, 2j+2 for
// the Y family.
enum class MultVariant { x_plain, x_hat, x_check, y_hat, y_check };

struct CKMultiplier {
  int m = 0, k = 0, s = 0, j = 0;
  MultVariant variant = MultVariant::x_plain;
  OperatorExpr op;

  MVPolynomial apply(const MVPolynomial& p) const { return op(p); }
};

namespace detail {

struct XPair {
  MVPolynomial lead;     // X_{k+1}^{j-1}
  MVPolynomial bracket;  // X_k^j - X_{k+1}^{j-1} x_under
};

inline XPair x_pair(int k, int j, int m) {
  MVPolynomial lead = X_poly(k + 1, j - 1, m);
  MVPolynomial bracket = X_poly(k, j, m) - lead * MVPolynomial::x_vector(m, m - 1);
  return {lead, bracket};
}

}  // namespace detail

inline CKMultiplier mult_x_plain(int j, int s, int k, int m) {
  MVPolynomial xp = X_poly(k, j, m);
  OperatorExpr op([xp](const MVPolynomial& p) { return xp * p; }, "X:" + std::to_string(j));
  return {m, k, s, j, MultVariant::x_plain, std::move(op)};
}

inline CKMultiplier mult_x_hat(int j, int s, int k, int m) {
  if (j < 1) throw std::invalid_argument("mult_x_hat: degree raise must be positive");
  auto [lead, bracket] = detail::x_pair(k, j, m);
  Scalar one_minus_c(Rational(1) - rational_of(s + k, m - 1 + 2 * k));
  OperatorExpr op(
      [lead, bracket, one_minus_c, m](const MVPolynomial& p) {
        return lead * x_wedge(p, m - 1) + bracket * p * one_minus_c;
      },
      "Xhat:" + std::to_string(j));
  return {m, k, s, j, MultVariant::x_hat, std::move(op)};
}

inline CKMultiplier mult_x_check(int j, int s, int k, int m) {
  if (j < 1) throw std::invalid_argument("mult_x_check: degree raise must be positive");
  auto [lead, bracket] = detail::x_pair(k, j, m);
  Scalar c(rational_of(s + k, m - 1 + 2 * k));
  OperatorExpr op(
      [lead, bracket, c, m](const MVPolynomial& p) {
        return lead * x_bullet(p, m - 1) + bracket * p * c;
      },
      "Xcheck:" + std::to_string(j));
  return {m, k, s, j, MultVariant::x_check, std::move(op)};
}

inline CKMultiplier mult_y_check(int j, int s, int k, int m) {
  int jj = 2 * j + 2;
  CKMultiplier xc = mult_x_check(jj, s, k, m);
  MVPolynomial xp = X_poly(k, jj, m);
  Scalar a(static_cast<long>(s + k)), raise(static_cast<long>(jj));
  OperatorExpr op(
      [xc, xp, a, raise](const MVPolynomial& p) { return xp * p * a + xc.op(p) * raise; },
      "Ycheck:" + std::to_string(j));
  return {m, k, s, j, MultVariant::y_check, std::move(op)};
}

inline CKMultiplier mult_y_hat(int j, int s, int k, int m) {
  int jj = 2 * j + 2;
  CKMultiplier xh = mult_x_hat(jj, s, k, m);
  MVPolynomial xp = X_poly(k, jj, m);
  Scalar b(static_cast<long>(m - 1 - s + k)), raise(static_cast<long>(jj));
  OperatorExpr op(
      [xh, xp, b, raise](const MVPolynomial& p) { return xp * p * b + xh.op(p) * raise; },
      "Yhat:" + std::to_string(j));
  return {m, k, s, j, MultVariant::y_hat, std::move(op)};
}

// Factor mapping a degree-(k-1) grade-s monogenic polynomial to a solution of
// the corresponding generalized gradient system:
//   (k-1+m-s)(x bullet) - (k-1+s)(x wedge).
inline OperatorExpr gmt_factor(int k, int s, int m) {
  Scalar cb(static_cast<long>(k - 1 + m - s)), cw(static_cast<long>(k - 1 + s));
  OperatorExpr op(
      [cb, cw](const MVPolynomial& p) { return x_bullet(p) * cb - x_wedge(p) * cw; },
      "gmt(" + std::to_string(k) + "," + std::to_string(s) + ")");
  return op;
}

}  // namespace gtb
