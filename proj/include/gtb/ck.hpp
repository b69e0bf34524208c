#pragma once

// Cauchy-Kovalevskaya extension: the unique monogenic extension of an initial
// polynomial on the hyperplane x_m = 0.  Two routes are implemented on
// purpose: the generic exponential series (the oracle) and the closed
// recursion specialized to graded initial data (the production path).

#include <stdexcept>
#include <utility>

#include "gtb/operators.hpp"

namespace gtb {

namespace detail {

// c * x_var^j * p  (x_var commutes with everything).
inline MVPolynomial shift_var_pow(const MVPolynomial& p, int var, unsigned j, const Scalar& c) {
  MVPolynomial r(p.dim());
  for (const auto& [k, v] : p.terms()) {
    Monomial mo = k.mono;
    mo.e[var - 1] = static_cast<std::uint8_t>(mo.e[var - 1] + j);
    r.add_term(mo, k.blade, v * c);
  }
  return r;
}

}  // namespace detail

// Series form: sum_{j>=0} (x_m^j / j!) (e_m D_under)^j p0, which truncates at
// the homogeneity degree.  Works for any x_m-free homogeneous input and
// always produces a monogenic polynomial restricting back to p0.
inline MVPolynomial ck_extend_generic(const MVPolynomial& p0) {
  int m = p0.dim();
  if (m < 2) throw std::invalid_argument("ck_extend_generic: dimension must be at least 2");
  int k = 0;
  if (!p0.is_homogeneous(&k))
    throw std::invalid_argument("ck_extend_generic: input must be homogeneous");
  if (p0.depends_on(m))
    throw std::invalid_argument("ck_extend_generic: input must not depend on the last variable");
  Multivector em = Multivector::basis_blade(m, Blade{1} << (m - 1));
  MVPolynomial result = p0;
  MVPolynomial q = p0;
  for (int j = 1; j <= k && !q.is_zero(); ++j) {
    q = dirac(q, m - 1).mul_left(em);
    result += detail::shift_var_pow(q, m, j, Scalar(rational_frac(Integer(1), factorial(j))));
  }
  return result;
}

// Initial datum for the graded extension: p0 = u0 + v0 e_m with u0 of grade s
// and v0 of grade s-1, both free of x_m and of the blade index m, and
// satisfying the compatibility conditions D+_under u0 = 0, D-_under v0 = 0.
struct InitialDatum {
  int m = 0, k = 0, s = 0;
  MVPolynomial u0, v0;

  InitialDatum(int m_, int k_, int s_, MVPolynomial u0_, MVPolynomial v0_)
      : m(m_), k(k_), s(s_), u0(std::move(u0_)), v0(std::move(v0_)) {}

  MVPolynomial combined() const {
    Multivector em = Multivector::basis_blade(m, Blade{1} << (m - 1));
    return u0 + v0.mul_right(em);
  }

  void validate() const {
    if (m < 2 || s < 0 || s > m || k < 0) throw std::invalid_argument("InitialDatum: bad parameters");
    if (u0.dim() != m || v0.dim() != m) throw std::invalid_argument("InitialDatum: dimension mismatch");
    int du = 0, dv = 0;
    if (!u0.is_homogeneous(&du) || (!u0.is_zero() && du != k))
      throw std::invalid_argument("InitialDatum: u0 not homogeneous of the declared degree");
    if (!v0.is_homogeneous(&dv) || (!v0.is_zero() && dv != k))
      throw std::invalid_argument("InitialDatum: v0 not homogeneous of the declared degree");
    if (!u0.is_zero() && !u0.is_grade(s)) throw std::invalid_argument("InitialDatum: u0 has wrong grade");
    if (!v0.is_zero() && (s == 0 || !v0.is_grade(s - 1)))
      throw std::invalid_argument("InitialDatum: v0 has wrong grade");
    if (u0.depends_on(m) || v0.depends_on(m))
      throw std::invalid_argument("InitialDatum: parts must not depend on the last variable");
    if (u0.uses_blade_index(m) || v0.uses_blade_index(m))
      throw std::invalid_argument("InitialDatum: parts must not use the last blade index");
    if (!dirac_plus(u0, m - 1).is_zero())
      throw std::invalid_argument("InitialDatum: compatibility D+ u0 = 0 violated");
    if (!dirac_minus(v0, m - 1).is_zero())
      throw std::invalid_argument("InitialDatum: compatibility D- v0 = 0 violated");
  }
};

inline bool is_in_Iks(const MVPolynomial& u0, const MVPolynomial& v0, int s, int k) {
  try {
    InitialDatum(u0.dim(), k, s, u0, v0).validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Closed recursion for graded data: with sg = (-1)^(s-1),
//   u_{2t} = (D+D-)^t u0,  u_{2t+1} = sg (D+D-)^t D+ v0,
//   v_{2t} = (D-D+)^t v0,  v_{2t+1} = sg (D-D+)^t D- u0,
// and the extension is sum_j (x_m^j / j!) (u_j + v_j e_m).
inline MVPolynomial ck_extend_hodge(const InitialDatum& d) {
  d.validate();
  int m = d.m, nv = m - 1;
  Scalar sg = (d.s % 2 == 0) ? Scalar(-1) : Scalar(1);
  Multivector em = Multivector::basis_blade(m, Blade{1} << (m - 1));

  MVPolynomial u_even = d.u0;                        // t = 0 slice of u_{2t}
  MVPolynomial u_odd = dirac_plus(d.v0, nv) * sg;    // t = 0 slice of u_{2t+1}
  MVPolynomial v_even = d.v0;
  MVPolynomial v_odd = dirac_minus(d.u0, nv) * sg;

  MVPolynomial result(m);
  for (int j = 0; j <= d.k; ++j) {
    const MVPolynomial& uj = (j % 2 == 0) ? u_even : u_odd;
    const MVPolynomial& vj = (j % 2 == 0) ? v_even : v_odd;
    MVPolynomial slice = uj + vj.mul_right(em);
    if (!slice.is_zero())
      result += detail::shift_var_pow(slice, m, j, Scalar(rational_frac(Integer(1), factorial(j))));
    if (j % 2 == 1) {  // advance both parity tracks to the next t
      u_even = dirac_plus(dirac_minus(u_even, nv), nv);
      u_odd = dirac_plus(dirac_minus(u_odd, nv), nv);
      v_even = dirac_minus(dirac_plus(v_even, nv), nv);
      v_odd = dirac_minus(dirac_plus(v_odd, nv), nv);
    }
  }
  return result;
}

// Inverse direction: read the initial datum back off a graded monogenic
// polynomial.  The grade s can be given explicitly (required when p = 0).
inline InitialDatum restrict_to_initial(const MVPolynomial& p, int s = -1) {
  int m = p.dim();
  int k = 0;
  if (!p.is_homogeneous(&k)) throw std::invalid_argument("restrict_to_initial: non-homogeneous input");
  if (s < 0) {
    auto gs = p.grades();
    if (gs.size() != 1)
      throw std::invalid_argument("restrict_to_initial: grade not deducible, pass it explicitly");
    s = *gs.begin();
  }
  auto [u0, v0] = p.restrict_last().split_em();
  InitialDatum d(m, k, s, std::move(u0), std::move(v0));
  d.validate();
  return d;
}

}  // namespace gtb
