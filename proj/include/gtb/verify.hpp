#pragma once

// Exact verification layer: the two inner products, Gram matrix checks,
// exact rank / span comparisons over the coefficient field, and
// dimension oracles computed by linear algebra directly from the defining
// systems (no basis construction involved).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtb/operators.hpp"

namespace gtb {

// ---------------------------------------------------------------------------
// Problem-size cap (override with the HODGE_GT_SIZE_CAP environment variable).

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long size_cap() {
  if (const char* e = std::getenv("HODGE_GT_SIZE_CAP")) {
    long v = std::atol(e);
    if (v > 0) return v;
  }
  return 5000;
}

inline void check_size_cap(long n, const std::string& what) {
  if (n > size_cap())
    throw SizeCapExceeded(what + ": problem size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(size_cap()));
}

// ---------------------------------------------------------------------------
// Inner products.

// Per-monomial coefficient multivectors a_alpha, b_alpha give
//   <p, q> = sum_alpha alpha! * [ bar(a_alpha) b_alpha ]_0,
// where bar is the Hermitian conjugation; exact and positive definite.
inline Scalar fischer_inner(const MVPolynomial& p, const MVPolynomial& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("fischer_inner: dimension mismatch");
  Scalar total = Scalar::zero();
  auto ip = p.terms().begin(), iq = q.terms().begin();
  while (ip != p.terms().end() && iq != q.terms().end()) {
    if (ip->first.mono < iq->first.mono) {
      ++ip;
      continue;
    }
    if (iq->first.mono < ip->first.mono) {
      ++iq;
      continue;
    }
    const Monomial& mo = ip->first.mono;
    Multivector a(p.dim()), b(p.dim());
    for (; ip != p.terms().end() && !(mo < ip->first.mono); ++ip) a.add_term(ip->first.blade, ip->second);
    for (; iq != q.terms().end() && !(mo < iq->first.mono); ++iq) b.add_term(iq->first.blade, iq->second);
    Integer weight = 1;
    for (auto e : mo.e) weight *= factorial(e);
    total += (a.hermitian_bar() * b).scalar_part() * Scalar(Rational(weight));
  }
  return total;
}

// Normalized sphere moment of a monomial: zero unless every exponent is
// even, and then prod_i (g_i - 1)!! / ( m (m+2) ... (m + |g| - 2) ).
inline Rational sphere_moment(int m, const Monomial& g) {
  long total = 0;
  for (auto e : g.e) {
    if (e % 2 != 0) return Rational(0);
    total += e;
  }
  Integer num = 1;
  for (auto e : g.e) num *= double_factorial(static_cast<long>(e) - 1);
  Integer den = 1;
  for (long t = 0; 2 * t < total; ++t) den *= Integer(m + 2 * t);
  return rational_frac(num, den);
}

// Exact normalized surface integral of [ bar(p) q ]_0 over the unit sphere.
// Only coefficients sharing a blade and with componentwise-even exponent sum
// contribute, so terms are bucketed by (blade, exponent parity).
inline Scalar l2_inner(const MVPolynomial& p, const MVPolynomial& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("l2_inner: dimension mismatch");
  using Bucket = std::pair<Blade, std::uint32_t>;
  auto parity_key = [](const TermKey& k) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < k.mono.e.size(); ++i)
      if (k.mono.e[i] % 2 != 0) mask |= std::uint32_t{1} << i;
    return Bucket{k.blade, mask};
  };
  std::map<Bucket, std::vector<std::pair<const Monomial*, const Scalar*>>> bp, bq;
  for (const auto& [k, c] : p.terms()) bp[parity_key(k)].push_back({&k.mono, &c});
  for (const auto& [k, c] : q.terms()) bq[parity_key(k)].push_back({&k.mono, &c});

  std::map<Monomial, Rational> moment_cache;
  Scalar total = Scalar::zero();
  for (const auto& [bucket, pv] : bp) {
    auto it = bq.find(bucket);
    if (it == bq.end()) continue;
    for (const auto& [pm, pc] : pv)
      for (const auto& [qm, qc] : it->second) {
        Monomial g = *pm;
        for (std::size_t i = 0; i < g.e.size(); ++i)
          g.e[i] = static_cast<std::uint8_t>(g.e[i] + qm->e[i]);
        auto [mit, fresh] = moment_cache.try_emplace(g);
        if (fresh) mit->second = sphere_moment(p.dim(), g);
        if (sgn(mit->second) != 0) total += pc->conj() * *qc * Scalar(mit->second);
      }
  }
  return total;
}

enum class InnerKind { fischer, l2 };

inline Scalar inner_product(const MVPolynomial& p, const MVPolynomial& q, InnerKind kind) {
  return kind == InnerKind::fischer ? fischer_inner(p, q) : l2_inner(p, q);
}

// ---------------------------------------------------------------------------
// Gram checks.

struct GramReport {
  bool diagonal = true;  // all off-diagonal entries vanish
  bool positive = true;  // all diagonal entries are real and positive
  std::vector<Scalar> diag;
  int bad_i = -1, bad_j = -1;  // first offending pair when not diagonal
  Scalar bad_value;

  bool ok() const { return diagonal && positive; }
};

inline GramReport gram_check(const std::vector<MVPolynomial>& basis, InnerKind kind) {
  GramReport rep;
  rep.diag.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar d = inner_product(basis[i], basis[i], kind);
    rep.diag.push_back(d);
    if (!d.is_real() || sgn(d.re) <= 0) rep.positive = false;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Scalar v = inner_product(basis[i], basis[j], kind);
      if (!v.is_zero()) {
        if (rep.diagonal) {
          rep.bad_i = static_cast<int>(i);
          rep.bad_j = static_cast<int>(j);
          rep.bad_value = v;
        }
        rep.diagonal = false;
      }
    }
  }
  return rep;
}

// Within each group of indices expected to span one irreducible piece, the
// ratio of the two diagonal Gram entries must be a single constant.
struct RatioReport {
  bool ok = true;
  int bad_group = -1;
  std::vector<std::pair<int, Scalar>> ratios;  // one representative per group
};

inline RatioReport ratio_check(const std::vector<Scalar>& fischer_diag,
                               const std::vector<Scalar>& l2_diag,
                               const std::vector<int>& group_ids) {
  if (fischer_diag.size() != l2_diag.size() || fischer_diag.size() != group_ids.size())
    throw std::invalid_argument("ratio_check: length mismatch");
  RatioReport rep;
  std::map<int, Scalar> seen;
  for (std::size_t i = 0; i < group_ids.size(); ++i) {
    if (l2_diag[i].is_zero()) {
      rep.ok = false;
      rep.bad_group = group_ids[i];
      continue;
    }
    Scalar r = fischer_diag[i] * l2_diag[i].inverse();
    auto [it, fresh] = seen.try_emplace(group_ids[i], r);
    if (fresh)
      rep.ratios.push_back({group_ids[i], r});
    else if (!(it->second == r)) {
      rep.ok = false;
      rep.bad_group = group_ids[i];
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact rank over the coefficient field (sparse Gaussian elimination).

namespace detail {

using SparseRow = std::map<int, Scalar>;

inline int exact_rank(std::vector<SparseRow> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  int rank = 0;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      int ci = rows[i].begin()->first, cb = rows[best].begin()->first;
      if (ci < cb || (ci == cb && rows[i].size() < rows[best].size())) best = i;
    }
    SparseRow pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;
    int pc = pivot.begin()->first;
    Scalar pv_inv = pivot.begin()->second.inverse();
    for (auto it = rows.begin(); it != rows.end();) {
      auto lead = it->find(pc);
      if (lead == it->end() || it->begin()->first != pc) {
        ++it;
        continue;
      }
      Scalar f = lead->second * pv_inv;
      for (const auto& [c, v] : pivot) {
        auto [jt, fresh] = it->try_emplace(c, Scalar::zero());
        jt->second -= f * v;
        if (jt->second.is_zero()) it->erase(jt);
      }
      if (it->empty())
        it = rows.erase(it);
      else
        ++it;
    }
  }
  return rank;
}

}  // namespace detail

// Assigns stable column ids to coefficient coordinates shared by a family of
// polynomials, so their coefficient vectors live in one space.
class ColumnIndex {
 public:
  int id(const TermKey& k) {
    auto [it, fresh] = ids_.try_emplace(k, static_cast<int>(ids_.size()));
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::map<TermKey, int> ids_;
};

inline detail::SparseRow coefficient_row(const MVPolynomial& p, ColumnIndex& cols) {
  detail::SparseRow r;
  for (const auto& [k, c] : p.terms()) r[cols.id(k)] = c;
  return r;
}

inline int rank_of_span(const std::vector<MVPolynomial>& polys) {
  check_size_cap(static_cast<long>(polys.size()), "rank_of_span");
  ColumnIndex cols;
  std::vector<detail::SparseRow> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(coefficient_row(p, cols));
  return detail::exact_rank(std::move(rows));
}

inline bool linearly_independent(const std::vector<MVPolynomial>& polys) {
  return rank_of_span(polys) == static_cast<int>(polys.size());
}

inline bool span_equal(const std::vector<MVPolynomial>& a, const std::vector<MVPolynomial>& b) {
  check_size_cap(static_cast<long>(a.size() + b.size()), "span_equal");
  ColumnIndex cols;
  std::vector<detail::SparseRow> ra, rb, rab;
  for (const auto& p : a) {
    ra.push_back(coefficient_row(p, cols));
    rab.push_back(ra.back());
  }
  for (const auto& p : b) {
    rb.push_back(coefficient_row(p, cols));
    rab.push_back(rb.back());
  }
  int k1 = detail::exact_rank(std::move(ra));
  int k2 = detail::exact_rank(std::move(rb));
  return k1 == k2 && k2 == detail::exact_rank(std::move(rab));
}

// ---------------------------------------------------------------------------
// Dimension oracles straight from the defining equations.

inline std::vector<Monomial> monomials_of_degree(int m, int k) {
  std::vector<Monomial> out;
  Monomial mo;
  mo.e.assign(static_cast<std::size_t>(m), 0);
  // lexicographic recursion over exponent vectors summing to k
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == m) {
      mo.e[static_cast<std::size_t>(m - 1)] = static_cast<std::uint8_t>(rest);
      out.push_back(mo);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      mo.e[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(e);
      rec(var + 1, rest - e);
    }
  };
  if (m >= 1)
    rec(1, k);
  else if (k == 0)
    out.push_back(mo);
  return out;
}

inline std::vector<Blade> blades_of_grades(int m, const std::set<int>& grades) {
  std::vector<Blade> out;
  for (Blade b = 0; b < (Blade{1} << m); ++b)
    if (grades.count(blade_grade(b))) out.push_back(b);
  return out;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline long p_space_dim(int m, int k, int s) {
  Integer d = binomial(m, s) * binomial(k + m - 1, m - 1);
  return d.get_si();
}

// Dimension of the kernel of an operator on degree-k polynomials taking
// values in the chosen grades, computed by exact rank of the full matrix.
inline int nullspace_dim(const OperatorExpr& op, int m, int k, const std::set<int>& grades) {
  auto monos = monomials_of_degree(m, k);
  auto blades = blades_of_grades(m, grades);
  long n = static_cast<long>(monos.size()) * static_cast<long>(blades.size());
  check_size_cap(n, "nullspace_dim");
  ColumnIndex cols;
  std::vector<detail::SparseRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (const auto& mo : monos)
    for (Blade b : blades) {
      MVPolynomial e(m);
      e.add_term(mo, b, Scalar::one());
      rows.push_back(coefficient_row(op(e), cols));
    }
  return static_cast<int>(n) - detail::exact_rank(std::move(rows));
}

inline int nullspace_dim_hodge(int m, int k, int s) {
  // grade-s solutions of the split system: both halves of the derivative vanish
  int d_plus_minus = nullspace_dim(op_dirac(), m, k, {s});
  // For a single grade, D f = 0 splits by grade: D+ f has grade s+1, D- f has
  // grade s-1, so the joint kernel is exactly the kernel of D.
  return d_plus_minus;
}

inline int nullspace_dim_gmt(int m, int k, const std::set<int>& S) {
  return nullspace_dim(op_dirac(), m, k, S);
}

inline int harmonic_dim_oracle(int m, int k) { return nullspace_dim(op_laplacian(), m, k, {0}); }

inline int kernel_dim_plus(int m, int k, int s) { return nullspace_dim(op_dirac_plus(), m, k, {s}); }

inline int kernel_dim_minus(int m, int k, int s) { return nullspace_dim(op_dirac_minus(), m, k, {s}); }

// ---------------------------------------------------------------------------
// Membership helpers.

inline bool is_monogenic(const MVPolynomial& p) { return dirac(p).is_zero(); }

inline bool is_hodge_solution(const MVPolynomial& p) {
  return dirac_plus(p).is_zero() && dirac_minus(p).is_zero();
}

inline bool in_Hks(const MVPolynomial& p, int m, int k, int s) {
  if (p.dim() != m) return false;
  if (p.is_zero()) return true;
  int deg = 0;
  return p.is_homogeneous(&deg) && deg == k && p.is_grade(s) && is_hodge_solution(p);
}

}  // namespace gtb
