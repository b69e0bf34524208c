#pragma once

// Polynomials in commuting variables x_1..x_m with Clifford-algebra values:
// sparse maps (monomial, blade) -> Scalar.  Variables commute with blades;
// the canonical term order is graded lexicographic on exponents with the
// blade bitmask as tie-breaker, which fixes serialization byte-for-byte.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtb/multivector.hpp"
#include "gtb/scalar.hpp"

namespace gtb {

struct Monomial {
  std::vector<std::uint8_t> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool depends_on(int var) const { return e[var - 1] != 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  // Graded lexicographic.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

struct TermKey {
  Monomial mono;
  Blade blade = 0;

  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.blade == b.blade && a.mono == b.mono;
  }
  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.mono == b.mono) return a.blade < b.blade;
    return a.mono < b.mono;
  }
};

class MVPolynomial {
 public:
  explicit MVPolynomial(int dim) : dim_(check_dim(dim)) {}

  static MVPolynomial zero(int dim) { return MVPolynomial(dim); }
  static MVPolynomial constant(int dim, const Scalar& c) {
    MVPolynomial p(dim);
    p.add_term(Monomial(dim), 0, c);
    return p;
  }
  static MVPolynomial one(int dim) { return constant(dim, Scalar::one()); }
  static MVPolynomial constant(const Multivector& v) {
    MVPolynomial p(v.dim());
    for (const auto& [b, c] : v.terms()) p.add_term(Monomial(v.dim()), b, c);
    return p;
  }
  static MVPolynomial variable(int dim, int var, const Scalar& c = Scalar::one()) {
    MVPolynomial p(dim);
    if (var < 1 || var > dim) throw std::invalid_argument("variable out of range");
    Monomial m(dim);
    m.e[var - 1] = 1;
    p.add_term(m, 0, c);
    return p;
  }
  // The 1-vector x_1 e_1 + ... + x_n e_n (n defaults to all of them).
  static MVPolynomial x_vector(int dim, int nvars = -1) {
    if (nvars < 0) nvars = dim;
    if (nvars > dim) throw std::invalid_argument("x_vector: nvars out of range");
    MVPolynomial p(dim);
    for (int j = 1; j <= nvars; ++j) {
      Monomial m(dim);
      m.e[j - 1] = 1;
      p.add_term(m, Blade{1} << (j - 1), Scalar::one());
    }
    return p;
  }
  // The scalar polynomial x_1^2 + ... + x_n^2 (note: the Clifford square of
  // the 1-vector x is MINUS this).
  static MVPolynomial norm_sq(int dim, int nvars = -1) {
    if (nvars < 0) nvars = dim;
    if (nvars > dim) throw std::invalid_argument("norm_sq: nvars out of range");
    MVPolynomial p(dim);
    for (int j = 1; j <= nvars; ++j) {
      Monomial m(dim);
      m.e[j - 1] = 2;
      p.add_term(m, 0, Scalar::one());
    }
    return p;
  }

  int dim() const { return dim_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Scalar coeff(const Monomial& m, Blade b) const {
    auto it = terms_.find(TermKey{m, b});
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  bool is_homogeneous(int* degree_out = nullptr) const {
    if (terms_.empty()) {
      if (degree_out) *degree_out = 0;
      return true;
    }
    int d = terms_.begin()->first.mono.degree();
    for (const auto& [k, c] : terms_)
      if (k.mono.degree() != d) return false;
    if (degree_out) *degree_out = d;
    return true;
  }
  int degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.mono.degree());
    return d;
  }
  bool is_grade(int s) const {
    for (const auto& [k, c] : terms_)
      if (blade_grade(k.blade) != s) return false;
    return true;
  }
  std::set<int> grades() const {
    std::set<int> g;
    for (const auto& [k, c] : terms_) g.insert(blade_grade(k.blade));
    return g;
  }
  bool depends_on(int var) const {
    for (const auto& [k, c] : terms_)
      if (k.mono.depends_on(var)) return true;
    return false;
  }
  bool uses_blade_index(int i) const {
    Blade bit = Blade{1} << (i - 1);
    for (const auto& [k, c] : terms_)
      if (k.blade & bit) return true;
    return false;
  }

  MVPolynomial grade_projection(int s) const {
    if (s < 0 || s > dim_) throw std::invalid_argument("grade out of range");
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_)
      if (blade_grade(k.blade) == s) r.add_term(k.mono, k.blade, c);
    return r;
  }

  MVPolynomial operator-() const {
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_) r.add_term(k.mono, k.blade, -c);
    return r;
  }
  MVPolynomial& operator+=(const MVPolynomial& o) {
    require_same_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.mono, k.blade, c);
    return *this;
  }
  MVPolynomial& operator-=(const MVPolynomial& o) {
    require_same_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.mono, k.blade, -c);
    return *this;
  }
  MVPolynomial& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend MVPolynomial operator+(MVPolynomial a, const MVPolynomial& b) { return a += b; }
  friend MVPolynomial operator-(MVPolynomial a, const MVPolynomial& b) { return a -= b; }
  friend MVPolynomial operator*(MVPolynomial a, const Scalar& c) { return a *= c; }
  friend MVPolynomial operator*(const Scalar& c, MVPolynomial a) { return a *= c; }

  // Geometric product; variables commute, blades multiply in order.
  friend MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b) {
    a.require_same_dim(b);
    MVPolynomial r(a.dim_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        auto [bl, sg] = blade_mul(ka.blade, kb.blade);
        Scalar c = ca * cb;
        if (sg < 0) c = -c;
        Monomial m = ka.mono;
        for (int t = 0; t < a.dim_; ++t)
          m.e[t] = static_cast<std::uint8_t>(m.e[t] + kb.mono.e[t]);
        r.add_term(m, bl, c);
      }
    return r;
  }

  friend bool operator==(const MVPolynomial& a, const MVPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MVPolynomial& a, const MVPolynomial& b) { return !(a == b); }

  MVPolynomial mul_left(const Multivector& v) const { return MVPolynomial::constant(v) * *this; }
  MVPolynomial mul_right(const Multivector& v) const { return *this * MVPolynomial::constant(v); }

  MVPolynomial pow(unsigned n) const {
    MVPolynomial r = MVPolynomial::one(dim_);
    for (unsigned t = 0; t < n; ++t) r = r * *this;
    return r;
  }

  MVPolynomial partial_derivative(int var) const {
    if (var < 1 || var > dim_) throw std::invalid_argument("partial_derivative: var out of range");
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_) {
      int ex = k.mono.e[var - 1];
      if (ex == 0) continue;
      Monomial m = k.mono;
      m.e[var - 1] = static_cast<std::uint8_t>(ex - 1);
      r.add_term(m, k.blade, c * Scalar(ex));
    }
    return r;
  }

  // Sets x_var = 0; blades are untouched (they may still contain e_var).
  MVPolynomial restrict_var(int var) const {
    if (var < 1 || var > dim_) throw std::invalid_argument("restrict_var: var out of range");
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_)
      if (!k.mono.depends_on(var)) r.add_term(k.mono, k.blade, c);
    return r;
  }
  MVPolynomial restrict_last() const { return restrict_var(dim_); }

  // Writes p = u + v e_m with u, v free of the blade index m.  Requires p
  // free of the variable x_m.  Because m is the largest index, e_A = e_A' e_m
  // carries no sign.
  std::pair<MVPolynomial, MVPolynomial> split_em() const {
    if (depends_on(dim_))
      throw std::invalid_argument("split_em: polynomial depends on the last variable");
    MVPolynomial u(dim_), v(dim_);
    Blade mbit = Blade{1} << (dim_ - 1);
    for (const auto& [k, c] : terms_) {
      if (k.blade & mbit)
        v.add_term(k.mono, k.blade & ~mbit, c);
      else
        u.add_term(k.mono, k.blade, c);
    }
    return {u, v};
  }

  Multivector evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != dim_)
      throw std::invalid_argument("evaluate: wrong point dimension");
    Multivector r(dim_);
    for (const auto& [k, c] : terms_) {
      Scalar v = c;
      for (int t = 0; t < dim_; ++t)
        for (int p = 0; p < k.mono.e[t]; ++p) v *= point[t];
      r.add_term(k.blade, v);
    }
    return r;
  }

  MVPolynomial embed(int new_dim) const {
    if (new_dim < dim_) throw std::invalid_argument("embed: dimension must not shrink");
    MVPolynomial r(new_dim);
    for (const auto& [k, c] : terms_) {
      Monomial m(new_dim);
      std::copy(k.mono.e.begin(), k.mono.e.end(), m.e.begin());
      r.add_term(m, k.blade, c);
    }
    return r;
  }

  MVPolynomial conj_coefficients() const {
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_) r.add_term(k.mono, k.blade, c.conj());
    return r;
  }
  bool is_real() const {
    for (const auto& [k, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }
  MVPolynomial real_part() const {
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_) r.add_term(k.mono, k.blade, Scalar(c.re));
    return r;
  }
  MVPolynomial imag_part() const {
    MVPolynomial r(dim_);
    for (const auto& [k, c] : terms_) r.add_term(k.mono, k.blade, Scalar(c.im));
    return r;
  }

  // Leading term in the canonical order (greatest key); zero polynomial has none.
  const std::pair<const TermKey, Scalar>* leading_term() const {
    if (terms_.empty()) return nullptr;
    return &*terms_.rbegin();
  }

  void add_term(const Monomial& m, Blade b, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.e.size()) != dim_)
      throw std::invalid_argument("add_term: monomial arity mismatch");
    if (b >> dim_) throw std::invalid_argument("add_term: blade outside algebra");
    auto [it, fresh] = terms_.try_emplace(TermKey{m, b}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  static int check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
    return dim;
  }
  void require_same_dim(const MVPolynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }

  int dim_;
  std::map<TermKey, Scalar> terms_;
};

// Termwise bullet/wedge action of a constant 1-vector on the blade parts.
inline MVPolynomial bullet_1v(const Multivector& u, const MVPolynomial& p) {
  if (!u.is_grade(1)) throw std::invalid_argument("bullet_1v: u must be grade 1");
  if (u.dim() != p.dim()) throw std::invalid_argument("dimension mismatch");
  MVPolynomial r(p.dim());
  for (const auto& [ub, uc] : u.terms())
    for (const auto& [k, c] : p.terms()) {
      if (!(ub & k.blade)) continue;
      auto [bl, sg] = blade_mul(ub, k.blade);
      Scalar v = uc * c;
      if (sg < 0) v = -v;
      r.add_term(k.mono, bl, v);
    }
  return r;
}

inline MVPolynomial wedge_1v(const Multivector& u, const MVPolynomial& p) {
  if (!u.is_grade(1)) throw std::invalid_argument("wedge_1v: u must be grade 1");
  if (u.dim() != p.dim()) throw std::invalid_argument("dimension mismatch");
  MVPolynomial r(p.dim());
  for (const auto& [ub, uc] : u.terms())
    for (const auto& [k, c] : p.terms()) {
      if (ub & k.blade) continue;
      auto [bl, sg] = blade_mul(ub, k.blade);
      Scalar v = uc * c;
      if (sg < 0) v = -v;
      r.add_term(k.mono, bl, v);
    }
  return r;
}

}  // namespace gtb
