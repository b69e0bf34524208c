#pragma once

// Clifford algebra Cl(0,m): generators e_1..e_m with e_i e_j + e_j e_i =
// -2 delta_ij, so every generator squares to -1.  Basis blades are bitmasks
// (bit i-1 <-> index i); multivectors are sparse blade->Scalar maps over a
// fixed dimension m.  All operations are exact and return new values.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtb/scalar.hpp"

namespace gtb {

using Blade = std::uint32_t;

constexpr int kMaxDim = 30;

inline int blade_grade(Blade b) { return std::popcount(b); }

// Sign of moving every generator of a past those of b that are smaller,
// i.e. the parity of |{(i,j) : i in a, j in b, i > j}|.
inline int blade_reorder_sign(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// e_A e_B = sign * e_(A xor B); shared indices square to -1 each.
inline std::pair<Blade, int> blade_mul(Blade a, Blade b) {
  int sign = blade_reorder_sign(a, b);
  if (std::popcount(a & b) & 1) sign = -sign;
  return {a ^ b, sign};
}

// Clifford conjugation sign on a grade-g blade: (-1)^(g(g+1)/2).
inline int clifford_conj_sign(int g) { return ((g * (g + 1) / 2) % 2) ? -1 : 1; }

inline Blade blade_from_indices(const std::vector<int>& idx, int dim) {
  Blade b = 0;
  for (int i : idx) {
    if (i < 1 || i > dim) throw std::invalid_argument("blade index out of range");
    Blade bit = Blade{1} << (i - 1);
    if (b & bit) throw std::invalid_argument("repeated blade index");
    b |= bit;
  }
  return b;
}

inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1) idx.push_back(i + 1);
  return idx;
}

class Multivector {
 public:
  explicit Multivector(int dim) : dim_(check_dim(dim)) {}

  static Multivector zero(int dim) { return Multivector(dim); }
  static Multivector scalar(int dim, const Scalar& c) {
    Multivector v(dim);
    v.add_term(0, c);
    return v;
  }
  static Multivector basis_blade(int dim, Blade b, const Scalar& c = Scalar::one()) {
    Multivector v(dim);
    if (b >> dim) throw std::invalid_argument("blade outside algebra dimension");
    v.add_term(b, c);
    return v;
  }
  static Multivector e(int dim, std::initializer_list<int> idx) {
    return basis_blade(dim, blade_from_indices(std::vector<int>(idx), dim));
  }
  static Multivector pseudoscalar(int dim) {
    return basis_blade(dim, (Blade{1} << dim) - 1);
  }

  int dim() const { return dim_; }
  const std::map<Blade, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }
  Scalar scalar_part() const { return coeff(0); }

  bool is_grade(int s) const {
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) != s) return false;
    return true;
  }
  // Set of grades with nonzero content.
  std::set<int> grades() const {
    std::set<int> g;
    for (const auto& [b, c] : terms_) g.insert(blade_grade(b));
    return g;
  }

  Multivector grade_projection(int s) const {
    if (s < 0 || s > dim_) throw std::invalid_argument("grade out of range");
    Multivector r(dim_);
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) == s) r.add_term(b, c);
    return r;
  }

  Multivector operator-() const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) r.add_term(b, -c);
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_dim(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same_dim(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  Multivector& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Scalar& c) { return a *= c; }
  friend Multivector operator*(const Scalar& c, Multivector a) { return a *= c; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same_dim(b);
    Multivector r(a.dim_);
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        auto [bl, sg] = blade_mul(ba, bb);
        Scalar c = ca * cb;
        if (sg < 0) c = -c;
        r.add_term(bl, c);
      }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // Grade-wise sign involutions.
  Multivector clifford_conjugate() const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) {
      int sg = clifford_conj_sign(blade_grade(b));
      r.add_term(b, sg < 0 ? -c : c);
    }
    return r;
  }
  Multivector conj_coefficients() const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) r.add_term(b, c.conj());
    return r;
  }
  // Clifford conjugation composed with complex conjugation of coefficients;
  // bar(e_A) e_A = +1 for every blade, which makes the induced pairings
  // positive definite.
  Multivector hermitian_bar() const { return clifford_conjugate().conj_coefficients(); }

  bool is_real() const {
    for (const auto& [b, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  Multivector real_part() const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) r.add_term(b, Scalar(c.re));
    return r;
  }
  Multivector imag_part() const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) r.add_term(b, Scalar(c.im));
    return r;
  }

  // Injects into a larger algebra (blades unchanged).
  Multivector embed(int new_dim) const {
    if (new_dim < dim_) throw std::invalid_argument("embed: dimension must not shrink");
    Multivector r(new_dim);
    for (const auto& [b, c] : terms_) r.add_term(b, c);
    return r;
  }

  void add_term(Blade b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
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
  void require_same_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }

  int dim_;
  std::map<Blade, Scalar> terms_;
};

// Inner ("bullet") action of a 1-vector on the grade-s parts of v:
// u . v = (uv - (-1)^s vu)/2, lowering each grade by one.
inline Multivector bullet_1v(const Multivector& u, const Multivector& v) {
  if (!u.is_grade(1)) throw std::invalid_argument("bullet_1v: u must be grade 1");
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector r(v.dim());
  for (const auto& [ub, uc] : u.terms()) {
    for (const auto& [vb, vc] : v.terms()) {
      if (!(ub & vb)) continue;  // disjoint generators only wedge
      auto [bl, sg] = blade_mul(ub, vb);
      Scalar c = uc * vc;
      if (sg < 0) c = -c;
      r.add_term(bl, c);
    }
  }
  return r;
}

// Outer ("wedge") action of a 1-vector: u ^ v = (uv + (-1)^s vu)/2,
// raising each grade by one.
inline Multivector wedge_1v(const Multivector& u, const Multivector& v) {
  if (!u.is_grade(1)) throw std::invalid_argument("wedge_1v: u must be grade 1");
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector r(v.dim());
  for (const auto& [ub, uc] : u.terms()) {
    for (const auto& [vb, vc] : v.terms()) {
      if (ub & vb) continue;
      auto [bl, sg] = blade_mul(ub, vb);
      Scalar c = uc * vc;
      if (sg < 0) c = -c;
      r.add_term(bl, c);
    }
  }
  return r;
}

}  // namespace gtb
