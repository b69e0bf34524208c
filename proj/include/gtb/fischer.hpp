#pragma once

// Fischer-type decompositions: projections onto the kernels of the split
// derivatives, the explicit piecewise decomposition of those kernels in
// terms of solution spaces of lower degree, and an exhaustive check that the
// pieces reassemble the full polynomial space.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gtb/special_poly.hpp"
#include "gtb/verify.hpp"

namespace gtb {

namespace detail {

struct GradedParams {
  int n;  // number of active variables
  int k;  // homogeneity degree
  int s;  // grade
};

inline GradedParams graded_params(const MVPolynomial& p, int nvars, const char* who) {
  GradedParams gp;
  gp.n = resolve_nvars(p, nvars);
  for (int v = gp.n + 1; v <= p.dim(); ++v)
    if (p.depends_on(v) || p.uses_blade_index(v))
      throw std::invalid_argument(std::string(who) + ": input touches variables beyond the active range");
  if (!p.is_homogeneous(&gp.k)) throw std::invalid_argument(std::string(who) + ": input not homogeneous");
  auto gs = p.grades();
  if (gs.size() != 1) throw std::invalid_argument(std::string(who) + ": input not of a single grade");
  gp.s = *gs.begin();
  return gp;
}

}  // namespace detail

// Projection of a homogeneous single-grade polynomial onto Ker D+ along
// (x bullet) Ker D+, realized as -(s+k)^{-1} D+ (x bullet).  The (s,k)=(0,0)
// case (constants of grade zero) is the identity.
inline MVPolynomial proj_plus(const MVPolynomial& p, int nvars = -1) {
  if (p.is_zero()) return p;
  auto gp = detail::graded_params(p, nvars, "proj_plus");
  if (gp.s + gp.k == 0) return p;
  return dirac_plus(x_bullet(p, gp.n), gp.n) * Scalar(rational_of(-1, gp.s + gp.k));
}

// Companion decomposition data: p = proj_plus(p) + (x bullet) q with
// q = -(s+k)^{-1} D+ p, itself in Ker D+ one degree down, one grade up.
inline MVPolynomial proj_plus_complement(const MVPolynomial& p, int nvars = -1) {
  if (p.is_zero()) return p;
  auto gp = detail::graded_params(p, nvars, "proj_plus_complement");
  if (gp.s + gp.k == 0) return MVPolynomial::zero(p.dim());
  return dirac_plus(p, gp.n) * Scalar(rational_of(-1, gp.s + gp.k));
}

// Mirror projection onto Ker D- along (x wedge) Ker D-:
// -(n-s+k)^{-1} D- (x wedge), identity when s = n and k = 0.
inline MVPolynomial proj_minus(const MVPolynomial& p, int nvars = -1) {
  if (p.is_zero()) return p;
  auto gp = detail::graded_params(p, nvars, "proj_minus");
  if (gp.n - gp.s + gp.k == 0) return p;
  return dirac_minus(x_wedge(p, gp.n), gp.n) * Scalar(rational_of(-1, gp.n - gp.s + gp.k));
}

inline MVPolynomial proj_minus_complement(const MVPolynomial& p, int nvars = -1) {
  if (p.is_zero()) return p;
  auto gp = detail::graded_params(p, nvars, "proj_minus_complement");
  if (gp.n - gp.s + gp.k == 0) return MVPolynomial::zero(p.dim());
  return dirac_minus(p, gp.n) * Scalar(rational_of(-1, gp.n - gp.s + gp.k));
}

// ---------------------------------------------------------------------------
// Kernel decompositions.

// A basis provider returns a basis of the grade-s degree-k solution space in
// dimension m (empty when the space is trivial).
using HarmonicBasisProvider = std::function<std::vector<MVPolynomial>(int m, int k, int s)>;

struct KernelPiece {
  std::string factor_desc;  // human-readable factor
  int src_k = 0, src_s = 0;
  std::vector<MVPolynomial> elements;

  int dim() const { return static_cast<int>(elements.size()); }
};

struct KernelDecomposition {
  char sign = '+';
  int m = 0, k = 0, s = 0;
  std::vector<KernelPiece> pieces;

  int total_dim() const {
    int t = 0;
    for (const auto& p : pieces) t += p.dim();
    return t;
  }
  std::vector<MVPolynomial> all_elements() const {
    std::vector<MVPolynomial> out;
    for (const auto& p : pieces)
      for (const auto& e : p.elements) out.push_back(e);
    return out;
  }
};

namespace detail {

inline std::vector<MVPolynomial> full_grade_space(int m, int k, int s) {
  std::vector<MVPolynomial> out;
  std::vector<Blade> blades = blades_of_grades(m, {s});
  for (const auto& mo : monomials_of_degree(m, k))
    for (Blade bb : blades) {
      MVPolynomial e(m);
      e.add_term(mo, bb, Scalar::one());
      out.push_back(std::move(e));
    }
  return out;
}

inline void add_kernel_piece(KernelDecomposition& d, const std::string& desc, int src_k, int src_s,
                             const std::function<MVPolynomial(const MVPolynomial&)>& factor,
                             const HarmonicBasisProvider& provider) {
  if (src_k < 0 || src_s < 0 || src_s > d.m) return;
  auto src = provider(d.m, src_k, src_s);
  if (src.empty()) return;
  KernelPiece piece;
  piece.factor_desc = desc;
  piece.src_k = src_k;
  piece.src_s = src_s;
  for (const auto& h : src) piece.elements.push_back(factor(h));
  d.pieces.push_back(std::move(piece));
}

}  // namespace detail

// Explicit direct-sum decomposition of the degree-k grade-s kernel of D+ or
// D- into embedded solution spaces of lower degree.  At the boundary grades
// the kernel degenerates: for grade 0, Ker D- is the whole space and
// Ker D+ is the solution space itself; dually at grade m.
inline KernelDecomposition decompose_ker(char sign, int m, int k, int s,
                                         const HarmonicBasisProvider& provider) {
  if (sign != '+' && sign != '-') throw std::invalid_argument("decompose_ker: sign must be '+' or '-'");
  if (m < 1 || k < 0 || s < 0 || s > m) throw std::invalid_argument("decompose_ker: bad parameters");
  KernelDecomposition d;
  d.sign = sign;
  d.m = m;
  d.k = k;
  d.s = s;

  auto identity = [](const MVPolynomial& p) { return p; };

  if ((sign == '-' && s == 0) || (sign == '+' && s == m)) {
    KernelPiece piece;
    piece.factor_desc = "full";
    piece.src_k = k;
    piece.src_s = s;
    piece.elements = detail::full_grade_space(m, k, s);
    d.pieces.push_back(std::move(piece));
    return d;
  }

  detail::add_kernel_piece(d, "id", k, s, identity, provider);
  if ((sign == '+' && s == 0) || (sign == '-' && s == m)) return d;

  if (sign == '+') {
    for (int j = 0; 2 * j + 1 <= k; ++j)
      detail::add_kernel_piece(
          d, "x^" + std::to_string(2 * j) + "(x∧)", k - 2 * j - 1, s - 1,
          [j](const MVPolynomial& p) { return x_power(x_wedge(p), 2 * j); }, provider);
    for (int j = 0; 2 * j + 2 <= k; ++j)
      detail::add_kernel_piece(
          d, "ycheck:" + std::to_string(j), k - 2 * j - 2, s,
          [j](const MVPolynomial& p) { return y_check_apply(p, j); }, provider);
  } else {
    for (int j = 0; 2 * j + 1 <= k; ++j)
      detail::add_kernel_piece(
          d, "x^" + std::to_string(2 * j) + "(x•)", k - 2 * j - 1, s + 1,
          [j](const MVPolynomial& p) { return x_power(x_bullet(p), 2 * j); }, provider);
    for (int j = 0; 2 * j + 2 <= k; ++j)
      detail::add_kernel_piece(
          d, "yhat:" + std::to_string(j), k - 2 * j - 2, s,
          [j](const MVPolynomial& p) { return y_hat_apply(p, j); }, provider);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Full-space decomposition check.

struct FischerPiece {
  std::string factor_desc;
  int src_k = 0, src_s = 0;
  int dim = 0;
};

struct FischerGradeReport {
  int s = 0;
  long target_dim = 0;  // dim of the full degree-k grade-s polynomial space
  std::vector<FischerPiece> pieces;
  long pieces_dim = 0;
  bool independent = false;  // realized pieces are jointly linearly independent
  bool ok = false;
};

struct FischerReport {
  int m = 0, k = 0;
  std::vector<FischerGradeReport> grades;
  bool ok = true;
};

// Checks, grade by grade, that the full space of degree-k grade-s
// polynomials is the direct sum
//   H_k^s + sum_j x^{2j}(x∧) H_{k-2j-1}^{s-1} + sum_j x^{2j}(x•) H_{k-2j-1}^{s+1}
//         + sum_j x^{2j+1}(x•) H_{k-2j-2}^{s} + sum_j x^{2j+1}(x∧) H_{k-2j-2}^{s},
// by realizing every piece and comparing total dimension and joint rank.
inline FischerReport verify_fischer_full(int m, int k, const HarmonicBasisProvider& provider) {
  FischerReport rep;
  rep.m = m;
  rep.k = k;
  for (int s = 0; s <= m; ++s) {
    FischerGradeReport g;
    g.s = s;
    g.target_dim = p_space_dim(m, k, s);

    std::vector<MVPolynomial> all;
    auto add = [&](const std::string& desc, int src_k, int src_s,
                   const std::function<MVPolynomial(const MVPolynomial&)>& factor) {
      if (src_k < 0 || src_s < 0 || src_s > m) return;
      auto src = provider(m, src_k, src_s);
      if (src.empty()) return;
      FischerPiece piece;
      piece.factor_desc = desc;
      piece.src_k = src_k;
      piece.src_s = src_s;
      piece.dim = static_cast<int>(src.size());
      for (const auto& h : src) all.push_back(factor(h));
      g.pieces.push_back(std::move(piece));
    };

    add("id", k, s, [](const MVPolynomial& p) { return p; });
    for (int j = 0; 2 * j + 1 <= k; ++j) {
      add("x^" + std::to_string(2 * j) + "(x∧)", k - 2 * j - 1, s - 1,
          [j](const MVPolynomial& p) { return x_power(x_wedge(p), 2 * j); });
      add("x^" + std::to_string(2 * j) + "(x•)", k - 2 * j - 1, s + 1,
          [j](const MVPolynomial& p) { return x_power(x_bullet(p), 2 * j); });
    }
    // At the boundary grades one of the odd pieces degenerates: the bullet
    // factor annihilates grade 0 and the wedge factor annihilates grade m,
    // so those pieces only appear at interior grades.
    for (int j = 0; 2 * j + 2 <= k; ++j) {
      if (s > 0)
        add("x^" + std::to_string(2 * j + 1) + "(x•)", k - 2 * j - 2, s,
            [j](const MVPolynomial& p) { return x_power(x_bullet(p), 2 * j + 1); });
      if (s < m)
        add("x^" + std::to_string(2 * j + 1) + "(x∧)", k - 2 * j - 2, s,
            [j](const MVPolynomial& p) { return x_power(x_wedge(p), 2 * j + 1); });
    }

    g.pieces_dim = static_cast<long>(all.size());
    g.independent = linearly_independent(all);
    g.ok = g.independent && g.pieces_dim == g.target_dim;
    if (!g.ok) rep.ok = false;
    rep.grades.push_back(std::move(g));
  }
  return rep;
}

}  // namespace gtb
