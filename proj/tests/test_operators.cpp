// Tests for the first-order operators (Dirac-type, Euler-type, multiplication
// by the vector variable) and the operator-identity suites the basis
// construction relies on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtb/operators.hpp"
#include "test_util.hpp"

#include <set>
#include <vector>

using namespace gtb;
using gtb_test::C;
using gtb_test::E;
using gtb_test::X;

namespace {

// Compare two operator expressions on a batch of random inputs.
void check_on_randoms(const OperatorExpr& f, const OperatorExpr& g, int m, int max_deg,
                      int trials = 12) {
  for (int t = 0; t < trials; ++t) {
    for (int k = 0; k <= max_deg; ++k) {
      auto p = gtb_test::rand_poly_all_grades(m, k);
      INFO("identity ", f.desc(), " vs ", g.desc(), " at m=", m, " k=", k);
      CHECK(f(p) == g(p));
    }
  }
}

}  // namespace

TEST_CASE("dirac frozen values") {
  // D x = sum_j e_j e_j = -m.
  for (int m = 2; m <= 4; ++m)
    CHECK(dirac(MVPolynomial::x_vector(m)) == C(m, -m));
  // D (x1^2 e2) = 2 x1 e1 e2 = 2 x1 e12.
  CHECK(dirac(X(3, 1) * X(3, 1) * E(3, {2})) == Scalar(2) * X(3, 1) * E(3, {1, 2}));
  // D (x3 e3) = e3 e3 = -1.
  CHECK(dirac(X(3, 3) * E(3, {3})) == C(3, -1));
  // Split into grade-raising and grade-lowering halves.
  CHECK(dirac_plus(X(3, 1) * E(3, {1})) == MVPolynomial::zero(3));
  CHECK(dirac_minus(X(3, 1) * E(3, {1})) == C(3, -1));
  CHECK(dirac_plus(X(3, 1) * E(3, {2})) == E(3, {1, 2}));
  CHECK(dirac_minus(X(3, 1) * E(3, {2})) == MVPolynomial::zero(3));
}

TEST_CASE("dirac splits as plus part plus minus part") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k) {
      auto p = gtb_test::rand_poly_all_grades(m, k);
      CHECK(dirac_plus(p) + dirac_minus(p) == dirac(p));
      // The two halves shift the grade in opposite directions.
      for (int s = 0; s <= m; ++s) {
        auto ps = p.grade_projection(s);
        if (ps.is_zero()) continue;
        CHECK(dirac_plus(ps).grades() <= std::set<int>{s + 1});
        CHECK(dirac_minus(ps).grades() <= std::set<int>{s - 1});
      }
    }
}

TEST_CASE("euler operator counts the degree") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) {
      auto p = gtb_test::rand_poly_all_grades(m, k);
      CHECK(euler(p) == Scalar(k) * p);
    }
}

TEST_CASE("laplacian frozen values and dirac square") {
  // Lap |x|^2 = 2m.
  for (int m = 2; m <= 4; ++m)
    CHECK(laplacian(MVPolynomial::norm_sq(m)) == C(m, 2 * m));
  // Lap (x1^2 - x2^2) = 0, Lap (x1^3) = 6 x1.
  CHECK(laplacian(X(3, 1) * X(3, 1) - X(3, 2) * X(3, 2)) == MVPolynomial::zero(3));
  CHECK(laplacian(X(3, 1) * X(3, 1) * X(3, 1)) == Scalar(6) * X(3, 1));
  // D^2 = -Lap.
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k) {
      auto p = gtb_test::rand_poly_all_grades(m, k);
      CHECK(dirac(dirac(p)) == -laplacian(p));
    }
}

TEST_CASE("fermionic euler operators count the grade") {
  const int m = 4;
  for (Blade b = 0; b < (1u << m); ++b) {
    auto p = MVPolynomial::constant(Multivector::basis_blade(m, b));
    int s = blade_grade(b);
    CHECK(fermi_plus(p) == Scalar(s) * p);
    CHECK(fermi_minus(p) == Scalar(m - s) * p);
  }
  // Frozen: in dimension 3 the bivector e12 counts 2 up, 1 down.
  CHECK(fermi_plus(E(3, {1, 2})) == Scalar(2) * E(3, {1, 2}));
  CHECK(fermi_minus(E(3, {1, 2})) == E(3, {1, 2}));
  // With fewer active generators only those indices are counted.
  auto q = X(4, 1) * E(4, {2, 4});
  CHECK(fermi_plus(q, 3) == q);       // only index 2 is active
  CHECK(fermi_minus(q, 3) == Scalar(2) * q);  // indices 1, 3 are absent
}

TEST_CASE("weighted euler operators have eigenvalue grade plus degree") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int s = 0; s <= m; ++s) {
        auto p = gtb_test::rand_poly(m, k, {s});
        if (p.is_zero()) continue;
        CHECK(op_A(p) == Scalar(s + k) * p);
        CHECK(op_B(p) == Scalar(m - s + k) * p);
        CHECK(op_weighted_euler_a()(p) == Scalar(s + k) * p);
        CHECK(op_weighted_euler_b()(p) == Scalar(m - s + k) * p);
      }
}

TEST_CASE("multiplication by x splits into wedge and bullet") {
  // Frozen small values.
  CHECK(x_wedge(C(3, 1)) == MVPolynomial::x_vector(3));
  CHECK(x_bullet(C(3, 1)) == MVPolynomial::zero(3));
  auto x = MVPolynomial::x_vector(3);
  CHECK(x_bullet(x) == -MVPolynomial::norm_sq(3));
  CHECK(x_wedge(x) == MVPolynomial::zero(3));
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k) {
      auto p = gtb_test::rand_poly_all_grades(m, k);
      CHECK(x_wedge(p) + x_bullet(p) == x_mult(p));
      for (int s = 0; s <= m; ++s) {
        auto ps = p.grade_projection(s);
        if (ps.is_zero()) continue;
        CHECK(x_wedge(ps).grades() <= std::set<int>{s + 1});
        CHECK(x_bullet(ps).grades() <= std::set<int>{s - 1});
      }
    }
}

TEST_CASE("x power alternates scalar and vector factors") {
  auto p = gtb_test::rand_poly_all_grades(3, 2);
  auto r2 = MVPolynomial::norm_sq(3);
  CHECK(x_power(p, 0) == p);
  CHECK(x_power(p, 2) == -(r2 * p));
  CHECK(x_power(p, 4) == r2 * r2 * p);
  CHECK(x_power(p, 1) == x_mult(p));
  CHECK(x_power(p, 3) == x_mult(x_mult(x_mult(p))));
  // Truncated variable range.
  auto q = gtb_test::rand_poly(4, 1, {0, 1});
  CHECK(x_power(q, 2, 3) == -(MVPolynomial::norm_sq(4, 3) * q));
}

TEST_CASE("operator expressions compose like functions") {
  auto p = gtb_test::rand_poly_all_grades(3, 2);
  auto f = op_dirac_plus();
  auto g = op_x_bullet();
  CHECK(compose(f, g)(p) == dirac_plus(x_bullet(p)));
  CHECK((f + g)(p) == dirac_plus(p) + x_bullet(p));
  CHECK((f - g)(p) == dirac_plus(p) - x_bullet(p));
  CHECK((Scalar(3) * f)(p) == Scalar(3) * dirac_plus(p));
  CHECK(anticommutator(f, g)(p) == dirac_plus(x_bullet(p)) + x_bullet(dirac_plus(p)));
  CHECK(commutator(f, g)(p) == dirac_plus(x_bullet(p)) - x_bullet(dirac_plus(p)));
  CHECK(OperatorExpr::identity()(p) == p);
  CHECK(OperatorExpr::zero()(p).is_zero());
  CHECK_FALSE(compose(f, g).desc().empty());
}

TEST_CASE("anticommutator identity suite") {
  for (int m = 2; m <= 4; ++m) {
    auto Dp = op_dirac_plus();
    auto Dm = op_dirac_minus();
    auto Xw = op_x_wedge();
    auto Xb = op_x_bullet();
    auto Z = OperatorExpr::zero();
    // Multiplication operators square to zero and pair to x^2.
    check_on_randoms(anticommutator(Xw, Xw), Z, m, 3);
    check_on_randoms(anticommutator(Xb, Xb), Z, m, 3);
    check_on_randoms(anticommutator(Xw, Xb), op_x_power(2), m, 3);
    // Dirac halves square to zero and pair to minus the Laplacian.
    check_on_randoms(anticommutator(Dp, Dp), Z, m, 3);
    check_on_randoms(anticommutator(Dm, Dm), Z, m, 3);
    check_on_randoms(anticommutator(Dp, Dm), Scalar(-1) * op_laplacian(), m, 3);
    // Mixed pairs produce the weighted Euler operators or vanish.
    check_on_randoms(anticommutator(Xb, Dp), Scalar(-1) * op_weighted_euler_a(), m, 3);
    check_on_randoms(anticommutator(Xw, Dm), Scalar(-1) * op_weighted_euler_b(), m, 3);
    check_on_randoms(anticommutator(Xb, Dm), Z, m, 3);
    check_on_randoms(anticommutator(Xw, Dp), Z, m, 3);
  }
}

TEST_CASE("mixed-grade collapse of sandwiched factors") {
  // (x wedge) kills anything of the form x wedge q, and dually; hence an odd
  // power of x after wedge or bullet keeps the output at a single grade.
  for (int m = 2; m <= 4; ++m)
    for (int t = 0; t < 8; ++t) {
      auto p = gtb_test::rand_poly_all_grades(m, 2);
      CHECK(x_wedge(x_wedge(p)).is_zero());
      CHECK(x_bullet(x_bullet(p)).is_zero());
      CHECK(x_mult(x_wedge(p)) == x_bullet(x_wedge(p)));
      CHECK(x_mult(x_bullet(p)) == x_wedge(x_bullet(p)));
    }
}

TEST_CASE("commutator identity suite") {
  for (int m = 2; m <= 3; ++m) {
    auto Dp = op_dirac_plus();
    auto Dm = op_dirac_minus();
    auto Xw = op_x_wedge();
    auto Xb = op_x_bullet();
    auto A = op_weighted_euler_a();
    auto B = op_weighted_euler_b();
    for (int j = 0; j <= 1; ++j) {
      Scalar tj(2 * j + 2);
      auto shiftA = A + tj * OperatorExpr::identity();
      auto shiftB = B + tj * OperatorExpr::identity();
      check_on_randoms(commutator(Dp, compose(op_x_power(2 * j + 1), Xb)),
                       compose(op_x_power(2 * j), compose(Xw, A)), m, 3, 6);
      check_on_randoms(commutator(Dp, compose(op_x_power(2 * j + 1), Xw)),
                       Scalar(-1) * compose(op_x_power(2 * j), compose(Xw, shiftA)), m, 3, 6);
      check_on_randoms(commutator(Dm, compose(op_x_power(2 * j + 1), Xw)),
                       compose(op_x_power(2 * j), compose(Xb, B)), m, 3, 6);
      check_on_randoms(commutator(Dm, compose(op_x_power(2 * j + 1), Xb)),
                       Scalar(-1) * compose(op_x_power(2 * j), compose(Xb, shiftB)), m, 3, 6);
    }
    for (int j = 1; j <= 2; ++j) {
      check_on_randoms(commutator(Dp, op_x_power(2 * j)),
                       Scalar(-2 * j) * compose(op_x_power(2 * j - 2), Xw), m, 3, 6);
      check_on_randoms(commutator(Dm, op_x_power(2 * j)),
                       Scalar(-2 * j) * compose(op_x_power(2 * j - 2), Xb), m, 3, 6);
    }
  }
}

TEST_CASE("operators in the first variables pass a trailing generator through") {
  // For p built from x_1..x_{m-1} and e_1..e_{m-1}, applying an operator in
  // those variables commutes with multiplying by e_m on the right.
  const int m = 4;
  auto em = Multivector::e(m, {m});
  for (int t = 0; t < 10; ++t) {
    std::set<int> low{0, 1, 2, 3};
    auto p = gtb_test::rand_poly(m - 1, 2, low).embed(m);
    CHECK(dirac(p.mul_right(em), m - 1) == dirac(p, m - 1).mul_right(em));
    CHECK(dirac_plus(p.mul_right(em), m - 1) == dirac_plus(p, m - 1).mul_right(em));
    CHECK(dirac_minus(p.mul_right(em), m - 1) == dirac_minus(p, m - 1).mul_right(em));
    CHECK(x_wedge(p.mul_right(em), m - 1) == x_wedge(p, m - 1).mul_right(em));
    CHECK(x_bullet(p.mul_right(em), m - 1) == x_bullet(p, m - 1).mul_right(em));
    CHECK(fermi_plus(p.mul_right(em), m - 1) == fermi_plus(p, m - 1).mul_right(em));
    CHECK(fermi_minus(p.mul_right(em), m - 1) == fermi_minus(p, m - 1).mul_right(em));
  }
}

TEST_CASE("harmonic projection helper produces exact harmonics") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) {
      auto h = gtb_test::rand_harmonic(m, k, {0, 1, 2});
      CHECK(laplacian(h).is_zero());
      // Idempotent on its own output.
      if (!h.is_zero()) CHECK(gtb_test::harmonic_projection(h) == h);
    }
}
