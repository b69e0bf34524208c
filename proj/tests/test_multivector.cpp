// Tests for the Clifford algebra layer: blade encoding, geometric product,
// conjugations, and the grade-split products for vectors.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtb/multivector.hpp"
#include "test_util.hpp"

#include <set>
#include <vector>

using namespace gtb;

namespace {
Multivector E(int dim, std::initializer_list<int> idx) {
  return Multivector::e(dim, idx);
}
}  // namespace

TEST_CASE("blade encoding round-trips") {
  Blade b = blade_from_indices({1, 3, 4}, 5);
  CHECK(b == ((1u << 0) | (1u << 2) | (1u << 3)));
  CHECK(blade_grade(b) == 3);
  CHECK(blade_indices(b) == std::vector<int>{1, 3, 4});
  CHECK(blade_from_indices({}, 4) == 0u);
  CHECK(blade_grade(0) == 0);
  CHECK_THROWS_AS(blade_from_indices({0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(blade_from_indices({4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(blade_from_indices({2, 2}, 3), std::invalid_argument);
}

TEST_CASE("generator squares and anticommutation") {
  const int m = 5;
  for (int i = 1; i <= m; ++i) {
    auto ei = E(m, {i});
    CHECK(ei * ei == Multivector::scalar(m, Scalar(-1)));
    for (int j = i + 1; j <= m; ++j) {
      auto ej = E(m, {j});
      CHECK(ei * ej + ej * ei == Multivector::zero(m));
    }
  }
}

TEST_CASE("frozen product values") {
  // e13 * e3 = e1 e3 e3 = -e1
  CHECK(E(4, {1, 3}) * E(4, {3}) == -E(4, {1}));
  // e2 * e12 = e2 e1 e2 = -e1 e2 e2 = e1
  CHECK(E(4, {2}) * E(4, {1, 2}) == E(4, {1}));
  // e12 * e23 = e1 (e2 e2) e3 = -e13
  CHECK(E(4, {1, 2}) * E(4, {2, 3}) == -E(4, {1, 3}));
  // (e1 + i e2)(e1 - i e2) = -1 - i e12 + i e21 - 1 = -2 - 2i e12
  Multivector wp = E(4, {1}) + Scalar::i() * E(4, {2});
  Multivector wm = E(4, {1}) - Scalar::i() * E(4, {2});
  Multivector expect = Multivector::scalar(4, Scalar(-2)) +
                       Scalar(Rational(0), Rational(-2)) * E(4, {1, 2});
  CHECK(wp * wm == expect);
  // w+ squares to zero: (e1 + i e2)^2 = -1 + i(e12 + e21) + 1 = 0
  CHECK(wp * wp == Multivector::zero(4));
}

TEST_CASE("blade_mul sign table") {
  auto [b1, s1] = blade_mul(blade_from_indices({1, 3}, 4), blade_from_indices({3}, 4));
  CHECK(b1 == blade_from_indices({1}, 4));
  CHECK(s1 == -1);
  auto [b2, s2] = blade_mul(blade_from_indices({2}, 4), blade_from_indices({1, 2}, 4));
  CHECK(b2 == blade_from_indices({1}, 4));
  CHECK(s2 == 1);
  auto [b3, s3] = blade_mul(0u, blade_from_indices({2, 4}, 4));
  CHECK(b3 == blade_from_indices({2, 4}, 4));
  CHECK(s3 == 1);
}

TEST_CASE("pseudoscalar squares by dimension") {
  const int expect[] = {0, -1, -1, +1, +1, -1};
  for (int m = 1; m <= 5; ++m) {
    auto ps = Multivector::pseudoscalar(m);
    CHECK(ps * ps == Multivector::scalar(m, Scalar(expect[m])));
  }
}

TEST_CASE("squared blades follow the grade rule") {
  // e_A^2 = (-1)^{g(g+1)/2} for a blade of grade g.
  const int m = 5;
  for (Blade b = 0; b < (1u << m); ++b) {
    auto eb = Multivector::basis_blade(m, b);
    int g = blade_grade(b);
    int sq = ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1;
    CHECK(eb * eb == Multivector::scalar(m, Scalar(sq)));
  }
}

TEST_CASE("geometric product is associative") {
  auto& rng = gtb_test::rng();
  std::uniform_int_distribution<Blade> pick(0, (1u << 4) - 1);
  for (int trial = 0; trial < 30; ++trial) {
    Multivector a(4), b(4), c(4);
    for (int t = 0; t < 3; ++t) {
      a.add_term(pick(rng), gtb_test::rand_scalar());
      b.add_term(pick(rng), gtb_test::rand_scalar());
      c.add_term(pick(rng), gtb_test::rand_scalar());
    }
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("clifford conjugation reverses and flips generators") {
  const int m = 4;
  // On a grade-g blade the conjugate acts by (-1)^{g(g+1)/2}.
  for (Blade b = 0; b < (1u << m); ++b) {
    int g = blade_grade(b);
    int sg = ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1;
    auto eb = Multivector::basis_blade(m, b);
    CHECK(eb.clifford_conjugate() == Scalar(sg) * eb);
    CHECK(clifford_conj_sign(g) == sg);
  }
  // Anti-automorphism: conj(uv) = conj(v) conj(u).
  auto& rng = gtb_test::rng();
  std::uniform_int_distribution<Blade> pick(0, (1u << m) - 1);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector u(m), v(m);
    for (int t = 0; t < 3; ++t) {
      u.add_term(pick(rng), gtb_test::rand_scalar());
      v.add_term(pick(rng), gtb_test::rand_scalar());
    }
    CHECK((u * v).clifford_conjugate() == v.clifford_conjugate() * u.clifford_conjugate());
  }
}

TEST_CASE("hermitian bar combines blade and coefficient conjugation") {
  Multivector wp = E(3, {1}) + Scalar::i() * E(3, {2});
  Multivector expect = -E(3, {1}) + Scalar::i() * E(3, {2});
  CHECK(wp.hermitian_bar() == expect);
  // bar(e_A) e_A = +1 for every blade, which is what makes the pairing definite.
  for (Blade b = 0; b < (1u << 4); ++b) {
    auto eb = Multivector::basis_blade(4, b);
    CHECK(eb.hermitian_bar() * eb == Multivector::scalar(4, Scalar::one()));
  }
}

TEST_CASE("grade projection and grade queries") {
  Multivector v = Multivector::scalar(3, Scalar(2)) + E(3, {1}) + E(3, {1, 2}) +
                  Scalar(5) * E(3, {1, 2, 3});
  CHECK(v.grades() == std::set<int>{0, 1, 2, 3});
  CHECK(v.grade_projection(0) == Multivector::scalar(3, Scalar(2)));
  CHECK(v.grade_projection(1) == E(3, {1}));
  CHECK(v.grade_projection(2) == E(3, {1, 2}));
  CHECK_THROWS_AS(v.grade_projection(4), std::invalid_argument);
  CHECK(v.scalar_part() == Scalar(2));
  CHECK_FALSE(v.is_grade(1));
  CHECK(E(3, {2, 3}).is_grade(2));
  CHECK(Multivector::zero(3).is_grade(0));
  CHECK(Multivector::zero(3).is_grade(2));
}

TEST_CASE("vector bullet and wedge split the product by grade") {
  // For a vector u and pure-grade v: u*v = u•v + u∧v with
  // u•v = (uv - (-1)^s vu)/2 and u∧v = (uv + (-1)^s vu)/2.
  auto& rng = gtb_test::rng();
  const int m = 4;
  std::uniform_int_distribution<Blade> pick(0, (1u << m) - 1);
  Scalar half = Scalar::of(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Multivector u(m);
    for (int i = 1; i <= m; ++i) u.add_term(blade_from_indices({i}, m), gtb_test::rand_scalar());
    Blade b = pick(rng);
    Multivector v = gtb_test::rand_scalar() * Multivector::basis_blade(m, b);
    int s = blade_grade(b);
    Scalar sg = (s % 2 == 0) ? Scalar::one() : Scalar(-1);
    Multivector bullet_ref = half * (u * v - sg * (v * u));
    Multivector wedge_ref = half * (u * v + sg * (v * u));
    CHECK(bullet_1v(u, v) == bullet_ref);
    CHECK(wedge_1v(u, v) == wedge_ref);
    CHECK(bullet_1v(u, v) + wedge_1v(u, v) == u * v);
    // Grade shift: bullet lowers, wedge raises.
    CHECK(bullet_1v(u, v).is_grade(s - 1 >= 0 ? s - 1 : 0));
    CHECK(wedge_1v(u, v).is_grade(s + 1));
  }
}

TEST_CASE("frozen bullet and wedge values") {
  CHECK(bullet_1v(E(3, {1}), E(3, {1, 2})) == -E(3, {2}));
  CHECK(wedge_1v(E(3, {1}), E(3, {1, 2})) == Multivector::zero(3));
  CHECK(wedge_1v(E(3, {3}), E(3, {1, 2})) == E(3, {1, 2, 3}));
  CHECK(bullet_1v(E(3, {3}), E(3, {1, 2})) == Multivector::zero(3));
  CHECK(bullet_1v(E(3, {1}), E(3, {1})) == Multivector::scalar(3, Scalar(-1)));
  CHECK(wedge_1v(E(3, {1}), E(3, {2})) == E(3, {1, 2}));
}

TEST_CASE("real and imaginary parts") {
  Multivector v = Scalar(Rational(1), Rational(2)) * E(3, {1}) + Scalar(3) * E(3, {2, 3});
  CHECK_FALSE(v.is_real());
  CHECK(v.real_part() == E(3, {1}) + Scalar(3) * E(3, {2, 3}));
  CHECK(v.imag_part() == Scalar(2) * E(3, {1}));
  CHECK(v.real_part().is_real());
  CHECK(v.conj_coefficients() == v.real_part() - Scalar::i() * v.imag_part());
}

TEST_CASE("embedding into a larger algebra") {
  Multivector v = E(3, {1, 3}) + Multivector::scalar(3, Scalar(7));
  Multivector w = v.embed(5);
  CHECK(w.dim() == 5);
  CHECK(w.coeff(blade_from_indices({1, 3}, 5)) == Scalar::one());
  CHECK(w.coeff(0) == Scalar(7));
  CHECK_THROWS_AS(v.embed(2), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(E(3, {1}) + E(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(E(3, {1}) * E(4, {1}), std::invalid_argument);
}
