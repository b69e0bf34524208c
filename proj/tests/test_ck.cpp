// Tests for the extension of initial data in the first m-1 variables to
// monogenic / two-sided-kernel polynomials in all m variables.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtb/ck.hpp"
#include "gtb/fischer.hpp"
#include "test_util.hpp"

#include <set>

using namespace gtb;
using gtb_test::E;
using gtb_test::X;

namespace {

// Random element of the plus-kernel in the first m-1 variables, grade s,
// degree k, embedded in dimension m.
MVPolynomial rand_ker_plus(int m, int k, int s) {
  auto seed = gtb_test::rand_poly(m - 1, k, {s}).embed(m);
  return proj_plus(seed, m - 1);
}

MVPolynomial rand_ker_minus(int m, int k, int s) {
  auto seed = gtb_test::rand_poly(m - 1, k, {s}).embed(m);
  return proj_minus(seed, m - 1);
}

}  // namespace

TEST_CASE("generic extension frozen example") {
  // x1 in the plane extends to x1 - x2 e12.
  auto p0 = X(2, 1);
  auto ext = ck_extend_generic(p0);
  CHECK(ext == X(2, 1) - X(2, 2) * E(2, {1, 2}));
  CHECK(dirac(ext).is_zero());
  // A constant extends to itself.
  CHECK(ck_extend_generic(E(3, {1, 2})) == E(3, {1, 2}));
}

TEST_CASE("generic extension yields monogenic polynomials") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int t = 0; t < 6; ++t) {
        auto p0 = gtb_test::rand_poly_all_grades(m - 1, k).embed(m);
        auto ext = ck_extend_generic(p0);
        CHECK(dirac(ext).is_zero());
        CHECK(ext.restrict_last() == p0);
        if (!ext.is_zero()) {
          int kk = -1;
          CHECK(ext.is_homogeneous(&kk));
          CHECK(kk == k);
        }
      }
}

TEST_CASE("generic extension inverts restriction on monogenics") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int t = 0; t < 4; ++t) {
        auto mono = ck_extend_generic(gtb_test::rand_poly_all_grades(m - 1, k).embed(m));
        CHECK(ck_extend_generic(mono.restrict_last()) == mono);
      }
}

TEST_CASE("generic extension rejects bad input") {
  CHECK_THROWS_AS(ck_extend_generic(X(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(ck_extend_generic(X(3, 1) + X(3, 1) * X(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ck_extend_generic(X(1, 1)), std::invalid_argument);
}

TEST_CASE("initial datum validation") {
  const int m = 3, k = 2, s = 1;
  auto u0 = rand_ker_plus(m, k, s);
  auto v0 = rand_ker_minus(m, k, s - 1);
  REQUIRE_FALSE(u0.is_zero());
  REQUIRE_FALSE(v0.is_zero());
  CHECK_NOTHROW(InitialDatum(m, k, s, u0, v0).validate());
  CHECK(is_in_Iks(u0, v0, s, k));
  // Zero components are fine.
  CHECK_NOTHROW(InitialDatum(m, k, s, u0, MVPolynomial::zero(m)).validate());
  // Wrong grade, wrong degree, dependence on the last variable, use of the
  // last generator, or failing the kernel condition must all be rejected.
  CHECK_THROWS_AS(InitialDatum(m, k, s, v0, v0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(InitialDatum(m, k + 1, s, u0, v0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(InitialDatum(m, k, s, u0 * X(m, m) * X(m, m), v0).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(InitialDatum(m, k, s, u0.mul_right(Multivector::e(m, {m})), v0).validate(),
                  std::invalid_argument);
  auto not_in_kernel = gtb_test::rand_poly(m - 1, k, {s}).embed(m);
  if (!dirac_plus(not_in_kernel, m - 1).is_zero())
    CHECK_THROWS_AS(InitialDatum(m, k, s, not_in_kernel, v0).validate(), std::invalid_argument);
}

TEST_CASE("structured extension agrees with the generic one") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int s = 1; s <= m - 1; ++s)
        for (int t = 0; t < 4; ++t) {
          auto u0 = rand_ker_plus(m, k, s);
          auto v0 = rand_ker_minus(m, k, s - 1);
          InitialDatum d(m, k, s, u0, v0);
          auto h = ck_extend_hodge(d);
          CHECK(h == ck_extend_generic(d.combined()));
          CHECK(dirac_plus(h).is_zero());
          CHECK(dirac_minus(h).is_zero());
          if (!h.is_zero()) CHECK(h.is_grade(s));
        }
}

TEST_CASE("structured extension at the grade boundaries") {
  // At grade 0 the plus-kernel in the initial variables is just the
  // constants: on scalars the grade-raising half of the Dirac operator is the
  // whole gradient.  So the only nontrivial datum has degree 0.
  for (int m = 3; m <= 4; ++m) {
    auto u0 = gtb_test::C(m, 7);
    InitialDatum d(m, 0, 0, u0, MVPolynomial::zero(m));
    CHECK(ck_extend_hodge(d) == u0);
    // A nonconstant scalar datum is rejected even when it is harmonic.
    auto h = gtb_test::rand_harmonic(m - 1, 2, {0}).embed(m);
    REQUIRE_FALSE(h.is_zero());
    CHECK_THROWS_AS(InitialDatum(m, 2, 0, h, MVPolynomial::zero(m)).validate(),
                    std::invalid_argument);
  }
  // At top grade the only datum is a constant multiple of the initial
  // pseudoscalar in the second slot; its extension is the full pseudoscalar.
  for (int m = 3; m <= 4; ++m) {
    std::vector<int> low;
    for (int i = 1; i < m; ++i) low.push_back(i);
    auto ps_low = MVPolynomial::constant(
        Multivector::basis_blade(m, blade_from_indices(low, m)));
    InitialDatum d(m, 0, m, MVPolynomial::zero(m), ps_low);
    auto h = ck_extend_hodge(d);
    CHECK(h == MVPolynomial::constant(Multivector::pseudoscalar(m)));
  }
}

TEST_CASE("restriction recovers the initial datum") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int s = 1; s <= m - 1; ++s) {
        auto u0 = rand_ker_plus(m, k, s);
        auto v0 = rand_ker_minus(m, k, s - 1);
        InitialDatum d(m, k, s, u0, v0);
        auto h = ck_extend_hodge(d);
        if (h.is_zero()) continue;
        auto back = restrict_to_initial(h, s);
        CHECK(back.u0 == u0);
        CHECK(back.v0 == v0);
        CHECK(back.m == m);
        CHECK(back.k == k);
        CHECK(back.s == s);
        // And extending again is the identity.
        CHECK(ck_extend_hodge(back) == h);
      }
}

TEST_CASE("projections build kernel elements and complements") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 3; ++k)
      for (int s = 0; s <= m - 1; ++s) {
        auto p = gtb_test::rand_poly(m - 1, k, {s}).embed(m);
        auto pp = proj_plus(p, m - 1);
        auto q = proj_plus_complement(p, m - 1);
        CHECK(dirac_plus(pp, m - 1).is_zero());
        CHECK(dirac_plus(q, m - 1).is_zero());
        CHECK(pp + x_bullet(q, m - 1) == p);
        auto pm = proj_minus(p, m - 1);
        auto r = proj_minus_complement(p, m - 1);
        CHECK(dirac_minus(pm, m - 1).is_zero());
        CHECK(dirac_minus(r, m - 1).is_zero());
        CHECK(pm + x_wedge(r, m - 1) == p);
      }
}
