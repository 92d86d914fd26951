#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "higgsdt/series.hpp"

using namespace higgsdt;

namespace {

LaurentPoly mono(long c, int e = 0) {
  return LaurentPoly::monomial(rational(c), e);
}

PochFraction frac(long c, int e = 0) { return PochFraction(mono(c, e)); }

PochFraction random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-2, 2), num(-3, 3), densize(0, 1);
  LaurentPoly p = mono(num(rng) * 2 + 1, exp(rng));  // odd => nonzero
  PochMultiset den;
  if (densize(rng)) den[1] = 1;
  return PochFraction(std::move(p), std::move(den));
}

// constant term 1, a few random higher grades
BigradedSeries random_unital(std::mt19937& rng, Bigrade box, int grades) {
  BigradedSeries s = BigradedSeries::one(box);
  std::uniform_int_distribution<int> rr(1, box.r), dd(0, box.d);
  for (int i = 0; i < grades; ++i)
    s.set_coeff({rr(rng), dd(rng)}, random_coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("truncated multiplication") {
  const Bigrade box{2, 2};
  BigradedSeries a = BigradedSeries::one(box);
  a.set_coeff({1, 1}, frac(1));  // 1 + z t
  const BigradedSeries sq = a * a;
  CHECK(sq.coeff({0, 0}) == frac(1));
  CHECK(sq.coeff({1, 1}) == frac(2));
  CHECK(sq.coeff({2, 2}) == frac(1));
  CHECK(a * BigradedSeries::one(box) == a);

  BigradedSeries b = BigradedSeries::one({2, 3});
  b.set_coeff({1, 1}, frac(1));
  b.set_coeff({1, 2}, frac(1));  // (1+zt)(1+zt^2) needs the larger box
  BigradedSeries c = BigradedSeries::one({2, 3});
  c.set_coeff({1, 1}, frac(1));
  BigradedSeries d = BigradedSeries::one({2, 3});
  d.set_coeff({1, 2}, frac(1));
  CHECK((c * d).coeff({2, 3}) == frac(1));

  CHECK_THROWS_AS(a * b, BoxMismatch);
}

TEST_CASE("classical log") {
  const Bigrade box{2, 2};
  BigradedSeries a = BigradedSeries::one(box);
  a.set_coeff({1, 1}, frac(1));
  const BigradedSeries lg = log_series(a);
  CHECK(lg.coeff({1, 1}) == frac(1));
  CHECK(lg.coeff({2, 2}) ==
        PochFraction(LaurentPoly::monomial(rational(-1, 2), 0)));
  CHECK(lg.coeff({0, 0}).is_zero());

  BigradedSeries bad(box);
  CHECK_THROWS_AS(log_series(bad), BadConstantTerm);
  BigradedSeries bad2 = BigradedSeries::one(box);
  bad2.set_coeff({0, 0}, frac(2));
  CHECK_THROWS_AS(log_series(bad2), BadConstantTerm);
}

TEST_CASE("classical log and exp invert each other") {
  std::mt19937 rng(31);
  for (int i = 0; i < 25; ++i) {
    const Bigrade box{3, 3};
    BigradedSeries f(box);
    std::uniform_int_distribution<int> rr(1, 3), dd(0, 3);
    for (int k = 0; k < 3; ++k) f.set_coeff({rr(rng), dd(rng)}, random_coeff(rng));
    CHECK(log_series(exp_series(f)) == f);
  }
  SUBCASE("log turns products into sums") {
    for (int i = 0; i < 10; ++i) {
      const BigradedSeries a = random_unital(rng, {3, 3}, 3);
      const BigradedSeries b = random_unital(rng, {3, 3}, 2);
      CHECK(log_series(a * b) == log_series(a) + log_series(b));
    }
  }
}

TEST_CASE("series adams operation") {
  const Bigrade box{2, 2};
  BigradedSeries a = BigradedSeries::one(box);
  a.set_coeff({1, 1}, PochFraction(mono(1, 1)));  // 1 + v z t
  const BigradedSeries psi2 = a.adams(2);
  CHECK(psi2.coeff({2, 2}) == PochFraction(mono(1, 2)));
  CHECK(psi2.coeff({1, 1}).is_zero());
  CHECK(a.adams(1) == a);

  BigradedSeries b = BigradedSeries::one(box);
  b.set_coeff({1, 1}, PochFraction(mono(1, 0), PochMultiset{{1, 1}}));
  CHECK(b.adams(2).coeff({2, 2}).den() == PochMultiset{{2, 1}});

  std::mt19937 rng(37);
  for (int i = 0; i < 20; ++i) {
    const BigradedSeries s = random_unital(rng, {4, 4}, 3);
    const BigradedSeries t = random_unital(rng, {4, 4}, 2);
    CHECK(s.adams(2).adams(2) == s.adams(4));
    CHECK((s * t).adams(3) == s.adams(3) * t.adams(3));
  }
}

TEST_CASE("plethystic log of the geometric series is a single grade") {
  // sum_n z^n lives on grades (n, 0); Log must collapse it to z
  const Bigrade box{5, 0};
  BigradedSeries a(box);
  for (int n = 0; n <= 5; ++n) a.set_coeff({n, 0}, frac(1));
  const BigradedSeries lg = plethystic_log(a);
  CHECK(lg.coeff({1, 0}) == frac(1));
  for (int n = 2; n <= 5; ++n) CHECK(lg.coeff({n, 0}).is_zero());
  CHECK(lg.coeff({0, 0}).is_zero());
  // and Exp(z) recovers the geometric series
  BigradedSeries z(box);
  z.set_coeff({1, 0}, frac(1));
  CHECK(plethystic_exp(z) == a);
}

TEST_CASE("plethystic log second coefficient") {
  // Log(1 + v z): the z^2 coefficient is -(v^2 + psi_2(v))/2 = -v^2
  const Bigrade box{3, 0};
  BigradedSeries a = BigradedSeries::one(box);
  a.set_coeff({1, 0}, PochFraction(mono(1, 1)));
  const BigradedSeries lg = plethystic_log(a);
  CHECK(lg.coeff({1, 0}) == PochFraction(mono(1, 1)));
  CHECK(lg.coeff({2, 0}) == PochFraction(mono(-1, 2)));
}

TEST_CASE("plethystic exp and log invert each other") {
  std::mt19937 rng(41);
  for (int i = 0; i < 30; ++i) {
    const BigradedSeries a = random_unital(rng, {3, 3}, 3);
    CHECK(plethystic_exp(plethystic_log(a)) == a);
  }
  for (int i = 0; i < 30; ++i) {
    BigradedSeries f({3, 3});
    std::uniform_int_distribution<int> rr(1, 3), dd(0, 3);
    for (int k = 0; k < 3; ++k)
      f.set_coeff({rr(rng), dd(rng)}, random_coeff(rng));
    CHECK(plethystic_log(plethystic_exp(f)) == f);
  }
  SUBCASE("log of a product is the sum of logs") {
    for (int i = 0; i < 20; ++i) {
      const BigradedSeries a = random_unital(rng, {3, 3}, 2);
      const BigradedSeries b = random_unital(rng, {3, 3}, 2);
      CHECK(plethystic_log(a * b) ==
            plethystic_log(a) + plethystic_log(b));
    }
  }
  SUBCASE("exp of a sum is the product of exps") {
    for (int i = 0; i < 10; ++i) {
      BigradedSeries f({2, 2}), g({2, 2});
      std::uniform_int_distribution<int> rr(1, 2), dd(0, 2);
      f.set_coeff({rr(rng), dd(rng)}, random_coeff(rng));
      g.set_coeff({rr(rng), dd(rng)}, random_coeff(rng));
      CHECK(plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g));
    }
  }
}

TEST_CASE("plethystic log sees only grades below the target") {
  std::mt19937 rng(43);
  for (int i = 0; i < 10; ++i) {
    const Bigrade small{3, 3};
    const BigradedSeries a = random_unital(rng, small, 4);
    // same coefficients on a larger box, plus junk outside the small box
    BigradedSeries big = BigradedSeries::one({4, 5});
    for (const auto& [g, c] : a.coeffs())
      if (!grade_is_zero(g)) big.set_coeff(g, c);
    big.set_coeff({4, 1}, random_coeff(rng));
    big.set_coeff({2, 5}, random_coeff(rng));
    big.set_coeff({1, 4}, random_coeff(rng));
    const BigradedSeries lg_small = plethystic_log(a);
    const BigradedSeries lg_big = plethystic_log(big);
    for (int r = 0; r <= small.r; ++r)
      for (int d = 0; d <= small.d; ++d)
        CHECK(lg_small.coeff({r, d}) == lg_big.coeff({r, d}));
  }
}

TEST_CASE("ray restriction") {
  BigradedSeries f({3, 4});
  f.set_coeff({1, 1}, frac(2));
  f.set_coeff({2, 2}, frac(3));
  f.set_coeff({2, 3}, frac(5));
  const BigradedSeries unit_ray = ray_restrict(f, rational(1));
  CHECK(unit_ray.coeff({1, 1}) == frac(2));
  CHECK(unit_ray.coeff({2, 2}) == frac(3));
  CHECK(unit_ray.coeff({2, 3}).is_zero());
  const BigradedSeries half_ray = ray_restrict(f, rational(3, 2));
  CHECK(half_ray.coeff({2, 3}) == frac(5));
  CHECK(half_ray.coeff({1, 1}).is_zero());
  CHECK(ray_restrict(f, rational(7)).is_zero());
  // the constant term never survives
  BigradedSeries g = BigradedSeries::one({2, 2});
  CHECK(ray_restrict(g, rational(0)).coeff({0, 0}).is_zero());
}

TEST_CASE("slope factors") {
  SUBCASE("single-ray series is its own factor") {
    std::mt19937 rng(47);
    BigradedSeries a = BigradedSeries::one({2, 2});
    a.set_coeff({1, 1}, random_coeff(rng));
    CHECK(slope_factor(a, rational(1)) == a);
    CHECK(slope_factor(a, rational(2)) == BigradedSeries::one({2, 2}));
  }
  SUBCASE("factors multiply back to the series") {
    std::mt19937 rng(53);
    for (int i = 0; i < 10; ++i) {
      const BigradedSeries a = random_unital(rng, {3, 3}, 4);
      BigradedSeries product = BigradedSeries::one(a.box());
      for (const Rational& theta : box_slopes(a.box()))
        product = product * slope_factor(a, theta);
      CHECK(product == a);
    }
  }
}

TEST_CASE("dimension-vector graded series") {
  const DimVector bound = DimVector::delta(1, 2) + DimVector::delta(2, 1);
  SUBCASE("multiplication adds grades pointwise") {
    DimGradedSeries a = DimGradedSeries::one(bound);
    a.set_coeff(DimVector::delta(1), frac(1));
    const DimGradedSeries sq = a * a;
    CHECK(sq.coeff(DimVector::delta(1, 2)) == frac(1));
    CHECK(sq.coeff(DimVector::delta(1)) == frac(2));
    // delta_1^3 exceeds the pointwise bound, so it is truncated away
    CHECK((sq * a).coeff(DimVector::delta(1, 2)) == frac(3));
  }
  SUBCASE("plethystic roundtrip") {
    std::mt19937 rng(59);
    for (int i = 0; i < 15; ++i) {
      DimGradedSeries a = DimGradedSeries::one(bound);
      a.set_coeff(DimVector::delta(1), random_coeff(rng));
      a.set_coeff(DimVector::delta(2), random_coeff(rng));
      a.set_coeff(DimVector::delta(1) + DimVector::delta(2), random_coeff(rng));
      CHECK(plethystic_exp(plethystic_log(a)) == a);
    }
  }
  SUBCASE("adams doubles multiplicities") {
    DimGradedSeries f(bound);
    f.set_coeff(DimVector::delta(1), PochFraction(mono(1, 1)));
    const DimGradedSeries psi2 = f.adams(2);
    CHECK(psi2.coeff(DimVector::delta(1, 2)) == PochFraction(mono(1, 2)));
    CHECK(psi2.coeff(DimVector::delta(1)).is_zero());
  }
}
