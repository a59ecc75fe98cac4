#include "doctest.h"

#include "bertrand/equilibrium.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace bertrand;
using exact::BigRational;
using exact::RationalPoly;
using exact::UPoly;

TEST_SUITE("equilibrium") {
  TEST_CASE("symmetric examples") {
    ModelParams half{0.5, 1.0 / 3.0, 1.0 / 3.0, 1, 1};
    auto r = solve_equilibrium(half);
    CHECK(r.state.p1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.state.p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.certified_unique);
    CHECK(r.branch == "T12");

    ModelParams third{1.0 / 3.0, 0.2, 0.2, 1, 1};
    r = solve_equilibrium(third);
    CHECK(r.state.p1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.state.p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.certified_unique);
    CHECK(r.branch == "T32");
  }

  TEST_CASE("asymmetric cubic example") {
    const BigRational c1(1), c2(1, 4);
    auto e = exact_equilibria(ExactAlpha::Half, c1, c2);
    UPoly expected({BigRational(3, 4), BigRational(7, 2), BigRational(-4), BigRational(1)});
    CHECK(e.univariate == expected);
    REQUIRE(e.admissible.size() == 1);
    PriceState p = equilibrium_prices(e, 0);
    CHECK(std::abs(expected.evaluate(p.p1)) < 1e-12);
    CHECK(p.p2 > 0);
    CHECK(p.p1 > 2.0);
    ModelParams m{0.5, 1.0, 0.25, 1, 1};
    CHECK(solve_equilibrium(m).residual < 1e-12);
  }

  TEST_CASE("sign filter rejects a positive root") {
    auto e = exact_equilibria(ExactAlpha::Half, BigRational(1), BigRational(1));
    CHECK(e.raw_positive_roots == 2);
    CHECK(e.admissible.size() == 1);
    CHECK(count_positive_equilibria(ExactAlpha::Half, BigRational(1), BigRational(1)) == 1);
    CHECK(e.admissible[0].approximate() == doctest::Approx(3.0));
  }

  TEST_CASE("back substitution") {
    UPoly v = back_substitution(ExactAlpha::Half, BigRational(2));
    CHECK(v.evaluate(6.0) == doctest::Approx(6.0));
    UPoly y = back_substitution(ExactAlpha::Third, BigRational(1, 5));
    CHECK(y.evaluate(1.0) == doctest::Approx(1.0));
  }

  TEST_CASE("back-substituted equations reduce to the univariate member") {
    // Second equation with the second coordinate replaced by w / d, cleared of d.
    struct Case {
      ExactAlpha a;
      const char* w;
      const char* cleared;
    };
    const Case cases[] = {
        {ExactAlpha::Half, "p1^2 - 2*c1*p1", "-p1*w^2 + (p1^2*c1^2 + 2*p1*w*c1)*c2"},
        {ExactAlpha::Third, "x^3 - 3*c1*x", "-w^3*x + (16*c1^3*x^2 + 12*c1^2*x*w)*c2"},
    };
    for (const auto& cs : cases) {
      const auto& t = equilibrium_set(cs.a);
      RationalPoly reduced = RationalPoly::parse(cs.cleared).compose("w", RationalPoly::parse(cs.w));
      CHECK_NOTHROW(exact::exact_divide(reduced, t[0]));
      CHECK(triangular_sets(cs.a, false).size() == 2);
      CHECK(triangular_sets(cs.a, true).size() == (cs.a == ExactAlpha::Half ? 3u : 4u));
    }
  }

  TEST_CASE("residuals of random equilibria") {
    std::mt19937_64 rng(0x5EED);
    std::uniform_real_distribution<double> cost(0.01, 2.0);
    for (double alpha : {0.5, 1.0 / 3.0}) {
      int uncertified = 0;
      for (int i = 0; i < 1000; ++i) {
        ModelParams m{alpha, cost(rng), cost(rng), 1, 1};
        auto r = solve_equilibrium(m);
        CHECK(r.residual <= 1e-10);
        CHECK(r.state.p1 > m.c1);
        CHECK(r.state.p2 > m.c2);
        if (!r.certified_unique) ++uncertified;
      }
      CHECK(uncertified == 0);
    }
  }

  TEST_CASE("exact solver agrees with the closed form on the diagonal") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> cost(0.01, 2.0);
    for (int i = 0; i < 100; ++i) {
      const double c = cost(rng);
      for (double alpha : {0.5, 1.0 / 3.0}) {
        auto r = solve_equilibrium({alpha, c, c, 1, 1});
        const double pe = symmetric_equilibrium_price(alpha, c);
        CHECK(std::abs(r.state.p1 - pe) <= 1e-12 * pe);
        CHECK(std::abs(r.state.p2 - pe) <= 1e-12 * pe);
      }
    }
  }

  TEST_CASE("general alpha") {
    auto r = solve_equilibrium({0.58, 0.2, 0.2, 1, 1});
    CHECK(r.branch == "symmetric-closed-form");
    CHECK(r.residual < 1e-14);
    r = solve_equilibrium({0.7, 0.3, 0.5, 1, 1});
    CHECK(r.branch == "damped-newton");
    CHECK(r.residual < 1e-12);
    CHECK(r.state.p1 < r.state.p2);
    CHECK_THROWS_AS(exact_alpha(0.7), std::invalid_argument);
  }

  TEST_CASE("triangular consistency") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> cost(0.05, 1.5);
    for (int i = 0; i < 50; ++i) {
      const double c1 = cost(rng), c2 = cost(rng);
      CHECK(verify_triangular_consistency(ExactAlpha::Half, {0.5, c1, c2, 1, 1}));
      CHECK(verify_triangular_consistency(ExactAlpha::Third, {1.0 / 3.0, c1, c2, 1, 1}));
    }
    CHECK(verify_triangular_consistency(ExactAlpha::Half, {0.5, 0.3, 0.3, 1, 1}));
    CHECK(verify_triangular_consistency(ExactAlpha::Third, {1.0 / 3.0, 0.3, 0.3, 1, 1}));
  }
}
