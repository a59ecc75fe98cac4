#include "doctest.h"

#include "bertrand/model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace bertrand;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned long long seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  ModelParams params(double alpha) {
    return {alpha, uniform(0.05, 1.0), uniform(0.05, 1.0), uniform(0.1, 2.0), uniform(0.1, 2.0)};
  }
  PriceState state() { return {uniform(0.1, 3.0), uniform(0.1, 3.0)}; }
};

void check_matrix(const Matrix2& a, const Matrix2& b, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(a[i][j] - b[i][j]) <= tol * std::max(1.0, std::abs(b[i][j])));
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("beta follows alpha") {
    ModelParams m{0.5, 1, 1, 1, 1};
    CHECK(m.beta() == 1.0);
    m.alpha = 0.25;
    CHECK(m.beta() == doctest::Approx(1.0 / 3.0));
    CHECK(alpha_case(1.0 / 3.0) == AlphaCase::Third);
    CHECK(alpha_case(0.5) == AlphaCase::Half);
    CHECK(alpha_case(0.58) == AlphaCase::General);
    CHECK_THROWS_AS((ModelParams{1.0, 1, 1, 1, 1}.validate()), std::domain_error);
    CHECK_THROWS_AS((ModelParams{0.5, 0, 1, 1, 1}.validate()), std::domain_error);
  }

  TEST_CASE("demand examples") {
    ModelParams m{0.5, 0.1, 0.1, 1, 1};
    QuantityPair q = demand(m, {2.0, 2.0});
    CHECK(q.q1 == doctest::Approx(0.25));
    CHECK(q.q2 == doctest::Approx(0.25));
    q = demand(m, {1.0, 2.0});
    CHECK(q.q1 == doctest::Approx(2.0 / 3.0));
    CHECK(q.q2 == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS(demand(m, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(inverse_demand(m, {-1.0, 1.0}), std::domain_error);
  }

  TEST_CASE("budget identity and inverse demand round trip") {
    Sampler s(1);
    for (int i = 0; i < 100; ++i) {
      ModelParams m = s.params(s.uniform(0.05, 0.95));
      PriceState p = s.state();
      QuantityPair q = demand(m, p);
      CHECK(std::abs(p.p1 * q.q1 + p.p2 * q.q2 - 1.0) <= 1e-12);
      PriceState back = inverse_demand(m, q);
      CHECK(rel(back.p1, p.p1) <= 1e-10);
      CHECK(rel(back.p2, p.p2) <= 1e-10);
      QuantityPair eq{q.q1, q.q1};
      PriceState sym = inverse_demand(m, eq);
      CHECK(rel(sym.p1, 1.0 / (2.0 * q.q1)) <= 1e-12);
      CHECK(rel(sym.p2, sym.p1) <= 1e-15);
    }
  }

  TEST_CASE("profit examples") {
    ModelParams m{0.5, 1.0 / 3.0, 1.0 / 3.0, 1, 1};
    CHECK(profit(m, {1.0, 1.0}, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(profit(m, {1.0 / 3.0, 2.0}, 1) == 0.0);
    CHECK_THROWS_AS(profit(m, {1, 1}, 3), std::invalid_argument);
    for (double alpha : {0.2, 0.5, 0.7}) {
      const double c = 0.3;
      ModelParams s{alpha, c, c, 1, 1};
      double pe = symmetric_equilibrium_price(alpha, c);
      CHECK(rel(profit(s, {pe, pe}, 1), 1.0 / (2.0 + s.beta())) <= 1e-12);
    }
  }

  TEST_CASE("gradient matches finite differences of profit") {
    Sampler s(2);
    for (int i = 0; i < 100; ++i) {
      ModelParams m = s.params(s.uniform(0.05, 0.95));
      PriceState p = s.state();
      for (int firm = 1; firm <= 2; ++firm) {
        double pi = firm == 1 ? p.p1 : p.p2;
        double h = 1e-6 * pi;
        PriceState lo = p, hi = p;
        (firm == 1 ? lo.p1 : lo.p2) -= h;
        (firm == 1 ? hi.p1 : hi.p2) += h;
        double fd = (profit(m, hi, firm) - profit(m, lo, firm)) / (2 * h);
        double g = profit_gradient(m, p, firm);
        CHECK(std::abs(fd - g) <= 1e-6 * std::max(1.0, std::abs(g)));
      }
    }
  }

  TEST_CASE("gradient vanishes at the symmetric equilibria") {
    const double c = 0.17;
    ModelParams half{0.5, c, c, 1, 1};
    CHECK(std::abs(profit_gradient(half, {3 * c, 3 * c}, 1)) < 1e-14);
    ModelParams third{1.0 / 3.0, c, c, 1, 1};
    CHECK(std::abs(profit_gradient(third, {5 * c, 5 * c}, 2)) < 1e-14);
  }

  TEST_CASE("closed-form maps agree with the generic map") {
    Sampler s(3);
    for (int i = 0; i < 100; ++i) {
      for (double alpha : {0.5, 1.0 / 3.0}) {
        ModelParams m = s.params(alpha);
        PriceState p = s.state();
        PriceState g = step_generic(m, p);
        PriceState f = alpha == 0.5 ? step_half(m, p) : step_third(m, p);
        // Relative to the size of the terms being added.
        double scale1 = p.p1 + m.k1 * std::abs(profit_gradient(m, p, 1));
        double scale2 = p.p2 + m.k2 * std::abs(profit_gradient(m, p, 2));
        CHECK(std::abs(g.p1 - f.p1) <= 1e-12 * scale1);
        CHECK(std::abs(g.p2 - f.p2) <= 1e-12 * scale2);
      }
    }
  }

  TEST_CASE("symmetric fixed points") {
    Sampler s(4);
    for (int i = 0; i < 100; ++i) {
      double alpha = s.uniform(0.05, 0.95), c = s.uniform(0.01, 2.0);
      ModelParams m{alpha, c, c, s.uniform(0.1, 2), s.uniform(0.1, 2)};
      double pe = symmetric_equilibrium_price(alpha, c);
      auto next = step(m, {pe, pe});
      REQUIRE(next);
      double err = std::hypot(next->p1 - pe, next->p2 - pe) / std::hypot(pe, pe);
      CHECK(err <= 1e-12);
    }
    ModelParams half{0.5, 0.2, 0.2, 1, 1};
    auto e = step(half, {0.6, 0.6});
    CHECK(e->p1 == doctest::Approx(0.6).epsilon(1e-14));
    ModelParams third{1.0 / 3.0, 0.2, 0.2, 1, 1};
    e = step(third, {1.0, 1.0});
    CHECK(e->p1 == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("escape signal") {
    ModelParams m{0.5, 0.2, 0.2, 1000, 1000};
    CHECK_FALSE(step(m, {5.0, 5.0}).has_value());
    CHECK_FALSE(step(m, {-1.0, 1.0}).has_value());
  }

  TEST_CASE("analytic Jacobians agree with each other and with differences") {
    Sampler s(5);
    for (int i = 0; i < 100; ++i) {
      double alpha = i % 3 == 0 ? 0.5 : (i % 3 == 1 ? 1.0 / 3.0 : s.uniform(0.05, 0.95));
      ModelParams m = s.params(alpha);
      PriceState p = s.state();
      Matrix2 J = jacobian(m, p);
      check_matrix(J, jacobian_general(m, p), 1e-9);
      check_matrix(J, jacobian_numeric(m, p), 1e-6);
    }
  }

  TEST_CASE("displayed Jacobians at the symmetric equilibria") {
    Sampler s(6);
    for (int i = 0; i < 20; ++i) {
      double c = s.uniform(0.05, 1), k1 = s.uniform(0.1, 2), k2 = s.uniform(0.1, 2);
      double c2 = c * c;
      // Off-diagonal entries follow from the general alpha = 1/2 Jacobian,
      // k1 (2c - p1 + p2) / (p1 + p2)^3 at p1 = p2 = 3c.
      Matrix2 half = jacobian({0.5, c, c, k1, k2}, {3 * c, 3 * c});
      check_matrix(half,
                   {{{(27 * c2 - k1) / (27 * c2), k1 / (108 * c2)}, {k2 / (108 * c2), (27 * c2 - k2) / (27 * c2)}}},
                   1e-12);
      const double tr = half[0][0] + half[1][1];
      const double det = half[0][0] * half[1][1] - half[0][1] * half[1][0];
      CHECK(std::abs((1 - tr + det) - 5 * k1 * k2 / (3888 * c2 * c2)) <= 1e-12 * std::max(1.0, 5 * k1 * k2 / (3888 * c2 * c2)));
      Matrix2 third = jacobian({1.0 / 3.0, c, c, k1, k2}, {5 * c, 5 * c});
      check_matrix(third,
                   {{{(500 * c2 - 3 * k1) / (500 * c2), k1 / (1000 * c2)},
                     {k2 / (1000 * c2), (500 * c2 - 3 * k2) / (500 * c2)}}},
                   1e-12);
    }
  }

  TEST_CASE("symmetric statics") {
    auto s = symmetric_statics(0.5, 0.7);
    CHECK(s.price == doctest::Approx(2.1));
    CHECK(s.profit == doctest::Approx(1.0 / 3.0));
    CHECK(s.consumer_surplus_each == doctest::Approx(2 * std::log(2.0)));
    CHECK(s.welfare == doctest::Approx(4 * std::log(2.0) - 4.0 / 3.0 + 2.0));
    CHECK(s.welfare == doctest::Approx(3.4393).epsilon(1e-4));
    CHECK(symmetric_statics(1.0 / 3.0, 0.4).price == doctest::Approx(2.0));
    CHECK(symmetric_statics(0.3, 0.2).price == doctest::Approx(0.2 * 17.0 / 3.0));
    CHECK_THROWS_AS(symmetric_statics(1.2, 1.0), std::domain_error);
    CHECK_THROWS_AS(symmetric_statics(0.5, 0.0), std::domain_error);
    // profit = 1 + 1/(alpha - 2)
    CHECK(rel(symmetric_statics(0.37, 1).profit, 1 + 1 / (0.37 - 2)) < 1e-14);
  }
}
