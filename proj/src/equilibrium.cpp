#include "bertrand/equilibrium.hpp"

#include "bertrand/exact/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bertrand {

using exact::BigRational;
using exact::RationalPoly;
using exact::RealRoot;
using exact::TriangularSet;
using exact::UPoly;

namespace {

RationalPoly P(const char* text) { return RationalPoly::parse(text); }

const std::vector<TriangularSet>& sets_half_general() {
  static const std::vector<TriangularSet> sets{
      TriangularSet("T11", {P("p1"), P("p2")}, {"p1", "p2"}),
      TriangularSet("T12", {P("p1^3 - 4*c1*p1^2 + (4*c1^2 - 2*c1*c2)*p1 + 3*c1^2*c2"), P("c1*p2 - p1^2 + 2*c1*p1")},
                    {"p1", "p2"}),
  };
  return sets;
}

const std::vector<TriangularSet>& sets_half_symmetric() {
  static const std::vector<TriangularSet> sets{
      TriangularSet("T21", {P("p1"), P("p2")}, {"p1", "p2"}),
      TriangularSet("T22", {P("p1 - 3*c"), P("p2 - 3*c")}, {"p1", "p2"}),
      TriangularSet("T23", {P("p1^2 - c*p1 - c^2"), P("p2 + p1 - c")}, {"p1", "p2"}),
  };
  return sets;
}

const std::vector<TriangularSet>& sets_third_general() {
  static const std::vector<TriangularSet> sets{
      TriangularSet("T31", {P("x"), P("y")}, {"x", "y"}),
      TriangularSet("T32",
                    {P("x^8 - 9*c1*x^6 + 27*c1^2*x^4 + (-27*c1^3 - 12*c1^2*c2)*x^2 + 20*c1^3*c2"),
                     P("2*c1*y - x^3 + 3*c1*x")},
                    {"x", "y"}),
  };
  return sets;
}

const std::vector<TriangularSet>& sets_third_symmetric() {
  static const std::vector<TriangularSet> sets{
      TriangularSet("T41", {P("x"), P("y")}, {"x", "y"}),
      TriangularSet("T42", {P("x^2 - c"), P("y + x")}, {"x", "y"}),
      TriangularSet("T43", {P("x^2 - 5*c"), P("y - x")}, {"x", "y"}),
      TriangularSet("T44", {P("x^4 - 3*c*x^2 + 4*c^2"), P("2*c*y - x^3 + 3*c*x")}, {"x", "y"}),
  };
  return sets;
}

double evaluate(const RationalPoly& p, const std::map<std::string, double>& at, double* scale) {
  double sum = 0.0, mag = 0.0;
  const auto& vars = p.variables();
  for (const auto& [e, c] : p.terms()) {
    double t = c.get_d();
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i] > 0) t *= std::pow(at.at(vars[i]), static_cast<int>(e[i]));
    sum += t;
    mag += std::abs(t);
  }
  if (scale) *scale = mag;
  return sum;
}

// Newton polish of a root of f bracketed by [lo, hi].
double polish(const UPoly& f, double lo, double hi) {
  const UPoly df = f.derivative();
  double x = 0.5 * (lo + hi);
  if (lo == hi) return x;
  for (int i = 0; i < 30; ++i) {
    const double d = df.evaluate(x);
    if (d == 0.0) break;
    const double next = x - f.evaluate(x) / d;
    if (!(next >= lo && next <= hi)) break;
    if (next == x) break;
    x = next;
  }
  return x;
}

double step_residual(const ModelParams& m, PriceState p) {
  auto next = step(m, p);
  if (!next) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(next->p1 - p.p1), std::abs(next->p2 - p.p2));
}

// Positive zeros (u, v) of a two-member triangular set whose second member is
// linear in v with constant leading coefficient, at parameter values `at`.
std::vector<std::pair<double, double>> positive_zeros(const TriangularSet& t, const exact::Assignment& at) {
  const std::string& u = t.solved_vars()[0];
  const std::string& v = t.solved_vars()[1];
  const RationalPoly first = t[0].substitute(at);
  const UPoly f = UPoly::from_poly(first.with_variables({u}));
  const auto coeffs = t[1].substitute(at).coefficients(v);
  const RationalPoly lead = coeffs.at(1);
  if (!lead.is_constant()) throw std::logic_error("second member must have constant leading coefficient");
  const UPoly g = UPoly::from_poly((coeffs[0] * (BigRational(-1) / lead.constant_value())).with_variables({u}));
  std::vector<std::pair<double, double>> out;
  if (f.degree() < 1) return out;
  for (const auto& iv : exact::isolate_positive_roots(f)) {
    const double uu = polish(f, iv.lo.get_d(), iv.hi.get_d());
    const double vv = g.evaluate(uu);
    if (vv > 0.0) out.emplace_back(uu, vv);
  }
  return out;
}

}  // namespace

ExactAlpha exact_alpha(double alpha) {
  switch (alpha_case(alpha)) {
    case AlphaCase::Half: return ExactAlpha::Half;
    case AlphaCase::Third: return ExactAlpha::Third;
    default: throw std::invalid_argument("exact analysis supports alpha = 1/2 and alpha = 1/3 only");
  }
}

double alpha_value(ExactAlpha a) { return a == ExactAlpha::Half ? 0.5 : 1.0 / 3.0; }

std::string alpha_label(ExactAlpha a) { return a == ExactAlpha::Half ? "1/2" : "1/3"; }

std::vector<TriangularSet> triangular_sets(ExactAlpha a, bool symmetric) {
  if (a == ExactAlpha::Half) return symmetric ? sets_half_symmetric() : sets_half_general();
  return symmetric ? sets_third_symmetric() : sets_third_general();
}

const TriangularSet& equilibrium_set(ExactAlpha a) {
  return a == ExactAlpha::Half ? sets_half_general()[1] : sets_third_general()[1];
}

std::vector<RationalPoly> equilibrium_equations(ExactAlpha a) {
  if (a == ExactAlpha::Half)
    return {P("-p2*p1^2 + (p2^2 + 2*p2*p1)*c1"), P("-p1*p2^2 + (p1^2 + 2*p1*p2)*c2")};
  return {P("-x^3*y + (2*y^2 + 3*x*y)*c1"), P("-y^3*x + (2*x^2 + 3*x*y)*c2")};
}

UPoly back_substitution(ExactAlpha a, const BigRational& c1) {
  const TriangularSet& t = equilibrium_set(a);
  const std::string& u = t.solved_vars()[0];
  const auto coeffs = t[1].substitute({{"c1", c1}}).coefficients(t.solved_vars()[1]);
  const BigRational lead = coeffs.at(1).constant_value();
  return UPoly::from_poly((coeffs[0] * (BigRational(-1) / lead)).with_variables({u}));
}

ExactEquilibria exact_equilibria(ExactAlpha a, const BigRational& c1, const BigRational& c2) {
  if (c1 <= 0 || c2 <= 0) throw std::domain_error("marginal costs must be positive");
  const TriangularSet& t = equilibrium_set(a);
  ExactEquilibria out{a, c1, c2, {}, {}, 0, {}};
  out.univariate = UPoly::from_poly(t[0].substitute({{"c1", c1}, {"c2", c2}}).with_variables({t.solved_vars()[0]}));
  out.second = back_substitution(a, c1);
  const auto roots = exact::isolate_positive_roots(out.univariate);
  out.raw_positive_roots = static_cast<int>(roots.size());
  for (const auto& iv : roots) {
    RealRoot r(out.univariate, iv);
    if (r.sign_of(out.second) > 0) out.admissible.push_back(std::move(r));
  }
  return out;
}

PriceState equilibrium_prices(const ExactEquilibria& e, std::size_t index) {
  const RealRoot& r = e.admissible.at(index);
  const double u = polish(r.defining(), r.interval().lo.get_d(), r.interval().hi.get_d());
  const double v = e.second.evaluate(u);
  if (e.alpha == ExactAlpha::Half) return {u, v};
  return {u * u, v * v};
}

namespace {

EquilibriumResult solve_symmetric(const ModelParams& m) {
  const double p = symmetric_equilibrium_price(m.alpha, m.c1);
  EquilibriumResult r;
  r.state = {p, p};
  r.residual = step_residual(m, r.state);
  r.certified_unique = false;
  r.branch = "symmetric-closed-form";
  return r;
}

EquilibriumResult solve_newton(const ModelParams& m) {
  ModelParams unit = m;
  unit.k1 = unit.k2 = 1.0;
  const double c = 0.5 * (m.c1 + m.c2);
  const double start = symmetric_equilibrium_price(m.alpha, c);
  PriceState p{start, start};
  auto residual_norm = [&](PriceState s) {
    return std::hypot(profit_gradient(m, s, 1), profit_gradient(m, s, 2));
  };
  for (int it = 0; it < 200; ++it) {
    const double g1 = profit_gradient(m, p, 1), g2 = profit_gradient(m, p, 2);
    const double norm = std::hypot(g1, g2);
    if (norm < 1e-15) break;
    Matrix2 J = jacobian_general(unit, p);
    J[0][0] -= 1.0;
    J[1][1] -= 1.0;
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0) break;
    const double d1 = (J[1][1] * g1 - J[0][1] * g2) / det;
    const double d2 = (-J[1][0] * g1 + J[0][0] * g2) / det;
    double t = 1.0;
    bool moved = false;
    for (int k = 0; k < 60; ++k, t *= 0.5) {
      PriceState trial{p.p1 - t * d1, p.p2 - t * d2};
      if (trial.p1 > 0 && trial.p2 > 0 && residual_norm(trial) < norm) {
        p = trial;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  EquilibriumResult r;
  r.state = p;
  r.residual = step_residual(m, p);
  r.certified_unique = false;
  r.branch = "damped-newton";
  return r;
}

}  // namespace

EquilibriumResult solve_equilibrium(const ModelParams& m) {
  m.validate();
  const AlphaCase ac = alpha_case(m.alpha);
  if (ac == AlphaCase::General) return m.c1 == m.c2 ? solve_symmetric(m) : solve_newton(m);

  const ExactAlpha a = ac == AlphaCase::Half ? ExactAlpha::Half : ExactAlpha::Third;
  const ExactEquilibria e =
      exact_equilibria(a, exact::rational_from_double(m.c1), exact::rational_from_double(m.c2));
  if (e.admissible.empty()) throw std::runtime_error("no admissible positive equilibrium found");

  EquilibriumResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < e.admissible.size(); ++i) {
    const PriceState s = equilibrium_prices(e, i);
    const double res = step_residual(m, s);
    if (res < best.residual) {
      best.state = s;
      best.residual = res;
    }
  }
  best.certified_unique = e.admissible.size() == 1;
  best.branch = equilibrium_set(a).name();
  return best;
}

int count_positive_equilibria(ExactAlpha a, const BigRational& c1, const BigRational& c2) {
  return static_cast<int>(exact_equilibria(a, c1, c2).admissible.size());
}

int count_positive_equilibria(const ModelParams& m) {
  return count_positive_equilibria(exact_alpha(m.alpha), exact::rational_from_double(m.c1),
                                   exact::rational_from_double(m.c2));
}

bool verify_triangular_consistency(ExactAlpha a, const ModelParams& m) {
  const auto equations = equilibrium_equations(a);
  const std::string u = a == ExactAlpha::Half ? "p1" : "x";
  const std::string v = a == ExactAlpha::Half ? "p2" : "y";
  const BigRational c1 = exact::rational_from_double(m.c1), c2 = exact::rational_from_double(m.c2);

  auto satisfies = [&](double uu, double vv) {
    std::map<std::string, double> at{{u, uu}, {v, vv}, {"c1", m.c1}, {"c2", m.c2}};
    for (const auto& eq : equations) {
      double scale = 0.0;
      const double val = evaluate(eq, at, &scale);
      if (std::abs(val) > 1e-9 * std::max(scale, std::numeric_limits<double>::min())) return false;
    }
    return true;
  };

  std::vector<std::pair<double, double>> zeros = positive_zeros(equilibrium_set(a), {{"c1", c1}, {"c2", c2}});
  if (zeros.empty()) return false;
  if (m.c1 == m.c2) {
    for (const auto& t : triangular_sets(a, true)) {
      auto z = positive_zeros(t, {{"c", c1}});
      zeros.insert(zeros.end(), z.begin(), z.end());
    }
  }
  return std::all_of(zeros.begin(), zeros.end(), [&](const auto& z) { return satisfies(z.first, z.second); });
}

}  // namespace bertrand
