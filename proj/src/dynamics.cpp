#include "bertrand/dynamics.hpp"

#include "bertrand/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace bertrand::dynamics {

namespace {

double norm(PriceState p) { return std::hypot(p.p1, p.p2); }
double dist(PriceState a, PriceState b) { return std::hypot(a.p1 - b.p1, a.p2 - b.p2); }

}  // namespace

std::optional<PriceState> advance(const ModelParams& m, PriceState p) {
  auto next = step(m, p);
  if (!next || next->p1 > kEscapeBound || next->p2 > kEscapeBound) return std::nullopt;
  return next;
}

Trajectory iterate(const ModelParams& m, PriceState initial, int n_total, int transient) {
  m.validate();
  if (!(initial.p1 > 0) || !(initial.p2 > 0)) throw std::domain_error("initial prices must be positive");
  if (transient < 0 || n_total <= transient) throw std::invalid_argument("need n_total > transient >= 0");
  Trajectory t{m, initial, transient, {}, std::nullopt};
  t.samples.reserve(static_cast<std::size_t>(n_total - transient));
  PriceState p = initial;
  for (long i = 1; i <= n_total; ++i) {
    auto next = advance(m, p);
    if (!next) {
      t.escaped_at = i;
      break;
    }
    p = *next;
    if (i > transient) t.samples.push_back(p);
  }
  return t;
}

int OrbitClass::code() const {
  switch (kind) {
    case OrbitKind::Escaped: return 0;
    case OrbitKind::Fixed: return 1;
    case OrbitKind::Periodic: return period;
    case OrbitKind::Aperiodic: return kMaxPeriod + 1;
  }
  return kMaxPeriod + 1;
}

std::string to_string(const OrbitClass& c) {
  switch (c.kind) {
    case OrbitKind::Escaped: return "escaped";
    case OrbitKind::Fixed: return "fixed";
    case OrbitKind::Periodic: return "periodic(" + std::to_string(c.period) + ")";
    case OrbitKind::Aperiodic: return "aperiodic";
  }
  return "aperiodic";
}

OrbitClass classify_orbit(const Trajectory& t, double tol) {
  OrbitClass out;
  if (t.escaped_at) {
    out.kind = OrbitKind::Escaped;
    return out;
  }
  const auto& s = t.samples;
  if (s.size() < 200) throw std::invalid_argument("orbit classification needs at least 200 samples");
  for (int n = 1; n <= kMaxPeriod; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i + n < s.size() && ok; ++i) ok = dist(s[i + n], s[i]) <= tol * (1 + norm(s[i]));
    if (!ok) continue;
    out.kind = n == 1 ? OrbitKind::Fixed : OrbitKind::Periodic;
    out.period = n;
    out.representative.assign(s.end() - n, s.end());
    return out;
  }
  out.kind = OrbitKind::Aperiodic;
  return out;
}

OrbitClass simulate_and_classify(const ModelParams& m, PriceState initial, const Settings& s) {
  return classify_orbit(iterate(m, initial, s.transient + s.samples, s.transient), s.tolerance);
}

Param parse_param(std::string_view name) {
  if (name == "alpha") return Param::Alpha;
  if (name == "c1") return Param::C1;
  if (name == "c2") return Param::C2;
  if (name == "c") return Param::C;
  if (name == "k1") return Param::K1;
  if (name == "k2") return Param::K2;
  if (name == "k") return Param::K;
  throw std::invalid_argument("unknown parameter: " + std::string(name));
}

std::string to_string(Param p) {
  switch (p) {
    case Param::Alpha: return "alpha";
    case Param::C1: return "c1";
    case Param::C2: return "c2";
    case Param::C: return "c";
    case Param::K1: return "k1";
    case Param::K2: return "k2";
    case Param::K: return "k";
  }
  return "?";
}

ModelParams with_param(ModelParams m, Param p, double value) {
  switch (p) {
    case Param::Alpha: m.alpha = value; break;
    case Param::C1: m.c1 = value; break;
    case Param::C2: m.c2 = value; break;
    case Param::C: m.c1 = m.c2 = value; break;
    case Param::K1: m.k1 = value; break;
    case Param::K2: m.k2 = value; break;
    case Param::K: m.k1 = m.k2 = value; break;
  }
  return m;
}

double grid_value(double lo, double hi, int steps, int i) {
  if (steps <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

namespace {

void check_range(Param p, double lo, double hi, int steps) {
  if (steps < 1) throw std::invalid_argument("scan needs at least one step");
  if (!(lo <= hi)) throw std::invalid_argument("scan range must satisfy from <= to");
  if (p == Param::Alpha ? !(lo > 0 && hi < 1) : !(lo > 0))
    throw std::invalid_argument("scan range for " + to_string(p) + " leaves the parameter domain");
}

}  // namespace

std::vector<Scan1dPoint> bifurcation_scan_1d(Param vary, double lo, double hi, int steps, const ModelParams& base,
                                             PriceState initial, const Settings& s, unsigned jobs) {
  check_range(vary, lo, hi, steps);
  std::vector<Scan1dPoint> rows(static_cast<std::size_t>(steps));
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const double v = grid_value(lo, hi, steps, static_cast<int>(i));
    const ModelParams m = with_param(base, vary, v);
    Trajectory t = iterate(m, initial, s.transient + s.samples, s.transient);
    rows[i].value = v;
    rows[i].orbit = t.escaped_at ? OrbitClass{OrbitKind::Escaped, 0, {}} : classify_orbit(t, s.tolerance);
    if (!t.escaped_at) rows[i].samples = std::move(t.samples);
  });
  return rows;
}

void write_scan_1d_csv(std::ostream& out, const std::vector<Scan1dPoint>& rows) {
  out << "param,p1,p2\n";
  char buf[96];
  for (const auto& r : rows)
    for (const auto& p : r.samples) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.value, p.p1, p.p2);
      out << buf;
    }
}

Grid2d bifurcation_scan_2d(Param x, double x_lo, double x_hi, int nx, Param y, double y_lo, double y_hi, int ny,
                           const ModelParams& base, PriceState initial, const Settings& s, unsigned jobs) {
  check_range(x, x_lo, x_hi, nx);
  check_range(y, y_lo, y_hi, ny);
  Grid2d g{x, y, {}, {}, {}};
  for (int i = 0; i < nx; ++i) g.xs.push_back(grid_value(x_lo, x_hi, nx, i));
  for (int j = 0; j < ny; ++j) g.ys.push_back(grid_value(y_lo, y_hi, ny, j));
  g.codes.assign(g.xs.size() * g.ys.size(), 0);
  parallel_for(g.codes.size(), jobs, [&](std::size_t idx) {
    const ModelParams m = with_param(with_param(base, x, g.xs[idx % g.xs.size()]), y, g.ys[idx / g.xs.size()]);
    g.codes[idx] = simulate_and_classify(m, initial, s).code();
  });
  return g;
}

void write_scan_2d_csv(std::ostream& out, const Grid2d& g) {
  out << "x,y,class_code\n";
  char buf[96];
  for (std::size_t j = 0; j < g.ys.size(); ++j)
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", g.xs[i], g.ys[j], g.at(i, j));
      out << buf;
    }
}

// ---------------------------------------------------------------------------
// Two-cycles

std::optional<TwoCycle> find_two_cycle(const ModelParams& m, PriceState guess) {
  PriceState x = guess;
  for (int it = 0; it < 100; ++it) {
    auto y = step(m, x);
    if (!y) return std::nullopt;
    auto z = step(m, *y);
    if (!z) return std::nullopt;
    const double g1 = z->p1 - x.p1, g2 = z->p2 - x.p2;
    if (std::max(std::abs(g1), std::abs(g2)) <= 1e-14 * (1 + norm(x))) break;
    Matrix2 D = multiply(jacobian_general(m, *y), jacobian_general(m, x));
    D[0][0] -= 1.0;
    D[1][1] -= 1.0;
    const double det = D[0][0] * D[1][1] - D[0][1] * D[1][0];
    if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
    const PriceState next{x.p1 - (D[1][1] * g1 - D[0][1] * g2) / det, x.p2 - (-D[1][0] * g1 + D[0][0] * g2) / det};
    if (!(next.p1 > 0) || !(next.p2 > 0)) return std::nullopt;
    x = next;
  }
  auto y = step(m, x);
  if (!y) return std::nullopt;
  auto z = step(m, *y);
  if (!z) return std::nullopt;
  TwoCycle c{x, *y, {}, std::max(std::abs(z->p1 - x.p1), std::abs(z->p2 - x.p2))};
  if (c.residual > 1e-10 * (1 + norm(x))) return std::nullopt;
  if (dist(x, *y) <= 1e-8 * (1 + norm(x))) return std::nullopt;
  c.jury = stability::jury(multiply(jacobian_general(m, c.b), jacobian_general(m, c.a)));
  return c;
}

namespace {

double equilibrium_cd2(const ModelParams& m) {
  const double p = symmetric_equilibrium_price(m.alpha, m.c1);
  return stability::jury(jacobian_general(m, {p, p})).cd2;
}

// Bisects a sign change of f on [lo, hi] down to tol.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ContinuationResult two_cycle_continuation(const ModelParams& base, double alpha_lo, double alpha_hi, int steps) {
  if (base.c1 != base.c2 || base.k1 != base.k2)
    throw std::invalid_argument("continuation expects c1 = c2 and k1 = k2");
  if (!(alpha_lo > 0 && alpha_hi < 1 && alpha_lo < alpha_hi) || steps < 2)
    throw std::invalid_argument("continuation needs 0 < alpha_lo < alpha_hi < 1 and at least 2 steps");

  ContinuationResult r;
  auto at = [&](double a) { return with_param(base, Param::Alpha, a); };

  // The cycle is born where the equilibrium's eigenvalue -1 appears (CD2 = 0).
  double prev_alpha = alpha_lo, prev_cd2 = equilibrium_cd2(at(alpha_lo));
  std::optional<TwoCycle> prev;
  for (int i = 0; i < steps; ++i) {
    const double a = grid_value(alpha_lo, alpha_hi, steps, i);
    const ModelParams m = at(a);
    const double cd2 = equilibrium_cd2(m);
    if (!r.branch_found && i > 0 && (prev_cd2 > 0) != (cd2 > 0)) {
      r.branch_alpha = bisect([&](double s) { return equilibrium_cd2(at(s)); }, prev_alpha, a, 1e-12);
      r.branch_found = true;
    }
    std::optional<TwoCycle> cyc;
    if (prev) cyc = find_two_cycle(m, prev->a);
    if (!cyc && cd2 < 0) {
      // Seed off the equilibrium along the anti-diagonal, the -1 eigendirection.
      const double p = symmetric_equilibrium_price(a, base.c1);
      for (double d : {1e-3, 1e-2, 5e-2, 1e-1, 2e-1}) {
        cyc = find_two_cycle(m, {p * (1 - d), p * (1 + d)});
        if (cyc) break;
      }
    }
    if (prev && cyc && !r.ns_found && prev->jury.cd3 > 0 && cyc->jury.cd3 <= 0) {
      PriceState seed = prev->a;
      auto cd3 = [&](double s) {
        auto c = find_two_cycle(at(s), seed);
        if (!c) throw std::runtime_error("2-cycle lost during bisection");
        seed = c->a;
        return c->jury.cd3;
      };
      r.ns_alpha = bisect(cd3, prev_alpha, a, 1e-12);
      r.ns_found = true;
    }
    r.points.push_back({a, cyc});
    prev = cyc;
    prev_alpha = a;
    prev_cd2 = cd2;
  }
  return r;
}

void write_continuation_csv(std::ostream& out, const ContinuationResult& r) {
  out << "alpha,p1_a,p2_a,p1_b,p2_b,stable\n";
  char buf[160];
  for (const auto& p : r.points) {
    if (!p.cycle) continue;
    const auto& c = *p.cycle;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", p.alpha, c.a.p1, c.a.p2, c.b.p1, c.b.p2,
                  c.jury.stable ? 1 : 0);
    out << buf;
  }
}

double lyapunov_exponent(const ModelParams& m, PriceState initial, int n, int transient) {
  if (n <= 0 || transient < 0) throw std::invalid_argument("lyapunov_exponent needs n > 0");
  PriceState p = initial;
  for (int i = 0; i < transient; ++i) {
    auto next = advance(m, p);
    if (!next) throw std::domain_error("trajectory escaped");
    p = *next;
  }
  // Off the diagonal, which is invariant in the symmetric case.
  double v1 = 0.8, v2 = 0.6, sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Matrix2 J = jacobian_general(m, p);
    const double w1 = J[0][0] * v1 + J[0][1] * v2;
    const double w2 = J[1][0] * v1 + J[1][1] * v2;
    const double len = std::hypot(w1, w2);
    if (len == 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log(len);
    v1 = w1 / len;
    v2 = w2 / len;
    auto next = advance(m, p);
    if (!next) throw std::domain_error("trajectory escaped");
    p = *next;
  }
  return sum / n;
}

}  // namespace bertrand::dynamics
