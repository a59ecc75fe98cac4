// Acceptance run: one PASS/FAIL line per criterion, followed by its
// sub-checks. Exit status is nonzero when a sub-check fails that is not one of
// the documented deviations from the printed source (see README).

#include "bertrand/dynamics.hpp"
#include "bertrand/equilibrium.hpp"
#include "bertrand/exact/rational.hpp"
#include "bertrand/model.hpp"
#include "bertrand/stability.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace bertrand;
using exact::BigRational;

namespace {

const std::set<std::string> kDocumentedDeviations = {
    "C3.half-displayed-matrix",  // off-diagonals printed with 216, the derivative gives 108
    "C5.third-printed",          // three printed (c1 - c2) exponents
    "C7.two-cycle-0.58",         // printed point is the cycle at the torus onset
    "C10.c1c2-direct-ns",        // equilibrium loses stability by period doubling there
};

struct Sub {
  std::string id;
  std::string text;
  bool ok;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Sub> subs;
  double seconds = 0;

  void check(const std::string& id, bool ok, const std::string& text) { subs.push_back({id, text, ok}); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

BigRational Q(const char* s) { return exact::parse_rational(s); }

double spectral_radius(const Matrix2& J) {
  const double tr = J[0][0] + J[1][1], det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  const double disc = tr * tr - 4 * det;
  if (disc < 0) return std::sqrt(det);
  const double s = std::sqrt(disc);
  return std::max(std::abs((tr + s) / 2), std::abs((tr - s) / 2));
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double d = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double max_abs(const Matrix2& a) { return max_abs_diff(a, Matrix2{}); }

// Criteria.

void spot_values(Criterion& c) {
  struct Spot {
    const char* name;
    const char* c1;
    const char* c2;
    const char* k;
    const char* printed;
  };
  const Spot spots[] = {
      {"R1", "261/65536", "1/2", "79/1024",
       "588713082686404258452596575293972215811486125608829/6129982163463555433433388108601236734474956488734408704"},
      {"R2", "261/65536", "1/2", "79/1024",
       "108130364702270905134254005155560019343/340282366920938463463374607431768211456"},
      {"R3", "261/65536", "1/2", "79/1024",
       "-791461358900213183480020700044263844445257635142615074110540187/"
       "26328072917139296674479506920917608079723773850137277813577744384"},
      {"R4", "261/65536", "1/2", "79/1024",
       "526438846625624761986017962528229497389068363385599391/374144419156711147060143317175368453031918731001856"},
      {"A1", "261/65536", "1/2", "79/1024", "44864955/4294967296"},
      {"A2", "261/65536", "1/2", "79/1024", "-842240947483983714275440267/81129638414606681695789005144064"},
      {"A3", "261/65536", "1/2", "79/1024", "-63936547182666560163845458457577/649037107316853453566312041152512"},
      {"R1", "3/8", "1/2", "827/64", "-24200272602071108539/17592186044416"},
      {"R2", "3/8", "1/2", "827/64", "-96467864887/67108864"},
      {"R3", "3/8", "1/2", "827/64", "40079185741889580295152003015/288230376151711744"},
      {"R4", "3/8", "1/2", "827/64", "29339436396656781/17179869184"},
  };
  const auto start = std::chrono::steady_clock::now();
  const auto& polys = stability::critical_polynomials();
  for (const auto& s : spots) {
    const BigRational v = polys[s.name].evaluate({{"c1", Q(s.c1)}, {"c2", Q(s.c2)}, {"k", Q(s.k)}});
    c.check("C1.value", v == Q(s.printed),
            fmt("%s(%s, %s, %s) equals the printed fraction exactly", s.name, s.c1, s.c2, s.k));
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check("C1.runtime", t < 1.0, fmt("runtime %.3f s < 1 s", t));
}

void tables(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  for (ExactAlpha a : {ExactAlpha::Half, ExactAlpha::Third}) {
    const auto r = stability::verify_sample_table(a);
    const std::size_t expected = a == ExactAlpha::Half ? 32 : 40;
    c.check("C2.rows", r.rows == expected && r.mismatches == 0,
            fmt("alpha=%s: %zu/%zu rows reproduce stable flag and both sign columns", alpha_label(a).c_str(),
                r.rows - r.mismatches, expected));
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check("C2.runtime", t < 60.0, fmt("runtime %.2f s < 60 s", t));
}

void closed_forms(Criterion& c) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> uc(0.01, 2.0), uk(0.1, 5.0);
  double worst_res[2] = {0, 0}, worst_half_displayed = 0, worst_half_derived = 0, worst_third = 0;
  for (int i = 0; i < 100; ++i) {
    const double cost = uc(rng), k1 = uk(rng), k2 = uk(rng), c2 = cost * cost;
    for (int which = 0; which < 2; ++which) {
      const double alpha = which == 0 ? 0.5 : 1.0 / 3.0, p = (which == 0 ? 3 : 5) * cost;
      const ModelParams m{alpha, cost, cost, k1, k2};
      const auto next = step(m, {p, p});
      const double res = next ? std::max(std::abs(next->p1 - p), std::abs(next->p2 - p)) / p : INFINITY;
      worst_res[which] = std::max(worst_res[which], res);
    }
    const Matrix2 half = jacobian({0.5, cost, cost, k1, k2}, {3 * cost, 3 * cost});
    const Matrix2 displayed{{{(27 * c2 - k1) / (27 * c2), k1 / (216 * c2)}, {k2 / (216 * c2), (27 * c2 - k2) / (27 * c2)}}};
    const Matrix2 derived{{{(27 * c2 - k1) / (27 * c2), k1 / (108 * c2)}, {k2 / (108 * c2), (27 * c2 - k2) / (27 * c2)}}};
    worst_half_displayed = std::max(worst_half_displayed, max_abs_diff(half, displayed) / max_abs(displayed));
    worst_half_derived = std::max(worst_half_derived, max_abs_diff(half, derived) / max_abs(derived));
    const Matrix2 third = jacobian({1.0 / 3.0, cost, cost, k1, k2}, {5 * cost, 5 * cost});
    const Matrix2 shown{
        {{(500 * c2 - 3 * k1) / (500 * c2), k1 / (1000 * c2)}, {k2 / (1000 * c2), (500 * c2 - 3 * k2) / (500 * c2)}}};
    worst_third = std::max(worst_third, max_abs_diff(third, shown) / max_abs(shown));
  }
  c.check("C3.residual-half", worst_res[0] <= 1e-12,
          fmt("alpha=1/2: max relative residual at (3c,3c) over 100 c = %.2e <= 1e-12", worst_res[0]));
  c.check("C3.residual-third", worst_res[1] <= 1e-12,
          fmt("alpha=1/3: max relative residual at (5c,5c) over 100 c = %.2e <= 1e-12", worst_res[1]));
  c.check("C3.half-displayed-matrix", worst_half_displayed <= 1e-12,
          fmt("alpha=1/2: Jacobian vs displayed J(3c,3c) (off-diagonal k/216c^2): rel. error %.2e <= 1e-12",
              worst_half_displayed));
  c.check("C3.half-derived-matrix", worst_half_derived <= 1e-12,
          fmt("alpha=1/2: Jacobian vs J(3c,3c) with off-diagonal k/108c^2 (derivative of the map): rel. error "
              "%.2e <= 1e-12",
              worst_half_derived));
  c.check("C3.third-displayed-matrix", worst_third <= 1e-12,
          fmt("alpha=1/3: Jacobian vs displayed M(5c,5c): rel. error %.2e <= 1e-12", worst_third));
}

void thresholds(Criterion& c) {
  for (ExactAlpha a : {ExactAlpha::Half, ExactAlpha::Third}) {
    const double alpha = alpha_value(a);
    auto radius = [&](double cost) {
      const double p = symmetric_equilibrium_price(alpha, cost);
      return spectral_radius(jacobian({alpha, cost, cost, 1, 1}, {p, p}));
    };
    double lo = 0.01, hi = 1.0;
    const bool bracket = radius(lo) > 1 && radius(hi) < 1;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      (radius(mid) > 1 ? lo : hi) = mid;
    }
    const double cstar = 0.5 * (lo + hi);
    const double expected = a == ExactAlpha::Half ? std::sqrt(5.0 / 216) : std::sqrt(7.0 / 2000);
    const double p = symmetric_equilibrium_price(alpha, cstar);
    const Matrix2 J = jacobian({alpha, cstar, cstar, 1, 1}, {p, p});
    const double tr = J[0][0] + J[1][1], det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double disc = tr * tr - 4 * det;
    const double smallest = disc >= 0 ? (tr - std::sqrt(disc)) / 2 : NAN;
    c.check("C4.threshold", bracket && std::abs(cstar - expected) <= 1e-6,
            fmt("alpha=%s: bisected c* = %.10f, closed form %.10f, |diff| = %.1e <= 1e-6", alpha_label(a).c_str(),
                cstar, expected, std::abs(cstar - expected)));
    c.check("C4.eigenvalue", std::abs(smallest + 1) <= 1e-6,
            fmt("alpha=%s: crossing eigenvalue %.9f (expected -1 within 1e-6)", alpha_label(a).c_str(), smallest));
  }
}

void identities(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  for (ExactAlpha a : {ExactAlpha::Half, ExactAlpha::Third}) {
    const auto r = stability::verify_resultant_identities(a, 20, 0x5EED);
    int printed = 0, corrected = 0;
    std::string differ;
    for (const auto& chk : r.checks) {
      printed += chk.printed_holds;
      corrected += chk.corrected_holds;
      if (!chk.printed_holds) differ += (differ.empty() ? "" : "; ") + chk.name;
    }
    const std::string label = alpha_label(a);
    const std::string id = a == ExactAlpha::Half ? "C5.half-printed" : "C5.third-printed";
    c.check(id, r.all_printed_hold() && r.checks.size() == 6,
            fmt("alpha=%s: %d/%zu printed identities hold exactly at 20 seeded rational points%s%s", label.c_str(),
                printed, r.checks.size(), differ.empty() ? "" : "; failing: ", differ.c_str()));
    if (a == ExactAlpha::Third)
      c.check("C5.third-corrected", r.all_corrected_hold(),
              fmt("alpha=1/3: %d/%zu hold with corrected (c1-c2) exponents (CD3: 2; numer*denom CD2, CD3: 12)",
                  corrected, r.checks.size()));
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check("C5.runtime", t < 300.0, fmt("runtime %.2f s < 300 s", t));
}

void uniqueness(Criterion& c) {
  int table_points = 0, table_unique = 0;
  for (ExactAlpha a : {ExactAlpha::Half, ExactAlpha::Third})
    for (const auto& row : stability::sample_table(a)) {
      ++table_points;
      table_unique += count_positive_equilibria(a, row.c1, row.c2) == 1;
    }
  c.check("C6.tables", table_points == 72 && table_unique == 72,
          fmt("%d/%d table points have exactly one admissible positive equilibrium", table_unique, table_points));
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<long> num(1, 97), den(1, 64);
  int unique = 0;
  for (int i = 0; i < 200; ++i) {
    BigRational c1(num(rng), den(rng)), c2(num(rng), den(rng));
    c1.canonicalize();
    c2.canonicalize();
    unique += count_positive_equilibria(i % 2 ? ExactAlpha::Half : ExactAlpha::Third, c1, c2) == 1;
  }
  c.check("C6.random", unique == 200,
          fmt("%d/200 random rational (c1, c2) points (alternating alpha) have exactly one", unique));
}

void landmarks(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const ModelParams base{0.5, 0.2, 0.2, 1, 1};
  const auto r = dynamics::two_cycle_continuation(base, 0.54, 0.6, 61);
  c.check("C7.branch", r.branch_found && std::abs(r.branch_alpha - 0.553372) <= 1e-3,
          fmt("2-cycle branch at alpha = %.7f (0.553372 +- 1e-3)", r.branch_alpha));
  c.check("C7.ns", r.ns_found && std::abs(r.ns_alpha - 0.577570) <= 1e-3,
          fmt("NS on the 2-cycle at alpha = %.7f (0.577570 +- 1e-3)", r.ns_alpha));

  const ModelParams at58 = dynamics::with_param(base, dynamics::Param::Alpha, 0.58);
  const auto cyc = dynamics::find_two_cycle(at58, {0.46, 0.61});
  auto dist = [](PriceState a, double x, double y) { return std::max(std::abs(a.p1 - x), std::abs(a.p2 - y)); };
  double d = INFINITY;
  if (cyc) d = std::min(dist(cyc->a, 0.464194, 0.607384), dist(cyc->b, 0.464194, 0.607384));
  c.check("C7.two-cycle-0.58", d <= 1e-4,
          cyc ? fmt("2-cycle at alpha=0.58 has point (%.6f, %.6f); distance to (0.464194, 0.607384) = %.1e <= 1e-4",
                    cyc->a.p1, cyc->a.p2, d)
              : std::string("no 2-cycle found at alpha=0.58"));
  if (r.ns_found) {
    const auto at_ns = dynamics::find_two_cycle(dynamics::with_param(base, dynamics::Param::Alpha, r.ns_alpha),
                                                {0.46, 0.61});
    if (at_ns)
      c.check("C7.two-cycle-ns", true,
              fmt("for reference: the 2-cycle at the NS point alpha=%.5f is (%.6f, %.6f)", r.ns_alpha, at_ns->a.p1,
                  at_ns->a.p2));
  }
  const auto t = dynamics::iterate(at58, {0.3, 0.3}, 5000, 4999);
  const double dd = t.samples.empty() ? INFINITY : dist(t.samples[0], 0.489655, 0.489655);
  c.check("C7.diagonal", dd <= 1e-4,
          fmt("alpha=0.58 from (0.3, 0.3) converges to (%.6f, %.6f); distance %.1e <= 1e-4",
              t.samples.empty() ? NAN : t.samples[0].p1, t.samples.empty() ? NAN : t.samples[0].p2, dd));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check("C7.runtime", secs < 120.0, fmt("runtime %.2f s < 120 s", secs));
}

void comparison(Criterion& c) {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> lg(std::log(1e-3), std::log(1e3));
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const double k1 = std::exp(lg(rng)), k2 = std::exp(lg(rng));
    ok += stability::symmetric_threshold(ExactAlpha::Half, k1, k2) >
          stability::symmetric_threshold(ExactAlpha::Third, k1, k2);
  }
  c.check("C8.thresholds", ok == 1000, fmt("%d/1000 random (k1, k2): threshold(1/2) > threshold(1/3)", ok));
  using stability::classify_point;
  const bool first = classify_point(ExactAlpha::Half, Q("261/65536"), Q("1/2"), Q("79/1024")).stable &&
                     !classify_point(ExactAlpha::Third, Q("261/65536"), Q("1/2"), Q("79/1024")).stable;
  const bool second = !classify_point(ExactAlpha::Half, Q("3/8"), Q("1/2"), Q("827/64")).stable &&
                      classify_point(ExactAlpha::Third, Q("3/8"), Q("1/2"), Q("827/64")).stable;
  c.check("C8.cross-first", first, "(261/65536, 1/2, 79/1024): stable for alpha=1/2, unstable for alpha=1/3");
  c.check("C8.cross-second", second, "(3/8, 1/2, 827/64): unstable for alpha=1/2, stable for alpha=1/3");
}

void statics(Criterion& c) {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> ua(0.05, 0.95), uc(0.05, 5.0);
  int signs = 0, agree = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = ua(rng), cost = uc(rng), h = 1e-6;
    const auto up = symmetric_statics(a + h, cost), down = symmetric_statics(a - h, cost);
    const double dp = (up.price - down.price) / (2 * h), dq = (up.quantity - down.quantity) / (2 * h);
    const double dpi = (up.profit - down.profit) / (2 * h), dw = (up.welfare - down.welfare) / (2 * h);
    signs += dp < 0 && dq > 0 && dpi < 0 && dw < 0;
    const auto d = symmetric_statics_alpha_derivative(a, cost);
    auto close = [](double x, double y) { return std::abs(x - y) <= 1e-6 * std::max(1.0, std::abs(y)); };
    agree += close(dp, d.price) && close(dq, d.quantity) && close(dpi, d.profit) && close(dw, d.welfare);
  }
  c.check("C9.signs", signs == 100,
          fmt("%d/100 random (alpha, c): price down, quantity up, profit down, welfare down (central differences)",
              signs));
  c.check("C9.closed-form", agree == 100,
          fmt("%d/100: closed-form alpha derivatives match the differences to 1e-6", agree));

  std::uniform_int_distribution<long> n(1, 50), d(2, 60);
  int exact_ok = 0, float_ok = 0;
  for (int i = 0; i < 100; ++i) {
    long dd = d(rng), nn = 1 + n(rng) % (dd - 1);
    BigRational a(nn, dd), cost(n(rng), d(rng));
    a.canonicalize();
    cost.canonicalize();
    const BigRational beta = a / (1 - a);
    const BigRational price = cost * (2 + beta) / beta;
    const BigRational profit = (price - cost) / (2 * price);  // q = 1/(2p) at equal prices
    const BigRational expected = 1 / (2 + beta);
    exact_ok += profit == expected;
    const double got = symmetric_statics(a.get_d(), cost.get_d()).profit;
    float_ok += std::abs(got - expected.get_d()) <= 1e-14 * expected.get_d();
  }
  c.check("C9.profit-exact", exact_ok == 100,
          fmt("%d/100 rational (alpha, c): (p - c) q = 1/(2 + beta) exactly at the symmetric equilibrium", exact_ok));
  c.check("C9.profit-binary64", float_ok == 100,
          fmt("%d/100: symmetric_statics profit within 1e-14 relative of the exact value", float_ok));
}

// Figures.

std::vector<int> column(const dynamics::Grid2d& g, std::size_t ix, bool descending) {
  std::vector<int> v;
  for (std::size_t iy = 0; iy < g.ys.size(); ++iy) v.push_back(g.at(ix, iy));
  if (descending) std::reverse(v.begin(), v.end());
  return v;
}

std::vector<int> row(const dynamics::Grid2d& g, std::size_t iy) {
  std::vector<int> v;
  for (std::size_t ix = 0; ix < g.xs.size(); ++ix) v.push_back(g.at(ix, iy));
  return v;
}

/// Categories: 'F' fixed, '2' period two, 'H' higher period, 'A' aperiodic,
/// 'E' escaped. A band is a run of at least three equal codes.
std::string bands(const std::vector<int>& codes) {
  auto cat = [](int code) {
    if (code == 0) return 'E';
    if (code == 1) return 'F';
    if (code == 2) return '2';
    if (code == 26) return 'A';
    return 'H';
  };
  std::string out;
  int prev_code = -1;
  std::size_t run = 0;
  for (std::size_t i = 0; i <= codes.size(); ++i) {
    if (i < codes.size() && codes[i] == prev_code) {
      ++run;
      continue;
    }
    if (run >= 3 && (out.empty() || out.back() != cat(prev_code))) out += cat(prev_code);
    if (i < codes.size()) {
      prev_code = codes[i];
      run = 1;
    }
  }
  return out;
}

std::size_t index_of(const std::vector<double>& v, double x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i] - x) < std::abs(v[best] - x)) best = i;
  return best;
}

void presence(Criterion& c, const std::string& name, const dynamics::Grid2d& g) {
  std::map<char, int> count;
  for (int code : g.codes) ++count[code == 0 ? 'E' : code == 1 ? 'F' : code == 2 ? '2' : code == 26 ? 'A' : 'H'];
  const int need = static_cast<int>(g.codes.size() / 1000);
  const bool ok = count['F'] >= need && count['2'] >= need && count['H'] >= need && count['A'] >= need;
  c.check("C10.presence", ok,
          fmt("%s: fixed %d, period-2 %d, higher period %d, aperiodic %d, escaped %d cells (each of the first four "
              ">= %d)",
              name.c_str(), count['F'], count['2'], count['H'], count['A'], count['E'], need));
}

void figures(Criterion& c) {
  using dynamics::Param;
  const auto start = std::chrono::steady_clock::now();
  const dynamics::Settings s;
  const int n = 200;

  const auto k1k2_half = dynamics::bifurcation_scan_2d(Param::K1, 0.05, 10, n, Param::K2, 0.05, 10, n,
                                                  {0.5, 0.3, 0.4, 1, 1}, {0.5, 0.8}, s);
  presence(c, "k1 x k2 diagram, alpha=1/2, c=(0.3,0.4), k in [0.05,10]^2", k1k2_half);
  {
    const auto ns = row(k1k2_half, index_of(k1k2_half.ys, 7.5));
    const std::string b = bands(ns);
    const auto first_a = b.find('A');
    const bool route = b.rfind("F2", 0) == 0 && first_a != std::string::npos && b.substr(0, first_a) == "F2";
    c.check("C10.k1k2-ns-route", route,
            fmt("k1 x k2 diagram alpha=1/2, k2=7.5, k1 increasing: bands %s (expect fixed, period-2, then aperiodic with no "
                "higher-period band before it)",
                b.c_str()));
    const auto pd = row(k1k2_half, index_of(k1k2_half.ys, 2.5));
    const std::string p = bands(pd);
    const auto first = p.find('A');
    const bool cascade = p.rfind("F2H", 0) == 0 && first != std::string::npos && first > 2;
    bool four = false;
    for (std::size_t i = 0; i < pd.size(); ++i) four |= pd[i] == 4;
    c.check("C10.k1k2-pd-route", cascade && four,
            fmt("k1 x k2 diagram alpha=1/2, k2=2.5, k1 increasing: bands %s (expect fixed, period-2, higher period incl. 4, then "
                "aperiodic)",
                p.c_str()));
  }

  const auto k1k2_third = dynamics::bifurcation_scan_2d(Param::K1, 0.05, 10, n, Param::K2, 0.05, 10, n,
                                                  {1.0 / 3.0, 0.1, 0.15, 1, 1}, {0.6, 0.9}, s);
  presence(c, "k1 x k2 diagram, alpha=1/3, c=(0.1,0.15), k in [0.05,10]^2", k1k2_third);

  const auto c1c2_half = dynamics::bifurcation_scan_2d(Param::C1, 0.005, 1, n, Param::C2, 0.005, 1, n,
                                                  {0.5, 1, 1, 6, 12}, {0.5, 0.8}, s);
  presence(c, "c1 x c2 diagram, alpha=1/2, k=(6,12), c in [0.005,1]^2", c1c2_half);
  {
    const auto line = column(c1c2_half, index_of(c1c2_half.xs, 0.9), true);
    const std::string b = bands(line);
    const auto first_a = b.find('A');
    const bool direct = first_a != std::string::npos && b.substr(0, first_a) == "F";
    c.check("C10.c1c2-direct-ns", direct,
            fmt("c1 x c2 diagram alpha=1/2, c1=0.9, c2 decreasing from 1: bands %s (expect fixed, then aperiodic directly)",
                b.c_str()));
  }

  const auto c1c2_third = dynamics::bifurcation_scan_2d(Param::C1, 0.005, 1, n, Param::C2, 0.005, 1, n,
                                                  {1.0 / 3.0, 1, 1, 0.3, 0.6}, {0.6, 0.9}, s);
  presence(c, "c1 x c2 diagram, alpha=1/3, k=(0.3,0.6), c in [0.005,1]^2", c1c2_third);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check("C10.grids", true, fmt("four %dx%d grids, transient %d, %d samples, tolerance %.0e; %.1f s", n, n,
                                  s.transient, s.samples, s.tolerance, secs));
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> plan = {
      {"exact spot values of the critical polynomials", spot_values},
      {"sample tables reproduced in exact arithmetic", tables},
      {"closed-form symmetric equilibria and Jacobians", closed_forms},
      {"stability thresholds by bisection", thresholds},
      {"resultant identities at seeded rational points", identities},
      {"uniqueness of the positive equilibrium", uniqueness},
      {"bifurcation landmarks on the symmetric section", landmarks},
      {"threshold ordering and cross examples", comparison},
      {"comparative statics", statics},
      {"qualitative 2-D bifurcation diagrams", figures},
  };
  int unexpected = 0, failed = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), plan[i].first, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      plan[i].second(c);
    } catch (const std::exception& e) {
      c.check("exception", false, std::string("threw: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = true;
    for (const auto& s : c.subs) pass &= s.ok;
    failed += !pass;
    std::printf("C%-2d %s  %s (%.2f s)\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(), c.seconds);
    for (const auto& s : c.subs) {
      const bool known = kDocumentedDeviations.count(s.id) > 0;
      if (!s.ok && !known) ++unexpected;
      std::printf("      [%s] %s%s\n", s.ok ? "ok" : "x ", s.text.c_str(),
                  !s.ok && known ? "  (documented deviation)" : "");
    }
  }
  std::printf("%d/%zu criteria pass; %d unexpected sub-check failure(s)\n", static_cast<int>(plan.size()) - failed,
              plan.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
