#pragma once

#include "bertrand/model.hpp"
#include "bertrand/stability.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bertrand::dynamics {

/// Prices above this are treated as divergence.
inline constexpr double kEscapeBound = 1e9;
inline constexpr int kMaxPeriod = 25;

struct Settings {
  int transient = 1000;
  int samples = 200;
  double tolerance = 1e-6;  // relative, for period detection
};

struct Trajectory {
  ModelParams params;
  PriceState initial;
  int transient = 0;
  std::vector<PriceState> samples;  // iterates transient+1, transient+2, ...
  std::optional<long> escaped_at;   // index of the iterate that left the domain
};

/// One step with the escape rule applied; empty on escape.
std::optional<PriceState> advance(const ModelParams& m, PriceState p);

/// n_total iterates from `initial`, keeping those after the first `transient`.
Trajectory iterate(const ModelParams& m, PriceState initial, int n_total, int transient);

enum class OrbitKind { Fixed, Periodic, Aperiodic, Escaped };

struct OrbitClass {
  OrbitKind kind = OrbitKind::Aperiodic;
  int period = 0;  // 1 for fixed, n for periodic, 0 otherwise
  std::vector<PriceState> representative;
  /// 0 escaped, 1 fixed, 2..25 period, 26 aperiodic or longer period.
  int code() const;
};

std::string to_string(const OrbitClass& c);

/// Throws std::invalid_argument when a non-escaped trajectory has fewer than
/// 200 samples.
OrbitClass classify_orbit(const Trajectory& t, double tol = 1e-6);

OrbitClass simulate_and_classify(const ModelParams& m, PriceState initial, const Settings& s = {});

// Parameter sweeps.

enum class Param { Alpha, C1, C2, C, K1, K2, K };
Param parse_param(std::string_view name);
std::string to_string(Param p);
/// Copy of m with p set (C and K set both firms).
ModelParams with_param(ModelParams m, Param p, double value);

/// lo + i (hi - lo) / (steps - 1), or lo when steps == 1.
double grid_value(double lo, double hi, int steps, int i);

struct Scan1dPoint {
  double value;
  std::vector<PriceState> samples;  // empty when escaped
  OrbitClass orbit;
};

std::vector<Scan1dPoint> bifurcation_scan_1d(Param vary, double lo, double hi, int steps, const ModelParams& base,
                                             PriceState initial, const Settings& s = {}, unsigned jobs = 0);
/// `param,p1,p2`, one row per retained sample.
void write_scan_1d_csv(std::ostream& out, const std::vector<Scan1dPoint>& rows);

struct Grid2d {
  Param x_param, y_param;
  std::vector<double> xs, ys;
  std::vector<int> codes;  // row-major, y outer
  int at(std::size_t ix, std::size_t iy) const { return codes[iy * xs.size() + ix]; }
};

Grid2d bifurcation_scan_2d(Param x, double x_lo, double x_hi, int nx, Param y, double y_lo, double y_hi, int ny,
                           const ModelParams& base, PriceState initial, const Settings& s = {}, unsigned jobs = 0);
/// `x,y,class_code`.
void write_scan_2d_csv(std::ostream& out, const Grid2d& g);

// Two-cycles.

struct TwoCycle {
  PriceState a, b;                // b = step(a), a = step(b)
  stability::JuryReport jury;     // of the second-iterate Jacobian J(b) J(a)
  double residual = 0.0;          // |step(step(a)) - a|_inf
};

/// Newton iteration on step(step(x)) - x from `guess`. Empty unless it
/// converges to a genuine 2-cycle (step(x) != x).
std::optional<TwoCycle> find_two_cycle(const ModelParams& m, PriceState guess);

struct ContinuationPoint {
  double alpha;
  std::optional<TwoCycle> cycle;
};

struct ContinuationResult {
  double branch_alpha = 0.0;  // equilibrium eigenvalue -1 crossing; 2-cycle born here
  double ns_alpha = 0.0;      // CD3 of the second iterate crosses zero on the cycle
  bool branch_found = false;
  bool ns_found = false;
  std::vector<ContinuationPoint> points;
};

/// Follows the 2-cycle over alpha in [alpha_lo, alpha_hi] (c1 = c2, k1 = k2 in
/// `base`). Landmarks are refined by bisection to 1e-9 in alpha.
ContinuationResult two_cycle_continuation(const ModelParams& base, double alpha_lo, double alpha_hi, int steps);

/// `alpha,p1_a,p2_a,p1_b,p2_b,stable`.
void write_continuation_csv(std::ostream& out, const ContinuationResult& r);

/// Largest Lyapunov exponent from the growth of a tangent vector, averaged
/// over n steps after `transient`. Throws std::domain_error on escape.
double lyapunov_exponent(const ModelParams& m, PriceState initial, int n, int transient = 1000);

}  // namespace bertrand::dynamics
