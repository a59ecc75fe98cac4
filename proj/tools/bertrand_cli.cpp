#include "bertrand/dynamics.hpp"
#include "bertrand/equilibrium.hpp"
#include "bertrand/exact/rational.hpp"
#include "bertrand/model.hpp"
#include "bertrand/stability.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

using namespace bertrand;
using exact::BigRational;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_decimal(const std::string& text) { return text.find_first_of(".eE") != std::string::npos; }

double parse_decimal(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("--" + flag + ": not a number: '" + text + "'");
  return v;
}

/// `a/b` and integers are exact; decimals take the value of the nearest
/// binary64, with a warning when that differs from the written value.
BigRational exact_flag(const std::string& flag, const std::string& text) {
  try {
    if (!is_decimal(text)) return exact::parse_rational(text);
    BigRational q = exact::rational_from_double(parse_decimal(flag, text));
    if (q != exact::parse_rational(text))
      std::cerr << "warning: --" << flag << ' ' << text << " is not exactly representable; using "
                << exact::to_string(q) << '\n';
    return q;
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

double numeric_flag(const std::string& flag, const std::string& text) {
  if (is_decimal(text)) return parse_decimal(flag, text);
  try {
    return exact::parse_rational(text).get_d();
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

struct ExactParams {
  BigRational alpha, c1, c2, k1, k2;
  std::optional<ExactAlpha> exact_alpha() const {
    if (alpha == BigRational(1, 2)) return ExactAlpha::Half;
    if (alpha == BigRational(1, 3)) return ExactAlpha::Third;
    return std::nullopt;
  }
};

ModelParams to_model(const ExactParams& p) {
  const auto a = p.exact_alpha();
  ModelParams m{a ? alpha_value(*a) : p.alpha.get_d(), p.c1.get_d(), p.c2.get_d(), p.k1.get_d(), p.k2.get_d()};
  return m;
}

struct ModelFlags {
  std::string alpha = "1/2";
  std::string c1, c2, c, k1, k2, k;

  void add(CLI::App* cmd, bool speeds, bool with_alpha = true) {
    if (with_alpha)
      cmd->add_option("--alpha", alpha, "substitutability degree in (0,1), dimensionless; a/b or decimal")
          ->capture_default_str();
    cmd->add_option("--c1", c1, "marginal cost of firm 1, price units");
    cmd->add_option("--c2", c2, "marginal cost of firm 2, price units");
    cmd->add_option("--c", c, "common marginal cost (sets c1 and c2), price units");
    if (speeds) {
      cmd->add_option("--k1", k1, "adjustment speed of firm 1, price units per unit of marginal profit");
      cmd->add_option("--k2", k2, "adjustment speed of firm 2, price units per unit of marginal profit");
      cmd->add_option("--k", k, "common adjustment speed (sets k1 and k2)");
    }
  }

  /// Resolves a pair of per-firm flags against their common flag.
  template <class T, class Parse>
  static std::pair<T, T> pair(const std::string& both, const std::string& one, const std::string& two,
                              const char* both_name, const char* one_name, const char* two_name, Parse parse) {
    if (!both.empty()) {
      if (!one.empty() || !two.empty())
        throw UsageError(std::string("give either --") + both_name + " or --" + one_name + "/--" + two_name);
      T v = parse(both_name, both);
      return {v, v};
    }
    if (one.empty() || two.empty())
      throw UsageError(std::string("missing --") + (one.empty() ? one_name : two_name) + " (or --" + both_name + ")");
    return {parse(one_name, one), parse(two_name, two)};
  }

  ExactParams exact(bool speeds) const {
    ExactParams p;
    p.alpha = exact_flag("alpha", alpha);
    std::tie(p.c1, p.c2) = pair<BigRational>(c, c1, c2, "c", "c1", "c2", exact_flag);
    p.k1 = p.k2 = 1;
    if (speeds) std::tie(p.k1, p.k2) = pair<BigRational>(k, k1, k2, "k", "k1", "k2", exact_flag);
    if (!(p.alpha > 0 && p.alpha < 1)) throw UsageError("--alpha must lie in (0, 1)");
    if (p.c1 <= 0 || p.c2 <= 0) throw UsageError("marginal costs must be positive");
    if (p.k1 <= 0 || p.k2 <= 0) throw UsageError("adjustment speeds must be positive");
    return p;
  }

  ModelParams numeric() const {
    ModelParams m;
    m.alpha = numeric_flag("alpha", alpha);
    std::tie(m.c1, m.c2) = pair<double>(c, c1, c2, "c", "c1", "c2", numeric_flag);
    std::tie(m.k1, m.k2) = pair<double>(k, k1, k2, "k", "k1", "k2", numeric_flag);
    try {
      m.validate();
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    return m;
  }

  /// Fills the flag for `p` with `value` so the varied parameter needs no
  /// separate base value.
  void seed(dynamics::Param p, const std::string& value) {
    using dynamics::Param;
    auto fill = [&](std::string& s) {
      if (s.empty()) s = value;
    };
    switch (p) {
      case Param::Alpha: alpha = value; break;
      case Param::C1: fill(c.empty() ? c1 : c); break;
      case Param::C2: fill(c.empty() ? c2 : c); break;
      case Param::C:
        if (c1.empty() && c2.empty()) fill(c);
        break;
      case Param::K1: fill(k.empty() ? k1 : k); break;
      case Param::K2: fill(k.empty() ? k2 : k); break;
      case Param::K:
        if (k1.empty() && k2.empty()) fill(k);
        break;
    }
  }
};

/// Destination for CSV data; "-" is stdout. Opened at parse time so an
/// unwritable path is a usage error.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_file() const { return file_ != nullptr; }
  /// Summary records go to stdout unless stdout carries the data.
  std::ostream& summary() { return file_ ? std::cout : std::cerr; }
  void finish() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::runtime_error("write to " + path_ + " failed");
    }
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

double step_residual(const ModelParams& m, PriceState p) {
  auto q = step(m, p);
  if (!q) return INFINITY;
  return std::max(std::abs(q->p1 - p.p1), std::abs(q->p2 - p.p2));
}

json jury_json(const stability::JuryReport& j) {
  return {{"trace", j.trace},   {"det", j.det},         {"cd1", j.cd1},
          {"cd2", j.cd2},       {"cd3", j.cd3},         {"stable", j.stable},
          {"indicated", stability::to_string(j.indicated)}};
}

json params_json(const ExactParams& p, bool speeds) {
  json j{{"alpha", exact::to_string(p.alpha)}, {"c1", exact::to_string(p.c1)}, {"c2", exact::to_string(p.c2)}};
  if (speeds) {
    j["k1"] = exact::to_string(p.k1);
    j["k2"] = exact::to_string(p.k2);
  }
  return j;
}

json histogram(const std::vector<int>& codes) {
  std::map<int, int> h;
  for (int c : codes) ++h[c];
  json j = json::object();
  for (auto [code, n] : h) j[std::to_string(code)] = n;
  return j;
}

// Commands.

struct EquilibriumCmd {
  ModelFlags model;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("equilibrium", "Non-vanishing Nash equilibrium with uniqueness certificate");
    model.add(cmd, false);
    cmd->callback([this] { run(); });
  }

  int status = kExitOk;

  void run() {
    const ExactParams p = model.exact(false);
    const ModelParams m = to_model(p);
    json out{{"params", params_json(p, false)}};
    if (auto a = p.exact_alpha()) {
      const ExactEquilibria e = exact_equilibria(*a, p.c1, p.c2);
      json list = json::array();
      for (std::size_t i = 0; i < e.admissible.size(); ++i) {
        const PriceState s = equilibrium_prices(e, i);
        list.push_back({{"p1", s.p1}, {"p2", s.p2}, {"residual", step_residual(m, s)}});
      }
      out["method"] = a == ExactAlpha::Half ? "T12" : "T32";
      out["raw_positive_roots"] = e.raw_positive_roots;
      out["certified_unique"] = e.admissible.size() == 1;
      if (!list.empty()) {
        out["p1"] = list[0]["p1"];
        out["p2"] = list[0]["p2"];
        out["residual"] = list[0]["residual"];
      }
      out["equilibria"] = list;
      if (list.empty()) status = kExitFailure;
    } else {
      const EquilibriumResult r = solve_equilibrium(m);
      out["method"] = r.branch;
      out["certified_unique"] = r.certified_unique;
      out["p1"] = r.state.p1;
      out["p2"] = r.state.p2;
      out["residual"] = r.residual;
    }
    std::cout << out.dump(2) << '\n';
  }
};

struct StabilityCmd {
  ModelFlags model;
  int status = kExitOk;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("stability", "Local stability of the equilibrium (Jury test and exact sign rule)");
    model.add(cmd, true);
    cmd->callback([this] { run(); });
  }

  void run() {
    const ExactParams p = model.exact(true);
    json out{{"params", params_json(p, true)}};
    if (auto a = p.exact_alpha()) {
      const auto c = p.k1 == p.k2 ? stability::classify_point(*a, p.c1, p.c2, p.k1)
                                  : stability::classify_point(*a, p.c1, p.c2, p.k1, p.k2);
      out["stable"] = c.stable;
      out["algebraic"] = c.algebraic;
      out["rule"] = c.rule;
      out["signs"] = c.signs;
      out["equilibrium"] = {{"p1", c.equilibrium.p1}, {"p2", c.equilibrium.p2}};
      out["jury"] = jury_json(c.jury);
      out["jury_agrees"] = c.jury_agrees;
      if (p.c1 == p.c2) {
        const double c2 = p.c1.get_d() * p.c1.get_d();
        out["symmetric_threshold"] = {{"c_squared", c2},
                                      {"critical_c_squared", stability::symmetric_threshold(*a, p.k1.get_d(), p.k2.get_d())}};
      }
      if (!c.jury_agrees) status = kExitFailure;
    } else {
      const ModelParams m = to_model(p);
      const EquilibriumResult e = solve_equilibrium(m);
      const auto j = stability::jury(jacobian(m, e.state));
      out["stable"] = j.stable;
      out["algebraic"] = false;
      out["rule"] = "numeric Jury conditions";
      out["equilibrium"] = {{"p1", e.state.p1}, {"p2", e.state.p2}, {"residual", e.residual}};
      out["jury"] = jury_json(j);
    }
    std::cout << out.dump(2) << '\n';
  }
};

struct ScanCmd {
  ModelFlags model;
  std::string x_axis = "c1", y_axis = "c2", x_from, x_to, y_from, y_to;
  unsigned x_steps = 50, y_steps = 50, jobs = 0;
  std::string output = "-";
  int status = kExitOk;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("scan", "Exact stability classification over a 2-D parameter grid (CSV)");
    cmd->add_option("--alpha", model.alpha, "1/2 or 1/3")->capture_default_str();
    cmd->add_option("--x", x_axis, "horizontal axis: c1, c2, c, k, k1 or k2")->capture_default_str();
    cmd->add_option("--x-from", x_from, "lower bound of the x axis (a/b or decimal)")->required();
    cmd->add_option("--x-to", x_to, "upper bound of the x axis")->required();
    cmd->add_option("--x-steps", x_steps, "number of x values, >= 2")->capture_default_str();
    cmd->add_option("--y", y_axis, "vertical axis")->capture_default_str();
    cmd->add_option("--y-from", y_from, "lower bound of the y axis")->required();
    cmd->add_option("--y-to", y_to, "upper bound of the y axis")->required();
    cmd->add_option("--y-steps", y_steps, "number of y values, >= 2")->capture_default_str();
    cmd->add_option("--c1", model.c1, "fixed marginal cost of firm 1, price units");
    cmd->add_option("--c2", model.c2, "fixed marginal cost of firm 2, price units");
    cmd->add_option("--c", model.c, "fixed common marginal cost, price units");
    cmd->add_option("--k1", model.k1, "fixed adjustment speed of firm 1");
    cmd->add_option("--k2", model.k2, "fixed adjustment speed of firm 2");
    cmd->add_option("--k", model.k, "fixed common adjustment speed");
    cmd->add_option("--jobs", jobs, "worker threads (0: all cores)")->capture_default_str();
    cmd->add_option("--output", output, "CSV destination, - for stdout")->capture_default_str();
    cmd->callback([this] { run(); });
  }

  void run() {
    using namespace stability;
    ScanSpec spec;
    const BigRational a = exact_flag("alpha", model.alpha);
    if (a == BigRational(1, 2)) {
      spec.alpha = ExactAlpha::Half;
    } else if (a == BigRational(1, 3)) {
      spec.alpha = ExactAlpha::Third;
    } else {
      throw UsageError("scan needs --alpha 1/2 or 1/3");
    }
    try {
      spec.x = {parse_axis(x_axis), exact_flag("x-from", x_from), exact_flag("x-to", x_to), x_steps};
      spec.y = {parse_axis(y_axis), exact_flag("y-from", y_from), exact_flag("y-to", y_to), y_steps};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const std::pair<const char*, const std::string*> fixed[] = {{"c1", &model.c1}, {"c2", &model.c2},
                                                               {"c", &model.c},   {"k1", &model.k1},
                                                               {"k2", &model.k2}, {"k", &model.k}};
    for (const auto& [name, value] : fixed) {
      if (value->empty()) continue;
      const ScanAxis axis = parse_axis(name);
      if (axis == spec.x.axis || axis == spec.y.axis)
        throw UsageError(std::string("--") + name + " is also a scan axis");
      spec.fixed[axis] = exact_flag(name, *value);
    }
    spec.jobs = jobs;
    Output out(output);
    std::vector<ScanCell> cells;
    try {
      cells = region_scan(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    write_scan_csv(out.stream(), spec, cells);
    out.finish();
    std::size_t stable = 0, disagree = 0;
    for (const auto& c : cells) {
      stable += c.result.stable;
      disagree += !c.result.jury_agrees;
    }
    out.summary() << json{{"cells", cells.size()}, {"stable", stable}, {"jury_disagreements", disagree}}.dump()
                  << '\n';
    if (disagree) status = kExitFailure;
  }
};

struct DynamicsFlags {
  double x0 = 0, y0 = 0;
  dynamics::Settings settings;
  unsigned jobs = 0;
  std::string output = "-";

  void add(CLI::App* cmd) {
    cmd->add_option("--x0", x0, "initial price of firm 1")->required();
    cmd->add_option("--y0", y0, "initial price of firm 2")->required();
    cmd->add_option("--transient", settings.transient, "iterations discarded before sampling")->capture_default_str();
    cmd->add_option("--samples", settings.samples, "iterations kept per parameter value (>= 200)")
        ->capture_default_str();
    cmd->add_option("--tolerance", settings.tolerance, "relative tolerance for period detection")
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "worker threads (0: all cores)")->capture_default_str();
    cmd->add_option("--output", output, "CSV destination, - for stdout")->capture_default_str();
  }

  PriceState initial() const {
    if (!(x0 > 0 && y0 > 0)) throw UsageError("--x0 and --y0 must be positive");
    return {x0, y0};
  }
};

dynamics::Param param_flag(const std::string& flag, const std::string& name) {
  try {
    return dynamics::parse_param(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + flag + ": expected alpha, c1, c2, c, k1, k2 or k, got '" + name + "'");
  }
}

struct Bifurcation1dCmd {
  ModelFlags model;
  DynamicsFlags dyn;
  std::string vary, from, to;
  int steps = 601;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("bifurcation-1d", "Long-run prices against one parameter (CSV: param,p1,p2)");
    cmd->add_option("--vary", vary, "parameter to vary: alpha, c1, c2, c, k1, k2 or k")->required();
    cmd->add_option("--from", from, "first value")->required();
    cmd->add_option("--to", to, "last value")->required();
    cmd->add_option("--steps", steps, "number of parameter values")->capture_default_str();
    model.add(cmd, true);
    dyn.add(cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto p = param_flag("vary", vary);
    model.seed(p, from);
    const ModelParams base = model.numeric();
    const double lo = numeric_flag("from", from), hi = numeric_flag("to", to);
    Output out(dyn.output);
    std::vector<dynamics::Scan1dPoint> rows;
    try {
      rows = dynamics::bifurcation_scan_1d(p, lo, hi, steps, base, dyn.initial(), dyn.settings, dyn.jobs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    dynamics::write_scan_1d_csv(out.stream(), rows);
    out.finish();
    std::vector<int> codes;
    for (const auto& r : rows) codes.push_back(r.orbit.code());
    out.summary() << json{{"values", rows.size()}, {"class_codes", histogram(codes)}}.dump() << '\n';
  }
};

struct Bifurcation2dCmd {
  ModelFlags model;
  DynamicsFlags dyn;
  std::string x_param = "k1", y_param = "k2", x_from, x_to, y_from, y_to;
  int x_steps = 200, y_steps = 200;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("bifurcation-2d", "Orbit class over a 2-D parameter grid (CSV: x,y,class_code)");
    cmd->add_option("--x", x_param, "horizontal parameter")->capture_default_str();
    cmd->add_option("--x-from", x_from, "lower bound of x")->required();
    cmd->add_option("--x-to", x_to, "upper bound of x")->required();
    cmd->add_option("--x-steps", x_steps, "number of x values")->capture_default_str();
    cmd->add_option("--y", y_param, "vertical parameter")->capture_default_str();
    cmd->add_option("--y-from", y_from, "lower bound of y")->required();
    cmd->add_option("--y-to", y_to, "upper bound of y")->required();
    cmd->add_option("--y-steps", y_steps, "number of y values")->capture_default_str();
    model.add(cmd, true);
    dyn.add(cmd);
    cmd->footer("Class codes: 0 escaped, 1 fixed point, 2..25 period, 26 aperiodic or period above 25.");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto px = param_flag("x", x_param), py = param_flag("y", y_param);
    if (px == py) throw UsageError("--x and --y must differ");
    model.seed(px, x_from);
    model.seed(py, y_from);
    const ModelParams base = model.numeric();
    Output out(dyn.output);
    dynamics::Grid2d g;
    try {
      g = dynamics::bifurcation_scan_2d(px, numeric_flag("x-from", x_from), numeric_flag("x-to", x_to), x_steps, py,
                                        numeric_flag("y-from", y_from), numeric_flag("y-to", y_to), y_steps, base,
                                        dyn.initial(), dyn.settings, dyn.jobs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    dynamics::write_scan_2d_csv(out.stream(), g);
    out.finish();
    out.summary() << json{{"cells", g.codes.size()}, {"class_codes", histogram(g.codes)}}.dump() << '\n';
  }
};

struct ContinuationCmd {
  ModelFlags model;
  std::string from = "0.54", to = "0.6", output = "-";
  int steps = 61;
  int status = kExitOk;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("continuation",
                                   "Follow the symmetric 2-cycle in alpha and locate its birth and torus onset");
    cmd->add_option("--from", from, "first alpha")->capture_default_str();
    cmd->add_option("--to", to, "last alpha")->capture_default_str();
    cmd->add_option("--steps", steps, "number of alpha values")->capture_default_str();
    cmd->add_option("--c", model.c, "common marginal cost, price units")->required();
    cmd->add_option("--k", model.k, "common adjustment speed")->required();
    cmd->add_option("--output", output, "CSV destination, - for stdout")->capture_default_str();
    cmd->callback([this] { run(); });
  }

  void run() {
    model.alpha = from;
    const ModelParams base = model.numeric();
    Output out(output);
    dynamics::ContinuationResult r;
    try {
      r = dynamics::two_cycle_continuation(base, numeric_flag("from", from), numeric_flag("to", to), steps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    dynamics::write_continuation_csv(out.stream(), r);
    out.finish();
    json s{{"branch_found", r.branch_found}, {"ns_found", r.ns_found}};
    s["branch_alpha"] = r.branch_found ? json(r.branch_alpha) : json(nullptr);
    s["ns_alpha"] = r.ns_found ? json(r.ns_alpha) : json(nullptr);
    out.summary() << s.dump() << '\n';
    if (!r.branch_found) status = kExitFailure;
  }
};

struct StaticsCmd {
  std::string alpha, c;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("statics", "Symmetric equilibrium prices, profits, surplus and welfare");
    cmd->add_option("--alpha", alpha, "substitutability degree in (0,1)")->required();
    cmd->add_option("--c", c, "common marginal cost, price units")->required();
    cmd->callback([this] { run(); });
  }

  static json to_json(const SymmetricStatics& s) {
    return {{"price", s.price},
            {"quantity", s.quantity},
            {"profit", s.profit},
            {"consumer_surplus_each", s.consumer_surplus_each},
            {"welfare", s.welfare}};
  }

  void run() {
    const double a = numeric_flag("alpha", alpha), cost = numeric_flag("c", c);
    if (!(a > 0 && a < 1) || !(cost > 0)) throw UsageError("need 0 < alpha < 1 and c > 0");
    json out = to_json(symmetric_statics(a, cost));
    out["d_dalpha"] = to_json(symmetric_statics_alpha_derivative(a, cost));
    std::cout << out.dump(2) << '\n';
  }
};

struct VerifyCmd {
  bool tables = false, identities = false, strict_printed = false;
  unsigned trials = 20;
  std::uint64_t seed = 0x5EED;
  int status = kExitOk;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "Re-derive the sample tables and resultant identities exactly");
    cmd->add_flag("--tables", tables, "check every sample table row");
    cmd->add_flag("--identities", identities, "check the resultant identities at random rational points");
    cmd->add_option("--trials", trials, "random points per identity")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed for the identity points")->capture_default_str();
    cmd->add_flag("--strict-printed", strict_printed,
                  "also fail when a printed identity holds only after exponent correction");
    cmd->footer("With neither --tables nor --identities, both are checked.");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (!tables && !identities) tables = identities = true;
    json out = json::object();
    bool ok = true;
    for (ExactAlpha a : {ExactAlpha::Half, ExactAlpha::Third}) {
      json section = json::object();
      if (tables) {
        const auto t = stability::verify_sample_table(a);
        section["table"] = {{"rows", t.rows}, {"mismatches", t.mismatches}, {"failures", t.failures}};
        ok &= t.mismatches == 0;
      }
      if (identities) {
        const auto r = stability::verify_resultant_identities(a, trials, seed);
        json list = json::array();
        for (const auto& c : r.checks)
          list.push_back({{"name", c.name},
                          {"printed_holds", c.printed_holds},
                          {"corrected_holds", c.corrected_holds},
                          {"printed_differs", c.corrected},
                          {"trials", c.trials}});
        section["identities"] = list;
        ok &= r.all_corrected_hold();
        if (strict_printed) ok &= r.all_printed_hold();
      }
      out[alpha_label(a)] = section;
    }
    out["ok"] = ok;
    std::cout << out.dump(2) << '\n';
    if (!ok) status = kExitFailure;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic Bertrand duopoly with CES demand: equilibria, stability and bifurcations"};
  app.set_config("--config", "", "TOML/INI file mirroring the flags; one [section] per command");
  app.require_subcommand(1);

  EquilibriumCmd equilibrium;
  StabilityCmd stability_cmd;
  ScanCmd scan;
  Bifurcation1dCmd bif1;
  Bifurcation2dCmd bif2;
  ContinuationCmd continuation;
  StaticsCmd statics;
  VerifyCmd verify;
  equilibrium.add(app);
  stability_cmd.add(app);
  scan.add(app);
  bif1.add(app);
  bif2.add(app);
  continuation.add(app);
  statics.add(app);
  verify.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return std::max({equilibrium.status, stability_cmd.status, scan.status, continuation.status, verify.status});
}
