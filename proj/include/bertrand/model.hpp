#pragma once

#include <array>
#include <optional>

namespace bertrand {

/// Duopoly parameters. beta is always derived from alpha.
struct ModelParams {
  double alpha = 0.5;
  double c1 = 0.0;
  double c2 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;

  double beta() const { return alpha / (1.0 - alpha); }
  /// Throws std::domain_error unless 0 < alpha < 1 and c1, c2, k1, k2 > 0.
  void validate() const;
};

struct PriceState {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct QuantityPair {
  double q1 = 0.0;
  double q2 = 0.0;
};

enum class AlphaCase { Half, Third, General };

/// Half for alpha == 0.5 and Third for alpha == 1.0/3.0 (the binary64
/// nearest 1/3); General otherwise.
AlphaCase alpha_case(double alpha);

using Matrix2 = std::array<std::array<double, 2>, 2>;

QuantityPair demand(const ModelParams& m, PriceState p);
PriceState inverse_demand(const ModelParams& m, QuantityPair q);

/// Pi_i = (p_i - c_i) q_i, firm in {1, 2}.
double profit(const ModelParams& m, PriceState p, int firm);
double profit_gradient(const ModelParams& m, PriceState p, int firm);

/// p_i + k_i dPi_i/dp_i with real powers, valid for every alpha.
PriceState step_generic(const ModelParams& m, PriceState p);
/// Closed forms for beta = 1 and beta = 1/2 (in square-root coordinates).
PriceState step_half(const ModelParams& m, PriceState p);
PriceState step_third(const ModelParams& m, PriceState p);

/// One iteration of the adjustment map. Empty when an output price is
/// non-positive or not finite.
std::optional<PriceState> step(const ModelParams& m, PriceState p);

/// Analytic Jacobian of the map. Uses the closed-form entries for
/// alpha = 1/2 and 1/3 and the general-beta derivative otherwise.
Matrix2 jacobian(const ModelParams& m, PriceState p);
Matrix2 jacobian_general(const ModelParams& m, PriceState p);
/// Central differences of step_generic with relative step h.
Matrix2 jacobian_numeric(const ModelParams& m, PriceState p, double h = 1e-6);

Matrix2 multiply(const Matrix2& a, const Matrix2& b);

struct SymmetricStatics {
  double price;
  double quantity;
  double profit;
  double consumer_surplus_each;
  double welfare;
};

/// Equilibrium values for identical marginal costs c1 = c2 = c.
SymmetricStatics symmetric_statics(double alpha, double c);

/// Derivatives of the statics with respect to alpha (closed forms).
SymmetricStatics symmetric_statics_alpha_derivative(double alpha, double c);

/// c (2 + beta) / beta.
double symmetric_equilibrium_price(double alpha, double c);

}  // namespace bertrand
