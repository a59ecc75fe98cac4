#pragma once

#include "bertrand/exact/sturm.hpp"
#include "bertrand/exact/triangular.hpp"
#include "bertrand/model.hpp"

#include <string>
#include <vector>

namespace bertrand {

/// The two substitutability degrees with exact algebraic treatment.
enum class ExactAlpha { Half, Third };

/// Half for alpha == 0.5, Third for alpha == 1.0/3.0; throws
/// std::invalid_argument otherwise.
ExactAlpha exact_alpha(double alpha);
double alpha_value(ExactAlpha a);
std::string alpha_label(ExactAlpha a);

/// The published decompositions of the equilibrium equations. Parameters are
/// c1, c2 (general) or c (symmetric). For alpha = 1/3 the solved variables
/// are x = sqrt(p1), y = sqrt(p2).
std::vector<exact::TriangularSet> triangular_sets(ExactAlpha a, bool symmetric);

/// T12 (alpha = 1/2) or T32 (alpha = 1/3), the set carrying the
/// non-vanishing equilibria.
const exact::TriangularSet& equilibrium_set(ExactAlpha a);

/// Left-hand sides of the equilibrium equations in the set's variables
/// (p1, p2 or x, y), polynomial in c1, c2.
std::vector<exact::RationalPoly> equilibrium_equations(ExactAlpha a);

/// Second solved variable as a polynomial in the first, from the degree-one
/// second member of equilibrium_set(a), with c1 substituted.
exact::UPoly back_substitution(ExactAlpha a, const exact::BigRational& c1);

/// Exactly located non-vanishing equilibria for rational costs.
struct ExactEquilibria {
  ExactAlpha alpha;
  exact::BigRational c1, c2;
  exact::UPoly univariate;                 // first member of the set, specialized
  exact::UPoly second;                     // back_substitution(alpha, c1)
  int raw_positive_roots = 0;              // distinct positive roots of `univariate`
  std::vector<exact::RealRoot> admissible;  // those whose second coordinate is > 0
};

ExactEquilibria exact_equilibria(ExactAlpha a, const exact::BigRational& c1, const exact::BigRational& c2);

/// Prices (p1, p2) of an admissible root, polished by Newton steps in binary64.
PriceState equilibrium_prices(const ExactEquilibria& e, std::size_t index);

struct EquilibriumResult {
  PriceState state;
  double residual = 0.0;  // max_i |step(e)_i - e_i|
  bool certified_unique = false;
  std::string branch;
};

/// Non-vanishing equilibrium. Binary64 costs are converted exactly to
/// rationals for the algebraic cases.
EquilibriumResult solve_equilibrium(const ModelParams& m);

/// Number of admissible positive equilibria (alpha in {1/2, 1/3}).
int count_positive_equilibria(const ModelParams& m);
int count_positive_equilibria(ExactAlpha a, const exact::BigRational& c1, const exact::BigRational& c2);

/// Every positive zero of the published set satisfies the original
/// equilibrium equations to 1e-9 relative.
bool verify_triangular_consistency(ExactAlpha a, const ModelParams& m);

}  // namespace bertrand
