#pragma once

#include "bertrand/equilibrium.hpp"
#include "bertrand/exact/poly.hpp"
#include "bertrand/model.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bertrand::stability {

using exact::BigInteger;
using exact::BigRational;
using exact::RationalPoly;

/// Numeric CD values within this distance of zero are treated as lying on a
/// bifurcation locus.
inline constexpr double kCriticalBand = 1e-9;

enum class Bifurcation { None, Fold, PeriodDoubling, NeimarkSacker, Critical };
std::string to_string(Bifurcation b);

struct JuryReport {
  double trace = 0.0;
  double det = 0.0;
  double cd1 = 0.0;  // CP(1)  = 1 - tr + det
  double cd2 = 0.0;  // CP(-1) = 1 + tr + det
  double cd3 = 0.0;  // 1 - det
  bool stable = false;
  /// Fold, PeriodDoubling or NeimarkSacker when exactly one CD is inside the
  /// band; Critical when several are; None otherwise.
  Bifurcation indicated = Bifurcation::None;
  bool near_boundary() const { return indicated != Bifurcation::None; }
};

/// Throws std::domain_error on non-finite entries.
JuryReport jury(const Matrix2& J, double band = kCriticalBand);

/// Critical value of c^2 for the symmetric equilibrium; stable iff c^2 is
/// strictly larger.
double symmetric_threshold(ExactAlpha a, double k1, double k2);

/// Boundary polynomials in (c1, c2, k), k1 = k2 = k.
struct CriticalPolynomials {
  RationalPoly r1, r2, r3, r4, a1, a2, a3;
  /// Lookup by name ("R1".."R4", "A1".."A3").
  const RationalPoly& operator[](std::string_view name) const;
  static const std::array<std::string_view, 7>& names();
};

const CriticalPolynomials& critical_polynomials();

/// Transcription text of one polynomial, one signed term per line.
std::string_view critical_polynomial_text(std::string_view name);

/// One Jury quantity as N / (m * u^a * v^b * (u + v)^c), where u, v are the
/// set's solved variables (p1, p2 or x, y), N has integer coefficients in
/// (u, v, c1, c2, k) and no monomial or (u + v) factor, and m > 0 shares no
/// factor with the content of N.
struct CdFraction {
  RationalPoly numer;
  BigInteger m;
  unsigned a = 0, b = 0, c = 0;
  std::string u, v;

  /// numer * denom, the denominator being m u^a v^b (u+v)^c.
  RationalPoly numer_times_denom() const;
  RationalPoly denom() const;
};

/// CD1, CD2, CD3 of the map's Jacobian at a generic price pair, k1 = k2 = k.
/// For alpha = 1/3 the Jacobian is taken with respect to prices and expressed
/// in x = sqrt(p1), y = sqrt(p2).
const std::array<CdFraction, 3>& jury_fractions(ExactAlpha a);

struct Classification {
  bool stable = false;
  bool algebraic = false;                // exact sign rule applied
  std::map<std::string, int> signs;      // exact signs of the polynomials used
  std::string rule;                      // condition that decided the verdict
  JuryReport jury;                       // numeric report at the equilibrium
  PriceState equilibrium;
  bool jury_agrees = true;               // numeric verdict matches, or within band
};

/// Exact classification on the k1 = k2 = k slice.
Classification classify_point(ExactAlpha a, const BigRational& c1, const BigRational& c2, const BigRational& k);

/// With k1 != k2 only the numeric Jury verdict is available (rule reports it).
Classification classify_point(ExactAlpha a, const BigRational& c1, const BigRational& c2, const BigRational& k1,
                              const BigRational& k2);

/// A published sample point with its stable flag and two sign columns
/// (R1, R2 for alpha = 1/2; R3, R4 for alpha = 1/3).
struct SampleRow {
  BigRational c1, c2, k;
  bool stable;
  int sign_first;
  int sign_second;
};

const std::vector<SampleRow>& sample_table(ExactAlpha a);

struct TableCheck {
  std::size_t rows = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;
};

TableCheck verify_sample_table(ExactAlpha a);

// Region scans.

enum class ScanAxis { C1, C2, C, K, K1, K2 };
ScanAxis parse_axis(std::string_view name);
std::string to_string(ScanAxis axis);

struct AxisRange {
  ScanAxis axis;
  BigRational lo, hi;
  unsigned steps = 2;  // number of grid values, >= 2
  BigRational at(unsigned i) const;
};

struct ScanSpec {
  ExactAlpha alpha = ExactAlpha::Half;
  AxisRange x, y;
  /// Values for parameters not on an axis; c sets both costs, k both speeds.
  std::map<ScanAxis, BigRational> fixed;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct ScanCell {
  BigRational x, y;
  Classification result;
};

/// Row-major (y outer, x inner). Throws std::invalid_argument on bad bounds.
std::vector<ScanCell> region_scan(const ScanSpec& spec);
void write_scan_csv(std::ostream& out, const ScanSpec& spec, const std::vector<ScanCell>& cells);

// Resultant identities.

struct IdentityCheck {
  std::string name;       // e.g. "res(numer(CD2), T32)"
  bool printed_holds = true;
  bool corrected_holds = true;
  bool corrected = false;  // the printed right-hand side differs from the corrected one
  unsigned trials = 0;
  std::vector<std::string> failures;  // first few mismatching points
};

struct IdentityReport {
  ExactAlpha alpha;
  std::vector<IdentityCheck> checks;
  bool all_printed_hold() const;
  bool all_corrected_hold() const;
};

/// Evaluates every displayed identity at `trials` random rational points
/// (c1, c2, k). The left side is computed by iterated Sylvester resultants.
IdentityReport verify_resultant_identities(ExactAlpha a, unsigned trials = 20, std::uint64_t seed = 0x5EED);

}  // namespace bertrand::stability
