#pragma once

#include "bertrand/exact/upoly.hpp"

#include <vector>

namespace bertrand::exact {

/// Sturm chain p, p', -rem(p, p'), ... over Q.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);

  const std::vector<UPoly>& chain() const { return chain_; }

  int sign_changes_at(const BigRational& x) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const BigRational& lo, const BigRational& hi) const;
  /// Distinct real roots in (lo, +inf).
  int count_roots_above(const BigRational& lo) const;

 private:
  std::vector<UPoly> chain_;
};

/// Distinct real roots of `p` in (0, +inf). Throws on the zero polynomial.
int sturm_positive_root_count(const RationalPoly& p);
int sturm_positive_root_count(const UPoly& p);

/// Isolating interval [lo, hi] holding exactly one root. `lo == hi` means
/// the root is the rational `lo`.
struct RootInterval {
  BigRational lo;
  BigRational hi;

  bool is_exact() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
};

/// 2^-40, the default isolation width.
BigRational default_isolation_tolerance();

/// Positive real roots, each isolated in an interval of width <= tol.
/// Repeated roots are reduced first (p / gcd(p, p')), so each distinct root
/// appears once.
std::vector<RootInterval> isolate_positive_roots(const RationalPoly& p,
                                                 const BigRational& tol = default_isolation_tolerance());
std::vector<RootInterval> isolate_positive_roots(const UPoly& p,
                                                 const BigRational& tol = default_isolation_tolerance());

/// Real roots in (lo, hi], same conventions.
std::vector<RootInterval> isolate_roots(const UPoly& p, const BigRational& lo, const BigRational& hi,
                                        const BigRational& tol = default_isolation_tolerance());

/// Upper bound on the absolute value of every root (Cauchy).
BigRational root_bound(const UPoly& p);

/// Real algebraic number: the unique root of a squarefree polynomial inside
/// an isolating interval. Supports exact sign determination of other
/// polynomials at the root.
class RealRoot {
 public:
  RealRoot(UPoly defining, RootInterval interval);

  const UPoly& defining() const { return defining_; }
  const RootInterval& interval() const { return interval_; }

  /// Halves the interval until its width is <= tol.
  void refine(const BigRational& tol);
  double approximate() const;

  /// Exact sign (-1, 0, +1) of g at this root.
  int sign_of(const UPoly& g);

 private:
  void bisect();

  UPoly defining_;
  RootInterval interval_;
};

}  // namespace bertrand::exact
