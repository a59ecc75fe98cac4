#pragma once

#include "bertrand/exact/poly.hpp"

#include <string>
#include <vector>

namespace bertrand::exact {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> ascending);

  /// Converts a polynomial involving at most one variable.
  static UPoly from_poly(const RationalPoly& p);
  RationalPoly to_poly(const std::string& variable) const;

  const std::vector<BigRational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigRational& leading() const { return c_.back(); }
  BigRational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

  BigRational operator()(const BigRational& x) const;
  double evaluate(double x) const;
  int sign_at(const BigRational& x) const;

  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const BigRational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

 private:
  void normalize();
  std::vector<BigRational> c_;
};

struct DivisionResult {
  UPoly quotient;
  UPoly remainder;
};

DivisionResult divide(const UPoly& dividend, const UPoly& divisor);
UPoly remainder(const UPoly& dividend, const UPoly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'): same distinct roots, all simple.
UPoly squarefree_part(const UPoly& p);

/// Divides out the largest power of x.
UPoly strip_zero_roots(const UPoly& p);

}  // namespace bertrand::exact
