#pragma once

#include "bertrand/exact/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bertrand::exact {

using Assignment = std::map<std::string, BigRational, std::less<>>;

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables.
///
/// Zero coefficients are never stored, and every exponent vector has one
/// entry per variable. Binary operations on polynomials with different
/// variable lists first merge the lists (left operand's order first).
class RationalPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, BigRational>;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<std::string> variables);
  RationalPoly(std::vector<std::string> variables, TermMap terms);

  static RationalPoly constant(std::vector<std::string> variables, const BigRational& value);
  static RationalPoly variable(std::vector<std::string> variables, std::string_view name);

  /// Parses sums of products of rational numbers and variables, with `^`
  /// for non-negative integer powers and parentheses for grouping, e.g.
  /// "3/4*x^2*y - (x + 1)^2". When `variables` is empty the variable list is
  /// taken in order of first appearance; otherwise names outside it are an
  /// error.
  static RationalPoly parse(std::string_view text, std::vector<std::string> variables = {});

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_value() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// True when some term has a positive power of `name`.
  bool involves(std::string_view name) const;
  /// Degree in `name`; -1 for the zero polynomial, 0 if `name` is absent.
  int degree(std::string_view name) const;
  int total_degree() const;

  /// Coefficients of `name`^0, ..., `name`^d as polynomials over the same
  /// variable list (with `name` not occurring).
  std::vector<RationalPoly> coefficients(std::string_view name) const;
  RationalPoly leading_coefficient(std::string_view name) const;

  RationalPoly derivative(std::string_view name) const;

  /// Substitutes rationals for some variables and drops them from the list.
  RationalPoly substitute(const Assignment& values) const;
  /// Replaces `name` by a polynomial and drops it from the list.
  RationalPoly compose(std::string_view name, const RationalPoly& value) const;
  /// Exact value; every variable must be assigned.
  BigRational evaluate(const Assignment& values) const;

  /// Re-embeds into a variable list that contains every involved variable.
  RationalPoly with_variables(std::vector<std::string> variables) const;
  /// Removes variables that no term uses.
  RationalPoly pruned() const;

  RationalPoly pow(unsigned exponent) const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const BigRational& rhs);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator*(RationalPoly lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(const BigRational& lhs, RationalPoly rhs) { return rhs *= lhs; }

  /// Equal as polynomials (variable lists may differ in unused names/order).
  friend bool operator==(const RationalPoly& lhs, const RationalPoly& rhs);

  /// Canonical text: `coeff*var^e*...` terms joined by " + ", in descending
  /// lexicographic order of exponent vectors; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const BigRational& coeff);
  void unify_with(const RationalPoly& other);

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Merges two variable lists, keeping `first`'s order and appending unseen
/// names from `second`.
std::vector<std::string> merge_variables(const std::vector<std::string>& first,
                                         const std::vector<std::string>& second);

/// Exact quotient `numerator / divisor`; throws std::domain_error when the
/// division leaves a remainder.
RationalPoly exact_divide(const RationalPoly& numerator, const RationalPoly& divisor);

/// Returns (L, L*p) where L is the least common multiple of the coefficient
/// denominators, so L*p has integer coefficients.
std::pair<BigInteger, RationalPoly> clear_denominators(const RationalPoly& p);

/// Greatest common divisor of the numerators of an integral polynomial.
BigInteger integer_content(const RationalPoly& p);

}  // namespace bertrand::exact
