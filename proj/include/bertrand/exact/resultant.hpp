#pragma once

#include "bertrand/exact/poly.hpp"
#include "bertrand/exact/upoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bertrand::exact {

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

/// (m+l) x (m+l) Sylvester matrix of a (degree m in var) and b (degree l),
/// entries polynomial in the remaining variables.
PolyMatrix sylvester_matrix(const RationalPoly& a, const RationalPoly& b, std::string_view var);

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate division
/// is exact.
RationalPoly determinant(PolyMatrix m);

/// Sylvester resultant of a and b with respect to var.
///
/// Conventions: res(c, b) = c^deg(b) for c constant in var, and a zero input
/// gives zero. When var occurs in neither input the call is rejected with
/// std::invalid_argument.
RationalPoly sylvester_resultant(const RationalPoly& a, const RationalPoly& b, std::string_view var);

/// Same result computed as the determinant of the full Sylvester matrix;
/// used as an independent check of the fast paths.
RationalPoly sylvester_resultant_bareiss(const RationalPoly& a, const RationalPoly& b, std::string_view var);

/// Univariate resultant over Q by the Euclidean remainder sequence.
/// Two constants give 1.
BigRational resultant(const UPoly& a, const UPoly& b);

}  // namespace bertrand::exact
