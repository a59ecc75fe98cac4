#include "bertrand/exact/resultant.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bertrand::exact {

namespace {

std::vector<std::string> without(const std::vector<std::string>& vars, std::string_view v) {
  std::vector<std::string> out;
  for (const auto& name : vars)
    if (name != v) out.push_back(name);
  return out;
}

bool only_in(const RationalPoly& p, std::string_view var) {
  const auto used = p.pruned().variables();
  return used.empty() || (used.size() == 1 && used[0] == var);
}

// Sum_i h_i (-l0)^i l1^(n-i), where h = sum h_i var^i has degree n and
// lin = l1*var + l0. Equals res(lin, h).
RationalPoly linear_elimination(const RationalPoly& h, const RationalPoly& lin, std::string_view var,
                                const std::vector<std::string>& rest) {
  const auto hc = h.coefficients(var);
  const auto lc = lin.coefficients(var);
  const RationalPoly l0 = lc[0].with_variables(rest);
  const RationalPoly l1 = lc[1].with_variables(rest);
  const std::size_t n = hc.size() - 1;

  std::vector<RationalPoly> l1_pow(n + 1);
  l1_pow[0] = RationalPoly::constant(rest, BigRational(1));
  for (std::size_t i = 1; i <= n; ++i) l1_pow[i] = l1_pow[i - 1] * l1;

  RationalPoly acc(rest);
  RationalPoly neg_l0_pow = RationalPoly::constant(rest, BigRational(1));
  const RationalPoly neg_l0 = -l0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!hc[i].is_zero()) acc += hc[i].with_variables(rest) * neg_l0_pow * l1_pow[n - i];
    if (i < n) neg_l0_pow *= neg_l0;
  }
  return acc;
}

}  // namespace

PolyMatrix sylvester_matrix(const RationalPoly& a, const RationalPoly& b, std::string_view var) {
  const auto vars = merge_variables(a.variables(), b.variables());
  const RationalPoly A = a.with_variables(vars);
  const RationalPoly B = b.with_variables(vars);
  const int m = A.degree(var);
  const int l = B.degree(var);
  if (m < 0 || l < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const auto ca = A.coefficients(var);
  const auto cb = B.coefficients(var);
  const std::size_t n = static_cast<std::size_t>(m + l);
  PolyMatrix M(n, std::vector<RationalPoly>(n, RationalPoly(vars)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j) M[i][i + j] = ca[m - j];
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(l); ++j) M[l + i][i + j] = cb[l - j];
  return M;
}

RationalPoly determinant(PolyMatrix M) {
  const std::size_t n = M.size();
  if (n == 0) return RationalPoly::constant({}, BigRational(1));
  const auto vars = M[0][0].variables();
  int sign = 1;
  RationalPoly prev = RationalPoly::constant(vars, BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M[r][k].is_zero()) ++r;
      if (r == n) return RationalPoly(vars);
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RationalPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = exact_divide(t, prev);
      }
    }
    prev = M[k][k];
  }
  RationalPoly d = M[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

RationalPoly sylvester_resultant_bareiss(const RationalPoly& a, const RationalPoly& b, std::string_view var) {
  if (!a.involves(var) && !b.involves(var))
    throw std::invalid_argument("resultant: variable '" + std::string(var) + "' occurs in neither input");
  const auto vars = merge_variables(a.variables(), b.variables());
  const auto rest = without(vars, var);
  if (a.is_zero() || b.is_zero()) return RationalPoly(rest);
  return determinant(sylvester_matrix(a, b, var)).with_variables(rest);
}

RationalPoly sylvester_resultant(const RationalPoly& a, const RationalPoly& b, std::string_view var) {
  if (!a.involves(var) && !b.involves(var))
    throw std::invalid_argument("resultant: variable '" + std::string(var) + "' occurs in neither input");
  auto vars = merge_variables(a.variables(), b.variables());
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.emplace_back(var);
  const auto rest = without(vars, var);
  if (a.is_zero() || b.is_zero()) return RationalPoly(rest);

  const RationalPoly A = a.with_variables(vars);
  const RationalPoly B = b.with_variables(vars);
  const int m = A.degree(var);
  const int l = B.degree(var);
  if (m == 0) return A.pow(static_cast<unsigned>(l)).with_variables(rest);
  if (l == 0) return B.pow(static_cast<unsigned>(m)).with_variables(rest);

  if (l == 1) {
    RationalPoly r = linear_elimination(A, B, var, rest);
    return m % 2 == 1 ? -r : r;
  }
  if (m == 1) return linear_elimination(B, A, var, rest);

  if (only_in(A, var) && only_in(B, var)) {
    const std::vector<std::string> single{std::string(var)};
    BigRational r = resultant(UPoly::from_poly(A.with_variables(single)), UPoly::from_poly(B.with_variables(single)));
    return RationalPoly::constant(rest, r);
  }
  return determinant(sylvester_matrix(A, B, var)).with_variables(rest);
}

BigRational resultant(const UPoly& a0, const UPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return BigRational(0);
  UPoly a = a0, b = b0;
  int n = a.degree(), m = b.degree();
  if (n == 0 && m == 0) return BigRational(1);
  if (m == 0) return pow(b.leading(), static_cast<unsigned>(n));
  if (n == 0) return pow(a.leading(), static_cast<unsigned>(m));

  BigRational acc = 1;
  if (n < m) {
    std::swap(a, b);
    std::swap(n, m);
    if ((n * m) % 2 == 1) acc = -acc;
  }
  while (true) {
    UPoly r = remainder(a, b);
    if (r.is_zero()) return BigRational(0);
    const int k = r.degree();
    if ((n * m) % 2 == 1) acc = -acc;
    acc *= pow(b.leading(), static_cast<unsigned>(n - k));
    a = std::move(b);
    b = std::move(r);
    n = m;
    m = k;
    if (m == 0) return acc * pow(b.leading(), static_cast<unsigned>(n));
  }
}

}  // namespace bertrand::exact
