#include "bertrand/exact/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bertrand::exact {

UPoly::UPoly(std::vector<BigRational> ascending) : c_(std::move(ascending)) { normalize(); }

void UPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const RationalPoly& p) {
  const RationalPoly q = p.pruned();
  if (q.variables().size() > 1)
    throw std::invalid_argument("expected a univariate polynomial, got " + p.to_string());
  if (q.is_zero()) return {};
  std::vector<BigRational> c(static_cast<std::size_t>(std::max(q.total_degree(), 0)) + 1);
  for (const auto& [e, coeff] : q.terms()) c[e.empty() ? 0 : e[0]] = coeff;
  return UPoly(std::move(c));
}

RationalPoly UPoly::to_poly(const std::string& variable) const {
  RationalPoly::TermMap terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace(RationalPoly::Exponents{static_cast<unsigned>(i)}, c_[i]);
  return RationalPoly({variable}, std::move(terms));
}

BigRational UPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int UPoly::sign_at(const BigRational& x) const { return sgn((*this)(x)); }

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * (BigRational(1) / leading());
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const BigRational& s) {
  if (s == 0) return {};
  UPoly out = a;
  for (auto& x : out.c_) x *= s;
  return out;
}

DivisionResult divide(const UPoly& dividend, const UPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<BigRational> r = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UPoly{}, dividend};
  std::vector<BigRational> q(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const BigRational inv_lead = BigRational(1) / divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    BigRational t = r[static_cast<std::size_t>(i)] * inv_lead;
    q[static_cast<std::size_t>(i - dd)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= t * d[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly remainder(const UPoly& dividend, const UPoly& divisor) { return divide(dividend, divisor).remainder; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = remainder(x, y);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return divide(p, g).quotient;
}

UPoly strip_zero_roots(const UPoly& p) {
  const auto& c = p.coefficients();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k == 0 || k == c.size()) return p;
  return UPoly(std::vector<BigRational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

}  // namespace bertrand::exact
