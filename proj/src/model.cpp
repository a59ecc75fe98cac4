#include "bertrand/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bertrand {

namespace {

void require_positive(PriceState p) {
  if (!(p.p1 > 0.0) || !(p.p2 > 0.0))
    throw std::domain_error("prices must be strictly positive, got (" + std::to_string(p.p1) + ", " +
                            std::to_string(p.p2) + ")");
}

double power(double x, double e) { return std::exp(e * std::log(x)); }

// dPi/dp for the firm pricing at `own` against `rival`.
double gradient(double beta, double own, double rival, double cost) {
  const double s = power(own, beta), t = power(rival, beta);
  const double num = -beta * t * own * s + cost * (t * t + (1.0 + beta) * s * t);
  const double sum = s + t;
  return num / (own * own * sum * sum);
}

// Partial derivatives of gradient() with respect to own and rival price.
std::array<double, 2> gradient_partials(double beta, double own, double rival, double cost) {
  const double s = power(own, beta), t = power(rival, beta);
  const double sum = s + t;
  const double N = -beta * t * own * s + cost * (t * t + (1.0 + beta) * s * t);
  const double D = own * own * sum * sum;
  const double N_own = (1.0 + beta) * beta * s * t * (cost / own - 1.0);
  const double D_own = 2.0 * own * sum * sum + 2.0 * own * sum * beta * s;
  const double dt = beta * t / rival;
  const double N_rival = dt * (-beta * own * s + cost * (2.0 * t + (1.0 + beta) * s));
  const double D_rival = 2.0 * own * own * sum * dt;
  return {(N_own * D - N * D_own) / (D * D), (N_rival * D - N * D_rival) / (D * D)};
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void ModelParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must lie in (0, 1)");
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::domain_error("marginal costs must be positive");
  if (!(k1 > 0.0) || !(k2 > 0.0)) throw std::domain_error("adjustment speeds must be positive");
}

AlphaCase alpha_case(double alpha) {
  if (alpha == 0.5) return AlphaCase::Half;
  if (alpha == 1.0 / 3.0) return AlphaCase::Third;
  return AlphaCase::General;
}

QuantityPair demand(const ModelParams& m, PriceState p) {
  require_positive(p);
  const double b = m.beta();
  const double s = power(p.p1, b), t = power(p.p2, b);
  return {t / (p.p1 * (s + t)), s / (p.p2 * (s + t))};
}

PriceState inverse_demand(const ModelParams& m, QuantityPair q) {
  if (!(q.q1 > 0.0) || !(q.q2 > 0.0)) throw std::domain_error("quantities must be strictly positive");
  const double a = m.alpha;
  const double denom = power(q.q1, a) + power(q.q2, a);
  return {power(q.q1, a - 1.0) / denom, power(q.q2, a - 1.0) / denom};
}

double profit(const ModelParams& m, PriceState p, int firm) {
  const QuantityPair q = demand(m, p);
  if (firm == 1) return (p.p1 - m.c1) * q.q1;
  if (firm == 2) return (p.p2 - m.c2) * q.q2;
  throw std::invalid_argument("firm must be 1 or 2");
}

double profit_gradient(const ModelParams& m, PriceState p, int firm) {
  require_positive(p);
  if (firm == 1) return gradient(m.beta(), p.p1, p.p2, m.c1);
  if (firm == 2) return gradient(m.beta(), p.p2, p.p1, m.c2);
  throw std::invalid_argument("firm must be 1 or 2");
}

PriceState step_generic(const ModelParams& m, PriceState p) {
  const double b = m.beta();
  return {p.p1 + m.k1 * gradient(b, p.p1, p.p2, m.c1), p.p2 + m.k2 * gradient(b, p.p2, p.p1, m.c2)};
}

PriceState step_half(const ModelParams& m, PriceState p) {
  const double x = p.p1, y = p.p2;
  const double s2 = (x + y) * (x + y);
  const double f1 = (-y * x * x + (y * y + 2.0 * y * x) * m.c1) / (x * x * s2);
  const double f2 = (-x * y * y + (x * x + 2.0 * x * y) * m.c2) / (y * y * s2);
  return {x + m.k1 * f1, y + m.k2 * f2};
}

PriceState step_third(const ModelParams& m, PriceState p) {
  const double x = std::sqrt(p.p1), y = std::sqrt(p.p2);
  const double s2 = (x + y) * (x + y);
  const double x4 = x * x * x * x, y4 = y * y * y * y;
  const double f1 = (-x * x * x * y + (2.0 * y * y + 3.0 * x * y) * m.c1) / (2.0 * x4 * s2);
  const double f2 = (-y * y * y * x + (2.0 * x * x + 3.0 * x * y) * m.c2) / (2.0 * y4 * s2);
  return {p.p1 + m.k1 * f1, p.p2 + m.k2 * f2};
}

std::optional<PriceState> step(const ModelParams& m, PriceState p) {
  if (!finite_positive(p.p1) || !finite_positive(p.p2)) return std::nullopt;
  PriceState next;
  switch (alpha_case(m.alpha)) {
    case AlphaCase::Half: next = step_half(m, p); break;
    case AlphaCase::Third: next = step_third(m, p); break;
    default: next = step_generic(m, p); break;
  }
  if (!finite_positive(next.p1) || !finite_positive(next.p2)) return std::nullopt;
  return next;
}

Matrix2 jacobian_general(const ModelParams& m, PriceState p) {
  require_positive(p);
  const double b = m.beta();
  const auto g1 = gradient_partials(b, p.p1, p.p2, m.c1);
  const auto g2 = gradient_partials(b, p.p2, p.p1, m.c2);
  return {{{1.0 + m.k1 * g1[0], m.k1 * g1[1]}, {m.k2 * g2[1], 1.0 + m.k2 * g2[0]}}};
}

namespace {

Matrix2 jacobian_half(const ModelParams& m, PriceState p) {
  const double p1 = p.p1, p2 = p.p2, c1 = m.c1, c2 = m.c2, k1 = m.k1, k2 = m.k2;
  const double s3 = std::pow(p1 + p2, 3);
  const double j11 = (std::pow(p1, 6) + 3 * std::pow(p1, 5) * p2 + 3 * std::pow(p1, 4) * p2 * p2 +
                      (p2 * p2 * p2 + 2 * k1 * p2) * p1 * p1 * p1 - 6 * k1 * p2 * p1 * p1 * c1 -
                      6 * k1 * p2 * p2 * p1 * c1 - 2 * c1 * k1 * p2 * p2 * p2) /
                     (p1 * p1 * p1 * s3);
  const double j12 = k1 * (2 * c1 - p1 + p2) / s3;
  const double j21 = k2 * (2 * c2 + p1 - p2) / s3;
  const double j22 = (std::pow(p2, 6) + 3 * p1 * std::pow(p2, 5) + 3 * p1 * p1 * std::pow(p2, 4) +
                      (p1 * p1 * p1 + 2 * k2 * p1) * p2 * p2 * p2 - 6 * k2 * p1 * p2 * p2 * c2 -
                      6 * k2 * p1 * p1 * p2 * c2 - 2 * c2 * k2 * p1 * p1 * p1) /
                     (p2 * p2 * p2 * s3);
  return {{{j11, j12}, {j21, j22}}};
}

Matrix2 jacobian_third(const ModelParams& m, PriceState p) {
  const double p1 = p.p1, p2 = p.p2, c1 = m.c1, c2 = m.c2, k1 = m.k1, k2 = m.k2;
  const double s1 = std::sqrt(p1), s2 = std::sqrt(p2);
  const double q3 = std::pow(s1 + s2, 3);
  auto h = [](double v, double e) { return std::pow(v, e); };
  const double m11 = (12 * h(p1, 4.5) * s2 + 4 * h(p1, 3.5) * h(p2, 1.5) - 15 * c1 * k1 * h(p1, 1.5) * s2 -
                      8 * c1 * k1 * h(p2, 1.5) * s1 + 3 * k1 * h(p1, 2.5) * s2 + 4 * h(p1, 5) +
                      12 * h(p1, 4) * p2 - 21 * c1 * k1 * p1 * p2 + k1 * p1 * p1 * p2) /
                     (4 * h(p1, 3.5) * q3);
  const double m12 = k1 * (s2 * h(p1, 1.5) - p1 * p1 + c1 * s2 * s1 + 3 * p1 * c1) / (4 * p1 * p1 * q3 * s2);
  const double m21 = k2 * (s1 * h(p2, 1.5) + c2 * s2 * s1 + 3 * p2 * c2 - p2 * p2) / (4 * p2 * p2 * q3 * s1);
  const double m22 = (4 * h(p1, 1.5) * h(p2, 3.5) + 12 * h(p2, 4.5) * s1 - 8 * c2 * k2 * h(p1, 1.5) * s2 -
                      15 * c2 * k2 * h(p2, 1.5) * s1 + 3 * k2 * h(p2, 2.5) * s1 + 12 * p1 * h(p2, 4) +
                      4 * h(p2, 5) - 21 * c2 * k2 * p1 * p2 + k2 * p1 * p2 * p2) /
                     (4 * h(p2, 3.5) * q3);
  return {{{m11, m12}, {m21, m22}}};
}

}  // namespace

Matrix2 jacobian(const ModelParams& m, PriceState p) {
  require_positive(p);
  switch (alpha_case(m.alpha)) {
    case AlphaCase::Half: return jacobian_half(m, p);
    case AlphaCase::Third: return jacobian_third(m, p);
    default: return jacobian_general(m, p);
  }
}

Matrix2 jacobian_numeric(const ModelParams& m, PriceState p, double h) {
  require_positive(p);
  Matrix2 J{};
  for (int j = 0; j < 2; ++j) {
    PriceState lo = p, hi = p;
    double& a = j == 0 ? lo.p1 : lo.p2;
    double& b = j == 0 ? hi.p1 : hi.p2;
    const double d = h * (j == 0 ? p.p1 : p.p2);
    a -= d;
    b += d;
    const PriceState fl = step_generic(m, lo), fh = step_generic(m, hi);
    J[0][j] = (fh.p1 - fl.p1) / (2 * d);
    J[1][j] = (fh.p2 - fl.p2) / (2 * d);
  }
  return J;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

double symmetric_equilibrium_price(double alpha, double c) {
  const double b = alpha / (1.0 - alpha);
  return c * (2.0 + b) / b;
}

SymmetricStatics symmetric_statics(double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must lie in (0, 1)");
  if (!(c > 0.0)) throw std::domain_error("marginal cost must be positive");
  const double b = alpha / (1.0 - alpha);
  const double ln2 = std::log(2.0);
  SymmetricStatics s{};
  s.price = c * (2.0 + b) / b;
  s.quantity = b / (2.0 * c * (2.0 + b));
  s.profit = 1.0 / (2.0 + b);
  s.consumer_surplus_each = ln2 / alpha;
  s.welfare = 2.0 * ln2 / alpha + 2.0 / (alpha - 2.0) + 2.0;
  return s;
}

SymmetricStatics symmetric_statics_alpha_derivative(double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must lie in (0, 1)");
  if (!(c > 0.0)) throw std::domain_error("marginal cost must be positive");
  const double ln2 = std::log(2.0);
  const double am2 = (alpha - 2.0) * (alpha - 2.0);
  SymmetricStatics d{};
  d.price = -2.0 * c / (alpha * alpha);
  d.quantity = 1.0 / (am2 * c);
  d.profit = -1.0 / am2;
  d.consumer_surplus_each = -ln2 / (alpha * alpha);
  d.welfare = -2.0 * ln2 / (alpha * alpha) - 2.0 / am2;
  return d;
}

}  // namespace bertrand
