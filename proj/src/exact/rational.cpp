#include "bertrand/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bertrand::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInteger parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInteger z(std::string(s), 10);
  return negative ? BigInteger(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(trim(s.substr(0, slash)));
    BigInteger den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto exp_pos = s.find_first_of("eE"); exp_pos != std::string_view::npos) {
    BigRational mantissa = parse_rational(s.substr(0, exp_pos));
    std::string_view exp_text = s.substr(exp_pos + 1);
    BigInteger e = parse_integer(exp_text);
    if (!e.fits_slong_p() || std::abs(e.get_si()) > 10000)
      throw std::invalid_argument("exponent out of range in '" + std::string(s) + "'");
    long ev = e.get_si();
    BigInteger scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(ev)));
    BigRational result = ev >= 0 ? BigRational(mantissa * scale) : BigRational(mantissa / scale);
    result.canonicalize();
    return result;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = !s.empty() && s.front() == '-';
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    dot = body.find('.');
    std::string digits(body.substr(0, dot));
    std::string frac(body.substr(dot + 1));
    if ((!digits.empty() && !all_digits(digits)) || (!frac.empty() && !all_digits(frac)) ||
        (digits.empty() && frac.empty()))
      throw std::invalid_argument("not a decimal: '" + std::string(s) + "'");
    BigInteger num(digits + frac, 10);
    BigInteger den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    BigRational q(negative ? BigInteger(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return BigRational(parse_integer(s));
}

BigRational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot rationalize a non-finite value");
  BigRational q(value);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_canonical(const BigRational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

int sign(const BigRational& q) { return sgn(q); }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

BigRational midpoint(const BigRational& lo, const BigRational& hi) {
  BigRational m = (lo + hi) / 2;
  m.canonicalize();
  return m;
}

}  // namespace bertrand::exact
