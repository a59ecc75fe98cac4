#include "bertrand/exact/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bertrand::exact {

std::vector<std::string> merge_variables(const std::vector<std::string>& first,
                                         const std::vector<std::string>& second) {
  std::vector<std::string> merged = first;
  for (const auto& name : second)
    if (std::find(merged.begin(), merged.end(), name) == merged.end()) merged.push_back(name);
  return merged;
}

RationalPoly::RationalPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
}

RationalPoly::RationalPoly(std::vector<std::string> variables, TermMap terms)
    : RationalPoly(std::move(variables)) {
  for (auto& [exps, coeff] : terms) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("exponent vector length does not match variable count");
    add_term(exps, coeff);
  }
}

RationalPoly RationalPoly::constant(std::vector<std::string> variables, const BigRational& value) {
  RationalPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

RationalPoly RationalPoly::variable(std::vector<std::string> variables, std::string_view name) {
  RationalPoly p(std::move(variables));
  auto idx = p.index_of(name);
  if (!idx) {
    p.vars_.emplace_back(name);
    idx = p.vars_.size() - 1;
  }
  Exponents e(p.vars_.size(), 0);
  e[*idx] = 1;
  p.add_term(e, BigRational(1));
  return p;
}

void RationalPoly::add_term(const Exponents& exps, const BigRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RationalPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

BigRational RationalPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? BigRational(0) : terms_.begin()->second;
}

std::optional<std::size_t> RationalPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool RationalPoly::involves(std::string_view name) const { return degree(name) > 0; }

int RationalPoly::degree(std::string_view name) const {
  if (terms_.empty()) return -1;
  auto idx = index_of(name);
  if (!idx) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return static_cast<int>(d);
}

int RationalPoly::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

std::vector<RationalPoly> RationalPoly::coefficients(std::string_view name) const {
  int d = degree(name);
  if (d < 0) return {};
  std::vector<RationalPoly> out(static_cast<std::size_t>(d) + 1, RationalPoly(vars_));
  auto idx = index_of(name);
  for (const auto& [e, c] : terms_) {
    unsigned power = idx ? e[*idx] : 0;
    Exponents rest = e;
    if (idx) rest[*idx] = 0;
    out[power].add_term(rest, c);
  }
  return out;
}

RationalPoly RationalPoly::leading_coefficient(std::string_view name) const {
  auto cs = coefficients(name);
  return cs.empty() ? RationalPoly(vars_) : cs.back();
}

RationalPoly RationalPoly::derivative(std::string_view name) const {
  RationalPoly out(vars_);
  auto idx = index_of(name);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents d = e;
    d[*idx] -= 1;
    out.add_term(d, c * e[*idx]);
  }
  return out;
}

RationalPoly RationalPoly::substitute(const Assignment& values) const {
  std::vector<std::size_t> keep;
  std::vector<std::string> kept_vars;
  std::vector<const BigRational*> bound(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) {
      bound[i] = &it->second;
    } else {
      keep.push_back(i);
      kept_vars.push_back(vars_[i]);
    }
  }
  // Cache powers: substitution is hot in the identity checks.
  std::vector<std::vector<BigRational>> powers(vars_.size());
  RationalPoly out(kept_vars);
  for (const auto& [e, c] : terms_) {
    BigRational coeff = c;
    Exponents rest(keep.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (bound[i]) {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(BigRational(1));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * *bound[i]);
        coeff *= cache[e[i]];
      }
    }
    for (std::size_t j = 0; j < keep.size(); ++j) rest[j] = e[keep[j]];
    out.add_term(rest, coeff);
  }
  return out;
}

RationalPoly RationalPoly::compose(std::string_view name, const RationalPoly& value) const {
  auto idx = index_of(name);
  std::vector<std::string> rest_vars;
  for (const auto& v : vars_)
    if (v != name) rest_vars.push_back(v);
  if (!idx) return with_variables(merge_variables(rest_vars, value.variables()));

  std::vector<std::string> target = merge_variables(rest_vars, value.variables());
  RationalPoly value_t = value.with_variables(target);
  // Horner in `name`, coefficients re-embedded without it.
  auto coeffs = coefficients(name);
  RationalPoly acc(target);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * value_t;
    acc += it->with_variables(target);
  }
  return acc;
}

BigRational RationalPoly::evaluate(const Assignment& values) const {
  for (const auto& v : vars_)
    if (values.find(v) == values.end())
      throw std::invalid_argument("no value assigned to variable '" + v + "'");
  RationalPoly r = substitute(values);
  return r.constant_value();
}

RationalPoly RationalPoly::with_variables(std::vector<std::string> variables) const {
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < variables.size(); ++j)
      if (variables[j] == vars_[i]) map[i] = j;
  }
  RationalPoly out(std::move(variables));
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) throw std::invalid_argument("variable '" + vars_[i] + "' missing from target list");
      ne[*map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

RationalPoly RationalPoly::pruned() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool any = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] > 0; });
    if (any) used.push_back(vars_[i]);
  }
  return with_variables(used);
}

RationalPoly RationalPoly::pow(unsigned exponent) const {
  RationalPoly result = constant(vars_, BigRational(1));
  RationalPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void RationalPoly::unify_with(const RationalPoly& other) {
  if (vars_ == other.vars_) return;
  *this = with_variables(merge_variables(vars_, other.vars_));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  unify_with(rhs);
  if (rhs.vars_ == vars_) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  } else {
    RationalPoly r = rhs.with_variables(vars_);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
  }
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) { return *this += -rhs; }

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) { return *this = *this * rhs; }

RationalPoly& RationalPoly::operator*=(const BigRational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  std::vector<std::string> vars = merge_variables(lhs.vars_, rhs.vars_);
  const RationalPoly a = lhs.vars_ == vars ? lhs : lhs.with_variables(vars);
  const RationalPoly b = rhs.vars_ == vars ? rhs : rhs.with_variables(vars);
  RationalPoly out(vars);
  RationalPoly::Exponents e(vars.size());
  BigRational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

bool operator==(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.vars_ == rhs.vars_) return lhs.terms_ == rhs.terms_;
  auto vars = merge_variables(lhs.vars_, rhs.vars_);
  return lhs.with_variables(vars).terms_ == rhs.with_variables(vars).terms_;
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << exact::to_string(it->second);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned p = it->first[i];
      if (p == 0) continue;
      os << '*' << vars_[i];
      if (p > 1) os << '^' << p;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, bool fixed)
      : text_(text), vars_(std::move(vars)), fixed_(fixed) {}

  RationalPoly run() {
    RationalPoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p.with_variables(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPoly expression() {
    RationalPoly acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc += signed_term();
      } else if (accept('-')) {
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  RationalPoly signed_term() {
    if (accept('-')) return -signed_term();
    if (accept('+')) return signed_term();
    return term();
  }

  RationalPoly term() {
    RationalPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        RationalPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= BigRational(1) / d.constant_value();
      } else {
        return acc;
      }
    }
  }

  RationalPoly power() {
    RationalPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  RationalPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      RationalPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return RationalPoly::constant(vars_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        if (fixed_) fail("unknown variable '" + name + "'");
        vars_.push_back(name);
      }
      return RationalPoly::variable(vars_, name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  bool fixed_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly RationalPoly::parse(std::string_view text, std::vector<std::string> variables) {
  bool fixed = !variables.empty();
  return Parser(text, std::move(variables), fixed).run();
}

// ---------------------------------------------------------------------------

RationalPoly exact_divide(const RationalPoly& numerator, const RationalPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto vars = merge_variables(numerator.variables(), divisor.variables());
  RationalPoly rem = numerator.with_variables(vars);
  const RationalPoly d = divisor.with_variables(vars);
  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  RationalPoly quotient(vars);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    RationalPoly::Exponents qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("polynomial division is not exact");
      qe[i] = re[i] - lead_e[i];
    }
    RationalPoly t(vars, {{qe, rc / lead_c}});
    quotient += t;
    rem -= t * d;
  }
  return quotient;
}

std::pair<BigInteger, RationalPoly> clear_denominators(const RationalPoly& p) {
  BigInteger l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return {l, p * BigRational(l)};
}

BigInteger integer_content(const RationalPoly& p) {
  BigInteger g = 0;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw std::invalid_argument("integer_content: polynomial is not integral");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  return g;
}

}  // namespace bertrand::exact
