#include "bertrand/exact/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace bertrand::exact {

namespace {

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  // Working on the squarefree part makes V(a) - V(b) count roots in (a, b]
  // even when a or b is itself a root.
  UPoly q = squarefree_part(p);
  chain_.push_back(q);
  if (q.degree() <= 0) return;
  chain_.push_back(q.derivative());
  while (true) {
    const UPoly& a = chain_[chain_.size() - 2];
    const UPoly& b = chain_.back();
    UPoly r = remainder(a, b);
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::sign_changes_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(x));
  return count_sign_changes(signs);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_sign_changes(signs);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_sign_changes(signs);
}

int SturmSequence::count_roots(const BigRational& lo, const BigRational& hi) const {
  if (hi < lo) throw std::invalid_argument("count_roots: empty interval");
  return sign_changes_at(lo) - sign_changes_at(hi);
}

int SturmSequence::count_roots_above(const BigRational& lo) const {
  return sign_changes_at(lo) - sign_changes_at_pos_infinity();
}

int sturm_positive_root_count(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_positive_root_count: zero polynomial");
  return SturmSequence(p).count_roots_above(BigRational(0));
}

int sturm_positive_root_count(const RationalPoly& p) { return sturm_positive_root_count(UPoly::from_poly(p)); }

BigRational default_isolation_tolerance() {
  BigRational t(1);
  mpz_mul_2exp(t.get_den_mpz_t(), t.get_den_mpz_t(), 40);
  return t;
}

BigRational root_bound(const UPoly& p) {
  if (p.degree() < 1) return BigRational(1);
  BigRational m = 0;
  const BigRational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = abs(p.coefficients()[static_cast<std::size_t>(i)]) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// Shrinks (lo, hi) holding exactly one simple root of q with q(hi) != 0.
void shrink(const UPoly& q, RootInterval& iv, const BigRational& tol) {
  int hi_sign = q.sign_at(iv.hi);
  while (iv.width() > tol) {
    BigRational mid = midpoint(iv.lo, iv.hi);
    int s = q.sign_at(mid);
    if (s == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (s == hi_sign) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

void isolate_recursive(const UPoly& q, const SturmSequence& chain, const BigRational& lo,
                       const BigRational& hi, int count, const BigRational& tol,
                       std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    RootInterval iv{lo, hi};
    if (q.sign_at(hi) == 0) {
      iv.lo = hi;
    } else {
      shrink(q, iv, tol);
    }
    out.push_back(iv);
    return;
  }
  BigRational mid = midpoint(lo, hi);
  int left = chain.count_roots(lo, mid);
  isolate_recursive(q, chain, lo, mid, left, tol, out);
  isolate_recursive(q, chain, mid, hi, count - left, tol, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UPoly& p, const BigRational& lo, const BigRational& hi,
                                        const BigRational& tol) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (tol <= 0) throw std::invalid_argument("isolate_roots: tolerance must be positive");
  UPoly q = squarefree_part(p);
  SturmSequence chain(q);
  std::vector<RootInterval> out;
  isolate_recursive(q, chain, lo, hi, chain.count_roots(lo, hi), tol, out);
  return out;
}

std::vector<RootInterval> isolate_positive_roots(const UPoly& p, const BigRational& tol) {
  if (p.is_zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");
  return isolate_roots(p, BigRational(0), root_bound(squarefree_part(p)), tol);
}

std::vector<RootInterval> isolate_positive_roots(const RationalPoly& p, const BigRational& tol) {
  return isolate_positive_roots(UPoly::from_poly(p), tol);
}

// ---------------------------------------------------------------------------

RealRoot::RealRoot(UPoly defining, RootInterval interval)
    : defining_(squarefree_part(defining)), interval_(std::move(interval)) {
  if (defining_.degree() < 1) throw std::invalid_argument("RealRoot: defining polynomial is constant");
  if (!interval_.is_exact() && defining_.sign_at(interval_.hi) == 0) interval_.lo = interval_.hi;
}

void RealRoot::bisect() {
  RootInterval& iv = interval_;
  if (iv.is_exact()) return;
  BigRational mid = midpoint(iv.lo, iv.hi);
  int s = defining_.sign_at(mid);
  if (s == 0) {
    iv.lo = iv.hi = mid;
  } else if (s == defining_.sign_at(iv.hi)) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

void RealRoot::refine(const BigRational& tol) {
  while (!interval_.is_exact() && interval_.width() > tol) bisect();
}

double RealRoot::approximate() const { return midpoint(interval_.lo, interval_.hi).get_d(); }

int RealRoot::sign_of(const UPoly& g) {
  UPoly r = remainder(g, defining_);
  if (r.is_zero()) return 0;
  if (interval_.is_exact()) return r.sign_at(interval_.lo);

  UPoly common = gcd(defining_, r);
  if (common.degree() >= 1 && SturmSequence(common).count_roots(interval_.lo, interval_.hi) > 0) return 0;

  SturmSequence chain(r);
  while (!interval_.is_exact() && chain.count_roots(interval_.lo, interval_.hi) > 0) bisect();
  if (interval_.is_exact()) return r.sign_at(interval_.lo);
  return r.sign_at(interval_.hi);
}

}  // namespace bertrand::exact
