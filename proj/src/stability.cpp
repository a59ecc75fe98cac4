#include "bertrand/stability.hpp"

#include "bertrand/appendix_text.hpp"
#include "bertrand/exact/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace bertrand::stability {

using exact::Assignment;

std::string to_string(Bifurcation b) {
  switch (b) {
    case Bifurcation::None: return "none";
    case Bifurcation::Fold: return "fold";
    case Bifurcation::PeriodDoubling: return "period_doubling";
    case Bifurcation::NeimarkSacker: return "neimark_sacker";
    case Bifurcation::Critical: return "critical";
  }
  return "none";
}

JuryReport jury(const Matrix2& J, double band) {
  for (const auto& row : J)
    for (double v : row)
      if (!std::isfinite(v)) throw std::domain_error("jury: non-finite matrix entry");
  JuryReport r;
  r.trace = J[0][0] + J[1][1];
  r.det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  r.cd1 = 1.0 - r.trace + r.det;
  r.cd2 = 1.0 + r.trace + r.det;
  r.cd3 = 1.0 - r.det;
  r.stable = r.cd1 > 0 && r.cd2 > 0 && r.cd3 > 0;
  const bool n1 = std::abs(r.cd1) <= band, n2 = std::abs(r.cd2) <= band, n3 = std::abs(r.cd3) <= band;
  const int near = int(n1) + int(n2) + int(n3);
  if (near > 1)
    r.indicated = Bifurcation::Critical;
  else if (n1)
    r.indicated = Bifurcation::Fold;
  else if (n2)
    r.indicated = Bifurcation::PeriodDoubling;
  else if (n3)
    r.indicated = Bifurcation::NeimarkSacker;
  return r;
}

double symmetric_threshold(ExactAlpha a, double k1, double k2) {
  if (!(k1 > 0) || !(k2 > 0)) throw std::invalid_argument("adjustment speeds must be positive");
  if (a == ExactAlpha::Half) return (2 * k1 + 2 * k2 + std::sqrt(4 * k1 * k1 - 7 * k1 * k2 + 4 * k2 * k2)) / 216.0;
  return (3 * k1 + 3 * k2 + std::sqrt(9 * k1 * k1 - 17 * k1 * k2 + 9 * k2 * k2)) / 2000.0;
}

// ---------------------------------------------------------------------------
// Critical polynomials

namespace {

const std::vector<std::string> kParams{"c1", "c2", "k"};

CriticalPolynomials load_critical() {
  auto parse = [](std::string_view text) { return RationalPoly::parse(text, kParams); };
  return {parse(appendix_text::R1), parse(appendix_text::R2), parse(appendix_text::R3), parse(appendix_text::R4),
          parse(appendix_text::A1), parse(appendix_text::A2), parse(appendix_text::A3)};
}

}  // namespace

const std::array<std::string_view, 7>& CriticalPolynomials::names() {
  static const std::array<std::string_view, 7> n{"R1", "R2", "R3", "R4", "A1", "A2", "A3"};
  return n;
}

const RationalPoly& CriticalPolynomials::operator[](std::string_view name) const {
  if (name == "R1") return r1;
  if (name == "R2") return r2;
  if (name == "R3") return r3;
  if (name == "R4") return r4;
  if (name == "A1") return a1;
  if (name == "A2") return a2;
  if (name == "A3") return a3;
  throw std::invalid_argument("unknown critical polynomial: " + std::string(name));
}

const CriticalPolynomials& critical_polynomials() {
  static const CriticalPolynomials polys = load_critical();
  return polys;
}

std::string_view critical_polynomial_text(std::string_view name) {
  if (name == "R1") return appendix_text::R1;
  if (name == "R2") return appendix_text::R2;
  if (name == "R3") return appendix_text::R3;
  if (name == "R4") return appendix_text::R4;
  if (name == "A1") return appendix_text::A1;
  if (name == "A2") return appendix_text::A2;
  if (name == "A3") return appendix_text::A3;
  throw std::invalid_argument("unknown critical polynomial: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Symbolic Jury quantities

namespace {

// n / (u^a v^b (u+v)^c) with rational coefficients in n.
struct Basis {
  RationalPoly n;
  unsigned a = 0, b = 0, c = 0;
};

struct BasisAlgebra {
  std::vector<std::string> vars;  // u, v, c1, c2, k
  RationalPoly u, v, s;           // u, v, u + v

  explicit BasisAlgebra(const std::string& un, const std::string& vn)
      : vars{un, vn, "c1", "c2", "k"},
        u(RationalPoly::variable(vars, un)),
        v(RationalPoly::variable(vars, vn)),
        s(u + v) {}

  RationalPoly poly(std::string_view text) const { return RationalPoly::parse(text, vars); }
  Basis constant(long value) const { return {RationalPoly::constant(vars, BigRational(value))}; }

  RationalPoly lift(const Basis& f, unsigned a, unsigned b, unsigned c) const {
    return f.n * u.pow(a - f.a) * v.pow(b - f.b) * s.pow(c - f.c);
  }

  Basis add(const Basis& f, const Basis& g) const {
    const unsigned a = std::max(f.a, g.a), b = std::max(f.b, g.b), c = std::max(f.c, g.c);
    return normalize({lift(f, a, b, c) + lift(g, a, b, c), a, b, c});
  }

  Basis neg(Basis f) const {
    f.n = -f.n;
    return f;
  }

  Basis sub(const Basis& f, const Basis& g) const { return add(f, neg(g)); }

  Basis mul(const Basis& f, const Basis& g) const { return normalize({f.n * g.n, f.a + g.a, f.b + g.b, f.c + g.c}); }

  Basis scale(Basis f, const RationalPoly& p) const {
    f.n = f.n * p;
    return normalize(f);
  }

  // d/du of n u^-a v^-b s^-c.
  Basis du(const Basis& f) const {
    RationalPoly n = f.n.derivative(vars[0]) * u * s - BigRational(f.a) * f.n * s - BigRational(f.c) * f.n * u;
    return normalize({n, f.a + 1, f.b, f.c + 1});
  }

  Basis dv(const Basis& f) const {
    RationalPoly n = f.n.derivative(vars[1]) * v * s - BigRational(f.b) * f.n * s - BigRational(f.c) * f.n * v;
    return normalize({n, f.a, f.b + 1, f.c + 1});
  }

  Basis normalize(Basis f) const {
    if (f.n.is_zero()) return {RationalPoly(vars), 0, 0, 0};
    auto divisible_by_var = [](const RationalPoly& p, std::size_t idx) {
      for (const auto& [e, coef] : p.terms())
        if (e[idx] == 0) return false;
      return true;
    };
    const auto iu = *f.n.index_of(vars[0]);
    while (f.a > 0 && divisible_by_var(f.n, iu)) {
      f.n = exact::exact_divide(f.n, u);
      --f.a;
    }
    if (auto iv = f.n.index_of(vars[1])) {
      while (f.b > 0 && divisible_by_var(f.n, *iv)) {
        f.n = exact::exact_divide(f.n, v);
        --f.b;
      }
    }
    while (f.c > 0 && f.n.compose(vars[0], -v).is_zero()) {
      f.n = exact::exact_divide(f.n, s);
      --f.c;
    }
    f.n = f.n.with_variables(vars);
    return f;
  }
};

std::array<CdFraction, 3> build_fractions(ExactAlpha alpha) {
  const bool half = alpha == ExactAlpha::Half;
  BasisAlgebra B(half ? "p1" : "x", half ? "p2" : "y");
  const RationalPoly k = B.poly("k");

  // Each map component is p_i + k * g_i in the basis.
  Basis m1, m2;
  if (half) {
    Basis g1{B.poly("-p2*p1^2 + (p2^2 + 2*p2*p1)*c1"), 2, 0, 2};
    Basis g2{B.poly("-p1*p2^2 + (p1^2 + 2*p1*p2)*c2"), 0, 2, 2};
    m1 = B.add({B.poly("p1")}, B.scale(g1, k));
    m2 = B.add({B.poly("p2")}, B.scale(g2, k));
  } else {
    Basis g1{B.poly("1/2*(-x^3*y + (2*y^2 + 3*x*y)*c1)"), 4, 0, 2};
    Basis g2{B.poly("1/2*(-y^3*x + (2*x^2 + 3*x*y)*c2)"), 0, 4, 2};
    m1 = B.add({B.poly("x^2")}, B.scale(g1, k));
    m2 = B.add({B.poly("y^2")}, B.scale(g2, k));
  }

  Basis j11 = B.du(m1), j12 = B.dv(m1), j21 = B.du(m2), j22 = B.dv(m2);
  if (!half) {
    // Chain rule dp = 2x dx: the u column is divided by 2u, the v column by 2v.
    auto over_2u = [&](Basis f) {
      f.n = f.n * BigRational(1, 2);
      ++f.a;
      return B.normalize(f);
    };
    auto over_2v = [&](Basis f) {
      f.n = f.n * BigRational(1, 2);
      ++f.b;
      return B.normalize(f);
    };
    j11 = over_2u(j11);
    j21 = over_2u(j21);
    j12 = over_2v(j12);
    j22 = over_2v(j22);
  }

  const Basis one = B.constant(1);
  const Basis tr = B.add(j11, j22);
  const Basis det = B.sub(B.mul(j11, j22), B.mul(j12, j21));
  const std::array<Basis, 3> cds{B.add(B.sub(one, tr), det), B.add(B.add(one, tr), det), B.sub(one, det)};

  std::array<CdFraction, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    auto [L, integral] = exact::clear_denominators(cds[i].n);
    out[i] = CdFraction{integral, L, cds[i].a, cds[i].b, cds[i].c, B.vars[0], B.vars[1]};
  }
  return out;
}

}  // namespace

RationalPoly CdFraction::denom() const {
  const std::vector<std::string> vars = numer.variables();
  const RationalPoly U = RationalPoly::variable(vars, u), V = RationalPoly::variable(vars, v);
  return RationalPoly::constant(vars, BigRational(m)) * U.pow(a) * V.pow(b) * (U + V).pow(c);
}

RationalPoly CdFraction::numer_times_denom() const { return numer * denom(); }

const std::array<CdFraction, 3>& jury_fractions(ExactAlpha a) {
  static const std::array<CdFraction, 3> half = build_fractions(ExactAlpha::Half);
  static const std::array<CdFraction, 3> third = build_fractions(ExactAlpha::Third);
  return a == ExactAlpha::Half ? half : third;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

ModelParams numeric_params(ExactAlpha a, const BigRational& c1, const BigRational& c2, const BigRational& k1,
                           const BigRational& k2) {
  return {alpha_value(a), c1.get_d(), c2.get_d(), k1.get_d(), k2.get_d()};
}

void attach_jury(Classification& r, const ModelParams& m) {
  const EquilibriumResult e = solve_equilibrium(m);
  r.equilibrium = e.state;
  r.jury = jury(jacobian(m, e.state));
  r.jury_agrees = r.jury.near_boundary() || r.jury.stable == r.stable;
}

}  // namespace

Classification classify_point(ExactAlpha a, const BigRational& c1, const BigRational& c2, const BigRational& k) {
  if (c1 <= 0 || c2 <= 0 || k <= 0) throw std::domain_error("parameters must be positive");
  Classification r;
  r.algebraic = true;
  const auto& polys = critical_polynomials();
  const Assignment at{{"c1", c1}, {"c2", c2}, {"k", k}};
  auto sign_of = [&](std::string_view name) {
    const int s = exact::sign(polys[name].evaluate(at));
    r.signs[std::string(name)] = s;
    return s;
  };

  if (a == ExactAlpha::Half) {
    const int s1 = sign_of("R1"), s2 = sign_of("R2");
    r.stable = s1 > 0 && s2 > 0;
    r.rule = "R1>0 & R2>0";
  } else if (c1 == c2) {
    // The R3/R4 identities carry a (c1 - c2) factor; use the symmetric
    // threshold c^2 > 7k/2000 instead.
    r.stable = c1 * c1 > BigRational(7, 2000) * k;
    r.rule = "c^2 > 7k/2000";
  } else {
    const int s3 = sign_of("R3"), s4 = sign_of("R4");
    const int a1 = sign_of("A1"), a2 = sign_of("A2"), a3 = sign_of("A3");
    if (s3 > 0 && s4 > 0) {
      r.stable = true;
      r.rule = "R3>0 & R4>0";
    } else if (s3 < 0 && s4 > 0 && a1 > 0 && a2 < 0 && a3 > 0) {
      r.stable = true;
      r.rule = "R3<0 & R4>0 & A1>0 & A2<0 & A3>0";
    } else {
      r.stable = false;
      r.rule = "none";
    }
  }
  attach_jury(r, numeric_params(a, c1, c2, k, k));
  return r;
}

Classification classify_point(ExactAlpha a, const BigRational& c1, const BigRational& c2, const BigRational& k1,
                              const BigRational& k2) {
  if (k1 == k2) return classify_point(a, c1, c2, k1);
  if (c1 <= 0 || c2 <= 0 || k1 <= 0 || k2 <= 0) throw std::domain_error("parameters must be positive");
  Classification r;
  r.algebraic = false;
  r.rule = "numeric Jury (k1 != k2)";
  attach_jury(r, numeric_params(a, c1, c2, k1, k2));
  r.stable = r.jury.stable;
  r.jury_agrees = true;
  return r;
}

TableCheck verify_sample_table(ExactAlpha a) {
  TableCheck out;
  const char* first = a == ExactAlpha::Half ? "R1" : "R3";
  const char* second = a == ExactAlpha::Half ? "R2" : "R4";
  const auto& polys = critical_polynomials();
  for (const auto& row : sample_table(a)) {
    ++out.rows;
    const Classification c = classify_point(a, row.c1, row.c2, row.k);
    const Assignment at{{"c1", row.c1}, {"c2", row.c2}, {"k", row.k}};
    const int s1 = exact::sign(polys[first].evaluate(at));
    const int s2 = exact::sign(polys[second].evaluate(at));
    const bool ok = c.stable == row.stable && s1 == row.sign_first && s2 == row.sign_second && c.jury_agrees &&
                    c.jury.stable == row.stable;
    if (!ok) {
      ++out.mismatches;
      out.failures.push_back("(" + exact::to_string(row.c1) + ", " + exact::to_string(row.c2) + ", " +
                             exact::to_string(row.k) + ")");
    }
  }
  return out;
}

}  // namespace bertrand::stability
