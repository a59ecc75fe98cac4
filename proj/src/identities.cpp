#include "bertrand/stability.hpp"

#include "bertrand/exact/rational.hpp"
#include "bertrand/exact/triangular.hpp"

#include <random>

namespace bertrand::stability {

namespace {

struct Identity {
  const char* name;
  int cd;              // 1..3
  bool times_denom;    // numer * denom instead of numer
  const char* printed;
  const char* corrected;  // nullptr when the printed form is right
};

const std::vector<Identity>& identities(ExactAlpha a) {
  static const std::vector<Identity> half{
      {"res(numer(CD1), T12)", 1, false, "81*k^6*c1^18*c2^6*(c1 + c2)*(32*c1^2 + 61*c1*c2 + 32*c2^2)", nullptr},
      {"res(numer(CD2), T12)", 2, false, "-729*c1^32*c2^8*(c1 + c2)*R1", nullptr},
      {"res(numer(CD3), T12)", 3, false, "729*k^3*c1^32*c2^8*(c1 + c2)*R2", nullptr},
      {"res(numer(CD1)*denom(CD1), T12)", 1, true,
       "-1594323*k^6*c1^50*c2^17*(c1 + c2)^6*(32*c1^2 + 61*c1*c2 + 32*c2^2)", nullptr},
      {"res(numer(CD2)*denom(CD2), T12)", 2, true, "129140163*c1^70*c2^22*(c1 + c2)^6*R1", nullptr},
      {"res(numer(CD3)*denom(CD3), T12)", 3, true, "-129140163*k^3*c1^70*c2^22*(c1 + c2)^6*R2", nullptr},
  };
  static const std::vector<Identity> third{
      {"res(numer(CD1), T32)", 1, false,
       "879609302220800000*k^16*c1^51*c2^11*(c1 - c2)^2*(2187*c1^2 - 4031*c1*c2 + 2187*c2^2)^2", nullptr},
      {"res(numer(CD2), T32)", 2, false, "99035203142830421991929937920000000*c1^101*c2^13*(c1 - c2)^2*R3^2",
       nullptr},
      {"res(numer(CD3), T32)", 3, false, "99035203142830421991929937920000000*k^8*c1^101*c2^13*(c1 - c2)^10*R4^2",
       "99035203142830421991929937920000000*k^8*c1^101*c2^13*(c1 - c2)^2*R4^2"},
      {"res(numer(CD1)*denom(CD1), T32)", 1, true,
       "570899077082383952423314387779798054553098649600000000000000000000*k^16*c1^156*c2^36*(c1 - c2)^12*"
       "(2187*c1^2 - 4031*c1*c2 + 2187*c2^2)^2",
       nullptr},
      {"res(numer(CD2)*denom(CD2), T32)", 2, true,
       "6582018229284824168619876730229402019930943462534319453394436096000000000000000000000000*"
       "c1^218*c2^42*(c1 - c2)^10*R3^2",
       "6582018229284824168619876730229402019930943462534319453394436096000000000000000000000000*"
       "c1^218*c2^42*(c1 - c2)^12*R3^2"},
      {"res(numer(CD3)*denom(CD3), T32)", 3, true,
       "6582018229284824168619876730229402019930943462534319453394436096000000000000000000000000*"
       "k^8*c1^218*c2^42*(c1 - c2)^10*R4^2",
       "6582018229284824168619876730229402019930943462534319453394436096000000000000000000000000*"
       "k^8*c1^218*c2^42*(c1 - c2)^12*R4^2"},
  };
  return a == ExactAlpha::Half ? half : third;
}

const std::vector<std::string> kRhsVars{"c1", "c2", "k", "R1", "R2", "R3", "R4"};

BigRational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 97), den(1, 64);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

bool IdentityReport::all_printed_hold() const {
  for (const auto& c : checks)
    if (!c.printed_holds) return false;
  return true;
}

bool IdentityReport::all_corrected_hold() const {
  for (const auto& c : checks)
    if (!c.corrected_holds) return false;
  return true;
}

IdentityReport verify_resultant_identities(ExactAlpha a, unsigned trials, std::uint64_t seed) {
  const auto& cds = jury_fractions(a);
  const auto& set = equilibrium_set(a);
  const auto& polys = critical_polynomials();
  const auto& ids = identities(a);

  IdentityReport report{a, {}};
  std::vector<RationalPoly> lhs_polys, printed, corrected;
  for (const auto& id : ids) {
    const CdFraction& f = cds[id.cd - 1];
    lhs_polys.push_back(id.times_denom ? f.numer_times_denom() : f.numer);
    printed.push_back(RationalPoly::parse(id.printed, kRhsVars));
    corrected.push_back(RationalPoly::parse(id.corrected ? id.corrected : id.printed, kRhsVars));
    IdentityCheck check;
    check.name = id.name;
    check.corrected = id.corrected != nullptr;
    report.checks.push_back(std::move(check));
  }

  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    BigRational c1 = random_positive(rng), c2 = random_positive(rng), k = random_positive(rng);
    while (c2 == c1) c2 = random_positive(rng);
    const exact::Assignment params{{"c1", c1}, {"c2", c2}, {"k", k}};
    exact::Assignment rhs_at = params;
    for (const char* r : {"R1", "R2", "R3", "R4"}) rhs_at[r] = polys[r].evaluate(params);

    const exact::TriangularSet specialized(set.name(), {set[0].substitute(params), set[1].substitute(params)},
                                           set.solved_vars());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const RationalPoly lhs_poly = lhs_polys[i].substitute(params);
      const RationalPoly res = exact::resultant_vs_triangular(lhs_poly, specialized);
      if (!res.is_constant()) throw std::logic_error("resultant still depends on a solved variable");
      const BigRational lhs = res.constant_value();
      const bool p_ok = lhs == printed[i].evaluate(rhs_at);
      const bool c_ok = lhs == corrected[i].evaluate(rhs_at);
      IdentityCheck& check = report.checks[i];
      ++check.trials;
      if (!p_ok) check.printed_holds = false;
      if (!c_ok) check.corrected_holds = false;
      if ((!p_ok || !c_ok) && check.failures.size() < 3)
        check.failures.push_back("(" + exact::to_string(c1) + ", " + exact::to_string(c2) + ", " +
                                 exact::to_string(k) + ")" + (p_ok ? "" : " printed") + (c_ok ? "" : " corrected"));
    }
  }
  return report;
}

}  // namespace bertrand::stability
