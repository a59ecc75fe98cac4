#include "bertrand/exact/triangular.hpp"

#include "bertrand/exact/resultant.hpp"

#include <stdexcept>

namespace bertrand::exact {

TriangularSet::TriangularSet(std::string name, std::vector<RationalPoly> polys, std::vector<std::string> solved_vars)
    : name_(std::move(name)), polys_(std::move(polys)), solved_(std::move(solved_vars)) {
  if (polys_.size() != solved_.size())
    throw std::invalid_argument("triangular set " + name_ + ": one solved variable per polynomial");
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (!polys_[i].involves(solved_[i]))
      throw std::invalid_argument("triangular set " + name_ + ": polynomial " + std::to_string(i + 1) +
                                  " does not involve " + solved_[i]);
    for (std::size_t j = i + 1; j < solved_.size(); ++j)
      if (polys_[i].involves(solved_[j]))
        throw std::invalid_argument("triangular set " + name_ + ": polynomial " + std::to_string(i + 1) +
                                    " involves later variable " + solved_[j]);
  }
}

RationalPoly resultant_vs_triangular(const RationalPoly& h, const TriangularSet& t) {
  if (t.size() != 2) throw std::invalid_argument("resultant_vs_triangular: expected two polynomials");
  RationalPoly inner = sylvester_resultant(h, t[1], t.solved_vars()[1]);
  return sylvester_resultant(inner, t[0], t.solved_vars()[0]);
}

}  // namespace bertrand::exact
