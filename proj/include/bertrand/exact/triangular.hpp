#pragma once

#include "bertrand/exact/poly.hpp"

#include <string>
#include <vector>

namespace bertrand::exact {

/// Ordered polynomials in triangular shape: polys[i] introduces
/// solved_vars[i] and involves no later solved variable. Other variables are
/// parameters.
class TriangularSet {
 public:
  TriangularSet(std::string name, std::vector<RationalPoly> polys, std::vector<std::string> solved_vars);

  const std::string& name() const { return name_; }
  const std::vector<RationalPoly>& polys() const { return polys_; }
  const std::vector<std::string>& solved_vars() const { return solved_; }
  std::size_t size() const { return polys_.size(); }
  const RationalPoly& operator[](std::size_t i) const { return polys_[i]; }

 private:
  std::string name_;
  std::vector<RationalPoly> polys_;
  std::vector<std::string> solved_;
};

/// res(res(h, T2, y), T1, x) for a two-polynomial set T = [T1(x), T2(x, y)].
RationalPoly resultant_vs_triangular(const RationalPoly& h, const TriangularSet& t);

}  // namespace bertrand::exact
