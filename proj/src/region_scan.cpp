#include "bertrand/stability.hpp"

#include "bertrand/exact/rational.hpp"
#include "bertrand/parallel.hpp"

#include <cstdio>
#include <stdexcept>

namespace bertrand::stability {

ScanAxis parse_axis(std::string_view name) {
  if (name == "c1") return ScanAxis::C1;
  if (name == "c2") return ScanAxis::C2;
  if (name == "c") return ScanAxis::C;
  if (name == "k") return ScanAxis::K;
  if (name == "k1") return ScanAxis::K1;
  if (name == "k2") return ScanAxis::K2;
  throw std::invalid_argument("unknown scan axis: " + std::string(name));
}

std::string to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::C1: return "c1";
    case ScanAxis::C2: return "c2";
    case ScanAxis::C: return "c";
    case ScanAxis::K: return "k";
    case ScanAxis::K1: return "k1";
    case ScanAxis::K2: return "k2";
  }
  return "?";
}

BigRational AxisRange::at(unsigned i) const {
  if (steps < 2) return lo;
  BigRational t(i, steps - 1);
  t.canonicalize();
  return lo + (hi - lo) * t;
}

namespace {

struct Point {
  std::optional<BigRational> c1, c2, k1, k2;

  void set(ScanAxis axis, const BigRational& value) {
    switch (axis) {
      case ScanAxis::C1: c1 = value; break;
      case ScanAxis::C2: c2 = value; break;
      case ScanAxis::C: c1 = c2 = value; break;
      case ScanAxis::K1: k1 = value; break;
      case ScanAxis::K2: k2 = value; break;
      case ScanAxis::K: k1 = k2 = value; break;
    }
  }
};

void validate(const AxisRange& r) {
  if (r.steps < 2) throw std::invalid_argument("scan axis " + to_string(r.axis) + " needs at least 2 steps");
  if (r.lo <= 0 || r.hi <= 0) throw std::invalid_argument("scan bounds must be positive");
  if (r.hi <= r.lo) throw std::invalid_argument("scan bounds must satisfy lo < hi");
}

std::vector<std::string> sign_columns(ExactAlpha a) {
  if (a == ExactAlpha::Half) return {"R1", "R2"};
  return {"R3", "R4", "A1", "A2", "A3"};
}

}  // namespace

std::vector<ScanCell> region_scan(const ScanSpec& spec) {
  validate(spec.x);
  validate(spec.y);
  if (spec.x.axis == spec.y.axis) throw std::invalid_argument("scan axes must differ");

  const std::size_t nx = spec.x.steps, ny = spec.y.steps;
  std::vector<ScanCell> cells(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      cells[j * nx + i].x = spec.x.at(static_cast<unsigned>(i));
      cells[j * nx + i].y = spec.y.at(static_cast<unsigned>(j));
    }

  // Check completeness once before spawning workers.
  {
    Point p;
    for (const auto& [axis, value] : spec.fixed) {
      if (value <= 0) throw std::invalid_argument("fixed parameter " + to_string(axis) + " must be positive");
      p.set(axis, value);
    }
    p.set(spec.x.axis, spec.x.lo);
    p.set(spec.y.axis, spec.y.lo);
    if (!p.c1 || !p.c2 || !p.k1 || !p.k2) throw std::invalid_argument("scan leaves c1, c2, k1 or k2 unset");
  }

  auto work = [&](std::size_t idx) {
    Point p;
    for (const auto& [axis, value] : spec.fixed) p.set(axis, value);
    p.set(spec.x.axis, cells[idx].x);
    p.set(spec.y.axis, cells[idx].y);
    cells[idx].result = classify_point(spec.alpha, *p.c1, *p.c2, *p.k1, *p.k2);
  };

  parallel_for(cells.size(), spec.jobs, work);
  return cells;
}

void write_scan_csv(std::ostream& out, const ScanSpec& spec, const std::vector<ScanCell>& cells) {
  const auto signs = sign_columns(spec.alpha);
  out << "x,y,stable,cd1,cd2,cd3";
  for (const auto& s : signs) out << ',' << s;
  out << '\n';
  char buf[96];
  for (const auto& cell : cells) {
    const auto& r = cell.result;
    std::snprintf(buf, sizeof buf, ",%d,%.17g,%.17g,%.17g", r.stable ? 1 : 0, r.jury.cd1, r.jury.cd2, r.jury.cd3);
    out << exact::to_string(cell.x) << ',' << exact::to_string(cell.y) << buf;
    for (const auto& s : signs) {
      out << ',';
      if (auto it = r.signs.find(s); it != r.signs.end()) out << it->second;
    }
    out << '\n';
  }
}

}  // namespace bertrand::stability
