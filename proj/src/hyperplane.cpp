#include "tropsvm/hyperplane.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropsvm {

SectorResult sector_of(const TropicalHyperplane& h, const TorusPoint& x, double tol) {
  if (h.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t d = x.dim();
  std::vector<double> s(d);
  for (std::size_t i = 0; i < d; ++i) s[i] = h.omega[i] + x[i];
  const double m = *std::max_element(s.begin(), s.end());
  SectorResult r;
  for (std::size_t i = 0; i < d; ++i)
    if (s[i] >= m - tol) r.sectors.push_back(static_cast<int>(i) + 1);
  r.on_hyperplane = r.sectors.size() > 1;
  return r;
}

double dist_to_hyperplane(const TropicalHyperplane& h, const TorusPoint& x) {
  if (h.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t d = x.dim();
  double best = -std::numeric_limits<double>::infinity();
  double second = best;
  for (std::size_t i = 0; i < d; ++i) {
    const double v = h.omega[i] + x[i];
    if (v > best) {
      second = best;
      best = v;
    } else if (v > second) {
      second = v;
    }
  }
  return best - second;
}

}  // namespace tropsvm
