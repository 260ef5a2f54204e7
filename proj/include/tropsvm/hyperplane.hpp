#pragma once

#include <vector>

#include "tropsvm/tropical.hpp"

namespace tropsvm {

/// Tropical hyperplane H_omega: the locus where max_i (omega_i + x_i) is
/// attained at least twice. Its complement splits into d open sectors; sector
/// numbers are 1-based throughout (sector i = strict dominance of coordinate i).
struct TropicalHyperplane {
  TorusPoint omega;

  explicit TropicalHyperplane(TorusPoint w) : omega(std::move(w)) {}
  std::size_t dim() const { return omega.dim(); }
};

/// Where a point sits relative to a hyperplane: strictly inside one sector,
/// or on the tie locus. `sectors` lists the 1-based coordinates attaining the
/// maximum of omega + x (one entry when strictly inside).
struct SectorResult {
  bool on_hyperplane = false;
  std::vector<int> sectors;

  int sector() const { return sectors.front(); }
};

/// Classifies x against H: strict argmax of omega + x within tol.
SectorResult sector_of(const TropicalHyperplane& h, const TorusPoint& x, double tol = kTorusTol);

/// Tropical distance from x to the hyperplane:
/// max(omega + x) - secondmax(omega + x), where secondmax ranges over the
/// remaining entries including duplicates of the maximum (so a duplicated
/// maximum gives distance zero).
double dist_to_hyperplane(const TropicalHyperplane& h, const TorusPoint& x);

}  // namespace tropsvm
