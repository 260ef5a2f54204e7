// VC-dimension machinery for tropical hyperplane classifiers: the
// generalization bound, hit-rate lower bounds, Radon partitions with
// intersecting tropical hulls, and exhaustive shattering checks.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropsvm/tropical.hpp"

namespace tropsvm {

/// sqrt((d(ln(2n/d)+1) - ln(eta/4)) / n) — the uniform deviation bound for a
/// hypothesis family of VC dimension d on n samples at confidence 1 - eta.
/// Requires n >= d >= 1 and 0 < eta < 1.
double vc_bound(std::size_t n, std::size_t vc_dim, double eta);

/// train_hit - vc_bound(n, vc_dim, eta), clipped below at zero.
/// Requires train_hit in [0, 1].
double hit_rate_lower_bound(double train_hit, std::size_t n, std::size_t vc_dim, double eta);

/// A bipartition of a point set whose tropical convex hulls intersect,
/// together with a point witnessing the intersection.
struct RadonWitness {
  std::vector<std::size_t> side_a;  ///< indices of the first part
  std::vector<std::size_t> side_b;  ///< indices of the second part
  TorusPoint witness;               ///< lies in both hulls within `gap`
  double gap = 0.0;                 ///< tropical distance defect at the witness
};

/// Searches all bipartitions of d+1 points in dimension d for one whose
/// tropical hulls intersect (such a partition always exists). The witness is
/// located by projecting hull vertices onto the opposite hull, sampling
/// segments densely, and refining by alternating projections; a witness is
/// accepted when its containment defect is at most `tol`. Returns nullopt if
/// the search fails — never a fabricated witness.
std::optional<RadonWitness> radon_witness(const std::vector<TorusPoint>& points,
                                          double tol = 1e-6);

/// True iff the two label classes can be separated with the labeling given:
/// some split of the sector indices {1..d} into two disjoint nonempty sets
/// admits omega placing every point strictly (margin >= 1e-6) inside a sector
/// of its label's set. labeling entries are 0/1. Enumerates all 2^d - 2
/// sector-set splits; capped at d <= 8 and at most d+1 points.
bool shatter_check(const std::vector<TorusPoint>& points, const std::vector<int>& labeling);

/// The d points magnitude*e_1, ..., magnitude*e_d (one coordinate spiked),
/// which single sectors shatter completely — the witness set showing the VC
/// dimension is at least d.
std::vector<TorusPoint> axis_spike_points(std::size_t d, double magnitude = 100.0);

}  // namespace tropsvm
