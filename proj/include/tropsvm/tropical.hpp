#pragma once

#include <cstddef>
#include <vector>

namespace tropsvm {

/// Default per-coordinate tolerance for point equality on the torus.
inline constexpr double kTorusTol = 1e-9;

/// A point of the tropical projective torus R^d / R(1,...,1), stored in the
/// canonical gauge with the last coordinate equal to zero. d >= 2.
class TorusPoint {
 public:
  TorusPoint() = default;
  /// Normalizes raw coordinates by subtracting the last one.
  explicit TorusPoint(std::vector<double> raw);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

/// Canonical representative of raw coordinates (last coordinate zero).
TorusPoint normalize(const std::vector<double>& raw);

/// True when the canonical forms agree within tol in every coordinate.
bool approx_equal(const TorusPoint& v, const TorusPoint& w, double tol = kTorusTol);

/// Tropical linear combination (a + v) boxplus (b + w): the coordinatewise
/// maximum of the two shifted vectors, renormalized.
TorusPoint trop_combine(double a, const TorusPoint& v, double b, const TorusPoint& w);

/// Generalized Hilbert projective metric:
/// max_i (v_i - w_i) - min_i (v_i - w_i).
double trop_distance(const TorusPoint& v, const TorusPoint& w);

/// k >= 2 points tracing the tropical segment from v to w: the coefficient
/// gap t = a - b sweeps [R, -R] linearly with R = trop_distance(v, w) + 1,
/// so the first sample is v and the last is w.
std::vector<TorusPoint> trop_segment(const TorusPoint& v, const TorusPoint& w, std::size_t k);

/// Tropical polytope: the tropical convex hull of finitely many vertices.
class TropicalPolytope {
 public:
  TropicalPolytope() = default;  ///< empty placeholder; not usable until assigned
  explicit TropicalPolytope(std::vector<TorusPoint> vertices);

  std::size_t dim() const { return vertices_.front().dim(); }
  const std::vector<TorusPoint>& vertices() const { return vertices_; }

  /// Canonical projection onto the hull: boxplus_i (lambda_i + v^i) with
  /// lambda_i = min_j (x_j - v^i_j). Always a hull member, and equal to x
  /// exactly when x lies in the hull.
  TorusPoint project(const TorusPoint& x) const;

  /// Membership test: project(x) == x within tol per coordinate.
  bool contains(const TorusPoint& x, double tol = kTorusTol) const;

 private:
  std::vector<TorusPoint> vertices_;
};

}  // namespace tropsvm
