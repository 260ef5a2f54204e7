#include "tropsvm/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tropsvm {

namespace {

void check_raw(const std::vector<double>& raw) {
  if (raw.size() < 2) throw std::invalid_argument("torus point needs dimension >= 2");
  for (double c : raw)
    if (!std::isfinite(c)) throw std::invalid_argument("torus point has non-finite coordinate");
}

void check_same_dim(const TorusPoint& v, const TorusPoint& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

TorusPoint::TorusPoint(std::vector<double> raw) : coords_(std::move(raw)) {
  check_raw(coords_);
  const double last = coords_.back();
  for (double& c : coords_) c -= last;
}

TorusPoint normalize(const std::vector<double>& raw) { return TorusPoint(raw); }

bool approx_equal(const TorusPoint& v, const TorusPoint& w, double tol) {
  check_same_dim(v, w);
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (std::fabs(v[i] - w[i]) > tol) return false;
  return true;
}

TorusPoint trop_combine(double a, const TorusPoint& v, double b, const TorusPoint& w) {
  check_same_dim(v, w);
  std::vector<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = std::max(a + v[i], b + w[i]);
  return TorusPoint(std::move(out));
}

double trop_distance(const TorusPoint& v, const TorusPoint& w) {
  check_same_dim(v, w);
  double hi = v[0] - w[0], lo = hi;
  for (std::size_t i = 1; i < v.dim(); ++i) {
    const double diff = v[i] - w[i];
    hi = std::max(hi, diff);
    lo = std::min(lo, diff);
  }
  return hi - lo;
}

std::vector<TorusPoint> trop_segment(const TorusPoint& v, const TorusPoint& w, std::size_t k) {
  check_same_dim(v, w);
  if (k < 2) throw std::invalid_argument("segment needs at least 2 samples");
  const double R = trop_distance(v, w) + 1.0;
  std::vector<TorusPoint> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    // t runs linearly from +R (sample v) down to -R (sample w).
    const double t = R - 2.0 * R * static_cast<double>(s) / static_cast<double>(k - 1);
    out.push_back(trop_combine(t, v, 0.0, w));
  }
  return out;
}

TropicalPolytope::TropicalPolytope(std::vector<TorusPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  for (const TorusPoint& v : vertices_)
    if (v.dim() != vertices_.front().dim()) throw std::invalid_argument("dimension mismatch");
}

TorusPoint TropicalPolytope::project(const TorusPoint& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<double> out(dim(), -std::numeric_limits<double>::infinity());
  for (const TorusPoint& v : vertices_) {
    double lambda = x[0] - v[0];
    for (std::size_t j = 1; j < dim(); ++j) lambda = std::min(lambda, x[j] - v[j]);
    for (std::size_t j = 0; j < dim(); ++j) out[j] = std::max(out[j], lambda + v[j]);
  }
  return TorusPoint(std::move(out));
}

bool TropicalPolytope::contains(const TorusPoint& x, double tol) const {
  return approx_equal(project(x), x, tol);
}

}  // namespace tropsvm
