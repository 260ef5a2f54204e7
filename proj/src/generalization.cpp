#include "tropsvm/generalization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tropsvm/lp.hpp"

namespace tropsvm {

double vc_bound(std::size_t n, std::size_t vc_dim, double eta) {
  if (vc_dim < 1) throw std::invalid_argument("vc_dim must be at least 1");
  if (n < vc_dim) throw std::invalid_argument("need at least vc_dim samples");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  const double d = static_cast<double>(vc_dim);
  const double nn = static_cast<double>(n);
  return std::sqrt((d * (std::log(2.0 * nn / d) + 1.0) - std::log(eta / 4.0)) / nn);
}

double hit_rate_lower_bound(double train_hit, std::size_t n, std::size_t vc_dim, double eta) {
  if (!(train_hit >= 0.0 && train_hit <= 1.0))
    throw std::invalid_argument("train_hit must lie in [0,1]");
  return std::max(0.0, train_hit - vc_bound(n, vc_dim, eta));
}

namespace {

double containment_defect(const TropicalPolytope& hull, const TorusPoint& x) {
  return trop_distance(x, hull.project(x));
}

// Alternating projections between the two hulls from a given start; returns
// the best (defect, point-in-B) pair reached. The defect never increases, so
// we stop when it stalls.
std::pair<double, TorusPoint> alternate(const TropicalPolytope& hull_a,
                                        const TropicalPolytope& hull_b, TorusPoint x) {
  double prev = std::numeric_limits<double>::infinity();
  double best = prev;
  TorusPoint in_b = x;
  for (int iter = 0; iter < 200; ++iter) {
    const TorusPoint a = hull_a.project(x);
    const TorusPoint b = hull_b.project(a);
    const double gap = trop_distance(a, b);
    if (gap < best) {
      best = gap;
      in_b = b;
    }
    if (gap <= 1e-12 || gap > prev - 1e-13) break;
    prev = gap;
    x = b;
  }
  return {best, in_b};
}

// One candidate bipartition of the input points with its two hulls.
struct Bipartition {
  std::vector<std::size_t> side_a, side_b;
  TropicalPolytope hull_a, hull_b;
  double best_gap = std::numeric_limits<double>::infinity();
  TorusPoint best_witness;
};

// Scan segment samples of each hull for small containment defects in the
// other hull, then polish the most promising starts by alternation.
void scan_segments(Bipartition& part, std::size_t samples, double tol) {
  const auto scan_side = [&](const TropicalPolytope& own, const TropicalPolytope& other) {
    const auto& vs = own.vertices();
    std::vector<TorusPoint> starts;
    std::vector<double> defects;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        for (TorusPoint& s : trop_segment(vs[i], vs[j], samples)) {
          defects.push_back(trop_distance(s, other.project(s)));
          starts.push_back(std::move(s));
        }
    std::vector<std::size_t> order(starts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return defects[l] < defects[r]; });
    for (std::size_t rank = 0; rank < order.size() && rank < 5; ++rank) {
      if (part.best_gap <= tol) return;
      auto [gap, witness] = alternate(part.hull_a, part.hull_b, starts[order[rank]]);
      if (gap < part.best_gap) {
        part.best_gap = gap;
        part.best_witness = witness;
      }
    }
  };
  scan_side(part.hull_a, part.hull_b);
  if (part.best_gap > tol) scan_side(part.hull_b, part.hull_a);
}

bool witness_valid(const Bipartition& part, double tol) {
  return part.best_gap <= tol && part.hull_b.contains(part.best_witness, tol) &&
         containment_defect(part.hull_a, part.best_witness) <= tol;
}

}  // namespace

std::optional<RadonWitness> radon_witness(const std::vector<TorusPoint>& points, double tol) {
  if (points.size() < 3) throw std::invalid_argument("need at least three points");
  const std::size_t d = points[0].dim();
  for (const TorusPoint& p : points)
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
  if (points.size() != d + 1)
    throw std::invalid_argument("expected d+1 points in dimension d");

  double diam = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      diam = std::max(diam, trop_distance(points[i], points[j]));

  const std::size_t m = points.size();
  std::vector<Bipartition> parts;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
    if (!(mask & 1)) continue;  // keep point 0 on side A; complements are duplicates
    Bipartition part;
    for (std::size_t i = 0; i < m; ++i)
      ((mask >> i) & 1 ? part.side_a : part.side_b).push_back(i);
    std::vector<TorusPoint> va, vb;
    for (std::size_t i : part.side_a) va.push_back(points[i]);
    for (std::size_t i : part.side_b) vb.push_back(points[i]);
    part.hull_a = TropicalPolytope(va);
    part.hull_b = TropicalPolytope(vb);
    part.best_witness = points[0];
    parts.push_back(std::move(part));
  }

  const auto finish = [&](const Bipartition& part) {
    RadonWitness result;
    result.side_a = part.side_a;
    result.side_b = part.side_b;
    result.witness = part.best_witness;
    result.gap = part.best_gap;
    return result;
  };

  // Stage 1: vertex projections polished by alternation — catches witnesses
  // at or near the input points.
  for (Bipartition& part : parts) {
    for (const TorusPoint& v : part.hull_a.vertices()) {
      auto [gap, witness] = alternate(part.hull_a, part.hull_b, v);
      if (gap < part.best_gap) {
        part.best_gap = gap;
        part.best_witness = witness;
      }
    }
    for (const TorusPoint& v : part.hull_b.vertices()) {
      auto [gap, witness] = alternate(part.hull_a, part.hull_b, v);
      if (gap < part.best_gap) {
        part.best_gap = gap;
        part.best_witness = witness;
      }
    }
    if (witness_valid(part, tol)) return finish(part);
  }

  // Stage 2: coarse segment sampling on every bipartition.
  for (Bipartition& part : parts) {
    scan_segments(part, 201, tol);
    if (witness_valid(part, tol)) return finish(part);
  }

  // Stage 3: dense sampling at ~1e-3 of the diameter, most promising
  // bipartition first (one of them must intersect).
  const std::size_t dense = std::clamp<std::size_t>(
      static_cast<std::size_t>(diam / 1e-3) + 2, 1001, 20001);
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return parts[l].best_gap < parts[r].best_gap;
  });
  for (std::size_t idx : order) {
    scan_segments(parts[idx], dense, tol);
    if (witness_valid(parts[idx], tol)) return finish(parts[idx]);
  }
  return std::nullopt;
}

bool shatter_check(const std::vector<TorusPoint>& points, const std::vector<int>& labeling) {
  if (points.empty()) throw std::invalid_argument("point set is empty");
  const std::size_t d = points[0].dim();
  for (const TorusPoint& p : points)
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
  if (d > 8) throw std::invalid_argument("dimension too large for exhaustive enumeration");
  if (points.size() > d + 1) throw std::invalid_argument("too many points (cap is d+1)");
  if (labeling.size() != points.size())
    throw std::invalid_argument("labeling length mismatch");
  for (int l : labeling)
    if (l != 0 && l != 1) throw std::invalid_argument("labeling entries must be 0 or 1");

  const std::size_t m = points.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
    std::vector<int> set_a, set_b;  // 1-based sector indices
    for (std::size_t i = 0; i < d; ++i)
      ((mask >> i) & 1 ? set_a : set_b).push_back(static_cast<int>(i) + 1);

    std::vector<const std::vector<int>*> allowed(m);
    for (std::size_t i = 0; i < m; ++i) allowed[i] = labeling[i] == 0 ? &set_a : &set_b;

    // Per-point sector choices, mixed radix over the allowed sets.
    std::vector<std::size_t> choice(m, 0);
    for (;;) {
      LinearProgram lp;  // variables (z, w_1, ..., w_{d-1})
      lp.c.assign(d, 0.0);
      lp.c[0] = 1.0;
      for (std::size_t i = 0; i < m; ++i) {
        const int sec = (*allowed[i])[choice[i]];
        for (int j = 1; j <= static_cast<int>(d); ++j) {
          if (j == sec) continue;
          std::vector<double> row(d, 0.0);
          row[0] = 1.0;
          if (j < static_cast<int>(d)) row[static_cast<std::size_t>(j)] += 1.0;
          if (sec < static_cast<int>(d)) row[static_cast<std::size_t>(sec)] -= 1.0;
          lp.A.push_back(std::move(row));
          lp.b.push_back(points[i][static_cast<std::size_t>(sec - 1)] -
                         points[i][static_cast<std::size_t>(j - 1)]);
        }
      }
      const LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::Unbounded) return true;  // margin arbitrarily large
      if (sol.status == LpStatus::Optimal && sol.value >= 1e-6) return true;

      std::size_t pos = 0;
      while (pos < m && ++choice[pos] == allowed[pos]->size()) choice[pos++] = 0;
      if (pos == m) break;
    }
  }
  return false;
}

std::vector<TorusPoint> axis_spike_points(std::size_t d, double magnitude) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (!(magnitude > 0.0)) throw std::invalid_argument("magnitude must be positive");
  std::vector<TorusPoint> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> raw(d, 0.0);
    raw[i] = magnitude;
    out.emplace_back(std::move(raw));
  }
  return out;
}

}  // namespace tropsvm
