#include "tropsvm/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "tropsvm/lp.hpp"

namespace tropsvm {

double GaussianMixture::operator()(double x) const {
  double sum = 0.0;
  for (const GaussianComponent& c : components) {
    const double z = (x - c.mu) / c.sigma;
    sum += c.weight * std::exp(-0.5 * z * z) / (c.sigma * std::sqrt(2.0 * std::numbers::pi));
  }
  return sum;
}

GaussianMixture gaussian_density(double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return GaussianMixture{{{1.0, mu, sigma}}};
}

namespace {

void check_domain(const Interval& domain) {
  if (!(domain.lo < domain.hi)) throw std::invalid_argument("empty domain");
}

// Runs `estimate` on grids of 2^k + 1 points, doubling until two successive
// estimates agree to 1e-6. Grid abscissae are lo + (hi-lo)*i/n so the
// endpoints are exact and refined grids nest.
template <class F>
double refine_on_grids(F&& estimate) {
  double prev = std::numeric_limits<double>::quiet_NaN();
  std::size_t intervals = 1024;
  for (int pass = 0; pass <= 20; ++pass, intervals *= 2) {
    const double cur = estimate(intervals);
    if (pass > 0 && std::abs(cur - prev) < 1e-6) return cur;
    prev = cur;
  }
  throw NumericalError("grid refinement did not converge");
}

struct HyperplaneEstimate {
  double distance;
  double argmax;
};

HyperplaneEstimate hyperplane_pass(const RealFunction& f, const RealFunction& omega,
                                   double epsilon, const Interval& domain,
                                   std::size_t intervals) {
  const auto g = [&](double x) { return f(x) + omega(x); };
  const auto abscissa = [&](std::size_t i) {
    return domain.lo +
           (domain.hi - domain.lo) * static_cast<double>(i) / static_cast<double>(intervals);
  };

  double best = -std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double v = g(abscissa(i));
    if (v > best) {  // strict: ties keep the leftmost location
      best = v;
      arg = i;
    }
  }
  if (arg == 0 || arg == intervals)
    throw std::invalid_argument("maximum attained on the domain boundary");

  const double x_star = abscissa(arg);
  double outside = -std::numeric_limits<double>::infinity();
  bool any_outside = false;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double x = abscissa(i);
    if (std::abs(x - x_star) <= epsilon) continue;
    any_outside = true;
    outside = std::max(outside, g(x));
  }
  if (!any_outside) throw std::invalid_argument("exclusion ball covers the whole domain");
  return {best - outside, x_star};
}

}  // namespace

double func_trop_distance(const RealFunction& f, const RealFunction& g, Interval domain) {
  check_domain(domain);
  return refine_on_grids([&](std::size_t intervals) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= intervals; ++i) {
      const double x = domain.lo + (domain.hi - domain.lo) * static_cast<double>(i) /
                                       static_cast<double>(intervals);
      const double diff = f(x) - g(x);
      hi = std::max(hi, diff);
      lo = std::min(lo, diff);
    }
    return hi - lo;
  });
}

double dist_to_functional_hyperplane(const RealFunction& f, const FunctionalHyperplane& h,
                                     Interval domain) {
  check_domain(domain);
  if (!(h.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return refine_on_grids([&](std::size_t intervals) {
    return hyperplane_pass(f, h.omega, h.epsilon, domain, intervals).distance;
  });
}

FunctionalSector functional_sector(const RealFunction& f, const FunctionalHyperplane& h,
                                   Interval domain) {
  check_domain(domain);
  if (!(h.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  FunctionalSector sector{0.0, false, 0.0};
  sector.distance = refine_on_grids([&](std::size_t intervals) {
    const HyperplaneEstimate est = hyperplane_pass(f, h.omega, h.epsilon, domain, intervals);
    sector.argmax = est.argmax;
    return est.distance;
  });
  sector.on_hyperplane = sector.distance <= 1e-6;
  return sector;
}

GridFunction::GridFunction(std::vector<double> grid_in, std::vector<double> values_in)
    : grid(std::move(grid_in)), values(std::move(values_in)) {
  if (grid.size() != values.size()) throw std::invalid_argument("grid/value length mismatch");
  if (grid.size() < 2) throw std::invalid_argument("need at least two grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i]))
      throw std::invalid_argument("non-finite grid function entry");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("grid must be strictly increasing");
  }
}

double GridFunction::operator()(double x) const {
  if (x <= grid.front()) return values.front();
  if (x >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

GridFunction sample_on_grid(const RealFunction& f, const std::vector<double>& grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) values.push_back(f(x));
  return GridFunction(grid, std::move(values));
}

std::optional<FunctionalModel> alg1_train(const std::vector<GridFunction>& functions,
                                          const std::vector<std::string>& labels, double epsilon,
                                          double C) {
  if (functions.empty()) throw std::invalid_argument("no training functions");
  if (functions.size() != labels.size()) throw std::invalid_argument("label count mismatch");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const std::vector<double>& grid = functions[0].grid;
  for (const GridFunction& f : functions)
    if (f.grid != grid) throw std::invalid_argument("mismatched grids");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] - grid[i - 1] > epsilon))
      throw std::invalid_argument("grid spacing must exceed epsilon");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != 2)
    throw std::invalid_argument("need exactly two labels");

  LabeledDataset data;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    data.points.emplace_back(functions[i].values);
    data.labels.push_back(labels[i]);
  }

  FunctionalModel out;
  out.grid = grid;
  if (std::optional<TrainedModel> hard = train_hard(data)) {
    out.model = std::move(*hard);
    return out;
  }
  if (std::optional<HeuristicResult> soft = train_heuristic(data, data, C)) {
    out.model = std::move(soft->model);
    out.used_heuristic = true;
    return out;
  }
  return std::nullopt;
}

std::string classify_function(const FunctionalModel& m, const RealFunction& f) {
  std::vector<double> values;
  values.reserve(m.grid.size());
  for (double x : m.grid) values.push_back(f(x));
  return predict(m.model, TorusPoint(std::move(values)));
}

}  // namespace tropsvm
