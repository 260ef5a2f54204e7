// Tropical metric and hyperplanes on spaces of real functions (univariate
// domain): the max-minus-min distance, hyperplanes H_{omega,epsilon} whose
// sectors are indexed by argmax location, and discretized SVM training on a
// shared evaluation grid.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropsvm/svm.hpp"

namespace tropsvm {

using RealFunction = std::function<double(double)>;

struct GaussianComponent {
  double weight;
  double mu;
  double sigma;  ///< > 0
};

/// Weighted sum of Gaussian densities; callable as a function of x.
struct GaussianMixture {
  std::vector<GaussianComponent> components;
  double operator()(double x) const;
};

/// Single Gaussian density with weight 1.
GaussianMixture gaussian_density(double mu, double sigma);

struct Interval {
  double lo = -8.0;
  double hi = 8.0;
};

/// max(f - g) - min(f - g) over the domain, evaluated on a uniform grid that
/// is doubled until successive estimates differ by less than 1e-6 (at most 20
/// doublings from 1025 points, else NumericalError). Quotients out vertical
/// lifts by construction.
double func_trop_distance(const RealFunction& f, const RealFunction& g, Interval domain = {});

/// A functional tropical hyperplane: normal function omega and the radius of
/// the ball around the argmax within which ties do not count.
struct FunctionalHyperplane {
  RealFunction omega;
  double epsilon = 1.0;  ///< > 0
};

/// Distance from f to H_{omega,epsilon}: with g = f + omega and x* the argmax
/// of g, returns max g minus the maximum of g over grid points farther than
/// epsilon from x*. Zero iff the max is (re)attained outside the ball, i.e.
/// f lies on the hyperplane. Errors when the argmax sits on the domain
/// boundary (the excluded-ball construction is unreliable there) or the ball
/// swallows the whole domain.
double dist_to_functional_hyperplane(const RealFunction& f, const FunctionalHyperplane& h,
                                     Interval domain = {});

struct FunctionalSector {
  double argmax;       ///< x*, leftmost location within grid resolution
  bool on_hyperplane;  ///< the max recurs outside the epsilon-ball (distance <= 1e-6)
  double distance;     ///< distance to the hyperplane
};

/// Sector of f relative to H_{omega,epsilon}: f belongs to the open sector of
/// every x with x* inside B_epsilon(x), unless it lies on the hyperplane.
FunctionalSector functional_sector(const RealFunction& f, const FunctionalHyperplane& h,
                                   Interval domain = {});

/// A function known by its values on a strictly increasing grid; evaluation
/// between grid points is linear interpolation, clamped at the ends. All
/// classifier operations treat it modulo additive constants.
struct GridFunction {
  std::vector<double> grid;
  std::vector<double> values;

  GridFunction(std::vector<double> grid_in, std::vector<double> values_in);
  double operator()(double x) const;
};

/// Evaluates f at each grid point.
GridFunction sample_on_grid(const RealFunction& f, const std::vector<double>& grid);

/// A classifier for functions: the training grid plus a finite-dimensional
/// tropical model over R^k / R(1,...,1).
struct FunctionalModel {
  std::vector<double> grid;
  TrainedModel model;
  bool used_heuristic = false;  ///< hard margin was infeasible; slack trainer used
};

/// Discretized training: checks that all samples share one grid with spacing
/// greater than epsilon, converts each value vector to a torus point, and
/// trains the hard-margin classifier (falling back to the heuristic trainer,
/// validated on the training set, when the hard problem is infeasible).
/// Returns nullopt when no positive-margin classifier exists at all.
std::optional<FunctionalModel> alg1_train(const std::vector<GridFunction>& functions,
                                          const std::vector<std::string>& labels, double epsilon,
                                          double C = 1.0);

/// Samples f on the model's grid, normalizes, and predicts its label.
std::string classify_function(const FunctionalModel& m, const RealFunction& f);

}  // namespace tropsvm
