// Tuning-curve distance experiments: bell-shaped curves under lifts and
// shifts, spiked random vectors whose tropical distance follows extreme-value
// scaling, and a Kolmogorov-Smirnov check of the Gumbel limit law.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tropsvm {

/// A vector of responses, one per stimulus.
struct TuningCurve {
  std::vector<double> values;
};

/// Gaussian density sampled at n evenly spaced stimuli on [-5, 5], plus a
/// constant vertical lift. Requires n >= 2 and sigma > 0.
TuningCurve gaussian_curve(std::size_t n, double mu, double sigma, double lift);

/// max(v - w) - min(v - w): the tropical distance of raw response vectors
/// (insensitive to vertical lifts).
double curve_trop_distance(const TuningCurve& v, const TuningCurve& w);

/// Ordinary Euclidean distance of the response vectors.
double curve_euclidean_distance(const TuningCurve& v, const TuningCurve& w);

struct DistancePair {
  double tropical;
  double euclidean;
};

/// One draw of the spiked random vector v = (5, -x_2, ..., -x_n) with
/// x_i ~ Exp(1), measured against the origin. The tropical distance equals
/// 5 + max_i x_i, so its mean follows the extreme-value curve
/// 5 + gamma + log n, while the Euclidean distance grows like sqrt(n).
DistancePair random_tuning_trial(std::size_t n, std::uint64_t seed);

/// Kolmogorov-Smirnov statistic of an ascending-sorted sample against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// KS statistic of (max of n Exp(1) draws) - log n against the standard
/// Gumbel CDF exp(-e^-x), over the given number of trials.
/// Requires n >= 10 and trials >= 1000.
double gumbel_deviation(std::size_t n, std::size_t trials, std::uint64_t seed);

/// H_n = 1 + 1/2 + ... + 1/n, the exact mean of the max of n Exp(1) draws.
double harmonic_number(std::size_t n);

}  // namespace tropsvm
