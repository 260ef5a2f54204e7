#include "tropsvm/extremes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tropsvm/rng.hpp"

namespace tropsvm {

TuningCurve gaussian_curve(std::size_t n, double mu, double sigma, double lift) {
  if (n < 2) throw std::invalid_argument("need at least two stimuli");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  TuningCurve curve;
  curve.values.reserve(n);
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -5.0 + 10.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const double z = (x - mu) / sigma;
    curve.values.push_back(norm * std::exp(-0.5 * z * z) + lift);
  }
  return curve;
}

double curve_trop_distance(const TuningCurve& v, const TuningCurve& w) {
  if (v.values.size() != w.values.size()) throw std::invalid_argument("dimension mismatch");
  if (v.values.empty()) throw std::invalid_argument("empty curve");
  double hi = v.values[0] - w.values[0], lo = hi;
  for (std::size_t i = 1; i < v.values.size(); ++i) {
    const double diff = v.values[i] - w.values[i];
    hi = std::max(hi, diff);
    lo = std::min(lo, diff);
  }
  return hi - lo;
}

double curve_euclidean_distance(const TuningCurve& v, const TuningCurve& w) {
  if (v.values.size() != w.values.size()) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    const double diff = v.values[i] - w.values[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistancePair random_tuning_trial(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  Rng rng(seed);
  TuningCurve v, origin;
  v.values.reserve(n);
  origin.values.assign(n, 0.0);
  v.values.push_back(5.0);
  for (std::size_t i = 1; i < n; ++i) v.values.push_back(-rng.exponential());
  return {curve_trop_distance(v, origin), curve_euclidean_distance(v, origin)};
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    stat = std::max(stat, std::max((static_cast<double>(i) + 1.0) / n - f,
                                   f - static_cast<double>(i) / n));
  }
  return stat;
}

double gumbel_deviation(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 10) throw std::invalid_argument("need n >= 10");
  if (trials < 1000) throw std::invalid_argument("need at least 1000 trials");
  std::vector<double> samples;
  samples.reserve(trials);
  const double log_n = std::log(static_cast<double>(n));
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) top = std::max(top, rng.exponential());
    samples.push_back(top - log_n);
  }
  return ks_statistic(std::move(samples),
                      [](double x) { return std::exp(-std::exp(-x)); });
}

double harmonic_number(std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = n; i >= 1; --i) sum += 1.0 / static_cast<double>(i);
  return sum;
}

}  // namespace tropsvm
