#include "tropsvm/l2svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tropsvm/rng.hpp"

namespace tropsvm {

double l2_objective(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys,
                    const std::vector<double>& w, double bias, double lambda) {
  double hinge = 0.0;
  for (std::size_t idx = 0; idx < xs.size(); ++idx) {
    double dot = bias;
    for (std::size_t k = 0; k < w.size(); ++k) dot += w[k] * xs[idx][k];
    hinge += std::max(0.0, 1.0 - ys[idx] * dot);
  }
  double norm2 = 0.0;
  for (double wk : w) norm2 += wk * wk;
  return lambda * norm2 + hinge / static_cast<double>(xs.size());
}

L2Model l2_train(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys,
                 const L2Config& config) {
  if (xs.empty()) throw std::invalid_argument("training set is empty");
  if (xs.size() != ys.size()) throw std::invalid_argument("labels and points differ in length");
  const std::size_t dim = xs[0].size();
  for (const auto& x : xs)
    if (x.size() != dim) throw std::invalid_argument("dimension mismatch in training set");
  for (int y : ys)
    if (y != 1 && y != -1) throw std::invalid_argument("labels must be +1 or -1");
  if (std::count(ys.begin(), ys.end(), 1) == 0 || std::count(ys.begin(), ys.end(), -1) == 0)
    throw std::invalid_argument("training set contains a single class");

  std::vector<double> w(dim, 0.0);
  double bias = 0.0;
  L2Model best;
  best.w = w;
  best.objective = l2_objective(xs, ys, w, bias, config.lambda);

  // Any w with lambda*|w|^2 > 1 is already worse than the zero model, so
  // projecting onto |w| <= 1/sqrt(lambda) never excludes the optimum and
  // keeps the early huge steps of the 1/(lambda*t) schedule bounded.
  const double radius = 1.0 / std::sqrt(config.lambda);

  Rng rng(config.seed);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    // Fisher-Yates with the shared generator keeps runs reproducible.
    for (std::size_t k = order.size(); k > 1; --k)
      std::swap(order[k - 1], order[rng.below(k)]);
    for (std::size_t idx : order) {
      ++t;
      const double eta = 1.0 / (config.lambda * static_cast<double>(t));
      double dot = bias;
      for (std::size_t k = 0; k < dim; ++k) dot += w[k] * xs[idx][k];
      const bool violated = ys[idx] * dot < 1.0;
      const double shrink = 1.0 - 2.0 / static_cast<double>(t);  // 1 - eta*2*lambda
      double norm2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        w[k] *= shrink;
        if (violated) w[k] += eta * ys[idx] * xs[idx][k];
        norm2 += w[k] * w[k];
      }
      if (norm2 > radius * radius) {
        const double scale = radius / std::sqrt(norm2);
        for (auto& wk : w) wk *= scale;
      }
      // The intercept is unregularized: the 1/(lambda*t) rate would make it
      // random-walk at the 1/lambda scale, so it gets the plain 1/t step.
      if (violated) bias += ys[idx] / static_cast<double>(t);
    }
    const double obj = l2_objective(xs, ys, w, bias, config.lambda);
    if (obj < best.objective) {
      best.w = w;
      best.bias = bias;
      best.objective = obj;
    }
  }
  return best;
}

int l2_predict(const L2Model& model, const std::vector<double>& x) {
  if (x.size() != model.w.size()) throw std::invalid_argument("dimension mismatch");
  double dot = model.bias;
  for (std::size_t k = 0; k < x.size(); ++k) dot += model.w[k] * x[k];
  return dot < 0.0 ? -1 : 1;
}

}  // namespace tropsvm
