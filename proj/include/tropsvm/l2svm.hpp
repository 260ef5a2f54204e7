// Euclidean soft-margin SVM trained by stochastic subgradient descent on the
// regularized hinge loss. Serves as the classical baseline the tropical
// classifier is compared against; labels are +1/-1.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tropsvm {

struct L2Config {
  double lambda = 1e-3;     ///< regularization weight on |w|^2
  std::size_t epochs = 200; ///< passes over the data
  std::uint64_t seed = 1;   ///< shuffle seed
};

struct L2Model {
  std::vector<double> w;
  double bias = 0.0;
  double objective = 0.0;  ///< lambda*|w|^2 + mean hinge at the returned iterate
};

/// Regularized hinge objective of (w, bias) on the data.
double l2_objective(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys,
                    const std::vector<double>& w, double bias, double lambda);

/// Train on rows xs with labels ys in {-1, +1}. Step size 1/(lambda*t) on the
/// weights with projection onto |w| <= 1/sqrt(lambda) (anything outside is
/// worse than the zero model); the unregularized intercept steps at 1/t. The
/// returned model is the epoch-end iterate with the smallest objective, so the
/// reported objective never exceeds the starting one.
L2Model l2_train(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys,
                 const L2Config& config = {});

/// Sign of w.x + bias, with zero mapped to +1.
int l2_predict(const L2Model& model, const std::vector<double>& x);

}  // namespace tropsvm
