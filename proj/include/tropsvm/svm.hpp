#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropsvm/lp.hpp"
#include "tropsvm/tropical.hpp"

namespace tropsvm {

/// Labeled points on the tropical projective torus.
struct LabeledDataset {
  std::vector<TorusPoint> points;
  std::vector<std::string> labels;  // parallel to points

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.front().dim(); }
};

/// Distinct labels in lexicographic order.
std::vector<std::string> label_set(const LabeledDataset& data);

/// Injective map label -> 1-based coordinate (the sector assigned to it).
using SectorAssignment = std::map<std::string, int>;

/// A trained tropical classifier: the hyperplane apex parameter, the sector
/// owned by each label, and the achieved margin. Ties in prediction go to the
/// lowest assigned coordinate ("lowest-index").
struct TrainedModel {
  TorusPoint omega;
  SectorAssignment assignment;
  double margin = 0.0;
  std::string tie_policy = "lowest-index";
};

/// Hard-margin feasibility LP for one sector assignment. Variables are
/// (z, w_1, ..., w_{d-1}) with w_d fixed to zero; for every point x with
/// assigned coordinate i and every j != i there is one constraint
///   z + x_j + w_j - x_i - w_i <= 0,
/// and the objective maximizes z. Rows follow dataset order with j ascending.
LinearProgram build_lp(const LabeledDataset& data, const SectorAssignment& assignment);

/// Exact hard-margin trainer: tries every injective assignment of the q
/// labels to the d coordinates, solves each LP, and keeps the assignment with
/// the largest optimal z (ties resolved by enumeration order, which is
/// lexicographic in the coordinate tuple). Returns nothing when every
/// assignment has optimum <= 0 (no strict separation exists). The returned
/// omega re-solves at the optimal z for the smallest box norm, i.e. minimal t
/// subject to -t <= w_k <= t.
std::optional<TrainedModel> train_hard(const LabeledDataset& data);

/// Signed worst-case margin of the hyperplane with apex parameter omega:
/// the best injective label->sector assignment of
///   min over points x of (x_i + w_i) - max_{j != i} (x_j + w_j).
/// Positive = every point strictly inside its label's sector (value equals the
/// smallest distance to the hyperplane), zero = some point on the boundary,
/// negative = misclassification (minus the worst violation).
double margin_function(const LabeledDataset& data, const TorusPoint& omega);

/// Result of the binary heuristic trainer.
struct HeuristicResult {
  TrainedModel model;
  std::vector<std::size_t> dropped;  // train indices removed as slack violators
  std::size_t validation_correct = 0;
};

/// Binary heuristic trainer. For every ordered sector pair (i, k): solve the
/// hard-margin problem; if it is infeasible, solve the slack relaxation
/// (one nonnegative slack per constraint, objective z - (C/n) * sum of
/// slacks), drop the points with positive slack, and re-solve hard on the
/// rest. Candidates are scored by validation accuracy; ties prefer the larger
/// margin, then the lexicographically first pair. Returns nothing when no
/// pair admits a positive margin even after dropping violators.
///
/// The per-pair optima are computed in closed form (the hard problem reduces
/// to z = (min_a (x_i - x_k) + min_b (x_k - x_i)) / 2, and the slack
/// relaxation separates into two one-dimensional piecewise-linear problems
/// after eliminating dominated variables); the winning pair's omega is then
/// extracted by the same LPs as train_hard. The closed forms agree with the
/// LP route exactly and the tests verify this.
std::optional<HeuristicResult> train_heuristic(const LabeledDataset& train,
                                               const LabeledDataset& validation,
                                               double C = 1.0);

/// Sector of x restricted to the assigned coordinates: the label whose
/// coordinate attains the largest x_i + w_i, ties to the lowest coordinate.
std::string predict(const TrainedModel& model, const TorusPoint& x);

/// Support-vector prediction of the apex shift for a two-cluster instance
/// whose labels (in lexicographic order) concentrate in sectors 1 and 2.
struct ShiftCheck {
  bool used_sectors_12 = false;  // model assigned first label -> 1, second -> 2
  double predicted_shift = 0.0;  // (xi1* - xi2* + eta1* - eta2*) / 2
  double trained_shift = 0.0;    // omega_2 - omega_1 from the model
};

/// Predicts omega_2 - omega_1 from the two support vectors: the first-label
/// point minimizing x_1 - x_2 and the second-label point minimizing x_2 - x_1.
/// used_sectors_12 reports whether the model actually used sectors {1, 2};
/// when it did not, the comparison is meaningless and must not be made.
ShiftCheck support_vector_shift(const LabeledDataset& data, const TrainedModel& model);

}  // namespace tropsvm
