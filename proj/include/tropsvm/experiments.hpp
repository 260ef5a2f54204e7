// Experiment harness: synthetic two-Gaussian datasets, the
// curse-of-dimensionality and generalization-bound benchmark loops, the
// extreme-value scaling runs, and the tuning-curve distance tables. Trials
// are independent and seeded individually, so any parallel schedule yields
// the same tables.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropsvm/rng.hpp"
#include "tropsvm/svm.hpp"

namespace tropsvm {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::vector<std::size_t> dims = {3, 5, 10, 20, 50, 100};
  std::vector<std::size_t> sizes = {10, 100, 1000, 10000};  ///< n for scaling runs
  std::size_t samples_per_class = 5;
  double separation = 5.0;  ///< s: class means (+s,-s,0,...) and (-s,+s,0,...)
  double eta = 0.1;         ///< confidence level for the bound runs
  double soft_c = 1.0;      ///< slack weight for the heuristic trainer
  bool parallel = true;
};

/// Raw feature rows before torus normalization (the classical baseline
/// consumes these directly).
struct RawDataset {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
};

/// per_class points for label "A" around (+s,-s,0,...,0) and for label "B"
/// around (-s,+s,0,...,0), unit covariance. Requires d >= 3.
RawDataset gen_gaussian_raw(std::size_t d, std::size_t per_class, double s, Rng& rng);

LabeledDataset to_torus(const RawDataset& raw);

/// gen_gaussian_raw composed with torus normalization.
LabeledDataset gen_gaussian_dataset(std::size_t d, std::size_t per_class, double s, Rng& rng);

/// One trial of the two-Gaussian benchmark: fresh train and test draws of
/// per_class points each per class; the tropical classifier picks its sector
/// pair by test performance (the model-selection protocol), the classical
/// baseline trains on the training split alone; both are scored on the test
/// split. train_hit is the selected tropical model's hit rate on the full
/// training split.
struct TrialOutcome {
  double tropical_hit;
  double classical_hit;
  double train_hit;
};
TrialOutcome run_gaussian_trial(std::size_t d, std::size_t per_class, double s, double soft_c,
                                std::uint64_t seed);

struct CurseRow {
  std::size_t d;
  double tropical_hit, tropical_sd;
  double classical_hit, classical_sd;
};
/// Mean and standard deviation of test accuracy per dimension.
std::vector<CurseRow> run_curse_experiment(const ExperimentConfig& config);

struct BoundRow {
  std::size_t d;
  double tropical_hit, tropical_sd;
  double classical_hit, classical_sd;
  double train_hit;    ///< mean tropical training hit rate
  double lower_bound;  ///< mean of per-trial train_hit - vc_bound(2*per_class*?)
  double coverage;     ///< share of trials with test hit >= that trial's lower bound
};
/// The bound benchmark: hit rates plus the VC lower bound at the configured
/// eta, with n = total training samples (two classes).
std::vector<BoundRow> run_bound_experiment(const ExperimentConfig& config);

struct ScalingRow {
  std::size_t n;
  double tropical_mean, tropical_se;
  double tropical_theory;  ///< 5 + gamma + log n
  double euclidean_mean;
  double euclidean_ref;  ///< sqrt(25 + 2(n-1)), the sqrt-n reference curve
};
/// Monte-Carlo means of the spiked-vector distances per vector length.
std::vector<ScalingRow> run_scaling_experiment(const ExperimentConfig& config);

struct TuningShiftRow {
  double shift, tropical, euclidean;
};
struct TuningLiftRow {
  double lift, tropical, euclidean;
};
struct TuningTables {
  std::vector<TuningShiftRow> shift;  ///< distances vs. horizontal shift of the bell curve
  std::vector<TuningLiftRow> lift;    ///< distances vs. vertical lift (tropical stays 0)
};
TuningTables run_tuning_experiment(std::size_t stimuli = 101);

}  // namespace tropsvm
