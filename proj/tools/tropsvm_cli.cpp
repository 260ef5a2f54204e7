// Command-line harness for the tropical SVM toolkit: point/hyperplane
// distance queries, training and prediction on CSV datasets, the benchmark
// experiments behind the figures (curse-of-dimensionality, VC bound,
// extreme-value scaling, tuning curves, functional classification), Radon
// bipartition checks, and VC-bound evaluation.
//
// Exit codes: 0 success, 2 input error, 3 numerical failure.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropsvm/experiments.hpp"
#include "tropsvm/extremes.hpp"
#include "tropsvm/functional.hpp"
#include "tropsvm/generalization.hpp"
#include "tropsvm/hyperplane.hpp"
#include "tropsvm/io.hpp"
#include "tropsvm/lp.hpp"
#include "tropsvm/plot.hpp"
#include "tropsvm/rng.hpp"
#include "tropsvm/svm.hpp"
#include "tropsvm/tropical.hpp"

namespace {

using namespace tropsvm;

constexpr const char* kTropicalColor = "#c0392b";
constexpr const char* kClassicalColor = "#222222";
constexpr const char* kBoundColor = "#2980b9";

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const std::size_t first = token.find_first_not_of(" \t");
    const std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty coordinate in point '" + text + "'");
    token = token.substr(first, last - first + 1);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value))
      throw std::invalid_argument("could not parse coordinate '" + token + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  if (out.size() < 2) throw std::invalid_argument("a point needs at least two coordinates");
  return out;
}

std::string format_point(const TorusPoint& x) {
  std::string text;
  char buf[64];
  for (std::size_t i = 0; i < x.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", x[i]);
    if (i) text += ",";
    text += buf;
  }
  return text;
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  for (const auto& name : header) std::printf(" %15s", name.c_str());
  std::printf("\n");
  for (const auto& row : rows) {
    for (double v : row) std::printf(" %15.6g", v);
    std::printf("\n");
  }
}

std::string out_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

int cmd_dist(const std::vector<std::string>& point_texts, const std::string& omega_text) {
  if (!omega_text.empty()) {
    if (point_texts.size() != 1)
      throw std::invalid_argument("--omega takes exactly one point to classify");
    const TropicalHyperplane h{normalize(parse_coords(omega_text))};
    const TorusPoint x = normalize(parse_coords(point_texts[0]));
    std::printf("distance to hyperplane: %.12g\n", dist_to_hyperplane(h, x));
    const SectorResult sec = sector_of(h, x);
    if (sec.on_hyperplane) {
      std::printf("on the hyperplane; maximal sectors:");
      for (int s : sec.sectors) std::printf(" %d", s);
      std::printf("\n");
    } else {
      std::printf("sector: %d\n", sec.sector());
    }
    return 0;
  }
  if (point_texts.size() != 2)
    throw std::invalid_argument("need two points, or one point with --omega");
  const TorusPoint v = normalize(parse_coords(point_texts[0]));
  const TorusPoint w = normalize(parse_coords(point_texts[1]));
  std::printf("tropical distance: %.12g\n", trop_distance(v, w));
  return 0;
}

int cmd_train(const std::string& data_path, const std::string& model_path, bool heuristic,
              const std::string& validation_path, double soft_c) {
  const LabeledDataset data = read_dataset_csv(data_path);
  std::optional<TrainedModel> model;
  if (heuristic) {
    if (validation_path.empty())
      throw std::invalid_argument("heuristic training needs --validation");
    const LabeledDataset validation = read_dataset_csv(validation_path);
    const auto result = train_heuristic(data, validation, soft_c);
    if (result) {
      model = result->model;
      std::printf("dropped %zu of %zu training points\n", result->dropped.size(), data.size());
      std::printf("validation accuracy: %.6g (%zu/%zu)\n",
                  static_cast<double>(result->validation_correct) /
                      static_cast<double>(validation.size()),
                  result->validation_correct, validation.size());
    }
  } else {
    model = train_hard(data);
  }
  if (!model) {
    std::printf("inseparable: no sector assignment attains a positive margin\n");
    return 0;
  }
  write_model(model_path, *model);
  std::printf("margin: %.12g\n", model->margin);
  std::printf("omega: %s\n", format_point(model->omega).c_str());
  std::printf("assignment:");
  for (const auto& [label, coord] : model->assignment)
    std::printf(" %s=%d", label.c_str(), coord);
  std::printf("\nmodel written to %s\n", model_path.c_str());
  return 0;
}

int cmd_predict(const std::string& model_path, const std::string& data_path,
                const std::string& point_text) {
  const TrainedModel model = read_model(model_path);
  if (!point_text.empty()) {
    const TorusPoint x = normalize(parse_coords(point_text));
    std::printf("%s\n", predict(model, x).c_str());
    return 0;
  }
  if (data_path.empty()) throw std::invalid_argument("need --data or --point");
  const LabeledDataset data = read_dataset_csv(data_path);
  for (const auto& label : data.labels) {
    if (!model.assignment.count(label))
      throw std::invalid_argument("dataset label '" + label + "' is unknown to the model");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (predict(model, data.points[i]) == data.labels[i]) ++correct;
  }
  std::printf("accuracy: %.6g (%zu/%zu)\n",
              static_cast<double>(correct) / static_cast<double>(data.size()), correct,
              data.size());
  return 0;
}

int cmd_exp_curse(const ExperimentConfig& cfg, const std::string& out_dir) {
  const auto rows = run_curse_experiment(cfg);
  std::vector<std::vector<double>> table;
  Series trop{"tropical", {}, {}, {}, kTropicalColor, false};
  Series classical{"classical", {}, {}, {}, kClassicalColor, false};
  for (const auto& r : rows) {
    table.push_back({static_cast<double>(r.d), r.tropical_hit, r.tropical_sd, r.classical_hit,
                     r.classical_sd});
    trop.x.push_back(static_cast<double>(r.d));
    trop.y.push_back(r.tropical_hit);
    trop.err.push_back(r.tropical_sd);
    classical.x.push_back(static_cast<double>(r.d));
    classical.y.push_back(r.classical_hit);
    classical.err.push_back(r.classical_sd);
  }
  const std::vector<std::string> header = {"d", "tropical_hit", "tropical_sd", "classical_hit",
                                           "classical_sd"};
  print_table(header, table);
  write_table_csv(out_path(out_dir, "curse.csv"), header, table);
  write_plot_svg(out_path(out_dir, "curse.svg"), "Test accuracy vs dimension", "dimension d",
                 "hit rate", {trop, classical}, true);
  std::printf("wrote %s and curse.svg\n", out_path(out_dir, "curse.csv").c_str());
  return 0;
}

int cmd_exp_bound(const ExperimentConfig& cfg, const std::string& out_dir) {
  const auto rows = run_bound_experiment(cfg);
  std::vector<std::vector<double>> table;
  Series trop{"tropical", {}, {}, {}, kTropicalColor, false};
  Series classical{"classical", {}, {}, {}, kClassicalColor, false};
  Series lower{"tropical lower bound", {}, {}, {}, kBoundColor, true};
  for (const auto& r : rows) {
    table.push_back({static_cast<double>(r.d), r.tropical_hit, r.tropical_sd, r.classical_hit,
                     r.classical_sd, r.train_hit, r.lower_bound, r.coverage});
    trop.x.push_back(static_cast<double>(r.d));
    trop.y.push_back(r.tropical_hit);
    trop.err.push_back(r.tropical_sd);
    classical.x.push_back(static_cast<double>(r.d));
    classical.y.push_back(r.classical_hit);
    classical.err.push_back(r.classical_sd);
    lower.x.push_back(static_cast<double>(r.d));
    lower.y.push_back(r.lower_bound);
  }
  const std::vector<std::string> header = {"d",            "tropical_hit", "tropical_sd",
                                           "classical_hit", "classical_sd", "train_hit",
                                           "lower_bound",  "coverage"};
  print_table(header, table);
  write_table_csv(out_path(out_dir, "bound.csv"), header, table);
  write_plot_svg(out_path(out_dir, "bound.svg"), "Hit rate and VC lower bound", "dimension d",
                 "hit rate", {trop, classical, lower}, true);
  std::printf("wrote %s and bound.svg\n", out_path(out_dir, "bound.csv").c_str());
  return 0;
}

int cmd_exp_scaling(const ExperimentConfig& cfg, const std::string& out_dir) {
  const auto rows = run_scaling_experiment(cfg);
  std::vector<std::vector<double>> table;
  Series sim{"simulation", {}, {}, {}, kTropicalColor, false};
  Series theory{"5 + gamma + log n", {}, {}, {}, kClassicalColor, true};
  Series esim{"simulation", {}, {}, {}, kTropicalColor, false};
  Series eref{"sqrt(25 + 2(n-1))", {}, {}, {}, kClassicalColor, true};
  for (const auto& r : rows) {
    table.push_back({static_cast<double>(r.n), r.tropical_mean, r.tropical_se, r.tropical_theory,
                     r.euclidean_mean, r.euclidean_ref});
    const double n = static_cast<double>(r.n);
    sim.x.push_back(n);
    sim.y.push_back(r.tropical_mean);
    sim.err.push_back(3.0 * r.tropical_se);
    theory.x.push_back(n);
    theory.y.push_back(r.tropical_theory);
    esim.x.push_back(n);
    esim.y.push_back(r.euclidean_mean);
    eref.x.push_back(n);
    eref.y.push_back(r.euclidean_ref);
  }
  const std::vector<std::string> header = {"n",          "tropical_mean", "tropical_se",
                                           "theory",     "euclidean_mean", "euclidean_ref"};
  print_table(header, table);
  write_table_csv(out_path(out_dir, "scaling.csv"), header, table);
  write_plot_svg(out_path(out_dir, "scaling_tropical.svg"), "Mean tropical distance vs n", "n",
                 "distance", {sim, theory}, true);
  write_plot_svg(out_path(out_dir, "scaling_euclidean.svg"), "Mean Euclidean distance vs n", "n",
                 "distance", {esim, eref}, true);
  std::printf("wrote %s and scaling_*.svg\n", out_path(out_dir, "scaling.csv").c_str());
  return 0;
}

int cmd_exp_tuning(std::size_t stimuli, const std::string& out_dir) {
  const TuningTables tables = run_tuning_experiment(stimuli);
  std::vector<std::vector<double>> shift_rows, lift_rows;
  Series trop{"tropical", {}, {}, {}, kTropicalColor, false};
  Series euclid{"euclidean", {}, {}, {}, kClassicalColor, false};
  for (const auto& r : tables.shift) {
    shift_rows.push_back({r.shift, r.tropical, r.euclidean});
    trop.x.push_back(r.shift);
    trop.y.push_back(r.tropical);
    euclid.x.push_back(r.shift);
    euclid.y.push_back(r.euclidean);
  }
  for (const auto& r : tables.lift) lift_rows.push_back({r.lift, r.tropical, r.euclidean});
  std::printf("distance vs horizontal shift of the bell curve\n");
  print_table({"shift", "tropical", "euclidean"}, shift_rows);
  std::printf("distance vs vertical lift (tropical ignores lifts)\n");
  print_table({"lift", "tropical", "euclidean"}, lift_rows);
  write_table_csv(out_path(out_dir, "tuning_shift.csv"), {"shift", "tropical", "euclidean"},
                  shift_rows);
  write_table_csv(out_path(out_dir, "tuning_lift.csv"), {"lift", "tropical", "euclidean"},
                  lift_rows);
  write_plot_svg(out_path(out_dir, "tuning.svg"), "Curve distance vs shift", "shift",
                 "distance", {trop, euclid}, false);
  std::printf("wrote tuning_shift.csv, tuning_lift.csv and tuning.svg in %s\n", out_dir.c_str());
  return 0;
}

int cmd_exp_functional(const std::string& out_dir) {
  const GaussianMixture f1 = gaussian_density(-2.0, 1.0);
  const GaussianMixture f2 = gaussian_density(-2.0, 0.5);
  const GaussianMixture f3 = gaussian_density(2.0, 1.0);
  const GaussianMixture f4 = gaussian_density(2.0, 0.5);

  std::printf("functional tropical distances between Gaussian densities\n");
  std::printf("  d_tr(F1, F2) = %.6f\n", func_trop_distance(f1, f2));
  std::printf("  d_tr(F1, F3) = %.6f\n", func_trop_distance(f1, f3));
  std::printf("  d_tr(F1, F4) = %.6f\n", func_trop_distance(f1, f4));

  const FunctionalHyperplane h0{RealFunction([](double) { return 0.0; }), 1.0};
  std::printf("distances to the flat hyperplane H_{0,1}\n");
  std::printf("  d_tr(F1, H_{0,1}) = %.6f\n", dist_to_functional_hyperplane(f1, h0));
  std::printf("  d_tr(F2, H_{0,1}) = %.6f\n", dist_to_functional_hyperplane(f2, h0));

  const FunctionalHyperplane hf3{RealFunction(f3), 1.0};
  const double membership = dist_to_functional_hyperplane(f1, hf3);
  std::printf("membership: d_tr(F1, H_{F3,1}) = %.3g -> F1 %s H_{F3,1}\n", membership,
              membership < 1e-6 ? "lies on" : "is off");

  std::vector<double> grid;
  for (int i = 0; i <= 8; ++i) grid.push_back(-4.0 + i);
  const auto model = alg1_train({sample_on_grid(f1, grid), sample_on_grid(f3, grid)},
                                {"A", "B"}, 0.5);
  if (model) {
    std::printf("trained on F1->A, F3->B over a 9-point grid (%s margin %.4g)\n",
                model->used_heuristic ? "heuristic," : "hard,", model->model.margin);
    std::printf("  classify F2 -> %s\n", classify_function(*model, f2).c_str());
    std::printf("  classify F4 -> %s\n", classify_function(*model, f4).c_str());
  } else {
    std::printf("training on F1/F3 found no positive-margin classifier\n");
  }

  std::vector<double> fine;
  const std::size_t samples = 321;
  for (std::size_t i = 0; i < samples; ++i)
    fine.push_back(-8.0 + 16.0 * static_cast<double>(i) / static_cast<double>(samples - 1));
  std::vector<std::pair<std::string, std::vector<double>>> columns = {
      {"F1", {}}, {"F2", {}}, {"F3", {}}, {"F4", {}}};
  std::vector<Series> series;
  const char* colors[] = {kTropicalColor, "#e67e22", kBoundColor, "#27ae60"};
  const GaussianMixture* funcs[] = {&f1, &f2, &f3, &f4};
  for (std::size_t k = 0; k < 4; ++k) {
    for (double x : fine) columns[k].second.push_back((*funcs[k])(x));
    series.push_back({columns[k].first, fine, columns[k].second, {}, colors[k], false});
  }
  write_grid_functions_csv(out_path(out_dir, "functional_densities.csv"), fine, columns);
  write_plot_svg(out_path(out_dir, "functional.svg"), "Gaussian density family", "x", "density",
                 series, false);
  std::printf("wrote functional_densities.csv and functional.svg in %s\n", out_dir.c_str());
  return 0;
}

int cmd_radon(std::size_t dim, std::size_t trials, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("radon needs dimension >= 2");
  double worst_gap = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    std::vector<TorusPoint> points;
    for (std::size_t p = 0; p < dim + 1; ++p) {
      std::vector<double> raw(dim);
      for (auto& v : raw) v = rng.uniform(-5.0, 5.0);
      points.push_back(normalize(raw));
    }
    const auto witness = radon_witness(points);
    if (!witness)
      throw NumericalError("no intersecting bipartition certified for set " + std::to_string(t));
    worst_gap = std::max(worst_gap, witness->gap);
    std::vector<int> labeling(points.size(), 0);
    for (std::size_t idx : witness->side_b) labeling[idx] = 1;
    if (shatter_check(points, labeling))
      throw NumericalError("witnessed bipartition was unexpectedly separable (set " +
                           std::to_string(t) + ")");
    LabeledDataset data;
    data.points = points;
    for (int side : labeling) data.labels.push_back(side == 0 ? "A" : "B");
    if (train_hard(data))
      throw NumericalError("hard-margin training separated a Radon bipartition (set " +
                           std::to_string(t) + ")");
  }
  std::printf("%zu random %zu-point sets in dimension %zu:\n", trials, dim + 1, dim);
  std::printf("  every set has a bipartition with intersecting tropical hulls\n");
  std::printf("  worst witness containment gap: %.3g\n", worst_gap);
  std::printf("  the witnessed labeling is never separable (shatter + hard-margin checks)\n");
  return 0;
}

int cmd_bound(std::size_t n, std::size_t d, double eta, bool have_hit, double train_hit) {
  std::printf("vc_bound(n=%zu, d=%zu, eta=%g) = %.8f\n", n, d, eta, vc_bound(n, d, eta));
  if (have_hit) {
    std::printf("hit_rate_lower_bound(train_hit=%g) = %.8f\n", train_hit,
                hit_rate_lower_bound(train_hit, n, d, eta));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical max-plus machine-learning toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_dir = "out";
  std::size_t trials = 200;
  bool serial = false;
  app.add_option("--seed", seed, "master random seed")->capture_default_str();
  app.add_option("--out", out_dir, "output directory for tables and plots")
      ->capture_default_str();
  app.add_option("--trials", trials, "Monte-Carlo trials per configuration")
      ->capture_default_str();
  app.add_flag("--serial", serial, "run trials on one thread (results are identical)");

  auto* dist = app.add_subcommand("dist", "tropical distance between points or to a hyperplane");
  dist->fallthrough();
  std::vector<std::string> dist_points;
  std::string omega_text;
  dist->add_option("points", dist_points, "points as comma-separated coordinates")
      ->expected(1, 2);
  dist->add_option("--omega", omega_text, "hyperplane parameter omega");

  auto* train = app.add_subcommand("train", "train a tropical classifier on a CSV dataset");
  train->fallthrough();
  std::string train_data, model_path = "model.txt", validation_path;
  bool heuristic = false;
  double soft_c = 1.0;
  train->add_option("--data", train_data, "training CSV (label,f1,...,fd)")->required();
  train->add_option("--model", model_path, "model output path")->capture_default_str();
  train->add_flag("--heuristic", heuristic, "sector-pair heuristic with slack dropping");
  train->add_option("--validation", validation_path, "validation CSV for model selection");
  train->add_option("--c", soft_c, "slack weight C")->capture_default_str();

  auto* predict_cmd = app.add_subcommand("predict", "classify points with a trained model");
  predict_cmd->fallthrough();
  std::string predict_model, predict_data, point_text;
  predict_cmd->add_option("--model", predict_model, "model file")->required();
  predict_cmd->add_option("--data", predict_data, "labeled CSV to score");
  predict_cmd->add_option("--point", point_text, "single point to classify");

  auto* curse = app.add_subcommand("exp-curse", "accuracy vs dimension benchmark");
  curse->fallthrough();
  std::vector<std::size_t> curse_dims = {3, 5, 10, 20, 50, 100};
  std::size_t curse_per_class = 5;
  double curse_separation = 5.0;
  double curse_c = 1.0;
  curse->add_option("--dims", curse_dims, "dimensions to sweep")->capture_default_str();
  curse->add_option("--per-class", curse_per_class, "training/test points per class")
      ->capture_default_str();
  curse->add_option("--separation", curse_separation, "mean offset s")->capture_default_str();
  curse->add_option("--c", curse_c, "slack weight C")->capture_default_str();

  auto* bound_exp = app.add_subcommand("exp-bound", "hit rates vs the VC lower bound");
  bound_exp->fallthrough();
  std::vector<std::size_t> bound_dims = {3, 10, 30, 100};
  std::size_t bound_per_class = 100;
  double bound_separation = std::sqrt(2.0);
  double bound_eta = 0.1;
  bound_exp->add_option("--dims", bound_dims, "dimensions to sweep")->capture_default_str();
  bound_exp->add_option("--per-class", bound_per_class, "training/test points per class")
      ->capture_default_str();
  bound_exp->add_option("--separation", bound_separation, "mean offset s")
      ->capture_default_str();
  bound_exp->add_option("--eta", bound_eta, "confidence level eta")->capture_default_str();

  auto* scaling = app.add_subcommand("exp-scaling", "extreme-value scaling of the distances");
  scaling->fallthrough();
  std::vector<std::size_t> scaling_sizes = {10, 100, 1000, 10000};
  scaling->add_option("--sizes", scaling_sizes, "vector lengths n")->capture_default_str();

  auto* tuning = app.add_subcommand("exp-tuning", "bell-curve distances under shift and lift");
  tuning->fallthrough();
  std::size_t stimuli = 101;
  tuning->add_option("--stimuli", stimuli, "samples per tuning curve")->capture_default_str();

  auto* functional = app.add_subcommand("exp-functional",
                                        "functional metric examples and curve classification");
  functional->fallthrough();

  auto* radon = app.add_subcommand("radon", "Radon bipartitions of random d+1 point sets");
  radon->fallthrough();
  std::size_t radon_dim = 3;
  radon->add_option("--dim", radon_dim, "torus dimension d")->capture_default_str();

  auto* bound_cmd = app.add_subcommand("bound", "evaluate the VC generalization bound");
  bound_cmd->fallthrough();
  std::size_t bound_n = 0, bound_d = 0;
  double eta = 0.1, train_hit = 0.0;
  bound_cmd->add_option("--n", bound_n, "sample count")->required();
  bound_cmd->add_option("--d", bound_d, "VC dimension")->required();
  bound_cmd->add_option("--eta", eta, "confidence level")->capture_default_str();
  auto* hit_opt = bound_cmd->add_option("--train-hit", train_hit, "training hit rate in [0,1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.parallel = !serial;
    if (app.got_subcommand(dist)) return cmd_dist(dist_points, omega_text);
    if (app.got_subcommand(train))
      return cmd_train(train_data, model_path, heuristic, validation_path, soft_c);
    if (app.got_subcommand(predict_cmd))
      return cmd_predict(predict_model, predict_data, point_text);
    if (app.got_subcommand(curse)) {
      cfg.dims = curse_dims;
      cfg.samples_per_class = curse_per_class;
      cfg.separation = curse_separation;
      cfg.soft_c = curse_c;
      return cmd_exp_curse(cfg, out_dir);
    }
    if (app.got_subcommand(bound_exp)) {
      cfg.dims = bound_dims;
      cfg.samples_per_class = bound_per_class;
      cfg.separation = bound_separation;
      cfg.eta = bound_eta;
      return cmd_exp_bound(cfg, out_dir);
    }
    if (app.got_subcommand(scaling)) {
      cfg.sizes = scaling_sizes;
      return cmd_exp_scaling(cfg, out_dir);
    }
    if (app.got_subcommand(tuning)) return cmd_exp_tuning(stimuli, out_dir);
    if (app.got_subcommand(functional)) return cmd_exp_functional(out_dir);
    if (app.got_subcommand(radon)) return cmd_radon(radon_dim, trials, seed);
    if (app.got_subcommand(bound_cmd))
      return cmd_bound(bound_n, bound_d, eta, hit_opt->count() > 0, train_hit);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
