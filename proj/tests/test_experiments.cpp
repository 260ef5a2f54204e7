#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tropsvm/experiments.hpp"
#include "tropsvm/io.hpp"
#include "tropsvm/l2svm.hpp"
#include "tropsvm/plot.hpp"
#include "tropsvm/rng.hpp"
#include "tropsvm/svm.hpp"

using namespace tropsvm;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("the two-cluster generator is deterministic and shaped as documented") {
  Rng rng1(42), rng2(42);
  const RawDataset a = gen_gaussian_raw(6, 4, 5.0, rng1);
  const RawDataset b = gen_gaussian_raw(6, 4, 5.0, rng2);
  REQUIRE(a.rows.size() == 8);
  CHECK(a.rows == b.rows);
  CHECK(a.labels == b.labels);
  CHECK(a.labels.front() == "A");
  CHECK(a.labels.back() == "B");
  for (const auto& row : a.rows) CHECK(row.size() == 6);

  Rng rng3(42);
  CHECK_THROWS_AS(gen_gaussian_raw(2, 4, 5.0, rng3), std::invalid_argument);

  // Cluster means: the first class centers on (+s, -s, 0...), the second on
  // (-s, +s, 0...); with many samples the empirical means must land nearby.
  Rng rng4(7);
  const RawDataset big = gen_gaussian_raw(3, 4000, 5.0, rng4);
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t p = 0; p < 4000; ++p) {
    m0 += big.rows[p][0];
    m1 += big.rows[p][1];
  }
  CHECK(std::abs(m0 / 4000 - 5.0) <= 0.1);
  CHECK(std::abs(m1 / 4000 + 5.0) <= 0.1);
}

TEST_CASE("torus conversion subtracts the final feature") {
  RawDataset raw;
  raw.rows = {{3.0, 4.0, 1.0}, {1.0, 1.0, 1.0}};
  raw.labels = {"A", "B"};
  const LabeledDataset data = to_torus(raw);
  CHECK(data.points[0].coords() == std::vector<double>{2.0, 3.0, 0.0});
  CHECK(data.points[1].coords() == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(data.labels == raw.labels);
}

TEST_CASE("a single benchmark trial is deterministic with sane outcomes") {
  const TrialOutcome a = run_gaussian_trial(5, 5, 5.0, 1.0, 1234);
  const TrialOutcome b = run_gaussian_trial(5, 5, 5.0, 1.0, 1234);
  CHECK(a.tropical_hit == b.tropical_hit);
  CHECK(a.classical_hit == b.classical_hit);
  CHECK(a.train_hit == b.train_hit);
  for (double v : {a.tropical_hit, a.classical_hit, a.train_hit}) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  // Strongly separated clusters in low dimension are an easy problem.
  CHECK(a.tropical_hit >= 0.8);
  CHECK(a.classical_hit >= 0.8);
}

TEST_CASE("experiment tables are identical under serial and parallel execution") {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.trials = 16;
  cfg.dims = {3, 10};
  cfg.samples_per_class = 5;
  cfg.separation = 5.0;

  ExperimentConfig serial = cfg;
  serial.parallel = false;

  const auto rows_p = run_curse_experiment(cfg);
  const auto rows_s = run_curse_experiment(serial);
  REQUIRE(rows_p.size() == rows_s.size());
  for (std::size_t i = 0; i < rows_p.size(); ++i) {
    CHECK(rows_p[i].d == rows_s[i].d);
    CHECK(rows_p[i].tropical_hit == rows_s[i].tropical_hit);
    CHECK(rows_p[i].tropical_sd == rows_s[i].tropical_sd);
    CHECK(rows_p[i].classical_hit == rows_s[i].classical_hit);
    CHECK(rows_p[i].classical_sd == rows_s[i].classical_sd);
  }

  ExperimentConfig bound = cfg;
  bound.samples_per_class = 50;
  bound.separation = std::sqrt(2.0);
  bound.trials = 8;
  ExperimentConfig bound_serial = bound;
  bound_serial.parallel = false;
  const auto brow_p = run_bound_experiment(bound);
  const auto brow_s = run_bound_experiment(bound_serial);
  REQUIRE(brow_p.size() == brow_s.size());
  for (std::size_t i = 0; i < brow_p.size(); ++i) {
    CHECK(brow_p[i].tropical_hit == brow_s[i].tropical_hit);
    CHECK(brow_p[i].lower_bound == brow_s[i].lower_bound);
    CHECK(brow_p[i].coverage == brow_s[i].coverage);
  }

  ExperimentConfig scale = cfg;
  scale.trials = 400;
  scale.sizes = {10, 100};
  ExperimentConfig scale_serial = scale;
  scale_serial.parallel = false;
  const auto srow_p = run_scaling_experiment(scale);
  const auto srow_s = run_scaling_experiment(scale_serial);
  REQUIRE(srow_p.size() == srow_s.size());
  for (std::size_t i = 0; i < srow_p.size(); ++i) {
    CHECK(srow_p[i].tropical_mean == srow_s[i].tropical_mean);
    CHECK(srow_p[i].euclidean_mean == srow_s[i].euclidean_mean);
  }
}

TEST_CASE("benchmark accuracies and spreads stay inside their ranges") {
  ExperimentConfig cfg;
  cfg.seed = 9;
  cfg.trials = 24;
  cfg.dims = {3, 5};
  const auto rows = run_curse_experiment(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.tropical_hit >= 0.0);
    CHECK(row.tropical_hit <= 1.0);
    CHECK(row.classical_hit >= 0.0);
    CHECK(row.classical_hit <= 1.0);
    CHECK(row.tropical_sd >= 0.0);
    CHECK(row.tropical_sd <= 0.5);
    CHECK(row.classical_sd >= 0.0);
    CHECK(row.classical_sd <= 0.5);
  }
}

TEST_CASE("guarantee-curve rows carry their reference columns") {
  ExperimentConfig cfg;
  cfg.seed = 3;
  cfg.trials = 12;
  cfg.dims = {10, 30};
  cfg.samples_per_class = 100;
  cfg.separation = std::sqrt(2.0);
  const auto rows = run_bound_experiment(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.coverage >= 0.0);
    CHECK(row.coverage <= 1.0);
    CHECK(row.lower_bound <= row.train_hit);
    CHECK(row.lower_bound >= 0.0);
    CHECK(row.train_hit <= 1.0);
  }
}

TEST_CASE("scaling rows pair simulations with their reference curves") {
  ExperimentConfig cfg;
  cfg.seed = 21;
  cfg.trials = 2000;
  cfg.sizes = {10, 100};
  const auto rows = run_scaling_experiment(cfg);
  REQUIRE(rows.size() == 2);
  const double egamma = 0.57721566490153286;
  for (const auto& row : rows) {
    CHECK(std::abs(row.tropical_theory -
                   (5.0 + egamma + std::log(static_cast<double>(row.n)))) <= 1e-12);
    CHECK(std::abs(row.euclidean_ref -
                   std::sqrt(25.0 + 2.0 * (static_cast<double>(row.n) - 1.0))) <= 1e-12);
    CHECK(row.tropical_se > 0.0);
    // Loose five-standard-error envelope: the tight three-error check runs in
    // the acceptance harness at full trial counts.
    CHECK(std::abs(row.tropical_mean - row.tropical_theory) <= 5.0 * row.tropical_se);
  }
}

TEST_CASE("tuning tables report exact lift behavior and monotone shifts") {
  const TuningTables tables = run_tuning_experiment(101);
  REQUIRE_FALSE(tables.shift.empty());
  REQUIRE_FALSE(tables.lift.empty());
  CHECK(tables.shift.front().shift == 0.0);
  CHECK(tables.shift.front().tropical == 0.0);
  CHECK(tables.shift.front().euclidean == 0.0);
  for (std::size_t i = 1; i < tables.shift.size(); ++i) {
    CHECK(tables.shift[i].tropical > tables.shift[i - 1].tropical);
    CHECK(tables.shift[i].euclidean > tables.shift[i - 1].euclidean);
  }
  for (const auto& row : tables.lift) {
    CHECK(row.tropical <= 1e-14);  // zero up to per-sample rounding of the lift
    CHECK(std::abs(row.euclidean - std::abs(row.lift) * std::sqrt(101.0)) <= 1e-9);
  }
}

TEST_CASE("the linear baseline separates what is separable") {
  SUBCASE("two opposite points on a line") {
    const std::vector<std::vector<double>> xs = {{-1.0}, {1.0}};
    const std::vector<int> ys = {-1, 1};
    const L2Model m = l2_train(xs, ys, {});
    CHECK(l2_predict(m, xs[0]) == -1);
    CHECK(l2_predict(m, xs[1]) == 1);
  }
  SUBCASE("separable planar blobs reach full training accuracy") {
    Rng rng(601);
    std::vector<std::vector<double>> xs;
    std::vector<int> ys;
    for (int p = 0; p < 40; ++p) {
      const bool first = p < 20;
      xs.push_back({rng.normal() + (first ? 4.0 : -4.0), rng.normal() + (first ? -4.0 : 4.0)});
      ys.push_back(first ? 1 : -1);
    }
    const L2Model m = l2_train(xs, ys, {});
    std::size_t correct = 0;
    for (std::size_t p = 0; p < xs.size(); ++p)
      if (l2_predict(m, xs[p]) == ys[p]) ++correct;
    CHECK(correct == xs.size());
  }
  SUBCASE("single-class data is rejected") {
    CHECK_THROWS_AS(l2_train({{1.0}, {2.0}}, {1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(l2_train({{1.0}}, {1}, {}), std::invalid_argument);
  }
}

TEST_CASE("the linear baseline never ends worse than the zero model") {
  Rng rng(607);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<double>> xs;
    std::vector<int> ys;
    for (int p = 0; p < 30; ++p) {
      xs.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
      ys.push_back(p % 2 == 0 ? 1 : -1);
    }
    L2Config cfg;
    cfg.seed = 1000 + static_cast<std::uint64_t>(t);
    const L2Model m = l2_train(xs, ys, cfg);
    const double at_model = l2_objective(xs, ys, m.w, m.bias, cfg.lambda);
    const double at_zero = l2_objective(xs, ys, std::vector<double>(3, 0.0), 0.0, cfg.lambda);
    CHECK(std::abs(at_model - m.objective) <= 1e-12);
    CHECK(at_model <= at_zero + 1e-12);
  }
}

TEST_CASE("baseline predictions ignore positive rescaling of the model") {
  Rng rng(613);
  std::vector<std::vector<double>> xs;
  std::vector<int> ys;
  for (int p = 0; p < 40; ++p) {
    xs.push_back({rng.normal() + (p % 2 ? 2.0 : -2.0), rng.normal()});
    ys.push_back(p % 2 ? 1 : -1);
  }
  L2Model m = l2_train(xs, ys, {});
  L2Model scaled = m;
  for (double& w : scaled.w) w *= 7.5;
  scaled.bias *= 7.5;
  for (int t = 0; t < 200; ++t) {
    const std::vector<double> x = {rng.uniform(-5, 5), rng.uniform(-5, 5)};
    CHECK(l2_predict(m, x) == l2_predict(scaled, x));
  }
}

TEST_CASE("the linear baseline tracks an unrelated convex optimizer") {
  // Moderate separation, many samples, low dimension: a regime where every
  // sane linear classifier lands on nearly the same accuracy.
  const double s = std::sqrt(2.0);
  double acc_l2 = 0.0, acc_logistic = 0.0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(77, static_cast<std::uint64_t>(t)));
    const RawDataset train = gen_gaussian_raw(3, 100, s, rng);
    const RawDataset test = gen_gaussian_raw(3, 100, s, rng);
    std::vector<int> ys;
    for (const auto& label : train.labels) ys.push_back(label == "A" ? 1 : -1);
    L2Config cfg;
    cfg.seed = trial_seed(78, static_cast<std::uint64_t>(t));
    const L2Model l2 = l2_train(train.rows, ys, cfg);
    const oracles::LogisticModel logistic = oracles::logistic_train(train.rows, ys);
    std::size_t hit_l2 = 0, hit_logistic = 0;
    for (std::size_t p = 0; p < test.rows.size(); ++p) {
      const int want = test.labels[p] == "A" ? 1 : -1;
      if (l2_predict(l2, test.rows[p]) == want) ++hit_l2;
      if (oracles::logistic_predict(logistic, test.rows[p]) == want) ++hit_logistic;
    }
    acc_l2 += static_cast<double>(hit_l2) / static_cast<double>(test.rows.size());
    acc_logistic += static_cast<double>(hit_logistic) / static_cast<double>(test.rows.size());
  }
  acc_l2 /= trials;
  acc_logistic /= trials;
  CHECK(std::abs(acc_l2 - acc_logistic) <= 0.03);
  CHECK(acc_l2 > 0.9);  // the problem itself is quite solvable
}

TEST_CASE("datasets round-trip through their file format") {
  Rng rng(617);
  LabeledDataset data;
  for (int p = 0; p < 40; ++p) {
    std::vector<double> raw(4);
    for (double& v : raw) v = rng.uniform(-9.0, 9.0);
    data.points.push_back(normalize(raw));
    data.labels.push_back(p % 2 ? "pos" : "neg");
  }
  const auto path = temp_file("tropsvm_dataset_roundtrip.csv");
  write_dataset_csv(path.string(), data);
  const LabeledDataset back = read_dataset_csv(path.string());
  REQUIRE(back.size() == data.size());
  CHECK(back.labels == data.labels);
  for (std::size_t p = 0; p < data.size(); ++p)
    CHECK(back.points[p].coords() == data.points[p].coords());  // full precision

  // Writing the same dataset twice produces identical bytes.
  const auto path2 = temp_file("tropsvm_dataset_roundtrip2.csv");
  write_dataset_csv(path2.string(), data);
  CHECK(slurp(path) == slurp(path2));
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("models round-trip and keep every prediction") {
  LabeledDataset data;
  data.points = {normalize({5, -5, 0}), normalize({-5, 5, 0})};
  data.labels = {"A", "B"};
  const auto trained = train_hard(data);
  REQUIRE(trained.has_value());
  const auto path = temp_file("tropsvm_model_roundtrip.txt");
  write_model(path.string(), *trained);

  const std::string text = slurp(path);
  CHECK(text.find("omega: ") == 0);
  CHECK(text.find("assignment: ") != std::string::npos);
  CHECK(text.find("margin: ") != std::string::npos);
  CHECK(text.find("tie_policy: lowest-index") != std::string::npos);

  const TrainedModel back = read_model(path.string());
  CHECK(back.assignment == trained->assignment);
  CHECK(back.margin == trained->margin);
  CHECK(back.omega.coords() == trained->omega.coords());
  Rng rng(619);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> raw(3);
    for (double& v : raw) v = rng.uniform(-20.0, 20.0);
    const TorusPoint x = normalize(raw);
    CHECK(predict(back, x) == predict(*trained, x));
  }
  std::filesystem::remove(path);
}

TEST_CASE("malformed data files raise distinct structured errors") {
  const auto path = temp_file("tropsvm_bad_input.csv");

  spit(path, "");
  CHECK_THROWS_WITH_AS(read_dataset_csv(path.string()),
                       doctest::Contains("empty dataset file"), std::invalid_argument);

  spit(path, "foo,bar\nA,1\n");
  CHECK_THROWS_WITH_AS(read_dataset_csv(path.string()), doctest::Contains("malformed header"),
                       std::invalid_argument);

  spit(path, "label,f1,f2\n");
  CHECK_THROWS_WITH_AS(read_dataset_csv(path.string()), doctest::Contains("no rows"),
                       std::invalid_argument);

  spit(path, "label,f1,f2\nA,1.0,xyz\n");
  CHECK_THROWS_WITH_AS(read_dataset_csv(path.string()), doctest::Contains("non-numeric"),
                       std::invalid_argument);

  spit(path, "label,f1,f2\nA,1.0\n");
  CHECK_THROWS_AS(read_dataset_csv(path.string()), std::invalid_argument);

  spit(path, "");
  CHECK_THROWS_WITH_AS(read_model(path.string()), doctest::Contains("4 lines"),
                       std::invalid_argument);

  spit(path, "omega: 1 2 0\nassignment: A=1 B=2\nmargin: oops\ntie_policy: lowest-index\n");
  CHECK_THROWS_AS(read_model(path.string()), std::invalid_argument);

  CHECK_THROWS_AS(read_dataset_csv("/nonexistent/path/file.csv"), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("plots render deterministically and match the checked-in golden file") {
  const Series alpha{"alpha", {1, 2, 3}, {0.5, 0.25, 0.75}, {0.1, 0.05, 0.2}, "#c0392b", false};
  const Series beta{"beta", {1, 2, 3}, {0.4, 0.6, 0.55}, {}, "#2980b9", true};
  const auto path = temp_file("tropsvm_plot_candidate.svg");
  write_plot_svg(path.string(), "golden check", "x", "y", {alpha, beta}, false);
  const std::string got = slurp(path);
  const std::string want = slurp(std::string(TROPSVM_TEST_DATA_DIR) + "/golden_plot.svg");
  REQUIRE_FALSE(want.empty());
  CHECK(got == want);

  const auto path2 = temp_file("tropsvm_plot_candidate2.svg");
  write_plot_svg(path2.string(), "golden check", "x", "y", {alpha, beta}, false);
  CHECK(slurp(path2) == got);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("plots reject empty input and survive degenerate ranges") {
  const auto path = temp_file("tropsvm_plot_degenerate.svg");
  CHECK_THROWS_AS(write_plot_svg(path.string(), "t", "x", "y", {}, false),
                  std::invalid_argument);
  const Series empty_series{"e", {}, {}, {}, "#c0392b", false};
  CHECK_THROWS_AS(write_plot_svg(path.string(), "t", "x", "y", {empty_series}, false),
                  std::invalid_argument);
  const Series mismatched{"m", {1, 2}, {1}, {}, "#c0392b", false};
  CHECK_THROWS_AS(write_plot_svg(path.string(), "t", "x", "y", {mismatched}, false),
                  std::invalid_argument);
  const Series nonpositive{"n", {0, 1}, {1, 2}, {}, "#c0392b", false};
  CHECK_THROWS_AS(write_plot_svg(path.string(), "t", "x", "y", {nonpositive}, true),
                  std::invalid_argument);

  // One single point: the axis ranges degenerate and must be padded.
  const Series lone{"lone", {2}, {0.5}, {}, "#c0392b", false};
  write_plot_svg(path.string(), "t", "x", "y", {lone}, false);
  const std::string svg = slurp(path);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("table files write their header and rows verbatim") {
  const auto path = temp_file("tropsvm_table.csv");
  write_table_csv(path.string(), {"a", "b"}, {{1.0, 2.5}, {3.0, 4.25}});
  const std::string text = slurp(path);
  CHECK(text.find("a,b\n") == 0);
  CHECK(text.find("1,2.5\n") != std::string::npos);
  CHECK(text.find("3,4.25\n") != std::string::npos);
  std::filesystem::remove(path);
}
