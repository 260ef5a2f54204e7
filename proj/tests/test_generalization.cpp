#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "tropsvm/generalization.hpp"
#include "tropsvm/rng.hpp"
#include "tropsvm/svm.hpp"
#include "tropsvm/tropical.hpp"

using namespace tropsvm;

namespace {

std::vector<TorusPoint> random_points(Rng& rng, std::size_t count, std::size_t d) {
  std::vector<TorusPoint> pts;
  for (std::size_t p = 0; p < count; ++p) {
    std::vector<double> raw(d);
    for (double& v : raw) v = rng.uniform(-5.0, 5.0);
    pts.push_back(normalize(raw));
  }
  return pts;
}

}  // namespace

TEST_CASE("the sample bound evaluates its closed form") {
  // sqrt((10 (ln 200 + 1) + ln 40) / 1000) and the n = 200 variant,
  // recomputed here digit by digit as an anchor.
  CHECK(std::abs(vc_bound(1000, 10, 0.1) - 0.25820932) <= 1e-7);
  CHECK(std::abs(vc_bound(200, 10, 0.1) - 0.50288008) <= 1e-7);
  const double direct =
      std::sqrt((10.0 * (std::log(2.0 * 1000.0 / 10.0) + 1.0) + std::log(4.0 / 0.1)) / 1000.0);
  CHECK(std::abs(vc_bound(1000, 10, 0.1) - direct) <= 1e-12);
}

TEST_CASE("the sample bound shrinks with data and grows with capacity") {
  double prev = vc_bound(1000, 10, 0.1);
  for (std::size_t n : {10000u, 100000u, 1000000u}) {
    const double next = vc_bound(n, 10, 0.1);
    CHECK(next < prev);
    prev = next;
  }
  CHECK(prev < 0.05);
  for (std::size_t d = 2; d <= 32; d *= 2)
    CHECK(vc_bound(1000, 2 * d, 0.1) > vc_bound(1000, d, 0.1));
  CHECK(vc_bound(1000, 10, 0.05) > vc_bound(1000, 10, 0.1));
  CHECK(vc_bound(1000, 10, 0.2) < vc_bound(1000, 10, 0.1));
}

TEST_CASE("the sample bound rejects out-of-domain arguments") {
  CHECK_THROWS_AS(vc_bound(5, 10, 0.1), std::invalid_argument);   // n < d
  CHECK_THROWS_AS(vc_bound(100, 0, 0.1), std::invalid_argument);  // d = 0
  CHECK_THROWS_AS(vc_bound(100, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(vc_bound(100, 10, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hit_rate_lower_bound(-0.1, 100, 10, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hit_rate_lower_bound(1.1, 100, 10, 0.1), std::invalid_argument);
}

TEST_CASE("the guaranteed hit rate subtracts the bound and clips at zero") {
  CHECK(std::abs(hit_rate_lower_bound(1.0, 200, 10, 0.1) - 0.49711992) <= 1e-7);
  CHECK(std::abs(hit_rate_lower_bound(1.0, 10000, 3, 0.1) - 0.94246435) <= 1e-7);
  // A perfect training fit on few samples in high capacity guarantees nothing.
  CHECK(hit_rate_lower_bound(1.0, 100, 50, 0.1) == 0.0);
  CHECK(hit_rate_lower_bound(vc_bound(400, 10, 0.1), 400, 10, 0.1) == 0.0);
  CHECK(hit_rate_lower_bound(0.0, 400, 10, 0.1) == 0.0);
}

TEST_CASE("single-coordinate spikes are shattered under every labeling") {
  const std::vector<TorusPoint> pts = axis_spike_points(3);
  REQUIRE(pts.size() == 3);
  for (int mask = 0; mask < 8; ++mask) {
    const std::vector<int> labeling{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    CHECK(shatter_check(pts, labeling));
  }
}

TEST_CASE("coincident points with mixed labels cannot be separated") {
  const TorusPoint p = normalize({1.0, 2.0, 0.0});
  CHECK_FALSE(shatter_check({p, p}, {0, 1}));
  CHECK_FALSE(shatter_check({p, p, p}, {0, 1, 0}));
}

TEST_CASE("the shattering check enforces its enumeration caps") {
  Rng rng(301);
  CHECK_THROWS_AS(shatter_check(random_points(rng, 5, 3), {0, 1, 0, 1, 0}),
                  std::invalid_argument);  // more than d+1 points
  CHECK_THROWS_AS(shatter_check(random_points(rng, 4, 9), {0, 1, 0, 1}),
                  std::invalid_argument);  // dimension beyond the exhaustive cap
  CHECK_THROWS_AS(shatter_check(random_points(rng, 3, 3), {0, 1}), std::invalid_argument);
}

TEST_CASE("every four-point set admits an intersecting-hull bipartition") {
  Rng rng(307);
  double worst_gap = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::vector<TorusPoint> pts = random_points(rng, 4, 3);
    const auto witness = radon_witness(pts);
    REQUIRE(witness.has_value());
    CHECK(witness->gap <= 1e-6);
    worst_gap = std::max(worst_gap, witness->gap);

    // The witness must genuinely lie in both hulls.
    std::vector<TorusPoint> side_a, side_b;
    for (std::size_t i : witness->side_a) side_a.push_back(pts[i]);
    for (std::size_t i : witness->side_b) side_b.push_back(pts[i]);
    REQUIRE_FALSE(side_a.empty());
    REQUIRE_FALSE(side_b.empty());
    CHECK(TropicalPolytope(side_a).contains(witness->witness, 1e-5));
    CHECK(TropicalPolytope(side_b).contains(witness->witness, 1e-5));

    // And the bipartition it certifies must be non-separable, both for the
    // combinatorial check and for the trainer.
    std::vector<int> labeling(4, 0);
    for (std::size_t i : witness->side_b) labeling[i] = 1;
    CHECK_FALSE(shatter_check(pts, labeling));
    LabeledDataset data;
    data.points = pts;
    for (int lab : labeling) data.labels.push_back(lab ? "B" : "A");
    CHECK_FALSE(train_hard(data).has_value());
  }
  CHECK(worst_gap <= 1e-6);
}

TEST_CASE("four random points always have some non-separable labeling") {
  Rng rng(311);
  for (int t = 0; t < 100; ++t) {
    const std::vector<TorusPoint> pts = random_points(rng, 4, 3);
    bool found = false;
    for (int mask = 1; mask < 8 && !found; ++mask) {  // 7 proper bipartitions
      std::vector<int> labeling(4, 0);
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) labeling[static_cast<std::size_t>(i) + 1] = 1;
      labeling[0] = 0;
      if (!shatter_check(pts, labeling)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("duplicated points give an immediate intersecting-hull witness") {
  Rng rng(313);
  for (int t = 0; t < 50; ++t) {
    const std::vector<TorusPoint> base = random_points(rng, 2, 3);
    const std::vector<TorusPoint> pts = {base[0], base[1], base[0], base[1]};
    const auto witness = radon_witness(pts);
    REQUIRE(witness.has_value());
    CHECK(witness->gap <= 1e-6);
  }
}

TEST_CASE("witness search requires exactly one more point than the dimension") {
  Rng rng(317);
  CHECK_THROWS_AS(radon_witness(random_points(rng, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(radon_witness(random_points(rng, 5, 3)), std::invalid_argument);
}

TEST_CASE("a shatterable three-point set exists while no four-point set shatters") {
  // Lower half: the spike construction above shatters. Upper half: across
  // many random draws, every four-point set has a rejected labeling (the
  // witness bipartition), so no four-point set is shattered.
  Rng rng(331);
  for (int t = 0; t < 100; ++t) {
    const std::vector<TorusPoint> pts = random_points(rng, 4, 3);
    const auto witness = radon_witness(pts);
    REQUIRE(witness.has_value());
    std::vector<int> labeling(4, 0);
    for (std::size_t i : witness->side_b) labeling[i] = 1;
    CHECK_FALSE(shatter_check(pts, labeling));
  }
}
