#include "tropsvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace tropsvm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dataset(const LabeledDataset& data) {
  if (data.points.empty()) throw std::invalid_argument("dataset is empty");
  if (data.labels.size() != data.points.size())
    throw std::invalid_argument("labels and points differ in length");
  for (const TorusPoint& p : data.points)
    if (p.dim() != data.dim()) throw std::invalid_argument("dimension mismatch in dataset");
}

void check_assignment(const LabeledDataset& data, const SectorAssignment& assignment) {
  const int d = static_cast<int>(data.dim());
  std::set<int> used;
  for (const auto& [label, coord] : assignment) {
    if (coord < 1 || coord > d) throw std::invalid_argument("assigned coordinate out of range");
    if (!used.insert(coord).second) throw std::invalid_argument("assignment is not injective");
  }
  for (const std::string& l : data.labels)
    if (!assignment.count(l)) throw std::invalid_argument("label missing from assignment");
}

// Lexicographic enumeration of injective coordinate tuples (1-based) for the
// sorted label list; fn may return false to stop early.
template <class F>
void enumerate_assignments(std::size_t q, std::size_t d, F&& fn) {
  std::vector<int> tuple(q, 0);
  std::vector<bool> used(d + 1, false);
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == q) return fn(tuple);
    for (int c = 1; c <= static_cast<int>(d); ++c) {
      if (used[c]) continue;
      used[c] = true;
      tuple[pos] = c;
      const bool keep_going = self(self, pos + 1);
      used[c] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 0);
}

// min over the points of one label of x_i - x_j, for a row
// z + w_j - w_i <= rhs that aggregates every per-point constraint.
double min_gap(const LabeledDataset& data, const std::vector<std::size_t>& members, int i, int j) {
  double m = kInf;
  for (std::size_t idx : members) {
    const TorusPoint& x = data.points[idx];
    m = std::min(m, x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]);
  }
  return m;
}

std::map<std::string, std::vector<std::size_t>> group_by_label(const LabeledDataset& data) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t idx = 0; idx < data.size(); ++idx) groups[data.labels[idx]].push_back(idx);
  return groups;
}

void add_margin_coeffs(std::vector<double>& row, int i, int j, std::size_t d) {
  // Variables (z, w_1, ..., w_{d-1}); w_d is fixed at zero.
  row[0] = 1.0;
  if (j < static_cast<int>(d)) row[static_cast<std::size_t>(j)] += 1.0;
  if (i < static_cast<int>(d)) row[static_cast<std::size_t>(i)] -= 1.0;
}

// Same feasible set as build_lp with the per-point rows of one label and one
// j collapsed to their tightest representative.
LinearProgram build_lp_aggregated(const LabeledDataset& data, const SectorAssignment& assignment) {
  const std::size_t d = data.dim();
  const auto groups = group_by_label(data);
  LinearProgram lp;
  lp.c.assign(d, 0.0);
  lp.c[0] = 1.0;
  for (const auto& [label, members] : groups) {
    const int i = assignment.at(label);
    for (int j = 1; j <= static_cast<int>(d); ++j) {
      if (j == i) continue;
      std::vector<double> row(d, 0.0);
      add_margin_coeffs(row, i, j, d);
      lp.A.push_back(std::move(row));
      lp.b.push_back(min_gap(data, members, i, j));
    }
  }
  return lp;
}

// Smallest box norm among the optimal hyperplanes: fix z at the optimum and
// minimize t subject to -t <= w_k <= t.
TorusPoint min_norm_omega(const LabeledDataset& data, const SectorAssignment& assignment,
                          double z_opt) {
  const std::size_t d = data.dim();
  const auto groups = group_by_label(data);
  LinearProgram lp;  // variables (w_1, ..., w_{d-1}, t)
  lp.c.assign(d, 0.0);
  lp.c[d - 1] = -1.0;
  for (const auto& [label, members] : groups) {
    const int i = assignment.at(label);
    for (int j = 1; j <= static_cast<int>(d); ++j) {
      if (j == i) continue;
      std::vector<double> row(d, 0.0);
      if (j < static_cast<int>(d)) row[static_cast<std::size_t>(j - 1)] += 1.0;
      if (i < static_cast<int>(d)) row[static_cast<std::size_t>(i - 1)] -= 1.0;
      lp.A.push_back(std::move(row));
      lp.b.push_back(min_gap(data, members, i, j) - z_opt);
    }
  }
  for (std::size_t k = 0; k + 1 < d; ++k) {
    std::vector<double> up(d, 0.0), down(d, 0.0);
    up[k] = 1.0;
    up[d - 1] = -1.0;
    down[k] = -1.0;
    down[d - 1] = -1.0;
    lp.A.push_back(std::move(up));
    lp.b.push_back(0.0);
    lp.A.push_back(std::move(down));
    lp.b.push_back(0.0);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::Infeasible) {
    // The fixed z sits on the boundary of feasibility; retreat by one
    // tolerance step rather than fail.
    for (std::size_t row = 0; row + 2 * (d - 1) < lp.b.size(); ++row) lp.b[row] += 1e-9;
    sol = solve_lp(lp);
  }
  if (sol.status != LpStatus::Optimal) throw NumericalError("norm minimization failed");
  std::vector<double> omega(d, 0.0);
  for (std::size_t k = 0; k + 1 < d; ++k) omega[k] = sol.point[k];
  return TorusPoint(std::move(omega));
}

}  // namespace

std::vector<std::string> label_set(const LabeledDataset& data) {
  std::set<std::string> s(data.labels.begin(), data.labels.end());
  return {s.begin(), s.end()};
}

LinearProgram build_lp(const LabeledDataset& data, const SectorAssignment& assignment) {
  check_dataset(data);
  check_assignment(data, assignment);
  const std::size_t d = data.dim();
  LinearProgram lp;
  lp.c.assign(d, 0.0);
  lp.c[0] = 1.0;
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    const TorusPoint& x = data.points[idx];
    const int i = assignment.at(data.labels[idx]);
    for (int j = 1; j <= static_cast<int>(d); ++j) {
      if (j == i) continue;
      std::vector<double> row(d, 0.0);
      add_margin_coeffs(row, i, j, d);
      lp.A.push_back(std::move(row));
      lp.b.push_back(x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]);
    }
  }
  return lp;
}

std::optional<TrainedModel> train_hard(const LabeledDataset& data) {
  check_dataset(data);
  const std::vector<std::string> labels = label_set(data);
  const std::size_t q = labels.size();
  const std::size_t d = data.dim();
  if (q < 2) throw std::invalid_argument("training needs at least two labels");
  if (q > d) throw std::invalid_argument("more labels than coordinates");

  double best_z = -kInf;
  SectorAssignment best;
  enumerate_assignments(q, d, [&](const std::vector<int>& tuple) {
    SectorAssignment assignment;
    for (std::size_t l = 0; l < q; ++l) assignment[labels[l]] = tuple[l];
    const LpSolution sol = solve_lp(build_lp_aggregated(data, assignment));
    if (sol.status != LpStatus::Optimal) throw NumericalError("margin maximization failed");
    if (sol.value > best_z) {
      best_z = sol.value;
      best = assignment;
    }
    return true;
  });
  if (!(best_z > 0.0)) return std::nullopt;

  TrainedModel model;
  model.omega = min_norm_omega(data, best, best_z);
  model.assignment = best;
  model.margin = best_z;
  return model;
}

double margin_function(const LabeledDataset& data, const TorusPoint& omega) {
  check_dataset(data);
  if (omega.dim() != data.dim()) throw std::invalid_argument("dimension mismatch");
  const std::vector<std::string> labels = label_set(data);
  const std::size_t q = labels.size();
  const std::size_t d = data.dim();
  if (q > d) throw std::invalid_argument("more labels than coordinates");

  // signed[idx][i]: how strictly point idx sits inside sector i+1.
  std::vector<std::vector<double>> signed_margin(data.size(), std::vector<double>(d));
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    const TorusPoint& x = data.points[idx];
    double best = -kInf, second = -kInf;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const double v = x[i] + omega[i];
      if (v > best) {
        second = best;
        best = v;
        arg = i;
      } else if (v > second) {
        second = v;
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      const double v = x[i] + omega[i];
      signed_margin[idx][i] = v - (i == arg ? second : best);
    }
  }

  std::map<std::string, std::size_t> label_pos;
  for (std::size_t l = 0; l < q; ++l) label_pos[labels[l]] = l;
  std::vector<std::size_t> owner(data.size());
  for (std::size_t idx = 0; idx < data.size(); ++idx) owner[idx] = label_pos[data.labels[idx]];

  double best = -kInf;
  enumerate_assignments(q, d, [&](const std::vector<int>& tuple) {
    double worst = kInf;
    for (std::size_t idx = 0; idx < data.size(); ++idx)
      worst = std::min(worst, signed_margin[idx][static_cast<std::size_t>(tuple[owner[idx]] - 1)]);
    best = std::max(best, worst);
    return true;
  });
  return best;
}

std::optional<HeuristicResult> train_heuristic(const LabeledDataset& train,
                                               const LabeledDataset& validation, double C) {
  check_dataset(train);
  check_dataset(validation);
  if (validation.points.empty()) throw std::invalid_argument("validation set is empty");
  if (validation.dim() != train.dim()) throw std::invalid_argument("dimension mismatch");
  const std::vector<std::string> labels = label_set(train);
  if (labels.size() != 2) throw std::invalid_argument("heuristic trainer is binary only");
  for (const std::string& l : validation.labels)
    if (l != labels[0] && l != labels[1])
      throw std::invalid_argument("validation label unknown to the training set");
  if (!(C > 0.0)) throw std::invalid_argument("C must be positive");

  const std::size_t d = train.dim();
  const double n = static_cast<double>(train.size());
  std::vector<std::size_t> a_pts, b_pts;
  for (std::size_t idx = 0; idx < train.size(); ++idx)
    (train.labels[idx] == labels[0] ? a_pts : b_pts).push_back(idx);

  // Maximizer of y/2 - (C/n) * sum over g of (y - g)+ : walk the sorted
  // breakpoints until the slope 1/2 - C*m/n turns nonpositive. Returns the
  // breakpoint, or nothing when the objective is unbounded above.
  const auto piecewise_peak = [&](std::vector<double> gaps) -> std::optional<double> {
    const std::size_t need = static_cast<std::size_t>(std::ceil(n / (2.0 * C) - 1e-12));
    if (need > gaps.size()) return std::nullopt;
    std::sort(gaps.begin(), gaps.end());
    return gaps[need == 0 ? 0 : need - 1];
  };

  struct Candidate {
    int i = 0, k = 0;
    double margin = -kInf;
    double delta = 0.0;
    std::vector<std::size_t> dropped;
    std::size_t val_correct = 0;
  };
  std::optional<Candidate> best;

  for (int i = 1; i <= static_cast<int>(d); ++i) {
    for (int k = 1; k <= static_cast<int>(d); ++k) {
      if (k == i) continue;
      const auto gap_of = [&](std::size_t idx, int hi, int lo) {
        const TorusPoint& x = train.points[idx];
        return x[static_cast<std::size_t>(hi - 1)] - x[static_cast<std::size_t>(lo - 1)];
      };
      double ua_min = kInf, vb_min = kInf;
      for (std::size_t idx : a_pts) ua_min = std::min(ua_min, gap_of(idx, i, k));
      for (std::size_t idx : b_pts) vb_min = std::min(vb_min, gap_of(idx, k, i));

      Candidate cand;
      cand.i = i;
      cand.k = k;
      if (ua_min + vb_min > 0.0) {
        cand.margin = (ua_min + vb_min) / 2.0;
        cand.delta = (ua_min - vb_min) / 2.0;
      } else {
        std::vector<double> u(a_pts.size()), v(b_pts.size());
        for (std::size_t s = 0; s < a_pts.size(); ++s) u[s] = gap_of(a_pts[s], i, k);
        for (std::size_t s = 0; s < b_pts.size(); ++s) v[s] = gap_of(b_pts[s], k, i);
        const auto P = piecewise_peak(u);
        const auto Q = piecewise_peak(v);
        if (!P || !Q) continue;           // slack relaxation unbounded for this C
        if (*P + *Q <= 0.0) continue;     // still no positive margin after drops
        cand.margin = (*P + *Q) / 2.0;
        cand.delta = (*P - *Q) / 2.0;
        for (std::size_t s = 0; s < a_pts.size(); ++s)
          if (u[s] < *P) cand.dropped.push_back(a_pts[s]);
        for (std::size_t s = 0; s < b_pts.size(); ++s)
          if (v[s] < *Q) cand.dropped.push_back(b_pts[s]);
        std::sort(cand.dropped.begin(), cand.dropped.end());
      }

      for (std::size_t idx = 0; idx < validation.size(); ++idx) {
        const TorusPoint& y = validation.points[idx];
        const double diff = y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(k - 1)];
        std::string guess;
        if (diff > cand.delta)
          guess = labels[0];
        else if (diff < cand.delta)
          guess = labels[1];
        else
          guess = i < k ? labels[0] : labels[1];
        if (guess == validation.labels[idx]) ++cand.val_correct;
      }

      if (!best || cand.val_correct > best->val_correct ||
          (cand.val_correct == best->val_correct && cand.margin > best->margin))
        best = std::move(cand);
    }
  }
  if (!best) return std::nullopt;

  LabeledDataset kept;
  std::size_t next_drop = 0;
  for (std::size_t idx = 0; idx < train.size(); ++idx) {
    if (next_drop < best->dropped.size() && best->dropped[next_drop] == idx) {
      ++next_drop;
      continue;
    }
    kept.points.push_back(train.points[idx]);
    kept.labels.push_back(train.labels[idx]);
  }

  SectorAssignment assignment{{labels[0], best->i}, {labels[1], best->k}};
  const LpSolution sol = solve_lp(build_lp_aggregated(kept, assignment));
  if (sol.status != LpStatus::Optimal || !(sol.value > 0.0))
    throw NumericalError("winning pair lost feasibility in the final solve");

  HeuristicResult result;
  result.model.omega = min_norm_omega(kept, assignment, sol.value);
  result.model.assignment = assignment;
  result.model.margin = sol.value;
  result.dropped = std::move(best->dropped);
  result.validation_correct = best->val_correct;
  return result;
}

std::string predict(const TrainedModel& model, const TorusPoint& x) {
  if (model.assignment.empty()) throw std::invalid_argument("model has no assignment");
  if (model.omega.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::pair<int, std::string>> by_coord;
  for (const auto& [label, coord] : model.assignment) {
    if (coord < 1 || coord > static_cast<int>(x.dim()))
      throw std::invalid_argument("assigned coordinate out of range");
    by_coord.emplace_back(coord, label);
  }
  std::sort(by_coord.begin(), by_coord.end());
  const std::string* winner = nullptr;
  double best = -kInf;
  for (const auto& [coord, label] : by_coord) {
    const double v = x[static_cast<std::size_t>(coord - 1)] + model.omega[static_cast<std::size_t>(coord - 1)];
    if (v > best) {  // ties keep the lower coordinate
      best = v;
      winner = &label;
    }
  }
  return *winner;
}

ShiftCheck support_vector_shift(const LabeledDataset& data, const TrainedModel& model) {
  check_dataset(data);
  const std::vector<std::string> labels = label_set(data);
  if (labels.size() != 2) throw std::invalid_argument("shift check needs exactly two labels");
  if (data.dim() < 2) throw std::invalid_argument("shift check needs dimension >= 2");

  double a_min = kInf, b_min = kInf;
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    const double gap12 = data.points[idx][0] - data.points[idx][1];
    if (data.labels[idx] == labels[0])
      a_min = std::min(a_min, gap12);
    else
      b_min = std::min(b_min, -gap12);
  }

  ShiftCheck check;
  check.predicted_shift = (a_min - b_min) / 2.0;
  check.trained_shift = model.omega[1] - model.omega[0];
  const auto f = model.assignment.find(labels[0]);
  const auto s = model.assignment.find(labels[1]);
  check.used_sectors_12 = f != model.assignment.end() && s != model.assignment.end() &&
                          f->second == 1 && s->second == 2;
  return check;
}

}  // namespace tropsvm
