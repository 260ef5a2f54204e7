#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tropsvm {

/// maximize c.u subject to A u <= b, u free.
struct LinearProgram {
  std::vector<std::vector<double>> A;  // r rows of m coefficients
  std::vector<double> b;               // r right-hand sides
  std::vector<double> c;               // m objective coefficients

  std::size_t rows() const { return A.size(); }
  std::size_t vars() const { return c.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;             // objective at the returned point (Optimal only)
  std::vector<double> point;      // an optimal point (Optimal only)
};

/// Simplex lost its basis to round-off or exceeded the iteration cap.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense two-phase simplex. Dantzig pricing with a Bland fallback after
/// degenerate stalls, pivot tolerance 1e-9, feasibility tolerance 1e-7.
/// Free variables are handled by the classic split u = u+ - u-.
/// An Optimal result is verified against the constraints before returning;
/// on violation a NumericalError is thrown instead of a wrong answer.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace tropsvm
