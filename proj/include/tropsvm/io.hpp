// File formats: labeled dataset CSV, plain-text model files, and numeric
// CSV tables. All writers emit LF line endings and enough digits to
// round-trip doubles exactly; all readers fail with a message naming the
// problem rather than guessing.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropsvm/svm.hpp"

namespace tropsvm {

/// Header `label,f1,...,fd`, one row per point, 17 significant digits.
/// Labels may not contain commas, whitespace, or '='.
void write_dataset_csv(const std::string& path, const LabeledDataset& data);

/// Parses the format written by write_dataset_csv. Distinct errors for a
/// malformed header, a non-numeric cell, a ragged row, and an empty file.
LabeledDataset read_dataset_csv(const std::string& path);

/// Four lines:
///   omega: v1 ... vd
///   assignment: <label>=<coord> ...   (coordinates 1-based)
///   margin: z
///   tie_policy: lowest-index
void write_model(const std::string& path, const TrainedModel& model);

/// Parses the format written by write_model.
TrainedModel read_model(const std::string& path);

/// Numeric table with a header row; cells printed with 17 significant digits.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

/// Abscissa column named `x`, then one column per named function.
void write_grid_functions_csv(
    const std::string& path, const std::vector<double>& grid,
    const std::vector<std::pair<std::string, std::vector<double>>>& functions);

}  // namespace tropsvm
