#include "tropsvm/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tropsvm {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_label(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty label");
  for (char c : label)
    if (c == ',' || c == '=' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw std::invalid_argument("label contains a separator character: '" + label + "'");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& cell, const std::string& where) {
  if (cell.empty()) throw std::invalid_argument("empty cell in " + where);
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size())
    throw std::invalid_argument("non-numeric cell '" + cell + "' in " + where);
  return v;
}

}  // namespace

void write_dataset_csv(const std::string& path, const LabeledDataset& data) {
  if (data.points.empty()) throw std::invalid_argument("dataset is empty");
  if (data.points.size() != data.labels.size())
    throw std::invalid_argument("labels and points differ in length");
  for (const std::string& l : data.labels) check_label(l);
  std::ofstream out = open_out(path);
  out << "label";
  for (std::size_t j = 1; j <= data.dim(); ++j) out << ",f" << j;
  out << "\n";
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    out << data.labels[i];
    for (std::size_t j = 0; j < data.dim(); ++j) out << ',' << fmt(data.points[i][j]);
    out << "\n";
  }
  if (!out) throw std::invalid_argument("write failed: " + path);
}

LabeledDataset read_dataset_csv(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw std::invalid_argument("empty dataset file: " + path);
  const std::vector<std::string> head = split(lines[0], ',');
  if (head.size() < 3 || head[0] != "label")
    throw std::invalid_argument("malformed header (want label,f1,...,fd): " + lines[0]);
  for (std::size_t j = 1; j < head.size(); ++j)
    if (head[j] != "f" + std::to_string(j))
      throw std::invalid_argument("malformed header column '" + head[j] + "'");
  const std::size_t d = head.size() - 1;
  if (lines.size() < 2) throw std::invalid_argument("dataset has a header but no rows");

  LabeledDataset data;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::string where = "row " + std::to_string(r + 1);
    const std::vector<std::string> cells = split(lines[r], ',');
    if (cells.size() != d + 1)
      throw std::invalid_argument(where + " has " + std::to_string(cells.size()) +
                                  " cells, expected " + std::to_string(d + 1));
    check_label(cells[0]);
    std::vector<double> coords;
    coords.reserve(d);
    for (std::size_t j = 1; j <= d; ++j) coords.push_back(parse_double(cells[j], where));
    data.labels.push_back(cells[0]);
    data.points.emplace_back(std::move(coords));
  }
  return data;
}

void write_model(const std::string& path, const TrainedModel& model) {
  if (model.assignment.empty()) throw std::invalid_argument("model has no assignment");
  for (const auto& [label, coord] : model.assignment) {
    check_label(label);
    if (coord < 1 || coord > static_cast<int>(model.omega.dim()))
      throw std::invalid_argument("assigned coordinate out of range");
  }
  std::ofstream out = open_out(path);
  out << "omega:";
  for (std::size_t j = 0; j < model.omega.dim(); ++j) out << ' ' << fmt(model.omega[j]);
  out << "\nassignment:";
  for (const auto& [label, coord] : model.assignment) out << ' ' << label << '=' << coord;
  out << "\nmargin: " << fmt(model.margin);
  out << "\ntie_policy: " << model.tie_policy << "\n";
  if (!out) throw std::invalid_argument("write failed: " + path);
}

TrainedModel read_model(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.size() != 4) throw std::invalid_argument("model file must have exactly 4 lines");
  const auto field = [&](std::size_t i, const std::string& prefix) {
    if (lines[i].rfind(prefix, 0) != 0)
      throw std::invalid_argument("line " + std::to_string(i + 1) + " must start with '" +
                                  prefix + "'");
    std::string rest = lines[i].substr(prefix.size());
    while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
    return rest;
  };

  TrainedModel model;
  {
    std::istringstream iss(field(0, "omega:"));
    std::vector<double> coords;
    std::string tok;
    while (iss >> tok) coords.push_back(parse_double(tok, "omega"));
    if (coords.size() < 2) throw std::invalid_argument("omega needs at least two coordinates");
    model.omega = TorusPoint(std::move(coords));
  }
  {
    std::istringstream iss(field(1, "assignment:"));
    std::string tok;
    while (iss >> tok) {
      const std::size_t eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw std::invalid_argument("malformed assignment entry '" + tok + "'");
      const std::string label = tok.substr(0, eq);
      const int coord = static_cast<int>(parse_double(tok.substr(eq + 1), "assignment"));
      if (coord < 1 || coord > static_cast<int>(model.omega.dim()))
        throw std::invalid_argument("assigned coordinate out of range in '" + tok + "'");
      if (!model.assignment.emplace(label, coord).second)
        throw std::invalid_argument("duplicate label in assignment: '" + label + "'");
    }
    if (model.assignment.empty()) throw std::invalid_argument("assignment line is empty");
  }
  model.margin = parse_double(field(2, "margin:"), "margin");
  model.tie_policy = field(3, "tie_policy:");
  if (model.tie_policy != "lowest-index")
    throw std::invalid_argument("unknown tie policy '" + model.tie_policy + "'");
  return model;
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  if (header.empty()) throw std::invalid_argument("table has no columns");
  std::ofstream out = open_out(path);
  for (std::size_t j = 0; j < header.size(); ++j) out << (j ? "," : "") << header[j];
  out << "\n";
  for (const std::vector<double>& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("row width does not match the header");
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << fmt(row[j]);
    out << "\n";
  }
  if (!out) throw std::invalid_argument("write failed: " + path);
}

void write_grid_functions_csv(
    const std::string& path, const std::vector<double>& grid,
    const std::vector<std::pair<std::string, std::vector<double>>>& functions) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  if (functions.empty()) throw std::invalid_argument("no functions to write");
  for (const auto& [name, values] : functions)
    if (values.size() != grid.size())
      throw std::invalid_argument("function '" + name + "' does not match the grid length");
  std::ofstream out = open_out(path);
  out << "x";
  for (const auto& [name, values] : functions) out << ',' << name;
  out << "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << fmt(grid[i]);
    for (const auto& [name, values] : functions) out << ',' << fmt(values[i]);
    out << "\n";
  }
  if (!out) throw std::invalid_argument("write failed: " + path);
}

}  // namespace tropsvm
