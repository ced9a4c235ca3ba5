#include "dagmcmc/data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dagmcmc {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

DataSet make_dataset(Eigen::MatrixXd values, std::vector<std::string> names) {
  if (values.rows() < 1 || values.cols() < 1)
    throw std::invalid_argument("dataset: need at least one row and one column");
  if (!values.allFinite())
    throw std::invalid_argument("dataset: non-finite value");
  if (names.empty()) {
    names.reserve(values.cols());
    for (int j = 0; j < values.cols(); ++j) names.push_back("X" + std::to_string(j + 1));
  }
  if (static_cast<int>(names.size()) != values.cols())
    throw std::invalid_argument("dataset: name count does not match column count");
  return DataSet{std::move(values), std::move(names)};
}

DataSet load_data_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty file, expected a header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> names = split_csv_line(line);
  const int n = static_cast<int>(names.size());
  if (n == 0) throw std::runtime_error(path + ": header row has no columns");

  std::vector<double> cells;
  int rows = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != n) {
      throw std::runtime_error(path + ": line " + std::to_string(line_no) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(n));
    }
    for (const std::string& f : fields) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f.size() || !std::isfinite(v)) {
        throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                 ": non-numeric cell \"" + f + "\"");
      }
      cells.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw std::runtime_error(path + ": no observation rows");
  Eigen::MatrixXd values(rows, n);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < n; ++j) values(i, j) = cells[static_cast<std::size_t>(i) * n + j];
  return make_dataset(std::move(values), std::move(names));
}

void save_data_csv(const std::string& path, const DataSet& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write data file: " + path);
  for (int j = 0; j < data.variable_count(); ++j) {
    if (j > 0) out << ',';
    out << data.names[j];
  }
  out << '\n';
  char buf[64];
  for (int i = 0; i < data.observation_count(); ++i) {
    for (int j = 0; j < data.variable_count(); ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", data.values(i, j));
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace dagmcmc
