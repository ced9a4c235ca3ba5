#ifndef DAGMCMC_DATA_HPP
#define DAGMCMC_DATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace dagmcmc {

/// N observations of n continuous variables; column j belongs to node j.
struct DataSet {
  Eigen::MatrixXd values;          // N x n
  std::vector<std::string> names;  // length n

  int observation_count() const { return static_cast<int>(values.rows()); }
  int variable_count() const { return static_cast<int>(values.cols()); }
};

DataSet make_dataset(Eigen::MatrixXd values, std::vector<std::string> names = {});

/// CSV with a header row of variable names, one observation per row.
/// Ragged rows and non-numeric cells are reported with their line number.
DataSet load_data_csv(const std::string& path);

void save_data_csv(const std::string& path, const DataSet& data);

}  // namespace dagmcmc

#endif
