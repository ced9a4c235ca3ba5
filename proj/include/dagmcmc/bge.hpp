#ifndef DAGMCMC_BGE_HPP
#define DAGMCMC_BGE_HPP

#include <Eigen/Dense>
#include <vector>

#include "dagmcmc/dag.hpp"
#include "dagmcmc/data.hpp"

namespace dagmcmc {

/// Hyperparameters of the Gaussian marginal-likelihood node score. The prior
/// over (mean, precision) is normal-Wishart with mean vector `nu`, mean
/// precision scale `alpha_mu`, Wishart degrees of freedom `alpha_w` and
/// inverse scale matrix T = t_scale * I.
struct BgeParams {
  double alpha_mu = 1.0;
  double alpha_w = 0.0;   // must exceed n - 1
  Eigen::VectorXd nu;     // length n
  double t_scale = 0.0;   // must be positive

  /// alpha_mu = 1, alpha_w = n + 2, nu = column means,
  /// t_scale = alpha_mu * (alpha_w - n - 1) / (alpha_mu + 1).
  static BgeParams defaults(const DataSet& data);

  void validate(int n) const;
};

/// Evaluates log marginal-likelihood contributions of single nodes given
/// parent sets. The posterior matrix R = T + S_N + c (nu - xbar)(nu - xbar)'
/// is formed once; each query costs one Cholesky factorisation of the
/// (|parents| + 1)-dimensional submatrix.
class BgeScorer {
 public:
  BgeScorer(const DataSet& data, const BgeParams& params);

  int variable_count() const { return n_; }

  /// log S(node, parents | data). Throws on a numerically non-positive-
  /// definite posterior submatrix instead of returning NaN.
  double log_score(int node, NodeMask parents) const;

 private:
  int n_ = 0;
  double dof_base_ = 0.0;  // N + alpha_w - n
  std::vector<double> const_by_parent_count_;
  Eigen::MatrixXd posterior_;  // R

  double log_det_submatrix(NodeMask subset) const;
};

/// One-shot convenience wrapper around BgeScorer.
double node_log_score(int node, NodeMask parents, const DataSet& data,
                      const BgeParams& params);

}  // namespace dagmcmc

#endif
