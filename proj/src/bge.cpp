#include "dagmcmc/bge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dagmcmc {

BgeParams BgeParams::defaults(const DataSet& data) {
  const int n = data.variable_count();
  BgeParams p;
  p.alpha_mu = 1.0;
  p.alpha_w = n + 2.0;
  p.nu = data.values.colwise().mean();
  p.t_scale = p.alpha_mu * (p.alpha_w - n - 1.0) / (p.alpha_mu + 1.0);
  return p;
}

void BgeParams::validate(int n) const {
  if (!(alpha_mu > 0.0)) throw std::invalid_argument("bge: alpha_mu must be positive");
  if (!(alpha_w > n - 1.0)) throw std::invalid_argument("bge: alpha_w must exceed n - 1");
  if (!(t_scale > 0.0)) throw std::invalid_argument("bge: t_scale must be positive");
  if (nu.size() != n) throw std::invalid_argument("bge: prior mean has wrong length");
}

BgeScorer::BgeScorer(const DataSet& data, const BgeParams& params) {
  n_ = data.variable_count();
  params.validate(n_);
  const double N = data.observation_count();
  const double am = params.alpha_mu;
  const double aw = params.alpha_w;

  const Eigen::RowVectorXd mean = data.values.colwise().mean();
  const Eigen::MatrixXd centered = data.values.rowwise() - mean;
  const Eigen::VectorXd shift = params.nu - mean.transpose();
  posterior_ = params.t_scale * Eigen::MatrixXd::Identity(n_, n_) +
               centered.transpose() * centered +
               (am * N / (am + N)) * shift * shift.transpose();

  // With p parents the score is
  //   const(p) - ((N+aw-n+p+1)/2) log|R_{Pa+i}| + ((N+aw-n+p)/2) log|R_Pa|.
  dof_base_ = N + aw - n_;
  const_by_parent_count_.resize(n_);
  const double shared = -0.5 * N * std::log(M_PI) + 0.5 * std::log(am / (am + N));
  for (int p = 0; p < n_; ++p) {
    const double awp = aw - n_ + p + 1;
    const_by_parent_count_[p] = shared + std::lgamma(0.5 * (N + awp)) -
                                std::lgamma(0.5 * awp) +
                                0.5 * (awp + p) * std::log(params.t_scale);
  }
}

double BgeScorer::log_det_submatrix(NodeMask subset) const {
  const int k = popcount(subset);
  if (k == 0) return 0.0;
  if (k == 1) {
    const int i = lowest_bit(subset);
    const double v = posterior_(i, i);
    if (!(v > 0.0)) throw std::runtime_error("bge: non-positive-definite posterior matrix");
    return std::log(v);
  }
  Eigen::MatrixXd sub(k, k);
  int idx[kMaxNodes];
  int c = 0;
  for_each_node(subset, [&](int i) { idx[c++] = i; });
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub(a, b) = posterior_(idx[a], idx[b]);
  const Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("bge: non-positive-definite posterior matrix");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

double BgeScorer::log_score(int node, NodeMask parents) const {
  if (node < 0 || node >= n_) throw std::invalid_argument("bge: node out of range");
  if (parents & node_bit(node))
    throw std::invalid_argument("bge: node cannot be its own parent");
  const int p = popcount(parents);
  try {
    const double log_det_joint = log_det_submatrix(parents | node_bit(node));
    const double log_det_parents = log_det_submatrix(parents);
    const double half_dof = 0.5 * (dof_base_ + p + 1);
    return const_by_parent_count_[p] - half_dof * log_det_joint +
           (half_dof - 0.5) * log_det_parents;
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(e.what()) + " for node " +
                             std::to_string(node + 1));
  }
}

double node_log_score(int node, NodeMask parents, const DataSet& data,
                      const BgeParams& params) {
  return BgeScorer(data, params).log_score(node, parents);
}

}  // namespace dagmcmc
