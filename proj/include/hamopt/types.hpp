#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace hamopt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thrown when a model evaluation produces a non-finite value (overflow or
/// NaN). Carries the evaluation point and, when raised inside a solve, the
/// time-step index, so divergence is attributable instead of propagating
/// silently.
class EvalFault : public std::runtime_error {
 public:
  EvalFault(const std::string& where, int node, Vec x, Vec lam);

  int node() const noexcept { return node_; }
  const Vec& x() const noexcept { return x_; }
  const Vec& lam() const noexcept { return lam_; }

 private:
  int node_;
  Vec x_;
  Vec lam_;
};

/// Requested an optional model capability (e.g. control recovery) that the
/// model does not provide.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hamopt
