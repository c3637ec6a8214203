#pragma once

#include <functional>
#include <string>

#include <Eigen/Core>

namespace stackedcc::newton {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Residual = std::function<Vector(const Vector&)>;

/// Forward differences, step h_i = rel_step * (1 + |x_i|).
Matrix forward_jacobian(const Residual& f, const Vector& x, const Vector& fx,
                        double rel_step = 1e-7);

/// Central differences with a fixed absolute step.
Matrix central_jacobian(const Residual& f, const Vector& x, double step);

struct Options {
  int max_iterations = 100;
  int max_halvings = 30;
  double residual_tol = 1e-13;
  double jacobian_rel_step = 1e-7;
};

struct Result {
  Vector x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string failure;  // empty on success
};

/// Damped Newton. The step solves J dx = -f in the least-squares,
/// minimum-norm sense, so square, over- and under-determined systems are
/// all accepted. A trial point is kept only if it is admissible and lowers
/// ||f||; otherwise the step is halved.
Result solve(const Residual& f, Vector x0, const Options& options = {},
             const std::function<bool(const Vector&)>& admissible = {});

}  // namespace stackedcc::newton
