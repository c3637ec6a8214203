#include "stackedcc/newton.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace stackedcc::newton {

Matrix forward_jacobian(const Residual& f, const Vector& x, const Vector& fx, double rel_step) {
  Matrix jac(fx.size(), x.size());
  Vector xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = rel_step * (1.0 + std::abs(x(i)));
    xp(i) = x(i) + h;
    jac.col(i) = (f(xp) - fx) / h;
    xp(i) = x(i);
  }
  return jac;
}

Matrix central_jacobian(const Residual& f, const Vector& x, double step) {
  Vector xp = x;
  Vector xm = x;
  Matrix jac;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    xp(i) = x(i) + step;
    xm(i) = x(i) - step;
    const Vector col = (f(xp) - f(xm)) / (2.0 * step);
    if (i == 0) jac.resize(col.size(), x.size());
    jac.col(i) = col;
    xp(i) = x(i);
    xm(i) = x(i);
  }
  return jac;
}

Result solve(const Residual& f, Vector x0, const Options& options,
             const std::function<bool(const Vector&)>& admissible) {
  Result res;
  res.x = std::move(x0);
  Vector fx = f(res.x);
  res.residual_norm = fx.norm();

  for (int it = 0; it < options.max_iterations; ++it) {
    if (res.residual_norm <= options.residual_tol) {
      res.converged = true;
      return res;
    }
    const Matrix jac = forward_jacobian(f, res.x, fx, options.jacobian_rel_step);
    const Vector step = jac.completeOrthogonalDecomposition().solve(-fx);

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, t *= 0.5) {
      const Vector trial = res.x + t * step;
      if (admissible && !admissible(trial)) continue;
      const Vector ft = f(trial);
      const double norm = ft.norm();
      if (std::isfinite(norm) && norm < res.residual_norm) {
        res.x = trial;
        fx = ft;
        res.residual_norm = norm;
        accepted = true;
        break;
      }
    }
    res.iterations = it + 1;
    if (!accepted) {
      res.converged = res.residual_norm <= options.residual_tol;
      if (!res.converged) res.failure = "line search could not reduce the residual";
      return res;
    }
  }
  res.converged = res.residual_norm <= options.residual_tol;
  if (!res.converged) res.failure = "no convergence within the iteration limit";
  return res;
}

}  // namespace stackedcc::newton
