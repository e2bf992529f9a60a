#pragma once

#include "dsw/params.hpp"

namespace dsw {

/// Bound state of one well when the central barrier is infinitely thick.
///
/// Y solves asin(alpha_inner Y) + asin(alpha_outer Y) = pi - pi Y. Everything
/// else follows from Y: S = alpha Y, Phi = asin S, C = cos Phi, T = tan Phi,
/// U = pi / (T_outer + T_inner + pi Y), a = pi C_inner / beta, b = T_inner^2 a,
/// c = (2/pi) S_inner C_inner U.
struct IsolatedWellSolution {
  double y_cap = 0.0;
  double s_outer = 0.0;
  double s_inner = 0.0;
  double phi_outer = 0.0;
  double phi_inner = 0.0;
  double c_inner = 0.0;
  double t_outer = 0.0;
  double t_inner = 0.0;
  double u_cap = 0.0;
  double a_coef = 0.0;
  double b_coef = 0.0;
  double c_coef = 0.0;
};

/// P = b_left b_right c_left c_right.
struct BarrierCoupling {
  double p_cap = 0.0;
};

struct SeriesResult {
  double y = 0.0;
  bool unreliable = false;  // max gamma > 0.9; the series diverges at gamma >= 1
};

struct NewtonOptions {
  double tol = 1e-13;
  int max_iter = 50;
};

/// asin(alpha_inner y) + asin(alpha_outer y) + pi y - pi. Throws DomainError if alpha y > 1.
double y_residual(double y, double alpha_inner, double alpha_outer);

/// Starting point for the Newton iteration: the cubic-order series estimate
/// when it lies inside (0, min(1, 1/alpha_max)], otherwise just below that bound.
double newton_initial(double alpha_inner, double alpha_outer, double gamma_inner,
                      double gamma_outer);

/// One Newton update of y_residual. Throws DomainError unless alpha y < 1 for both alphas.
double newton_step(double y, double alpha_inner, double alpha_outer);

/// Newton iteration from newton_initial until |dy| <= tol * y.
/// Throws NoConvergence (last iterate, residual) when max_iter is exhausted.
double solve_y(double alpha_inner, double alpha_outer, double tol = NewtonOptions{}.tol,
               int max_iter = NewtonOptions{}.max_iter);

/// Truncated small-gamma series through ninth order.
SeriesResult series_y(double alpha_inner, double alpha_outer, double gamma_inner,
                      double gamma_outer);

IsolatedWellSolution derive_well(double y, double alpha_inner, double alpha_outer, double beta);

BarrierCoupling coupling(const IsolatedWellSolution& left, const IsolatedWellSolution& right);

/// solve_y + derive_well for one side of a spec.
IsolatedWellSolution solve_well(const WellView& well, const NewtonOptions& options = {});

/// V + K Y^2, the isolated-well energy.
double isolated_energy(const WellView& well, const IsolatedWellSolution& solution);

}  // namespace dsw
