#include "dsw/isolated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFallbackOffset = 1e-9;

double checked_asin(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arcsine argument alpha*y = " << s << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return std::asin(s);
}

// Largest y for which both arcsines are defined.
double y_limit(double alpha_inner, double alpha_outer) {
  const double hi = std::max(alpha_inner, alpha_outer);
  return hi > 0.0 ? 1.0 / hi : std::numeric_limits<double>::infinity();
}

}  // namespace

double y_residual(double y, double alpha_inner, double alpha_outer) {
  return checked_asin(alpha_inner * y) + checked_asin(alpha_outer * y) + kPi * y - kPi;
}

double newton_initial(double alpha_inner, double alpha_outer, double gamma_inner,
                      double gamma_outer) {
  const double g3 = gamma_inner * gamma_inner * gamma_inner + gamma_outer * gamma_outer * gamma_outer;
  const double estimate = kPi / (kPi + alpha_inner + alpha_outer) * (1.0 - g3 / (6.0 * kPi));
  const double bound = std::min(1.0, y_limit(alpha_inner, alpha_outer));
  const double alpha_max = std::max(alpha_inner, alpha_outer);
  if (estimate > 0.0 && estimate <= bound && alpha_max * estimate < 1.0) return estimate;
  return bound * (1.0 - kFallbackOffset);
}

double newton_step(double y, double alpha_inner, double alpha_outer) {
  const double si = alpha_inner * y;
  const double so = alpha_outer * y;
  if (!(y > 0.0) || !(si < 1.0) || !(so < 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "newton_step requires 0 < y and alpha*y < 1; got y = " << y << ", alpha*y = "
        << std::max(si, so);
    throw DomainError(msg.str());
  }
  const double ci = std::sqrt(1.0 - si * si);
  const double co = std::sqrt(1.0 - so * so);
  const double numerator = kPi + si / ci + so / co - std::asin(si) - std::asin(so);
  const double denominator = kPi + alpha_inner / ci + alpha_outer / co;
  return numerator / denominator;
}

double solve_y(double alpha_inner, double alpha_outer, double tol, int max_iter) {
  const double den = kPi + alpha_inner + alpha_outer;
  double y = newton_initial(alpha_inner, alpha_outer, kPi * alpha_inner / den,
                            kPi * alpha_outer / den);
  const double limit = y_limit(alpha_inner, alpha_outer);
  for (int it = 0; it < max_iter; ++it) {
    double next = newton_step(y, alpha_inner, alpha_outer);
    // A step from the left of the root can overshoot the arcsine domain; the
    // residual is convex and increasing, so halving towards the limit keeps
    // the iterate admissible and still brackets the root from the right.
    if (!(next < limit)) next = 0.5 * (y + limit);
    if (!(next > 0.0)) next = 0.5 * y;
    const double step = next - y;
    y = next;
    if (std::abs(step) <= tol * y) {
      const double residual = y_residual(y, alpha_inner, alpha_outer);
      if (std::abs(residual) <= 10.0 * tol * kPi) return y;
    }
  }
  double residual = std::numeric_limits<double>::quiet_NaN();
  if (y * std::max(alpha_inner, alpha_outer) <= 1.0) residual = y_residual(y, alpha_inner, alpha_outer);
  std::ostringstream msg;
  msg.precision(17);
  msg << "solve_y: no convergence after " << max_iter << " iterations (y = " << y
      << ", residual = " << residual << ")";
  throw NoConvergence(msg.str(), y, residual);
}

SeriesResult series_y(double alpha_inner, double alpha_outer, double gamma_inner,
                      double gamma_outer) {
  auto pw = [](double g, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= g;
    return r;
  };
  const double g3 = pw(gamma_inner, 3) + pw(gamma_outer, 3);
  const double g5 = pw(gamma_inner, 5) + pw(gamma_outer, 5);
  const double g7 = pw(gamma_inner, 7) + pw(gamma_outer, 7);
  const double g9 = pw(gamma_inner, 9) + pw(gamma_outer, 9);
  const double pi2 = kPi * kPi;
  const double pi3 = pi2 * kPi;

  const double bracket = 1.0                                //
                         - g3 / (6.0 * kPi)                 //
                         - 3.0 * g5 / (40.0 * kPi)          //
                         + g3 * g3 / (12.0 * pi2)           //
                         - 5.0 * g7 / (112.0 * kPi)         //
                         + g3 * g5 / (10.0 * pi2)           //
                         - 35.0 * g9 / (1152.0 * kPi)       //
                         - g3 * g3 * g3 / (18.0 * pi3)      //
                         + 25.0 * g3 * g7 / (336.0 * pi2)   //
                         + 9.0 * g5 * g5 / (320.0 * pi2);

  SeriesResult out;
  out.y = kPi / (kPi + alpha_inner + alpha_outer) * bracket;
  out.unreliable = std::max(gamma_inner, gamma_outer) > 0.9;
  return out;
}

IsolatedWellSolution derive_well(double y, double alpha_inner, double alpha_outer, double beta) {
  if (!(beta > 0.0)) throw DomainError("derive_well requires beta > 0");
  if (!(alpha_inner * y < 1.0) || !(alpha_outer * y < 1.0) || !(y > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "derive_well requires 0 < y and alpha*y < 1; got y = " << y;
    throw DomainError(msg.str());
  }
  IsolatedWellSolution w;
  w.y_cap = y;
  w.s_outer = alpha_outer * y;
  w.s_inner = alpha_inner * y;
  w.phi_outer = std::asin(w.s_outer);
  w.phi_inner = std::asin(w.s_inner);
  w.c_inner = std::sqrt(1.0 - w.s_inner * w.s_inner);
  w.t_outer = w.s_outer / std::sqrt(1.0 - w.s_outer * w.s_outer);
  w.t_inner = w.s_inner / w.c_inner;
  w.u_cap = kPi / (w.t_outer + w.t_inner + kPi * y);
  w.a_coef = kPi * w.c_inner / beta;
  w.b_coef = w.t_inner * w.t_inner * w.a_coef;
  w.c_coef = 2.0 / kPi * w.s_inner * w.c_inner * w.u_cap;
  return w;
}

BarrierCoupling coupling(const IsolatedWellSolution& left, const IsolatedWellSolution& right) {
  return {left.b_coef * right.b_coef * left.c_coef * right.c_coef};
}

IsolatedWellSolution solve_well(const WellView& well, const NewtonOptions& options) {
  if (!bound_state_exists(well.alpha_inner, well.alpha_outer)) {
    throw DomainError(std::string(well.side == Side::Left ? "left" : "right") +
                      " well has no bound state in the thick-barrier limit");
  }
  const double y = solve_y(well.alpha_inner, well.alpha_outer, options.tol, options.max_iter);
  return derive_well(y, well.alpha_inner, well.alpha_outer, well.beta);
}

double isolated_energy(const WellView& well, const IsolatedWellSolution& solution) {
  return well.floor + well.confinement * solution.y_cap * solution.y_cap;
}

}  // namespace dsw
