#include "dsw/tunneling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;

// d + sqrt(d^2 + 4p) without cancellation when d < 0.
double plus_root(double d, double p) {
  const double root = std::hypot(d, 2.0 * std::sqrt(p));
  if (d >= 0.0) return d + root;
  return 4.0 * p / (root - d);
}

// Recovers the barrier split from eps = c exp(-2 r_side).
void split_barrier(CoupledSolution& s, const IsolatedWellSolution& left,
                   const IsolatedWellSolution& right) {
  const bool left_ok = s.eps_left > 0.0 && left.c_coef > 0.0;
  const bool right_ok = s.eps_right > 0.0 && right.c_coef > 0.0;
  if (s.p_small > 0.0 && left_ok && right_ok) {
    s.r_left = -0.5 * (std::log(s.eps_left) - std::log(left.c_coef));
    s.r_right = -0.5 * (std::log(s.eps_right) - std::log(right.c_coef));
  } else if (left_ok && s.p_small > 0.0) {
    s.r_left = -0.5 * (std::log(s.eps_left) - std::log(left.c_coef));
    s.r_right = s.r0 - s.r_left;
  } else if (right_ok && s.p_small > 0.0) {
    s.r_right = -0.5 * (std::log(s.eps_right) - std::log(right.c_coef));
    s.r_left = s.r0 - s.r_right;
  } else {
    s.r_left = 0.5 * s.r0;
    s.r_right = 0.5 * s.r0;
  }
}

}  // namespace

const char* to_string(Parity parity) {
  return parity == Parity::Ground ? "ground" : "excited";
}

FixedPointResult solve_r0(Parity parity, double a_left, double a_right, double p_cap, double tol,
                          int max_iter) {
  const double mean = 0.5 * (a_left + a_right);
  const double half = 0.5 * (a_right - a_left);
  const double sign = parity == Parity::Ground ? 1.0 : -1.0;

  auto check_excited = [&](double r) {
    if (parity == Parity::Excited && !(r > 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "excited fixed point reached r0 = " << r
          << " <= 0; the barrier is too thin for the tunneling expansion";
      throw ExcitedBelowZero(msg.str());
    }
  };

  double r = mean + sign * std::abs(half);
  int iterations = 1;
  check_excited(r);
  while (iterations < max_iter) {
    const double p = p_cap * std::exp(-2.0 * r);
    const double next = mean + sign * std::hypot(half, std::sqrt(p));
    ++iterations;
    check_excited(next);
    const bool converged = std::abs(next - r) <= tol * std::abs(next);
    r = next;
    if (converged) return {r, p_cap * std::exp(-2.0 * r), iterations};
  }
  const double residual =
      r - mean - sign * std::hypot(half, std::sqrt(p_cap * std::exp(-2.0 * r)));
  std::ostringstream msg;
  msg.precision(17);
  msg << "solve_r0(" << to_string(parity) << "): no convergence after " << max_iter
      << " iterations (r0 = " << r << ")";
  throw NoConvergence(msg.str(), r, residual);
}

CoupledSolution correct_energy(Parity parity, const IsolatedWellSolution& left_well,
                               const IsolatedWellSolution& right_well, double r0, double p_small,
                               const ReducedParams& reduced, const WellSpec& spec) {
  CoupledSolution s;
  s.parity = parity;
  s.r0 = r0;
  s.p_small = p_small;

  // The closed forms in d = a_right - a_left equal (r0 - a)/b at the fixed point
  // but stay accurate when r0 - a is a tiny difference of two large numbers.
  const double d = right_well.a_coef - left_well.a_coef;
  if (parity == Parity::Ground) {
    s.eps_left = plus_root(d, p_small) / (2.0 * left_well.b_coef);
    s.eps_right = plus_root(-d, p_small) / (2.0 * right_well.b_coef);
  } else {
    s.eps_left = plus_root(-d, p_small) / (2.0 * left_well.b_coef);
    s.eps_right = plus_root(d, p_small) / (2.0 * right_well.b_coef);
  }
  if (s.eps_left > kMaxEpsilon || s.eps_right > kMaxEpsilon) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "first-order tunneling correction too large for the " << to_string(parity)
        << " state (eps_left = " << s.eps_left << ", eps_right = " << s.eps_right
        << ", limit " << kMaxEpsilon << "); the barrier is too thin, use the exact oracle";
    throw AssumptionViolated(msg.str());
  }

  const double sign = parity == Parity::Ground ? -1.0 : 1.0;
  s.y_left = left_well.y_cap * (1.0 + sign * s.eps_left);
  s.y_right = right_well.y_cap * (1.0 + sign * s.eps_right);

  const double y2_left = left_well.y_cap * left_well.y_cap;
  const double y2_right = right_well.y_cap * right_well.y_cap;
  s.shift_left = reduced.k_m2 * y2_left * s.eps_left * (s.eps_left + 2.0 * sign);
  s.shift_right = reduced.k_2 * y2_right * s.eps_right * (s.eps_right + 2.0 * sign);
  s.energy_left_estimate = spec.v_m2 + reduced.k_m2 * y2_left + s.shift_left;
  s.energy_right_estimate = spec.v_2 + reduced.k_2 * y2_right + s.shift_right;
  s.energy = 0.5 * (s.energy_left_estimate + s.energy_right_estimate);

  split_barrier(s, left_well, right_well);

  if (p_small > 0.0) {
    s.z_asym = d / (2.0 * std::sqrt(p_small));
  } else {
    s.z_asym = d == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), d);
  }
  s.r_asym = std::asinh(s.z_asym);
  // Ground: P_L/P_R = exp(-2r). Excited: P_L/P_R = exp(+2r).
  const double exponent = parity == Parity::Ground ? 2.0 * s.r_asym : -2.0 * s.r_asym;
  s.prob_left = 1.0 / (1.0 + std::exp(exponent));
  s.prob_right = 1.0 / (1.0 + std::exp(-exponent));
  return s;
}

SplittingResult splitting(const CoupledSolution& ground, const CoupledSolution& excited) {
  SplittingResult out;
  out.e0 = ground.energy;
  out.e1 = excited.energy;
  out.e_bar = 0.5 * (out.e0 + out.e1);
  out.delta_e = 0.25 * ((excited.shift_left - ground.shift_left) +
                        (excited.shift_right - ground.shift_right));
  return out;
}

double coefficient_ratio(Parity parity, const CoupledSolution& solution,
                         const IsolatedWellSolution& left_well,
                         const IsolatedWellSolution& right_well) {
  const double factor = (right_well.s_inner * right_well.s_inner * left_well.b_coef *
                         left_well.c_coef) /
                        (left_well.s_inner * left_well.s_inner * right_well.b_coef *
                         right_well.c_coef);
  const double exponent = parity == Parity::Ground ? -2.0 * solution.r_asym : 2.0 * solution.r_asym;
  return factor * std::exp(exponent);
}

double symmetric_half_splitting(double a, double k_0, double p_small) {
  return 2.0 * a * k_0 * std::sqrt(p_small) / (kPi * kPi);
}

}  // namespace dsw
