#pragma once

#include "dsw/isolated.hpp"
#include "dsw/params.hpp"

namespace dsw {

enum class Parity { Ground, Excited };

const char* to_string(Parity parity);

/// Self-consistent barrier exponent r0 = kappa_0 w_0 and p = P exp(-2 r0).
struct FixedPointResult {
  double r0 = 0.0;
  double p_small = 0.0;
  int iterations = 0;  // the p = 0 starting evaluation counts as the first
};

struct FixedPointOptions {
  double tol = 1e-13;
  int max_iter = 100;
};

/// Iterates r0 = (a_l + a_r)/2 +- sqrt(((a_r - a_l)/2)^2 + P exp(-2 r0)) from p = 0
/// (plus sign for the ground state, minus for the excited state).
/// Throws NoConvergence, or ExcitedBelowZero when the excited iterate reaches r0 <= 0.
FixedPointResult solve_r0(Parity parity, double a_left, double a_right, double p_cap,
                          double tol = FixedPointOptions{}.tol,
                          int max_iter = FixedPointOptions{}.max_iter);

/// One eigenstate to first order in exp(-2 r).
struct CoupledSolution {
  Parity parity = Parity::Ground;
  double r0 = 0.0;
  double p_small = 0.0;
  double eps_left = 0.0;
  double eps_right = 0.0;
  double y_left = 0.0;
  double y_right = 0.0;
  double r_left = 0.0;   // kappa_0 (x_node - x_m1)
  double r_right = 0.0;  // kappa_0 (x_1 - x_node)
  double energy_left_estimate = 0.0;
  double energy_right_estimate = 0.0;
  double energy = 0.0;  // mean of the two estimates
  // Estimate minus the isolated-well energy on each side, free of the
  // cancellation that subtracting two nearly equal energies would incur.
  double shift_left = 0.0;
  double shift_right = 0.0;
  double z_asym = 0.0;
  double r_asym = 0.0;
  double prob_left = 0.0;
  double prob_right = 0.0;
};

/// Largest tolerated first-order correction before AssumptionViolated.
inline constexpr double kMaxEpsilon = 0.1;

CoupledSolution correct_energy(Parity parity, const IsolatedWellSolution& left_well,
                               const IsolatedWellSolution& right_well, double r0, double p_small,
                               const ReducedParams& reduced, const WellSpec& spec);

struct SplittingResult {
  double e_bar = 0.0;    // (e0 + e1) / 2
  double delta_e = 0.0;  // (e1 - e0) / 2
  double e0 = 0.0;
  double e1 = 0.0;
};

SplittingResult splitting(const CoupledSolution& ground, const CoupledSolution& excited);

/// (A_m2 / A_2)^2 for the state's parity from the thick-barrier constants.
double coefficient_ratio(Parity parity, const CoupledSolution& solution,
                         const IsolatedWellSolution& left_well,
                         const IsolatedWellSolution& right_well);

/// Half-splitting 2 a K_0 sqrt(p) / pi^2 of a symmetric pair.
double symmetric_half_splitting(double a, double k_0, double p_small);

}  // namespace dsw
