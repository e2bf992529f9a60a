#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dsw/isolated.hpp"
#include "dsw/params.hpp"
#include "dsw/tunneling.hpp"

namespace dsw {

/// One eigenstate as five analytic pieces:
///
///   x <  x_m3          amp_m4 exp(kappa_m4 (x - x_m3))
///   x_m3 <= x < x_m1   amp_m2 cos(k_m2 (x - extremum_left))
///   x_m1 <= x < x_1    A_0 cosh(kappa_0 (x - barrier_node))   (sinh for the excited state)
///   x_1  <= x < x_3    amp_2 cos(k_2 (x - extremum_right))
///   x_3  <= x          amp_4 exp(-kappa_4 (x - x_3))
///
/// A_0 can under- or overflow for very thick barriers, so the barrier
/// amplitude is kept as log_amp_0 (A_0 > 0); amp_0 is exp(log_amp_0).
/// The excited state has a negative left lobe. Phases follow
/// phase = pi/2 - k * (distance from the wall to the extremum).
struct WavefunctionModel {
  Parity parity = Parity::Ground;
  double energy = 0.0;
  double x_m3 = 0.0;
  double x_m1 = 0.0;
  double x_1 = 0.0;
  double x_3 = 0.0;
  double extremum_left = 0.0;
  double extremum_right = 0.0;
  double barrier_node = 0.0;
  double kappa_m4 = 0.0;
  double kappa_0 = 0.0;
  double kappa_4 = 0.0;
  double k_m2 = 0.0;
  double k_2 = 0.0;
  double amp_m4 = 0.0;
  double amp_m2 = 0.0;
  double amp_0 = 0.0;
  double log_amp_0 = 0.0;
  double amp_2 = 0.0;
  double amp_4 = 0.0;
  double phase_m3 = 0.0;
  double phase_m1 = 0.0;
  double phase_1 = 0.0;
  double phase_3 = 0.0;
};

/// Jumps of psi and psi' at x_m3, x_m1, x_1, x_3, scaled by max|psi| and max|psi'|.
struct ContinuityResiduals {
  std::array<double, 4> value{};
  std::array<double, 4> slope{};
  double max() const;
};

/// Residuals above this (relative) make assemble throw MatchingResidualTooLarge.
inline constexpr double kMaxMatchingResidual = 1e-6;

/// Builds the state from the first-order solution: the barrier node sits at
/// x_m1 + r_left / kappa_0, the wells are matched to the barrier in value and
/// slope, and the outer tails are matched in value. The slope jump left at the
/// outer walls measures how far the energy is from an exact eigenvalue.
WavefunctionModel assemble(const WellSpec& spec, const ReducedParams& reduced,
                           const CoupledSolution& solution);

/// Same construction at an exact eigenvalue (from the oracle). The node is
/// placed by matching the decaying tail through whichever well gives the
/// better-conditioned barrier exponent.
WavefunctionModel assemble_exact(const WellSpec& spec, Parity parity, double energy);

double evaluate(const WavefunctionModel& model, double x);
double derivative(const WavefunctionModel& model, double x);

ContinuityResiduals continuity_residuals(const WavefunctionModel& model);

/// Largest |psi| and |psi'| over the real line.
double max_abs_value(const WavefunctionModel& model);
double max_abs_slope(const WavefunctionModel& model);

/// Integral of psi^2 over the whole line.
double norm_squared(const WavefunctionModel& model);

/// Integrals of psi^2 left and right of the barrier node.
std::pair<double, double> probabilities(const WavefunctionModel& model);

/// Thick-barrier estimate A^2 w / (2 U Y) on each side using the model's well amplitudes.
std::pair<double, double> closed_form_probabilities(const WavefunctionModel& model,
                                                    const WellSpec& spec,
                                                    const IsolatedWellSolution& left,
                                                    const IsolatedWellSolution& right);

/// Normalised bound state of a single well whose barrier side extends to infinity,
/// at the isolated-well energy V + K Y^2.
struct WellState {
  Side side = Side::Left;
  double energy = 0.0;
  double x_outer = 0.0;  // wall facing the outer region
  double x_inner = 0.0;  // wall facing the barrier
  double kappa_outer = 0.0;
  double kappa_inner = 0.0;
  double k = 0.0;
  double amp_outer = 0.0;
  double amp_well = 0.0;
  double amp_inner = 0.0;
  double extremum = 0.0;
};

WellState isolated_state(const WellSpec& spec, const ReducedParams& reduced, Side side,
                         const IsolatedWellSolution& well);

double evaluate(const WellState& state, double x);

/// sqrt(P_L) psi_L + sqrt(P_R) psi_R for the ground state,
/// -sqrt(P_R) psi_L + sqrt(P_L) psi_R for the excited state, sampled on xs.
/// Throws GridTooCoarse when a grid step exceeds a sixteenth of the shortest wavelength.
std::vector<double> superpose(const WellState& left_state, const WellState& right_state,
                              double prob_left, double prob_right, Parity parity,
                              const std::vector<double>& xs);

struct SampleRow {
  double x = 0.0;
  double psi = 0.0;
  double dpsi = 0.0;
};

/// n_points uniformly spaced samples on [x_min, x_max], endpoints included.
/// Throws BadRange unless x_min < x_max and n_points >= 2.
std::vector<SampleRow> sample(const WavefunctionModel& model, double x_min, double x_max,
                              int n_points);

/// Header "x,psi,dpsi", 17 significant digits, LF line endings.
void write_csv(std::ostream& out, const std::vector<SampleRow>& rows);

}  // namespace dsw
