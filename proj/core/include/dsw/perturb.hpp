#pragma once

#include <array>

#include "dsw/isolated.hpp"
#include "dsw/params.hpp"

namespace dsw {

/// Unperturbed left-right symmetric configuration (a_left == a_right) and the
/// coefficients that govern its response to V_m2 -> V_m2 + dV, V_2 -> V_2 - dV.
struct SymmetricBase {
  WellSpec spec;
  ReducedParams reduced;
  IsolatedWellSolution left;
  IsolatedWellSolution right;
  double a_sym = 0.0;
  double e_bar = 0.0;    // common isolated-well energy
  double delta_e = 0.0;  // half-splitting 2 a K_0 sqrt(p) / pi^2
  double f_coef = 0.0;   // mean level shift per unit v, in units of delta_e
  double g_coef = 0.0;   // antisymmetric level shift per unit v, in units of delta_e
  double p_small = 0.0;
  double r0 = 0.0;
};

/// Relative tolerance on |a_right - a_left| / a for a spec to count as symmetric.
inline constexpr double kSymmetryTolerance = 1e-9;

/// Throws NotSymmetric when the two isolated wells give different a.
SymmetricBase symmetric_base(const WellSpec& spec);

/// First-order relative shifts dX/X produced by a well-depth perturbation dV.
struct DeltaLedger {
  double delta_v = 0.0;
  double alpha_m3 = 0.0;
  double alpha_m1 = 0.0;  // also beta_m1
  double alpha_1 = 0.0;   // also beta_1
  double alpha_3 = 0.0;
  double y_m2 = 0.0;
  double y_2 = 0.0;
  double s_m3 = 0.0;
  double s_m1 = 0.0;
  double s_1 = 0.0;
  double s_3 = 0.0;
  double a_m1 = 0.0;  // d a_m1 / a
  double a_1 = 0.0;   // d a_1 / a
};

/// |dV| must stay below this fraction of the smallest potential step.
inline constexpr double kMaxPerturbationFraction = 0.01;

/// Throws PerturbationTooLarge when |dV| >= 0.01 min(W).
DeltaLedger delta_ledger(const SymmetricBase& base, const ReducedParams& reduced, double delta_v);

struct PerturbedLevels {
  double v_ratio = 0.0;  // dV / delta_e
  double delta_v = 0.0;
  double e_left = 0.0;   // decoupled left-well energy after the perturbation
  double e_right = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  double root_term = 0.0;  // sqrt(1 + G^2 v^2)
  double z_asym = 0.0;     // G v
  double prob_ratio = 0.0; // P_R / P_L of the ground state
};

PerturbedLevels perturbed_levels(const SymmetricBase& base, double delta_v);

/// dV that yields the given ground-state P_R / P_L.
double invert_ratio(const SymmetricBase& base, double prob_ratio);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// [[E_L, -dE], [-dE, E_R]] in the basis of the two decoupled well states.
Matrix2 two_level_matrix(const SymmetricBase& base, double delta_v);

struct TwoLevelResidual {
  double ground = 0.0;   // ||H v0 - E0 v0|| / |E0|
  double excited = 0.0;  // ||H v1 - E1 v1|| / |E1|
};

/// Applies the two-level matrix to (sqrt P_L, sqrt P_R) and (-sqrt P_R, sqrt P_L).
TwoLevelResidual two_level_check(const SymmetricBase& base, double delta_v);

}  // namespace dsw
