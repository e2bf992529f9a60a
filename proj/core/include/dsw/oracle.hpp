#pragma once

#include "dsw/params.hpp"
#include "dsw/tunneling.hpp"

namespace dsw {

/// Outcome of integrating the exact solution from the far left at a trial energy.
struct ShootResult {
  double energy = 0.0;
  // (psi'/kappa_4 + psi) / |(psi, psi'/kappa_4)| at x_3: zero exactly when the
  // solution decays to the right, bounded and continuous in E.
  double mismatch = 0.0;
  int node_count = 0;   // zeros in (x_m3, x_3)
  int sturm_count = 0;  // zeros on the whole line, i.e. eigenvalues below E
};

/// Throws EnergyOutOfBand unless max(V_m2, V_2) < E < min(V_m4, V_0, V_4).
ShootResult shoot(const WellSpec& spec, double energy);

inline constexpr int kScanPoints = 10001;

/// Exact eigenvalue of the ground (0 nodes) or first excited (1 node) state.
/// Scans the band for the first energy whose Sturm count reaches the target,
/// then bisects on the count to relative width tol_rel.
/// Throws LevelNotFound, or DegeneracyUnresolved when the final bracket still
/// holds more than one level.
double find_level(const WellSpec& spec, Parity which, double tol_rel);

struct OracleComparison {
  double e0_exact = 0.0;
  double e1_exact = 0.0;
  double e0_approx = 0.0;
  double e1_approx = 0.0;
  // |approx - exact| / (exact - min(V_m2, V_2))
  double e0_rel_error = 0.0;
  double e1_rel_error = 0.0;
  double delta_e_exact = 0.0;
  double delta_e_approx = 0.0;
  double delta_e_rel_error = 0.0;
  // Ground-state P_R / P_L: integrated from the exact state vs first-order formula.
  double ratio_exact = 0.0;
  double ratio_approx = 0.0;
  double ratio_rel_error = 0.0;
  double r0 = 0.0;  // ground barrier exponent from the approximation
  double tol_rel = 0.0;
};

OracleComparison compare(const WellSpec& spec, double tol_rel = 1e-13);

}  // namespace dsw
