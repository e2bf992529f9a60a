#pragma once

namespace dsw {

/// Five-piece potential: V_m4 | V_m2 (left well) | V_0 (barrier) | V_2 (right well) | V_4.
/// Widths are those of the three finite regions; x_m3 is the left edge of the left well.
struct WellSpec {
  double hbar = 1.0;
  double mass = 1.0;
  double v_m4 = 0.0;
  double v_m2 = 0.0;
  double v_0 = 0.0;
  double v_2 = 0.0;
  double v_4 = 0.0;
  double w_m2 = 0.0;
  double w_0 = 0.0;
  double w_2 = 0.0;
  double x_m3 = 0.0;

  double x_m1() const { return x_m3 + w_m2; }
  double x_1() const { return x_m1() + w_0; }
  double x_3() const { return x_1() + w_2; }

  friend bool operator==(const WellSpec&, const WellSpec&) = default;
};

/// Throws InvalidSpec naming the first violated constraint.
void validate(const WellSpec& spec);

/// Quantities derivable from a WellSpec without root finding.
struct ReducedParams {
  // Potential steps at the four boundaries.
  double w_m3 = 0.0;  // V_m4 - V_m2
  double w_m1 = 0.0;  // V_0  - V_m2
  double w_1 = 0.0;   // V_0  - V_2
  double w_3 = 0.0;   // V_4  - V_2
  // Infinite-wall confinement energies pi^2 hbar^2 / (2 m w^2).
  double k_m2 = 0.0;
  double k_0 = 0.0;
  double k_2 = 0.0;
  double alpha_m3 = 0.0;
  double alpha_m1 = 0.0;
  double alpha_1 = 0.0;
  double alpha_3 = 0.0;
  double beta_m1 = 0.0;
  double beta_1 = 0.0;
  double gamma_m3 = 0.0;
  double gamma_m1 = 0.0;
  double gamma_1 = 0.0;
  double gamma_3 = 0.0;

  friend bool operator==(const ReducedParams&, const ReducedParams&) = default;
};

ReducedParams reduce(const WellSpec& spec);

/// True iff an isolated well with these wall parameters binds a state.
bool bound_state_exists(double alpha_inner, double alpha_outer);

enum class Side { Left, Right };

/// One well seen from inside: "inner" is the wall facing the central barrier.
struct WellView {
  Side side = Side::Left;
  double alpha_inner = 0.0;
  double alpha_outer = 0.0;
  double gamma_inner = 0.0;
  double gamma_outer = 0.0;
  double beta = 0.0;
  double step_inner = 0.0;  // W at the barrier wall
  double step_outer = 0.0;  // W at the outer wall
  double confinement = 0.0; // K of the well
  double floor = 0.0;       // V of the well
  double width = 0.0;
};

WellView well_view(const WellSpec& spec, const ReducedParams& reduced, Side side);

/// hbar = 1, m = 2, unit steps, wells of width 2pi/3 and a barrier five times wider.
WellSpec worked_example_spec();

}  // namespace dsw
