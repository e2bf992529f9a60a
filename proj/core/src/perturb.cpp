#include "dsw/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dsw/errors.hpp"
#include "dsw/tunneling.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;

double min_step(const ReducedParams& r) {
  return std::min({r.w_m3, r.w_m1, r.w_1, r.w_3});
}

void check_perturbation(const ReducedParams& reduced, double delta_v) {
  const double limit = kMaxPerturbationFraction * min_step(reduced);
  if (!(std::abs(delta_v) < limit)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|dV| = " << std::abs(delta_v) << " is not small against the potential steps (limit "
        << limit << ")";
    throw PerturbationTooLarge(msg.str());
  }
}

// U (S_inner^2 T_inner + S_outer^2 T_outer) for one well.
double response_sum(const IsolatedWellSolution& w) {
  return w.u_cap * (w.s_inner * w.s_inner * w.t_inner + w.s_outer * w.s_outer * w.t_outer);
}

}  // namespace

SymmetricBase symmetric_base(const WellSpec& spec) {
  SymmetricBase base;
  base.spec = spec;
  base.reduced = reduce(spec);
  const auto left_view = well_view(spec, base.reduced, Side::Left);
  const auto right_view = well_view(spec, base.reduced, Side::Right);
  base.left = solve_well(left_view);
  base.right = solve_well(right_view);

  const double a_l = base.left.a_coef;
  const double a_r = base.right.a_coef;
  base.a_sym = 0.5 * (a_l + a_r);
  if (std::abs(a_r - a_l) > kSymmetryTolerance * base.a_sym) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spec is not left-right symmetric: a_left = " << a_l << ", a_right = " << a_r;
    throw NotSymmetric(msg.str());
  }

  base.e_bar = 0.5 * (isolated_energy(left_view, base.left) + isolated_energy(right_view, base.right));
  const auto fp = solve_r0(Parity::Ground, base.a_sym, base.a_sym, coupling(base.left, base.right).p_cap);
  base.r0 = fp.r0;
  base.p_small = fp.p_small;
  base.delta_e = symmetric_half_splitting(base.a_sym, base.reduced.k_0, base.p_small);

  const double right_sum = response_sum(base.right);
  const double left_sum = response_sum(base.left);
  base.f_coef = (right_sum - left_sum) / (2.0 * kPi);
  base.g_coef = 1.0 - (right_sum + left_sum) / (2.0 * kPi);
  return base;
}

DeltaLedger delta_ledger(const SymmetricBase& base, const ReducedParams& r, double dv) {
  check_perturbation(r, dv);
  const auto& L = base.left;
  const auto& R = base.right;
  const double two_pi = 2.0 * kPi;
  const double c_l2 = L.c_inner * L.c_inner;
  const double c_r2 = R.c_inner * R.c_inner;

  DeltaLedger d;
  d.delta_v = dv;
  d.alpha_m3 = dv / (2.0 * r.w_m3);
  d.alpha_m1 = dv / (2.0 * r.w_m1);
  d.alpha_1 = -dv / (2.0 * r.w_1);
  d.alpha_3 = -dv / (2.0 * r.w_3);

  d.y_m2 = -L.u_cap / two_pi * (L.t_inner / r.w_m1 + L.t_outer / r.w_m3) * dv;
  d.y_2 = R.u_cap / two_pi * (R.t_inner / r.w_1 + R.t_outer / r.w_3) * dv;

  const double pi_y_l = kPi * L.y_cap;
  const double pi_y_r = kPi * R.y_cap;
  d.s_m3 = -L.u_cap / two_pi * (L.t_inner / r.w_m1 - (L.t_inner + pi_y_l) / r.w_m3) * dv;
  d.s_m1 = -L.u_cap / two_pi * (L.t_outer / r.w_m3 - (L.t_outer + pi_y_l) / r.w_m1) * dv;
  d.s_1 = R.u_cap / two_pi * (R.t_outer / r.w_3 - (R.t_outer + pi_y_r) / r.w_1) * dv;
  d.s_3 = R.u_cap / two_pi * (R.t_inner / r.w_1 - (R.t_inner + pi_y_r) / r.w_3) * dv;

  d.a_m1 = -L.u_cap / two_pi *
           ((L.s_inner * L.c_inner + L.t_outer + pi_y_l) / (c_l2 * r.w_m1) -
            L.t_inner * L.t_inner * L.t_outer / r.w_m3) *
           dv;
  d.a_1 = R.u_cap / two_pi *
          ((R.s_inner * R.c_inner + R.t_outer + pi_y_r) / (c_r2 * r.w_1) -
           R.t_inner * R.t_inner * R.t_outer / r.w_3) *
          dv;
  return d;
}

PerturbedLevels perturbed_levels(const SymmetricBase& base, double delta_v) {
  check_perturbation(base.reduced, delta_v);
  PerturbedLevels out;
  out.delta_v = delta_v;
  out.v_ratio = delta_v / base.delta_e;
  const double fv = base.f_coef * out.v_ratio;
  out.z_asym = base.g_coef * out.v_ratio;
  out.root_term = std::hypot(1.0, out.z_asym);
  out.e_left = base.e_bar + base.delta_e * (fv + out.z_asym);
  out.e_right = base.e_bar + base.delta_e * (fv - out.z_asym);
  out.e0 = base.e_bar + base.delta_e * (fv - out.root_term);
  out.e1 = base.e_bar + base.delta_e * (fv + out.root_term);
  // (root + z) / (root - z) == (root + z)^2 == exp(2 asinh z)
  out.prob_ratio = std::exp(2.0 * std::asinh(out.z_asym));
  return out;
}

double invert_ratio(const SymmetricBase& base, double prob_ratio) {
  if (!(prob_ratio > 0.0) || !std::isfinite(prob_ratio)) {
    throw DomainError("invert_ratio requires a positive finite probability ratio");
  }
  const double root = std::sqrt(prob_ratio);
  return base.delta_e / (2.0 * base.g_coef) * (root - 1.0 / root);
}

Matrix2 two_level_matrix(const SymmetricBase& base, double delta_v) {
  const auto levels = perturbed_levels(base, delta_v);
  return {{{levels.e_left, -base.delta_e}, {-base.delta_e, levels.e_right}}};
}

TwoLevelResidual two_level_check(const SymmetricBase& base, double delta_v) {
  const auto levels = perturbed_levels(base, delta_v);
  const auto h = two_level_matrix(base, delta_v);
  const double z = levels.z_asym;
  const double q = levels.root_term;
  const double p_left = (q - z) / (2.0 * q);
  const double p_right = (q + z) / (2.0 * q);

  auto residual = [&](double u0, double u1, double energy) {
    const double r0 = h[0][0] * u0 + h[0][1] * u1 - energy * u0;
    const double r1 = h[1][0] * u0 + h[1][1] * u1 - energy * u1;
    const double scale = std::max(std::abs(energy), std::abs(base.delta_e));
    return std::hypot(r0, r1) / scale;
  };

  TwoLevelResidual out;
  out.ground = residual(std::sqrt(p_left), std::sqrt(p_right), levels.e0);
  out.excited = residual(-std::sqrt(p_right), std::sqrt(p_left), levels.e1);
  return out;
}

}  // namespace dsw
