#include "dsw/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

namespace dsw {

Json to_json(const WellSpec& s) {
  return Json{{"hbar", s.hbar}, {"mass", s.mass}, {"v_m4", s.v_m4}, {"v_m2", s.v_m2},
              {"v_0", s.v_0},   {"v_2", s.v_2},   {"v_4", s.v_4},   {"w_m2", s.w_m2},
              {"w_0", s.w_0},   {"w_2", s.w_2},   {"x_m3", s.x_m3}};
}

Json to_json(const ReducedParams& r) {
  return Json{{"w_m3", r.w_m3},         {"w_m1", r.w_m1},         {"w_1", r.w_1},
              {"w_3", r.w_3},           {"k_m2", r.k_m2},         {"k_0", r.k_0},
              {"k_2", r.k_2},           {"alpha_m3", r.alpha_m3}, {"alpha_m1", r.alpha_m1},
              {"alpha_1", r.alpha_1},   {"alpha_3", r.alpha_3},   {"beta_m1", r.beta_m1},
              {"beta_1", r.beta_1},     {"gamma_m3", r.gamma_m3}, {"gamma_m1", r.gamma_m1},
              {"gamma_1", r.gamma_1},   {"gamma_3", r.gamma_3}};
}

Json to_json(const IsolatedWellSolution& w) {
  return Json{{"y_cap", w.y_cap},         {"s_outer", w.s_outer},     {"s_inner", w.s_inner},
              {"phi_outer", w.phi_outer}, {"phi_inner", w.phi_inner}, {"c_inner", w.c_inner},
              {"t_outer", w.t_outer},     {"t_inner", w.t_inner},     {"u_cap", w.u_cap},
              {"a_coef", w.a_coef},       {"b_coef", w.b_coef},       {"c_coef", w.c_coef}};
}

Json to_json(const CoupledSolution& c, const FixedPointResult& fp) {
  return Json{{"parity", to_string(c.parity)},
              {"iterations", fp.iterations},
              {"r0", c.r0},
              {"p_small", c.p_small},
              {"eps_left", c.eps_left},
              {"eps_right", c.eps_right},
              {"y_left", c.y_left},
              {"y_right", c.y_right},
              {"r_left", c.r_left},
              {"r_right", c.r_right},
              {"energy_left_estimate", c.energy_left_estimate},
              {"energy_right_estimate", c.energy_right_estimate},
              {"energy", c.energy},
              {"z_asym", c.z_asym},
              {"r_asym", c.r_asym},
              {"prob_left", c.prob_left},
              {"prob_right", c.prob_right}};
}

Json to_json(const SplittingResult& s) {
  return Json{{"e_bar", s.e_bar}, {"delta_e", s.delta_e}, {"e0", s.e0}, {"e1", s.e1}};
}

Json to_json(const OracleComparison& c) {
  return Json{{"tol_rel", c.tol_rel},
              {"r0", c.r0},
              {"e0_exact", c.e0_exact},
              {"e1_exact", c.e1_exact},
              {"e0_approx", c.e0_approx},
              {"e1_approx", c.e1_approx},
              {"e0_rel_error", c.e0_rel_error},
              {"e1_rel_error", c.e1_rel_error},
              {"delta_e_exact", c.delta_e_exact},
              {"delta_e_approx", c.delta_e_approx},
              {"delta_e_rel_error", c.delta_e_rel_error},
              {"ratio_exact", c.ratio_exact},
              {"ratio_approx", c.ratio_approx},
              {"ratio_rel_error", c.ratio_rel_error}};
}

Json solve_report(const Approximation& a) {
  Json isolated{{"left", to_json(a.left)},
                {"right", to_json(a.right)},
                {"energy_left", a.isolated_energy_left()},
                {"energy_right", a.isolated_energy_right()},
                {"p_cap", a.coupling.p_cap}};
  return Json{{"spec", to_json(a.spec)},
              {"reduced", to_json(a.reduced)},
              {"isolated", std::move(isolated)},
              {"ground", to_json(a.ground, a.ground_fixed_point)},
              {"excited", to_json(a.excited, a.excited_fixed_point)},
              {"splitting", to_json(a.split)}};
}

Json perturbation_block(const SymmetricBase& base, const PerturbedLevels& p) {
  return Json{{"a_sym", base.a_sym},
              {"e_bar", base.e_bar},
              {"delta_e", base.delta_e},
              {"f_coef", base.f_coef},
              {"g_coef", base.g_coef},
              {"v", p.v_ratio},
              {"delta_v", p.delta_v},
              {"e_left", p.e_left},
              {"e_right", p.e_right},
              {"e0", p.e0},
              {"e1", p.e1},
              {"root_term", p.root_term},
              {"z_asym", p.z_asym},
              {"prob_ratio", p.prob_ratio}};
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render(std::ostream& out, const Json& node, const std::string& prefix) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      render(out, value, prefix.empty() ? key : prefix + "." + key);
    }
    return;
  }
  char buf[64];
  std::string text;
  if (node.is_number_float()) {
    std::snprintf(buf, sizeof buf, "%.12g", node.get<double>());
    text = buf;
  } else if (node.is_string()) {
    text = node.get<std::string>();
  } else {
    text = node.dump();
  }
  std::snprintf(buf, sizeof buf, "%-36s ", prefix.c_str());
  out << buf << text << '\n';
}

}  // namespace

void render_table(std::ostream& out, const Json& report) { render(out, report, ""); }

}  // namespace dsw
