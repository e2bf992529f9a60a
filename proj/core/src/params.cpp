#include "dsw/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

void require(bool ok, const char* constraint, double lhs, double rhs) {
  if (ok) return;
  std::ostringstream detail;
  detail.precision(17);
  detail << "got " << lhs << " vs " << rhs;
  throw InvalidSpec(constraint, detail.str());
}

void require_positive(double value, const char* constraint) {
  if (std::isfinite(value) && value > 0.0) return;
  std::ostringstream detail;
  detail.precision(17);
  detail << "got " << value;
  throw InvalidSpec(constraint, detail.str());
}

}  // namespace

void validate(const WellSpec& s) {
  require_positive(s.hbar, "hbar > 0");
  require_positive(s.mass, "mass > 0");
  require_positive(s.w_m2, "w_m2 > 0");
  require_positive(s.w_0, "w_0 > 0");
  require_positive(s.w_2, "w_2 > 0");
  for (double v : {s.v_m4, s.v_m2, s.v_0, s.v_2, s.v_4, s.x_m3}) {
    if (!std::isfinite(v)) throw InvalidSpec("finite values", "non-finite potential or position");
  }
  require(s.v_m4 > s.v_m2, "v_m4 > v_m2", s.v_m4, s.v_m2);
  require(s.v_0 > s.v_m2, "v_0 > v_m2", s.v_0, s.v_m2);
  require(s.v_0 > s.v_2, "v_0 > v_2", s.v_0, s.v_2);
  require(s.v_4 > s.v_2, "v_4 > v_2", s.v_4, s.v_2);
}

ReducedParams reduce(const WellSpec& s) {
  validate(s);
  constexpr double pi = std::numbers::pi;
  ReducedParams r;
  r.w_m3 = s.v_m4 - s.v_m2;
  r.w_m1 = s.v_0 - s.v_m2;
  r.w_1 = s.v_0 - s.v_2;
  r.w_3 = s.v_4 - s.v_2;

  const double scale = pi * pi * s.hbar * s.hbar / (2.0 * s.mass);
  r.k_m2 = scale / (s.w_m2 * s.w_m2);
  r.k_0 = scale / (s.w_0 * s.w_0);
  r.k_2 = scale / (s.w_2 * s.w_2);

  r.alpha_m3 = std::sqrt(r.k_m2 / r.w_m3);
  r.alpha_m1 = std::sqrt(r.k_m2 / r.w_m1);
  r.alpha_1 = std::sqrt(r.k_2 / r.w_1);
  r.alpha_3 = std::sqrt(r.k_2 / r.w_3);
  r.beta_m1 = std::sqrt(r.k_0 / r.w_m1);
  r.beta_1 = std::sqrt(r.k_0 / r.w_1);

  const double left_den = pi + r.alpha_m3 + r.alpha_m1;
  const double right_den = pi + r.alpha_1 + r.alpha_3;
  r.gamma_m3 = pi * r.alpha_m3 / left_den;
  r.gamma_m1 = pi * r.alpha_m1 / left_den;
  r.gamma_1 = pi * r.alpha_1 / right_den;
  r.gamma_3 = pi * r.alpha_3 / right_den;
  return r;
}

bool bound_state_exists(double alpha_inner, double alpha_outer) {
  const double hi = std::max(alpha_inner, alpha_outer);
  const double lo = std::min(alpha_inner, alpha_outer);
  if (hi <= 2.0) return true;
  return lo >= hi * std::cos(std::numbers::pi / hi);
}

WellView well_view(const WellSpec& s, const ReducedParams& r, Side side) {
  WellView v;
  v.side = side;
  if (side == Side::Left) {
    v.alpha_inner = r.alpha_m1;
    v.alpha_outer = r.alpha_m3;
    v.gamma_inner = r.gamma_m1;
    v.gamma_outer = r.gamma_m3;
    v.beta = r.beta_m1;
    v.step_inner = r.w_m1;
    v.step_outer = r.w_m3;
    v.confinement = r.k_m2;
    v.floor = s.v_m2;
    v.width = s.w_m2;
  } else {
    v.alpha_inner = r.alpha_1;
    v.alpha_outer = r.alpha_3;
    v.gamma_inner = r.gamma_1;
    v.gamma_outer = r.gamma_3;
    v.beta = r.beta_1;
    v.step_inner = r.w_1;
    v.step_outer = r.w_3;
    v.confinement = r.k_2;
    v.floor = s.v_2;
    v.width = s.w_2;
  }
  return v;
}

WellSpec worked_example_spec() {
  constexpr double pi = std::numbers::pi;
  WellSpec s;
  s.hbar = 1.0;
  s.mass = 2.0;
  s.v_m4 = 1.0;
  s.v_m2 = 0.0;
  s.v_0 = 1.0;
  s.v_2 = 0.0;
  s.v_4 = 1.0;
  s.w_m2 = 2.0 * pi / 3.0;
  s.w_0 = 10.0 * pi / 3.0;
  s.w_2 = 2.0 * pi / 3.0;
  s.x_m3 = 0.0;
  return s;
}

}  // namespace dsw
