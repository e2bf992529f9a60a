#include "dsw/wavefunc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_cosh(double u) {
  const double a = std::abs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

// log|sinh u|; -inf at u = 0.
double log_abs_sinh(double u) {
  const double a = std::abs(u);
  if (a < 1.0) return std::log(std::sinh(a));
  return a + std::log1p(-std::exp(-2.0 * a)) - kLn2;
}

double sign_of(double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0); }

double decay(const WellSpec& spec, double v, double energy) {
  return std::sqrt(2.0 * spec.mass * (v - energy)) / spec.hbar;
}

void check_band(const WellSpec& spec, double energy) {
  const double lo = std::max(spec.v_m2, spec.v_2);
  const double hi = std::min({spec.v_m4, spec.v_0, spec.v_4});
  if (!(energy > lo && energy < hi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy " << energy << " outside the bound-state band (" << lo << ", " << hi << ")";
    throw EnergyOutOfBand(msg.str());
  }
}

// Barrier piece in units where the log amplitude is explicit.
double barrier_value(Parity parity, double log_amp, double u) {
  if (parity == Parity::Ground) return std::exp(log_amp + log_cosh(u));
  return sign_of(u) * std::exp(log_amp + log_abs_sinh(u));
}

double barrier_slope(Parity parity, double log_amp, double kappa, double u) {
  if (parity == Parity::Ground) return kappa * sign_of(u) * std::exp(log_amp + log_abs_sinh(u));
  return kappa * std::exp(log_amp + log_cosh(u));
}

// A cos(k (x - xc)) through (x_edge, f, g) with the lobe sign taken from `sign`.
struct Lobe {
  double amp;
  double center;
};

Lobe lobe_from_edge(double x_edge, double f, double g, double k, double sign) {
  const double theta = std::atan2(-sign * g / k, sign * f);
  return {sign * std::hypot(f, g / k), x_edge - theta / k};
}

enum class Region { OuterLeft, WellLeft, Barrier, WellRight, OuterRight };

Region region_of(const WavefunctionModel& m, double x) {
  if (x < m.x_m3) return Region::OuterLeft;
  if (x < m.x_m1) return Region::WellLeft;
  if (x < m.x_1) return Region::Barrier;
  if (x < m.x_3) return Region::WellRight;
  return Region::OuterRight;
}

double value_in(const WavefunctionModel& m, Region r, double x) {
  switch (r) {
    case Region::OuterLeft:
      return m.amp_m4 * std::exp(m.kappa_m4 * (x - m.x_m3));
    case Region::WellLeft:
      return m.amp_m2 * std::cos(m.k_m2 * (x - m.extremum_left));
    case Region::Barrier:
      return barrier_value(m.parity, m.log_amp_0, m.kappa_0 * (x - m.barrier_node));
    case Region::WellRight:
      return m.amp_2 * std::cos(m.k_2 * (x - m.extremum_right));
    case Region::OuterRight:
      return m.amp_4 * std::exp(-m.kappa_4 * (x - m.x_3));
  }
  return 0.0;
}

double slope_in(const WavefunctionModel& m, Region r, double x) {
  switch (r) {
    case Region::OuterLeft:
      return m.kappa_m4 * m.amp_m4 * std::exp(m.kappa_m4 * (x - m.x_m3));
    case Region::WellLeft:
      return -m.k_m2 * m.amp_m2 * std::sin(m.k_m2 * (x - m.extremum_left));
    case Region::Barrier:
      return barrier_slope(m.parity, m.log_amp_0, m.kappa_0, m.kappa_0 * (x - m.barrier_node));
    case Region::WellRight:
      return -m.k_2 * m.amp_2 * std::sin(m.k_2 * (x - m.extremum_right));
    case Region::OuterRight:
      return -m.kappa_4 * m.amp_4 * std::exp(-m.kappa_4 * (x - m.x_3));
  }
  return 0.0;
}

// A^2 sinh(2u) / (4 kappa) with A = exp(log_amp), without overflow.
double barrier_sinh_term(double log_amp, double kappa, double u) {
  return sign_of(u) * std::exp(2.0 * log_amp + log_abs_sinh(2.0 * u)) / (4.0 * kappa);
}

double well_integral(double amp, double k, double center, double a, double b) {
  return 0.5 * amp * amp *
         ((b - a) + (std::sin(2.0 * k * (b - center)) - std::sin(2.0 * k * (a - center))) / (2.0 * k));
}

// Integral of psi^2 over [a, b] intersected with region r.
double region_integral(const WavefunctionModel& m, Region r, double a, double b) {
  double lo = -kInf;
  double hi = kInf;
  switch (r) {
    case Region::OuterLeft: hi = m.x_m3; break;
    case Region::WellLeft: lo = m.x_m3; hi = m.x_m1; break;
    case Region::Barrier: lo = m.x_m1; hi = m.x_1; break;
    case Region::WellRight: lo = m.x_1; hi = m.x_3; break;
    case Region::OuterRight: lo = m.x_3; break;
  }
  a = std::max(a, lo);
  b = std::min(b, hi);
  if (!(b > a)) return 0.0;

  switch (r) {
    case Region::OuterLeft: {
      const double fa = a == -kInf ? 0.0 : std::exp(2.0 * m.kappa_m4 * (a - m.x_m3));
      return m.amp_m4 * m.amp_m4 * (std::exp(2.0 * m.kappa_m4 * (b - m.x_m3)) - fa) /
             (2.0 * m.kappa_m4);
    }
    case Region::WellLeft:
      return well_integral(m.amp_m2, m.k_m2, m.extremum_left, a, b);
    case Region::Barrier: {
      const double ua = m.kappa_0 * (a - m.barrier_node);
      const double ub = m.kappa_0 * (b - m.barrier_node);
      const double hyper = barrier_sinh_term(m.log_amp_0, m.kappa_0, ub) -
                           barrier_sinh_term(m.log_amp_0, m.kappa_0, ua);
      const double linear = 0.5 * std::exp(2.0 * m.log_amp_0) * (b - a);
      return m.parity == Parity::Ground ? hyper + linear : hyper - linear;
    }
    case Region::WellRight:
      return well_integral(m.amp_2, m.k_2, m.extremum_right, a, b);
    case Region::OuterRight: {
      const double fb = b == kInf ? 0.0 : std::exp(-2.0 * m.kappa_4 * (b - m.x_3));
      return m.amp_4 * m.amp_4 * (std::exp(-2.0 * m.kappa_4 * (a - m.x_3)) - fb) /
             (2.0 * m.kappa_4);
    }
  }
  return 0.0;
}

double integral(const WavefunctionModel& m, double a, double b) {
  double sum = 0.0;
  for (Region r : {Region::OuterLeft, Region::WellLeft, Region::Barrier, Region::WellRight,
                   Region::OuterRight}) {
    sum += region_integral(m, r, a, b);
  }
  return sum;
}

// True if some x in [a, b] has k (x - center) = pi/2 + n pi.
bool hits_quarter_wave(double k, double center, double a, double b) {
  const double lo = k * (a - center) / kPi - 0.5;
  const double hi = k * (b - center) / kPi - 0.5;
  return std::floor(hi) >= std::ceil(lo);
}

WavefunctionModel assemble_at(const WellSpec& spec, Parity parity, double energy, double r_left) {
  check_band(spec, energy);
  WavefunctionModel m;
  m.parity = parity;
  m.energy = energy;
  m.x_m3 = spec.x_m3;
  m.x_m1 = spec.x_m1();
  m.x_1 = spec.x_1();
  m.x_3 = spec.x_3();
  m.kappa_m4 = decay(spec, spec.v_m4, energy);
  m.kappa_0 = decay(spec, spec.v_0, energy);
  m.kappa_4 = decay(spec, spec.v_4, energy);
  m.k_m2 = decay(spec, energy, spec.v_m2);
  m.k_2 = decay(spec, energy, spec.v_2);

  m.barrier_node = m.x_m1 + r_left / m.kappa_0;
  const double u_left = -r_left;
  const double u_right = m.kappa_0 * (m.x_1 - m.barrier_node);
  // Provisional scale keeps the larger barrier edge near unity.
  m.log_amp_0 = -std::max(std::abs(u_left), std::abs(u_right));

  const double lobe_sign = parity == Parity::Ground ? 1.0 : -1.0;
  const Lobe left = lobe_from_edge(m.x_m1, barrier_value(parity, m.log_amp_0, u_left),
                                   barrier_slope(parity, m.log_amp_0, m.kappa_0, u_left), m.k_m2,
                                   lobe_sign);
  const Lobe right = lobe_from_edge(m.x_1, barrier_value(parity, m.log_amp_0, u_right),
                                    barrier_slope(parity, m.log_amp_0, m.kappa_0, u_right), m.k_2,
                                    1.0);
  m.amp_m2 = left.amp;
  m.extremum_left = left.center;
  m.amp_2 = right.amp;
  m.extremum_right = right.center;
  m.amp_m4 = m.amp_m2 * std::cos(m.k_m2 * (m.x_m3 - m.extremum_left));
  m.amp_4 = m.amp_2 * std::cos(m.k_2 * (m.x_3 - m.extremum_right));

  const double n2 = integral(m, -kInf, kInf);
  const double scale = 1.0 / std::sqrt(n2);
  m.amp_m4 *= scale;
  m.amp_m2 *= scale;
  m.amp_2 *= scale;
  m.amp_4 *= scale;
  m.log_amp_0 -= 0.5 * std::log(n2);
  m.amp_0 = std::exp(m.log_amp_0);

  m.phase_m3 = 0.5 * kPi - m.k_m2 * (m.extremum_left - m.x_m3);
  m.phase_m1 = 0.5 * kPi - m.k_m2 * (m.x_m1 - m.extremum_left);
  m.phase_1 = 0.5 * kPi - m.k_2 * (m.extremum_right - m.x_1);
  m.phase_3 = 0.5 * kPi - m.k_2 * (m.x_3 - m.extremum_right);
  return m;
}

void check_residuals(const WavefunctionModel& m) {
  const auto res = continuity_residuals(m);
  if (res.max() > kMaxMatchingResidual) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "assembled " << to_string(m.parity) << " state fails to match at the walls (residual "
        << res.max() << ")";
    throw MatchingResidualTooLarge(msg.str());
  }
}

// Barrier exponent r on the side whose wall log-derivative is k tan(theta)
// (measured into the barrier). Returns NaN when no r matches.
double barrier_exponent(Parity parity, double kappa_0, double k, double theta) {
  const double q = k * std::sin(theta) / (kappa_0 * std::cos(theta));
  if (parity == Parity::Ground) {
    return std::abs(q) < 1.0 ? std::atanh(q) : std::numeric_limits<double>::quiet_NaN();
  }
  return std::abs(q) > 1.0 ? std::atanh(1.0 / q) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double ContinuityResiduals::max() const {
  double out = 0.0;
  for (double v : value) out = std::max(out, v);
  for (double v : slope) out = std::max(out, v);
  return out;
}

WavefunctionModel assemble(const WellSpec& spec, const ReducedParams& reduced,
                           const CoupledSolution& solution) {
  (void)reduced;
  auto model = assemble_at(spec, solution.parity, solution.energy, solution.r_left);
  check_residuals(model);
  return model;
}

WavefunctionModel assemble_exact(const WellSpec& spec, Parity parity, double energy) {
  check_band(spec, energy);
  const double kappa_m4 = decay(spec, spec.v_m4, energy);
  const double kappa_0 = decay(spec, spec.v_0, energy);
  const double kappa_4 = decay(spec, spec.v_4, energy);
  const double k_m2 = decay(spec, energy, spec.v_m2);
  const double k_2 = decay(spec, energy, spec.v_2);
  const double r_total = kappa_0 * spec.w_0;

  // Decaying tail fixes the phase at the outer wall; carry it across the well.
  const double theta_left = k_m2 * spec.w_m2 - std::atan(kappa_m4 / k_m2);
  const double theta_right = k_2 * spec.w_2 - std::atan(kappa_4 / k_2);
  const double r_from_left = barrier_exponent(parity, kappa_0, k_m2, theta_left);
  const double r_from_right = barrier_exponent(parity, kappa_0, k_2, theta_right);

  double r_left = std::numeric_limits<double>::quiet_NaN();
  if (std::isfinite(r_from_left) &&
      (!std::isfinite(r_from_right) || std::abs(r_from_left) <= std::abs(r_from_right))) {
    r_left = r_from_left;
  } else if (std::isfinite(r_from_right)) {
    r_left = r_total - r_from_right;
  }
  if (!std::isfinite(r_left)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no " << to_string(parity) << " barrier profile matches both wells at E = " << energy;
    throw DomainError(msg.str());
  }
  auto model = assemble_at(spec, parity, energy, r_left);
  check_residuals(model);
  return model;
}

double evaluate(const WavefunctionModel& model, double x) {
  return value_in(model, region_of(model, x), x);
}

double derivative(const WavefunctionModel& model, double x) {
  return slope_in(model, region_of(model, x), x);
}

double max_abs_value(const WavefunctionModel& m) {
  double out = 0.0;
  for (double b : {m.x_m3, m.x_m1, m.x_1, m.x_3}) {
    out = std::max(out, std::abs(evaluate(m, b)));
  }
  if (m.extremum_left >= m.x_m3 && m.extremum_left <= m.x_m1) out = std::max(out, std::abs(m.amp_m2));
  if (m.extremum_right >= m.x_1 && m.extremum_right <= m.x_3) out = std::max(out, std::abs(m.amp_2));
  return out;
}

double max_abs_slope(const WavefunctionModel& m) {
  double out = 0.0;
  const std::array<std::pair<Region, Region>, 4> sides{{{Region::OuterLeft, Region::WellLeft},
                                                        {Region::WellLeft, Region::Barrier},
                                                        {Region::Barrier, Region::WellRight},
                                                        {Region::WellRight, Region::OuterRight}}};
  const std::array<double, 4> walls{m.x_m3, m.x_m1, m.x_1, m.x_3};
  for (std::size_t i = 0; i < 4; ++i) {
    out = std::max(out, std::abs(slope_in(m, sides[i].first, walls[i])));
    out = std::max(out, std::abs(slope_in(m, sides[i].second, walls[i])));
  }
  if (hits_quarter_wave(m.k_m2, m.extremum_left, m.x_m3, m.x_m1)) {
    out = std::max(out, m.k_m2 * std::abs(m.amp_m2));
  }
  if (hits_quarter_wave(m.k_2, m.extremum_right, m.x_1, m.x_3)) {
    out = std::max(out, m.k_2 * std::abs(m.amp_2));
  }
  return out;
}

ContinuityResiduals continuity_residuals(const WavefunctionModel& m) {
  const double vmax = max_abs_value(m);
  const double smax = max_abs_slope(m);
  const std::array<Region, 5> order{Region::OuterLeft, Region::WellLeft, Region::Barrier,
                                    Region::WellRight, Region::OuterRight};
  const std::array<double, 4> walls{m.x_m3, m.x_m1, m.x_1, m.x_3};
  ContinuityResiduals out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.value[i] =
        std::abs(value_in(m, order[i], walls[i]) - value_in(m, order[i + 1], walls[i])) / vmax;
    out.slope[i] =
        std::abs(slope_in(m, order[i], walls[i]) - slope_in(m, order[i + 1], walls[i])) / smax;
  }
  return out;
}

double norm_squared(const WavefunctionModel& model) { return integral(model, -kInf, kInf); }

std::pair<double, double> probabilities(const WavefunctionModel& model) {
  const double left = integral(model, -kInf, model.barrier_node);
  const double right = integral(model, model.barrier_node, kInf);
  const double total = left + right;
  return {left / total, right / total};
}

std::pair<double, double> closed_form_probabilities(const WavefunctionModel& model,
                                                    const WellSpec& spec,
                                                    const IsolatedWellSolution& left,
                                                    const IsolatedWellSolution& right) {
  return {0.5 * model.amp_m2 * model.amp_m2 * spec.w_m2 / (left.u_cap * left.y_cap),
          0.5 * model.amp_2 * model.amp_2 * spec.w_2 / (right.u_cap * right.y_cap)};
}

WellState isolated_state(const WellSpec& spec, const ReducedParams& reduced, Side side,
                         const IsolatedWellSolution& well) {
  const WellView view = well_view(spec, reduced, side);
  WellState s;
  s.side = side;
  s.energy = isolated_energy(view, well);
  const double y = well.y_cap;
  s.k = kPi * y / view.width;
  s.kappa_outer = kPi / view.width * std::sqrt(1.0 / (view.alpha_outer * view.alpha_outer) - y * y);
  s.kappa_inner = kPi / view.width * std::sqrt(1.0 / (view.alpha_inner * view.alpha_inner) - y * y);

  // Outer wall sits a quarter wave minus Phi_outer from the crest.
  const double to_outer = (0.5 * kPi - well.phi_outer) / s.k;
  if (side == Side::Left) {
    s.x_outer = spec.x_m3;
    s.x_inner = spec.x_m1();
    s.extremum = s.x_outer + to_outer;
  } else {
    s.x_outer = spec.x_3();
    s.x_inner = spec.x_1();
    s.extremum = s.x_outer - to_outer;
  }
  const double n2 = well.s_outer * well.s_outer / (2.0 * s.kappa_outer) +
                    well.s_inner * well.s_inner / (2.0 * s.kappa_inner) +
                    0.5 * (view.width + (std::sin(2.0 * well.phi_inner) +
                                         std::sin(2.0 * well.phi_outer)) /
                                            (2.0 * s.k));
  s.amp_well = 1.0 / std::sqrt(n2);
  s.amp_outer = s.amp_well * well.s_outer;
  s.amp_inner = s.amp_well * well.s_inner;
  return s;
}

double evaluate(const WellState& s, double x) {
  if (s.side == Side::Left) {
    if (x < s.x_outer) return s.amp_outer * std::exp(s.kappa_outer * (x - s.x_outer));
    if (x < s.x_inner) return s.amp_well * std::cos(s.k * (x - s.extremum));
    return s.amp_inner * std::exp(-s.kappa_inner * (x - s.x_inner));
  }
  if (x < s.x_inner) return s.amp_inner * std::exp(s.kappa_inner * (x - s.x_inner));
  if (x < s.x_outer) return s.amp_well * std::cos(s.k * (x - s.extremum));
  return s.amp_outer * std::exp(-s.kappa_outer * (x - s.x_outer));
}

std::vector<double> superpose(const WellState& left_state, const WellState& right_state,
                              double prob_left, double prob_right, Parity parity,
                              const std::vector<double>& xs) {
  const double wavelength = 2.0 * kPi / std::max(left_state.k, right_state.k);
  const double max_step = wavelength / 16.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs(xs[i] - xs[i - 1]) > max_step) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "grid step " << std::abs(xs[i] - xs[i - 1]) << " exceeds " << max_step
          << " (16 samples per shortest wavelength)";
      throw GridTooCoarse(msg.str());
    }
  }
  const double root_l = std::sqrt(prob_left);
  const double root_r = std::sqrt(prob_right);
  const double c_left = parity == Parity::Ground ? root_l : -root_r;
  const double c_right = parity == Parity::Ground ? root_r : root_l;
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    out.push_back(c_left * evaluate(left_state, x) + c_right * evaluate(right_state, x));
  }
  return out;
}

std::vector<SampleRow> sample(const WavefunctionModel& model, double x_min, double x_max,
                              int n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max) || n_points < 2) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "bad sample range [" << x_min << ", " << x_max << "] with " << n_points
        << " points (need x_min < x_max and at least 2 points)";
    throw BadRange(msg.str());
  }
  std::vector<SampleRow> rows;
  rows.reserve(static_cast<std::size_t>(n_points));
  const double span = x_max - x_min;
  for (int i = 0; i < n_points; ++i) {
    const double x = i == n_points - 1 ? x_max : x_min + span * i / (n_points - 1);
    rows.push_back({x, evaluate(model, x), derivative(model, x)});
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << "x,psi,dpsi\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.x, r.psi, r.dpsi);
    out << buf;
  }
}

}  // namespace dsw
