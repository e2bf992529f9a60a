#include "dsw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dsw/errors.hpp"
#include "dsw/pipeline.hpp"
#include "dsw/wavefunc.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;

double band_lo(const WellSpec& s) { return std::max(s.v_m2, s.v_2); }
double band_hi(const WellSpec& s) { return std::min({s.v_m4, s.v_0, s.v_4}); }

// (psi, psi') carried left to right, rescaled freely; zeros counted en route.
struct Trace {
  double psi;
  double dpsi;
  int zeros = 0;
};

void cross_well(Trace& t, double k, double width) {
  const double phase0 = std::atan2(-t.dpsi / k, t.psi);
  const double phase1 = phase0 + k * width;
  t.zeros += static_cast<int>(std::floor((phase1 - 0.5 * kPi) / kPi) -
                              std::floor((phase0 - 0.5 * kPi) / kPi));
  const double c = std::cos(k * width);
  const double s = std::sin(k * width);
  const double psi = t.psi * c + t.dpsi / k * s;
  const double dpsi = -t.psi * k * s + t.dpsi * c;
  t.psi = psi;
  t.dpsi = dpsi;
}

// Growing/decaying split with the exp(kappa w) growth divided out.
void cross_barrier(Trace& t, double kappa, double width) {
  const double grow = 0.5 * (t.psi + t.dpsi / kappa);
  const double fall = 0.5 * (t.psi - t.dpsi / kappa);
  if (grow != 0.0) {
    const double ratio = -fall / grow;
    if (ratio > 1.0 && std::log(ratio) <= 2.0 * kappa * width) ++t.zeros;
  }
  const double damp = std::exp(-2.0 * kappa * width);
  double psi = grow + fall * damp;
  double dpsi = kappa * (grow - fall * damp);
  const double scale = std::max(std::abs(psi), std::abs(dpsi / kappa));
  if (scale > 0.0) {
    psi /= scale;
    dpsi /= scale;
  }
  t.psi = psi;
  t.dpsi = dpsi;
}

double wave(const WellSpec& s, double energy, double v) {
  return std::sqrt(2.0 * s.mass * std::abs(energy - v)) / s.hbar;
}

}  // namespace

ShootResult shoot(const WellSpec& spec, double energy) {
  if (!(energy > band_lo(spec) && energy < band_hi(spec))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy " << energy << " outside the bound-state band (" << band_lo(spec) << ", "
        << band_hi(spec) << ")";
    throw EnergyOutOfBand(msg.str());
  }
  const double kappa_m4 = wave(spec, energy, spec.v_m4);
  const double kappa_0 = wave(spec, energy, spec.v_0);
  const double kappa_4 = wave(spec, energy, spec.v_4);

  Trace t{1.0, kappa_m4};
  cross_well(t, wave(spec, energy, spec.v_m2), spec.w_m2);
  cross_barrier(t, kappa_0, spec.w_0);
  cross_well(t, wave(spec, energy, spec.v_2), spec.w_2);

  ShootResult out;
  out.energy = energy;
  out.node_count = t.zeros;
  const double slope = t.dpsi / kappa_4;
  out.mismatch = (slope + t.psi) / std::hypot(t.psi, slope);
  const double grow = 0.5 * (t.psi + slope);
  const double fall = 0.5 * (t.psi - slope);
  const bool tail_zero = grow != 0.0 && -fall / grow > 1.0;
  out.sturm_count = t.zeros + (tail_zero ? 1 : 0);
  return out;
}

double find_level(const WellSpec& spec, Parity which, double tol_rel) {
  validate(spec);
  const int target = which == Parity::Ground ? 1 : 2;
  const double lo_band = band_lo(spec);
  const double hi_band = band_hi(spec);
  const double span = hi_band - lo_band;
  auto count = [&](double e) { return shoot(spec, e).sturm_count; };

  double lo = std::max(lo_band + 1e-14 * span,
                       std::nextafter(lo_band, std::numeric_limits<double>::infinity()));
  if (count(lo) >= target) {
    throw LevelNotFound(std::string("the ") + to_string(which) +
                        " level lies too close to the bottom of the band to bracket");
  }
  double hi = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i <= kScanPoints; ++i) {
    const double e = lo_band + span * i / (kScanPoints + 1);
    if (count(e) >= target) {
      hi = e;
      break;
    }
    lo = e;
  }
  if (std::isnan(hi)) {
    throw LevelNotFound(std::string("no ") + to_string(which) +
                        " level below min(V_m4, V_0, V_4); the wells are too shallow or narrow");
  }

  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol_rel * std::abs(mid) || mid <= lo || mid >= hi) break;
    if (count(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const int count_hi = count(hi);
  const int count_lo = count(lo);
  if (count_hi > target || count_lo < target - 1) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "ground and excited levels are closer than tol_rel = " << tol_rel
        << " can separate; tighten the tolerance (a splitting of relative size s needs tol < s)";
    throw DegeneracyUnresolved(msg.str());
  }
  return 0.5 * (lo + hi);
}

OracleComparison compare(const WellSpec& spec, double tol_rel) {
  const Approximation approx = approximate(spec);
  OracleComparison c;
  c.tol_rel = tol_rel;
  c.r0 = approx.ground.r0;
  c.e0_exact = find_level(spec, Parity::Ground, tol_rel);
  c.e1_exact = find_level(spec, Parity::Excited, tol_rel);
  c.e0_approx = approx.split.e0;
  c.e1_approx = approx.split.e1;
  const double floor = std::min(spec.v_m2, spec.v_2);
  c.e0_rel_error = std::abs(c.e0_approx - c.e0_exact) / (c.e0_exact - floor);
  c.e1_rel_error = std::abs(c.e1_approx - c.e1_exact) / (c.e1_exact - floor);
  c.delta_e_exact = 0.5 * (c.e1_exact - c.e0_exact);
  c.delta_e_approx = approx.split.delta_e;
  c.delta_e_rel_error = std::abs(c.delta_e_approx - c.delta_e_exact) / c.delta_e_exact;

  c.ratio_approx = approx.ground.prob_right / approx.ground.prob_left;
  try {
    const auto [left, right] = probabilities(assemble_exact(spec, Parity::Ground, c.e0_exact));
    c.ratio_exact = right / left;
    c.ratio_rel_error = std::abs(c.ratio_approx - c.ratio_exact) / c.ratio_exact;
  } catch (const MatchingResidualTooLarge&) {
    c.ratio_exact = std::numeric_limits<double>::quiet_NaN();
    c.ratio_rel_error = std::numeric_limits<double>::quiet_NaN();
  }
  return c;
}

}  // namespace dsw
