#pragma once

#include <string>
#include <vector>

namespace dsw {

/// One reference number of the built-in example and how closely it must be met.
struct GoldenCheck {
  enum class Kind {
    Relative,        // |value - expected| <= tolerance |expected|
    Absolute,        // |value - expected| <= tolerance
    PrintedDigits,   // value rounded to `tolerance` significant digits equals expected
  };
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Kind kind = Kind::Relative;
  bool passed = false;
};

/// Runs the example spec (hbar = 1, m = 2, unit steps, w = 2pi/3, 10pi/3, 2pi/3)
/// through every stage, including the v = 0, 1, 2 and dV = 1e-6 E_bar perturbations,
/// and checks each reference quantity.
std::vector<GoldenCheck> worked_example_checks();

/// Newton iterates S_(n) = alpha Y_(n) of the example well, starting from the series estimate.
std::vector<double> newton_trace(int steps);

}  // namespace dsw
