#pragma once

#include "dsw/isolated.hpp"
#include "dsw/params.hpp"
#include "dsw/tunneling.hpp"

namespace dsw {

struct PipelineOptions {
  NewtonOptions newton{};
  FixedPointOptions fixed_point{};
};

/// Everything the closed-form approximation produces for one spec.
struct Approximation {
  WellSpec spec;
  ReducedParams reduced;
  IsolatedWellSolution left;
  IsolatedWellSolution right;
  BarrierCoupling coupling;
  FixedPointResult ground_fixed_point;
  FixedPointResult excited_fixed_point;
  CoupledSolution ground;
  CoupledSolution excited;
  SplittingResult split;

  double isolated_energy_left() const;
  double isolated_energy_right() const;
};

/// reduce -> isolated wells -> both fixed points -> corrected energies -> splitting.
Approximation approximate(const WellSpec& spec, const PipelineOptions& options = {});

}  // namespace dsw
