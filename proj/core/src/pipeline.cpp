#include "dsw/pipeline.hpp"

namespace dsw {

double Approximation::isolated_energy_left() const {
  return isolated_energy(well_view(spec, reduced, Side::Left), left);
}

double Approximation::isolated_energy_right() const {
  return isolated_energy(well_view(spec, reduced, Side::Right), right);
}

Approximation approximate(const WellSpec& spec, const PipelineOptions& options) {
  Approximation out;
  out.spec = spec;
  out.reduced = reduce(spec);
  out.left = solve_well(well_view(spec, out.reduced, Side::Left), options.newton);
  out.right = solve_well(well_view(spec, out.reduced, Side::Right), options.newton);
  out.coupling = coupling(out.left, out.right);

  const auto& fp = options.fixed_point;
  out.ground_fixed_point = solve_r0(Parity::Ground, out.left.a_coef, out.right.a_coef,
                                    out.coupling.p_cap, fp.tol, fp.max_iter);
  out.excited_fixed_point = solve_r0(Parity::Excited, out.left.a_coef, out.right.a_coef,
                                     out.coupling.p_cap, fp.tol, fp.max_iter);
  out.ground = correct_energy(Parity::Ground, out.left, out.right, out.ground_fixed_point.r0,
                              out.ground_fixed_point.p_small, out.reduced, spec);
  out.excited = correct_energy(Parity::Excited, out.left, out.right, out.excited_fixed_point.r0,
                               out.excited_fixed_point.p_small, out.reduced, spec);
  out.split = splitting(out.ground, out.excited);
  return out;
}

}  // namespace dsw
