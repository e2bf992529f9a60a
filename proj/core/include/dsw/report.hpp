#pragma once

#include <iosfwd>

#include <json.hpp>

#include "dsw/isolated.hpp"
#include "dsw/oracle.hpp"
#include "dsw/params.hpp"
#include "dsw/perturb.hpp"
#include "dsw/pipeline.hpp"
#include "dsw/tunneling.hpp"

namespace dsw {

using Json = nlohmann::ordered_json;

Json to_json(const WellSpec& spec);
Json to_json(const ReducedParams& reduced);
Json to_json(const IsolatedWellSolution& well);
Json to_json(const CoupledSolution& solution, const FixedPointResult& fixed_point);
Json to_json(const SplittingResult& split);
Json to_json(const OracleComparison& comparison);

/// spec, reduced, isolated, ground, excited, splitting, in that order.
Json solve_report(const Approximation& approx);

/// Block appended under "perturbation" by the perturb subcommand.
Json perturbation_block(const SymmetricBase& base, const PerturbedLevels& levels);

/// Report text as written to stdout: two-space indent, trailing newline.
/// Doubles keep 17 significant digits so the report round-trips.
std::string dump(const Json& report);

/// Flattened "section.key  value" lines with 12 significant digits.
void render_table(std::ostream& out, const Json& report);

}  // namespace dsw
