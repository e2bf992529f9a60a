#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dsw/params.hpp"

namespace dsw {

// Spec files are flat `key = value` text with `#` comments. Recognised keys:
// hbar, mass, v_m4, v_m2, v_0, v_2, v_4, w_m2, w_0, w_2, x_m3 (x_m3 optional,
// default 0). Unknown or repeated keys are rejected.

/// Parses and validates. Throws SpecParseError on syntax, InvalidSpec on constraints.
WellSpec parse_spec(std::istream& in);
WellSpec parse_spec_string(const std::string& text);
WellSpec load_spec(const std::filesystem::path& path);

/// Writes every key with 17 significant digits; parse_spec(format_spec(s)) == s.
std::string format_spec(const WellSpec& spec);

}  // namespace dsw
