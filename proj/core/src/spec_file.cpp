#include "dsw/spec_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string_view>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

struct KeyBinding {
  std::string_view name;
  double WellSpec::*field;
  bool required;
};

constexpr std::array<KeyBinding, 11> kKeys{{
    {"hbar", &WellSpec::hbar, true},
    {"mass", &WellSpec::mass, true},
    {"v_m4", &WellSpec::v_m4, true},
    {"v_m2", &WellSpec::v_m2, true},
    {"v_0", &WellSpec::v_0, true},
    {"v_2", &WellSpec::v_2, true},
    {"v_4", &WellSpec::v_4, true},
    {"w_m2", &WellSpec::w_m2, true},
    {"w_0", &WellSpec::w_0, true},
    {"w_2", &WellSpec::w_2, true},
    {"x_m3", &WellSpec::x_m3, false},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line_no) {
  // Decimal with optional sign, fraction and exponent. No hex, inf or nan.
  const bool looks_decimal =
      !text.empty() &&
      text.find_first_not_of("+-0123456789.eE") == std::string_view::npos;
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (looks_decimal && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
  if (!looks_decimal || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw SpecParseError("line " + std::to_string(line_no) + ": not a decimal number: '" +
                         std::string(text) + "'");
  }
  return value;
}

}  // namespace

WellSpec parse_spec(std::istream& in) {
  WellSpec spec;
  spec.x_m3 = 0.0;
  std::map<std::string_view, bool> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SpecParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    const KeyBinding* binding = nullptr;
    for (const auto& k : kKeys) {
      if (k.name == key) binding = &k;
    }
    if (binding == nullptr) {
      throw SpecParseError("line " + std::to_string(line_no) + ": unknown key '" +
                           std::string(key) + "'");
    }
    if (seen[binding->name]) {
      throw SpecParseError("line " + std::to_string(line_no) + ": duplicate key '" +
                           std::string(key) + "'");
    }
    seen[binding->name] = true;
    spec.*(binding->field) = parse_number(value, line_no);
  }
  for (const auto& k : kKeys) {
    if (k.required && !seen[k.name]) {
      throw SpecParseError("missing required key '" + std::string(k.name) + "'");
    }
  }
  validate(spec);
  return spec;
}

WellSpec parse_spec_string(const std::string& text) {
  std::istringstream in(text);
  return parse_spec(in);
}

WellSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open spec file '" + path.string() + "'");
  return parse_spec(in);
}

std::string format_spec(const WellSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& k : kKeys) {
    out << k.name << " = " << spec.*(k.field) << '\n';
  }
  return out.str();
}

}  // namespace dsw
