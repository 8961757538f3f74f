#pragma once

#include <filesystem>
#include <string_view>

#include "envbounds/errors.hpp"
#include "envbounds/potential.hpp"

namespace envbounds::workbench {

/// Malformed potential-spec document. The message names the line or field.
class SpecParseError : public Error {
public:
    using Error::Error;
};

/// Parses {"d": int, "terms": [{"a": num, "q": num}, ...],
///         "extensions": {"allow_coulomb": bool, "allow_fractional": bool}}.
PotentialSpec parse_potential_spec(std::string_view text);

PotentialSpec load_potential_spec(const std::filesystem::path& path);

}  // namespace envbounds::workbench
