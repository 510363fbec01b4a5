#pragma once

#include <string>

#include "lanesim/solver.hpp"

namespace lanesim {

/// Parses a scenario file into a fully resolved RunConfig and validates it.
/// The format is flat key/value text in [sections]; see docs/config.md for
/// the schema. Unknown keys, missing required keys and malformed values
/// raise SchemaError with the offending key path; inconsistent combinations
/// (e.g. a symmetric kernel requested for the flux) raise SemanticError.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

/// Renders the resolved configuration back in the config-file syntax, with
/// all defaults applied; written alongside run outputs.
std::string render_config(const RunConfig& config);

}  // namespace lanesim
