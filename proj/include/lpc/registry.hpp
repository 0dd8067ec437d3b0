#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpc/code_io.hpp"
#include "lpc/code_model.hpp"

namespace lpc {

/// Builds the code named by {"construction": name, "params": {...}}. Throws FormatError
/// for unknown names or missing parameters and ParameterError for invalid values.
LpcCode build_from_descriptor(const nlohmann::json& descriptor);

/// Resolver that knows every construction in the library.
GeneratorResolver default_resolver();

/// load_code with every construction available.
LpcCode load_any_code(const std::filesystem::path& path);
LpcCode code_from_any_json(const nlohmann::json& j);

std::vector<std::string> construction_names();

}  // namespace lpc
