#pragma once

#include <filesystem>
#include <cstdint>
#include <functional>

#include <json.hpp>

#include "lpc/code_model.hpp"

namespace lpc {

/// Builds a generator-backed code from {"construction": ..., "params": ...}.
using GeneratorResolver = std::function<LpcCode(const nlohmann::json& descriptor)>;

/// Code file object: {version: 1, kind, n, t, w, [e], codesets | generator}.
nlohmann::json code_to_json(const LpcCode& code);

/// Throws FormatError naming the problem (schema or violated parameter invariant).
/// Generator entries need a resolver.
LpcCode code_from_json(const nlohmann::json& j, const GeneratorResolver& resolver = {});

/// Integer in [0, 2^32), whether stored signed or unsigned.
inline bool is_json_count(const nlohmann::json& v) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>() <= UINT32_MAX;
    return v.is_number_integer() && v.get<std::int64_t>() >= 0 && v.get<std::int64_t>() <= UINT32_MAX;
}

void save_code(const LpcCode& code, const std::filesystem::path& path);
LpcCode load_code(const std::filesystem::path& path, const GeneratorResolver& resolver = {});

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace lpc
