#include "lpc/registry.hpp"

#include "lpc/cooling_spread_lpc.hpp"
#include "lpc/cpecc_rs.hpp"
#include "lpc/domination_map.hpp"
#include "lpc/errors.hpp"
#include "lpc/mds_cpc.hpp"
#include "lpc/recursive_cpc.hpp"

namespace lpc {

namespace {

std::uint32_t param(const nlohmann::json& params, const char* key) {
    if (!params.contains(key) || !is_json_count(params.at(key)))
        throw FormatError(std::string("construction parameter '") + key + "' must be a non-negative integer");
    return params.at(key).get<std::uint32_t>();
}

MatrixQ matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) throw FormatError("generator must be a nonempty array of rows");
    const std::size_t cols = rows.at(0).size();
    std::vector<Elem> data;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != cols) throw FormatError("generator rows must have equal length");
        for (const auto& v : row) {
            if (!is_json_count(v)) throw FormatError("generator entries must be non-negative integers");
            data.push_back(v.get<Elem>());
        }
    }
    return MatrixQ(rows.size(), cols, std::move(data));
}

}  // namespace

std::vector<std::string> construction_names() {
    return {"mds_cpc",     "linear_cpc",     "cpecc",      "recursive_cpc", "recursive_trivial", "lpc_union",
            "trivial",     "spread_cooling", "spread_231", "construction4", "domination_lpc"};
}

LpcCode build_from_descriptor(const nlohmann::json& d) {
    if (!d.is_object() || !d.contains("construction") || !d.at("construction").is_string())
        throw FormatError("generator descriptor needs a 'construction' name");
    const std::string name = d.at("construction").get<std::string>();
    const nlohmann::json params = d.value("params", nlohmann::json::object());
    if (!params.is_object()) throw FormatError("generator 'params' must be an object");

    if (name == "mds_cpc") return LpcCode::from_generator(MdsCpcCode::build_rs(param(params, "q"), param(params, "w")));
    if (name == "linear_cpc") {
        if (!params.contains("generator")) throw FormatError("linear_cpc needs a 'generator' matrix");
        return LpcCode::from_generator(
            MdsCpcCode::build_linear(param(params, "q"), matrix_from_json(params.at("generator")), param(params, "w")));
    }
    if (name == "cpecc")
        return LpcCode::from_generator(CpeccCode::build(param(params, "q"), param(params, "w"), param(params, "e")));
    if (name == "recursive_cpc") {
        if (!params.contains("inner")) throw FormatError("recursive_cpc needs an 'inner' code object");
        return LpcCode::from_generator(
            RecursiveCpcCode::build(param(params, "q"), code_from_any_json(params.at("inner"))));
    }
    if (name == "recursive_trivial")
        return LpcCode::from_generator(build_recursive_trivial(param(params, "n"), param(params, "t"),
                                                               param(params, "w"), param(params, "q")));
    if (name == "lpc_union")
        return LpcCode::from_generator(
            build_lpc_union(param(params, "n"), param(params, "t"), param(params, "w"), param(params, "q")));
    if (name == "trivial") return build_trivial_inner(param(params, "n"), param(params, "w"), param(params, "t"));
    if (name == "spread_cooling")
        return LpcCode::from_generator(SpreadCoolingCode::build(param(params, "n"), param(params, "t")));
    if (name == "spread_231") return LpcCode::from_generator(build_spread_231(param(params, "w"), param(params, "t")));
    if (name == "construction4")
        return LpcCode::from_generator(build_construction4(param(params, "w"), param(params, "t"),
                                                           param(params, "alpha"), param(params, "beta")));
    if (name == "domination_lpc") {
        if (!params.contains("cooling") || !params.contains("mapping"))
            throw FormatError("domination_lpc needs 'cooling' and 'mapping' objects");
        return LpcCode::from_generator(DominatedLpcCode::build(code_from_any_json(params.at("cooling")),
                                                               DominationMapping::from_json(params.at("mapping"))));
    }
    throw FormatError("unknown construction '" + name + "'");
}

GeneratorResolver default_resolver() { return [](const nlohmann::json& d) { return build_from_descriptor(d); }; }

LpcCode load_any_code(const std::filesystem::path& path) { return load_code(path, default_resolver()); }

LpcCode code_from_any_json(const nlohmann::json& j) { return code_from_json(j, default_resolver()); }

}  // namespace lpc
