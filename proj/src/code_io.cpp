#include "lpc/code_io.hpp"

#include <fstream>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

std::uint32_t get_u32(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !is_json_count(j.at(key)))
        throw FormatError(std::string("code file: field '") + key + "' must be a non-negative integer");
    return j.at(key).get<std::uint32_t>();
}

}  // namespace

nlohmann::json code_to_json(const LpcCode& code) {
    const CodeParams& p = code.params();
    nlohmann::json j{{"version", 1}, {"kind", to_string(p.kind)}, {"n", p.n}, {"t", p.t}, {"w", p.w}};
    if (p.kind == CodeKind::cpecc) j["e"] = p.e;
    if (code.is_explicit()) {
        nlohmann::json sets = nlohmann::json::array();
        for (const auto& cs : code.codesets()) {
            nlohmann::json words = nlohmann::json::array();
            for (const auto& word : cs) words.push_back(word.support());
            sets.push_back(std::move(words));
        }
        j["codesets"] = std::move(sets);
    } else {
        j["generator"] = code.generator()->descriptor();
    }
    return j;
}

LpcCode code_from_json(const nlohmann::json& j, const GeneratorResolver& resolver) {
    if (!j.is_object()) throw FormatError("code file: top level must be an object");
    if (!j.contains("version") || j.at("version") != 1) throw FormatError("code file: unsupported version");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw FormatError("code file: missing kind");
    CodeParams p;
    p.kind = parse_code_kind(j.at("kind").get<std::string>());
    p.n = get_u32(j, "n");
    p.t = get_u32(j, "t");
    p.w = get_u32(j, "w");
    if (j.contains("e")) p.e = get_u32(j, "e");
    try {
        p.check();
    } catch (const ParameterError& err) {
        throw FormatError(std::string("code file: ") + err.what());
    }

    const bool has_sets = j.contains("codesets");
    const bool has_gen = j.contains("generator");
    if (has_sets == has_gen) throw FormatError("code file: exactly one of 'codesets' or 'generator' is required");

    if (has_gen) {
        if (!resolver) throw FormatError("code file: generator-backed code needs a construction registry");
        LpcCode code = resolver(j.at("generator"));
        if (!(code.params() == p))
            throw FormatError("code file: header parameters disagree with the generator's construction");
        return code;
    }

    const auto& sets = j.at("codesets");
    if (!sets.is_array()) throw FormatError("code file: 'codesets' must be an array");
    std::vector<Codeset> codesets;
    try {
        for (const auto& cs : sets) {
            if (!cs.is_array()) throw FormatError("code file: each codeset must be an array of words");
            Codeset words;
            for (const auto& w : cs) {
                if (!w.is_array()) throw FormatError("code file: each word must be an array of wire indices");
                words.emplace_back(p.n, w.get<std::vector<Wire>>());
            }
            codesets.push_back(std::move(words));
        }
        return LpcCode::from_codesets(p, std::move(codesets));
    } catch (const ParameterError& err) {
        throw FormatError(std::string("code file: ") + err.what());
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("code file: ") + err.what());
    }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw FormatError(path.string() + ": " + err.what());
    }
}

void write_json_file(const nlohmann::json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump() << '\n';
}

void save_code(const LpcCode& code, const std::filesystem::path& path) { write_json_file(code_to_json(code), path); }

LpcCode load_code(const std::filesystem::path& path, const GeneratorResolver& resolver) {
    return code_from_json(read_json_file(path), resolver);
}

}  // namespace lpc
