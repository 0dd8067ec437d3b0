#include "lpc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "lpc/bounds.hpp"
#include "lpc/code_io.hpp"
#include "lpc/domination_map.hpp"
#include "lpc/errors.hpp"
#include "lpc/registry.hpp"
#include "lpc/simulate.hpp"
#include "lpc/verify.hpp"

namespace lpc {

namespace {

std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v > UINT32_MAX) throw ParameterError("'" + item + "' is not a wire index");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

std::string join(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void print_warnings(const LpcCode& code, std::ostream& err) {
    for (const auto& w : code.warnings()) err << "warning: " << w << "\n";
}

struct Options {
    bool json = false;

    // construct
    std::string construction;
    std::optional<std::uint32_t> q, w, e, n, t, alpha, beta;
    std::string inner_file, generator_file, cooling_file, mapping_file, output;

    // encode / decode / verify / simulate
    std::string code_file;
    std::uint64_t codeset = 0;
    std::string hot;
    std::string word;
    bool exhaustive = false;
    bool sampled = false;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultWorkBudget;
    unsigned threads = 1;
    bool with_distance = false;
    std::string config_file;

    // bounds / compare
    std::uint32_t bn = 0, bt = 0, bw = 0;
    std::vector<std::string> concat, sunflower;

    // synth-mapping
    std::string groups;
    std::string balanced;
};

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    nlohmann::json params = nlohmann::json::object();
    auto put = [&](const char* key, const std::optional<std::uint32_t>& v) {
        if (v) params[key] = *v;
    };
    put("q", o.q);
    put("w", o.w);
    put("e", o.e);
    put("n", o.n);
    put("t", o.t);
    put("alpha", o.alpha);
    put("beta", o.beta);
    if (!o.inner_file.empty()) params["inner"] = read_json_file(o.inner_file);
    if (!o.cooling_file.empty()) params["cooling"] = read_json_file(o.cooling_file);
    if (!o.mapping_file.empty()) params["mapping"] = read_json_file(o.mapping_file);
    if (!o.generator_file.empty()) {
        nlohmann::json g = read_json_file(o.generator_file);
        params["generator"] = g.is_object() && g.contains("generator") ? g.at("generator") : g;
    }
    const LpcCode code = build_from_descriptor({{"construction", o.construction}, {"params", params}});
    print_warnings(code, err);
    if (!o.output.empty()) save_code(code, o.output);
    const CodeParams& p = code.params();
    nlohmann::json j{{"construction", o.construction}, {"n", p.n},   {"t", p.t},
                     {"w", p.w},                       {"kind", to_string(p.kind)}, {"size", code.size()}};
    if (p.kind == CodeKind::cpecc) j["e"] = p.e;
    if (!o.output.empty()) j["file"] = o.output;
    if (o.json) {
        out << j.dump() << "\n";
    } else {
        out << o.construction << ": " << to_string(p.kind) << " n=" << p.n << " t=" << p.t << " w=" << p.w;
        if (p.kind == CodeKind::cpecc) out << " e=" << p.e;
        out << " M=" << code.size() << "\n";
        if (!o.output.empty()) out << "written to " << o.output << "\n";
    }
    return 0;
}

int cmd_encode(const Options& o, std::ostream& out, std::ostream& err) {
    const LpcCode code = load_any_code(o.code_file);
    print_warnings(code, err);
    const HotSet hot(parse_list(o.hot));
    const Codeword word = code.encode(o.codeset, hot);
    if (o.json)
        out << nlohmann::json{{"codeset", o.codeset}, {"hot", hot.wires()}, {"word", word.support()},
                              {"weight", word.weight()}}
                   .dump()
            << "\n";
    else
        out << join(word.support()) << "\n";
    return 0;
}

int cmd_decode(const Options& o, std::ostream& out, std::ostream&) {
    const LpcCode code = load_any_code(o.code_file);
    const Codeword word(code.params().n, parse_list(o.word));
    const std::uint64_t index = code.decode(word);
    if (o.json)
        out << nlohmann::json{{"codeset", index}}.dump() << "\n";
    else
        out << index << "\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.exhaustive && o.sampled) throw ParameterError("choose one of --exhaustive and --sampled");
    const LpcCode code = load_any_code(o.code_file);
    print_warnings(code, err);
    VerifyOptions vo;
    vo.mode = o.sampled ? VerifyMode::sampled : VerifyMode::exhaustive;
    vo.trials = o.trials;
    vo.seed = o.seed;
    vo.budget = o.budget;
    vo.threads = o.threads;
    const VerifyReport rep = verify_code(code, vo);
    nlohmann::json j = rep.to_json();
    j["size"] = code.size();
    if (o.with_distance) {
        const auto d = min_distance(code, o.budget);
        j["min_distance"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
    }
    if (o.json) {
        out << j.dump() << "\n";
    } else {
        out << (rep.pass() ? "PASS" : "FAIL") << " (" << (vo.mode == VerifyMode::exhaustive ? "exhaustive" : "sampled")
            << ")\n"
            << "  weights     " << (rep.weight_ok ? "ok" : "FAIL") << "\n"
            << "  disjoint    " << (rep.disjoint_ok ? "ok" : "FAIL") << "\n"
            << "  cooling     " << (rep.cooling_ok ? "ok" : "FAIL") << "\n"
            << "  codesets    " << rep.codesets_checked << "\n"
            << "  hot sets    " << rep.hot_sets_checked << "\n";
        if (j.contains("min_distance")) out << "  min dist    " << j["min_distance"].dump() << "\n";
        if (!rep.pass()) out << "  witness     " << j.dump() << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream&) {
    const SizeBounds b = bounds(o.bn, o.bt, o.bw);
    if (o.json) {
        out << b.to_json().dump() << "\n";
    } else {
        out << "lpc_count_bound  " << b.lpc_count << "\n"
            << "cpc_count_bound  " << b.cpc_count << "\n"
            << "cpc_turan_bound  " << b.cpc_turan << "\n"
            << "lpc_turan_bound  " << b.lpc_turan << "\n";
    }
    return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream&) {
    std::vector<ComparisonEntry> entries;
    for (const auto& spec : o.concat) {
        const auto v = parse_list(spec);
        if (v.size() != 5) throw ParameterError("--concat takes m,s,w',q,t");
        entries.push_back(concat_size(ConcatParams{v[0], v[1], v[2], v[3], v[4]}));
    }
    for (const auto& spec : o.sunflower) {
        const auto v = parse_list(spec);
        if (v.size() != 2) throw ParameterError("--sunflower takes s,r");
        entries.push_back(sunflower_size(SunflowerParams{o.bn, o.bt, o.bw, v[0], v[1]}));
    }
    nlohmann::json j{{"n", o.bn}, {"t", o.bt}, {"w", o.bw}, {"entries", nlohmann::json::array()}};
    if (o.bt + o.bw <= o.bn && o.bw > 0) j["bounds"] = bounds(o.bn, o.bt, o.bw).to_json();
    for (const auto& e : entries) j["entries"].push_back(e.to_json());
    if (o.json) {
        out << j.dump() << "\n";
        return 0;
    }
    for (const auto& e : entries) {
        out << e.construction << " (" << e.n << "," << e.t << "," << e.w << "): ";
        if (!e.applicable)
            out << "n/a (" << e.reason << ")\n";
        else if (e.log2_size)
            out << "2^" << *e.log2_size << "\n";
        else
            out << *e.size << "\n";
    }
    if (j.contains("bounds"))
        for (const auto& [k, v] : j["bounds"].items()) out << k << "  " << v.get<std::string>() << "\n";
    return 0;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream&) {
    const SimReport rep = simulate_config_file(o.config_file);
    if (o.json)
        out << rep.to_json().dump() << "\n";
    else
        rep.print_table(out);
    return 0;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream&) {
    if (!o.w) throw ParameterError("synth-mapping needs --w");
    MappingPtr map;
    SynthesisResult res;
    if (!o.balanced.empty()) {
        const auto v = parse_list(o.balanced);
        if (v.size() != 2) throw ParameterError("--balanced takes m,n");
        map = synthesize_balanced(v[0], v[1], *o.w);
    } else {
        std::vector<std::vector<std::uint32_t>> groups;
        std::stringstream ss(o.groups);
        std::string cell;
        while (std::getline(ss, cell, '|')) groups.push_back(parse_list(cell));
        res = synthesize_mapping(groups, *o.w);
        map = res.mapping;
    }
    if (!map) {
        nlohmann::json j{{"feasible", false},
                         {"hall_inputs", res.hall_inputs},
                         {"admissible_images", res.hall_neighbourhood}};
        out << j.dump() << "\n";
        return 1;
    }
    const MappingReport rep = verify_mapping(*map);
    if (!o.output.empty()) write_json_file(map->to_json(), o.output);
    nlohmann::json j{{"feasible", true}, {"m", map->inputs()}, {"n", map->outputs()}, {"w", map->max_weight()},
                     {"verify", rep.to_json()}};
    if (o.json || o.output.empty()) j["mapping"] = map->to_json();
    out << j.dump() << "\n";
    return rep.pass() ? 0 : 1;
}

void report_error(std::ostream& err, const char* type, const std::string& message) {
    err << nlohmann::json{{"error", type}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Low-power and constant-power cooling codes"};
    app.name("lpccode");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    auto* construct = app.add_subcommand("construct", "Build a named construction and optionally save it");
    construct->add_option("construction", o.construction, "Construction name")
        ->required()
        ->check(CLI::IsMember(construction_names()));
    construct->add_option("--q", o.q, "Field size");
    construct->add_option("--w", o.w, "Codeword weight");
    construct->add_option("--e", o.e, "Correctable errors");
    construct->add_option("--n", o.n, "Length");
    construct->add_option("--t", o.t, "Hot-set size");
    construct->add_option("--alpha", o.alpha, "Copies of the (9,15,3) mapping");
    construct->add_option("--beta", o.beta, "Copies of the (12,20,4) mapping");
    construct->add_option("--inner", o.inner_file, "Inner code file");
    construct->add_option("--generator", o.generator_file, "Generator matrix file (JSON rows)");
    construct->add_option("--cooling", o.cooling_file, "Cooling code file");
    construct->add_option("--mapping", o.mapping_file, "Domination mapping file");
    construct->add_option("-o,--output", o.output, "Code file to write");

    auto* encode = app.add_subcommand("encode", "Encode a codeset index avoiding a hot set");
    encode->add_option("code", o.code_file, "Code file")->required();
    encode->add_option("--codeset,--message", o.codeset, "Codeset index")->required();
    encode->add_option("--hot", o.hot, "Comma-separated hot wires");

    auto* decode = app.add_subcommand("decode", "Recover the codeset index of a received word");
    decode->add_option("code", o.code_file, "Code file")->required();
    decode->add_option("--word", o.word, "Comma-separated lit wires")->required();

    auto* verify = app.add_subcommand("verify", "Check weights, disjointness and cooling");
    verify->add_option("code", o.code_file, "Code file")->required();
    verify->add_flag("--exhaustive", o.exhaustive, "Exhaustive check (default)");
    verify->add_flag("--sampled", o.sampled, "Seeded random sampling");
    verify->add_option("--trials", o.trials, "Sampled trials");
    verify->add_option("--seed", o.seed, "Sampling seed");
    verify->add_option("--budget", o.budget, "Exhaustive work budget");
    verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    verify->add_flag("--min-distance", o.with_distance, "Also compute the minimum distance");

    auto* bnd = app.add_subcommand("bounds", "Upper bounds on the code size");
    bnd->add_option("n", o.bn)->required();
    bnd->add_option("t", o.bt)->required();
    bnd->add_option("w", o.bw)->required();

    auto* compare = app.add_subcommand("compare", "Sizes of the concatenation and sunflower constructions");
    compare->add_option("--n", o.bn)->required();
    compare->add_option("--t", o.bt)->required();
    compare->add_option("--w", o.bw)->required();
    compare->add_option("--concat", o.concat, "m,s,w',q,t (repeatable)");
    compare->add_option("--sunflower", o.sunflower, "s,r (repeatable)");

    auto* sim = app.add_subcommand("simulate", "Run the bus transmission simulator");
    sim->add_option("config", o.config_file, "Simulation config file")->required();

    auto* synth = app.add_subcommand("synth-mapping", "Synthesize a domination mapping by bipartite matching");
    synth->add_option("--groups", o.groups, "Groups as '0|1,2|3,4'");
    synth->add_option("--balanced", o.balanced, "m,n: balanced partition with fallbacks");
    synth->add_option("--w", o.w, "Maximum image weight");
    synth->add_option("-o,--output", o.output, "Mapping file to write");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        err << app.help();
        return 2;
    }

    try {
        if (*construct) return cmd_construct(o, out, err);
        if (*encode) return cmd_encode(o, out, err);
        if (*decode) return cmd_decode(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*bnd) return cmd_bounds(o, out, err);
        if (*compare) return cmd_compare(o, out, err);
        if (*sim) return cmd_simulate(o, out, err);
        if (*synth) return cmd_synth(o, out, err);
    } catch (const ParameterError& e) {
        report_error(err, "parameter", e.what());
        return 1;
    } catch (const BudgetExceeded& e) {
        report_error(err, "budget", e.what());
        return 1;
    } catch (const FormatError& e) {
        report_error(err, "format", e.what());
        return 1;
    } catch (const DecodeError& e) {
        report_error(err, "decode", e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return 1;
    }
    return 2;
}

}  // namespace lpc
