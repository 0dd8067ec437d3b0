#include "lpc/simulate.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <random>

#include "lpc/errors.hpp"
#include "lpc/registry.hpp"

namespace lpc {

HotPolicy parse_hot_policy(const std::string& s) {
    if (s == "top_t") return HotPolicy::top_t;
    if (s == "random_t") return HotPolicy::random_t;
    if (s == "adversarial_fixed") return HotPolicy::adversarial_fixed;
    throw FormatError("unknown hot-set policy '" + s + "' (top_t, random_t, adversarial_fixed)");
}

std::string to_string(HotPolicy p) {
    switch (p) {
        case HotPolicy::top_t: return "top_t";
        case HotPolicy::random_t: return "random_t";
        case HotPolicy::adversarial_fixed: return "adversarial_fixed";
    }
    return "top_t";
}

void BusState::apply(const Codeword& word, double decay) {
    for (double& p : proxy) p *= decay;
    for (Wire wire : word.support()) {
        state[wire] ^= 1;
        ++transitions[wire];
        proxy[wire] += 1.0 - decay;
    }
}

std::vector<Wire> BusState::hottest(std::uint32_t t) const {
    std::vector<Wire> order(proxy.size());
    std::iota(order.begin(), order.end(), 0);
    const std::size_t k = std::min<std::size_t>(t, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](Wire a, Wire b) { return proxy[a] != proxy[b] ? proxy[a] > proxy[b] : a < b; });
    order.resize(k);
    return order;
}

std::optional<double> SimReport::decode_success_rate() const {
    if (decode_attempts == 0) return std::nullopt;
    return static_cast<double>(decode_successes) / static_cast<double>(decode_attempts);
}

nlohmann::json SimReport::to_json() const {
    nlohmann::json j{{"steps", steps},
                     {"n", params.n},
                     {"t", params.t},
                     {"w", params.w},
                     {"kind", to_string(params.kind)},
                     {"policy", to_string(policy)},
                     {"thermal_model", "EMA of per-step transition indicators (model choice, not a temperature)"},
                     {"decay", decay},
                     {"channel_flips", channel_flips},
                     {"max_transitions_per_step", max_transitions},
                     {"min_transitions_per_step", min_transitions},
                     {"hot_wire_violations", hot_violations},
                     {"weight_mismatches", weight_mismatches},
                     {"wire_transitions", wire_transitions},
                     {"decode_attempts", decode_attempts},
                     {"decode_successes", decode_successes}};
    const auto rate = decode_success_rate();
    j["decode_success_rate"] = rate ? nlohmann::json(*rate) : nlohmann::json(nullptr);
    return j;
}

void SimReport::print_table(std::ostream& os) const {
    os << "code                     (" << params.n << "," << params.t << "," << params.w << ") " << to_string(params.kind)
       << "\n"
       << "steps                    " << steps << "\n"
       << "hot-set policy           " << to_string(policy) << "\n"
       << "thermal proxy            EMA of transitions, decay " << decay << " (model choice)\n"
       << "transitions per step     " << min_transitions << ".." << max_transitions << "\n"
       << "hot-wire violations      " << hot_violations << "\n"
       << "weight mismatches        " << weight_mismatches << "\n"
       << "channel flips per step   " << channel_flips << "\n";
    const auto rate = decode_success_rate();
    os << "decode success rate      ";
    if (rate)
        os << std::fixed << std::setprecision(6) << *rate << std::defaultfloat << " (" << decode_successes << "/"
           << decode_attempts << ")\n";
    else
        os << "n/a\n";
    os << "per-wire transitions    ";
    for (auto c : wire_transitions) os << ' ' << c;
    os << "\n";
}

SimReport simulate(const LpcCode& code, const SimOptions& options) {
    const CodeParams p = code.params();
    if (!(options.decay > 0.0 && options.decay < 1.0)) throw ParameterError("decay must lie in (0, 1)");
    if (options.channel_flips > p.n) throw ParameterError("channel_flips exceeds n");
    if (options.policy == HotPolicy::adversarial_fixed) HotSet(options.fixed_hot).check(p.n, p.t);

    SimReport rep;
    rep.params = p;
    rep.policy = options.policy;
    rep.decay = options.decay;
    rep.channel_flips = options.channel_flips;
    BusState bus(p.n);
    std::mt19937_64 rng(options.seed);
    const std::uint64_t m = code.size();
    std::uniform_int_distribution<std::uint64_t> pick_message(0, m - 1);
    std::vector<Wire> all_wires(p.n);
    std::iota(all_wires.begin(), all_wires.end(), 0);
    const bool constant_weight = p.kind == CodeKind::cpc || p.kind == CodeKind::cpecc;
    rep.min_transitions = p.n;

    for (std::uint64_t step = 0; step < options.steps; ++step) {
        const std::uint64_t msg = pick_message(rng);
        std::vector<Wire> hot;
        switch (options.policy) {
            case HotPolicy::top_t: hot = bus.hottest(p.t); break;
            case HotPolicy::random_t: std::sample(all_wires.begin(), all_wires.end(), std::back_inserter(hot), p.t, rng); break;
            case HotPolicy::adversarial_fixed: hot = options.fixed_hot; break;
        }
        const HotSet hot_set(std::move(hot));
        Codeword word;
        try {
            word = code.encode(msg, hot_set);
        } catch (const std::exception& err) {
            throw std::runtime_error("step " + std::to_string(step) + ": encoding message " + std::to_string(msg) +
                                     " failed: " + err.what());
        }
        for (Wire wire : word.support()) rep.hot_violations += hot_set.contains(wire);
        rep.max_transitions = std::max(rep.max_transitions, word.weight());
        rep.min_transitions = std::min(rep.min_transitions, word.weight());
        if (constant_weight && word.weight() != p.w) ++rep.weight_mismatches;
        bus.apply(word, options.decay);

        std::vector<Wire> received = word.support();
        if (options.channel_flips > 0) {
            std::vector<Wire> flips;
            std::sample(all_wires.begin(), all_wires.end(), std::back_inserter(flips), options.channel_flips, rng);
            for (Wire f : flips) {
                auto it = std::lower_bound(received.begin(), received.end(), f);
                if (it != received.end() && *it == f)
                    received.erase(it);
                else
                    received.insert(it, f);
            }
        }
        ++rep.decode_attempts;
        try {
            rep.decode_successes += code.decode(Codeword(p.n, received)) == msg;
        } catch (const DecodeError&) {
        }
    }
    if (options.steps == 0) rep.min_transitions = 0;
    rep.steps = options.steps;
    rep.wire_transitions = bus.transitions;
    return rep;
}

SimConfig parse_sim_config(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("code")) throw FormatError("simulation config needs a 'code' entry");
    SimConfig cfg;
    cfg.code = j.at("code");
    try {
        cfg.options.steps = j.value("steps", cfg.options.steps);
        cfg.options.policy = parse_hot_policy(j.value("policy", std::string("top_t")));
        cfg.options.fixed_hot = j.value("hot", std::vector<Wire>{});
        cfg.options.seed = j.value("seed", cfg.options.seed);
        cfg.options.decay = j.value("decay", cfg.options.decay);
        cfg.options.channel_flips = j.value("channel_flips", cfg.options.channel_flips);
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("simulation config: ") + err.what());
    }
    if (cfg.options.policy == HotPolicy::adversarial_fixed && !j.contains("hot"))
        throw FormatError("adversarial_fixed policy needs a 'hot' wire list");
    return cfg;
}

SimReport simulate_config_file(const std::filesystem::path& path) {
    const SimConfig cfg = parse_sim_config(read_json_file(path));
    LpcCode code = cfg.code.is_string()
                       ? load_any_code(path.parent_path() / cfg.code.get<std::string>())
                       : code_from_any_json(cfg.code);
    return simulate(code, cfg.options);
}

}  // namespace lpc
