#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpc/code_model.hpp"

namespace lpc {

enum class HotPolicy { top_t, random_t, adversarial_fixed };

HotPolicy parse_hot_policy(const std::string& s);
std::string to_string(HotPolicy p);

struct SimOptions {
    std::uint64_t steps = 1000;
    HotPolicy policy = HotPolicy::top_t;
    std::vector<Wire> fixed_hot;  ///< adversarial_fixed only
    std::uint64_t seed = 1;
    double decay = 0.9;           ///< weight of the previous proxy value
    std::uint32_t channel_flips = 0;
};

/// Wire states and thermal proxy. The proxy is an exponential moving average of the
/// per-step transition indicator; it is a modelling choice, not a temperature.
struct BusState {
    explicit BusState(std::uint32_t n) : state(n, 0), transitions(n, 0), proxy(n, 0.0) {}
    std::vector<std::uint8_t> state;
    std::vector<std::uint64_t> transitions;
    std::vector<double> proxy;

    /// The codeword is the transition vector: state ^= word.
    void apply(const Codeword& word, double decay);
    /// The t wires with the highest proxy, ties to the lower index.
    std::vector<Wire> hottest(std::uint32_t t) const;
};

struct SimReport {
    std::uint64_t steps = 0;
    CodeParams params;
    HotPolicy policy = HotPolicy::top_t;
    double decay = 0.9;
    std::uint32_t channel_flips = 0;
    std::uint32_t max_transitions = 0;
    std::uint32_t min_transitions = 0;
    std::uint64_t hot_violations = 0;
    std::uint64_t weight_mismatches = 0;  ///< constant-weight kinds: steps with weight != w
    std::vector<std::uint64_t> wire_transitions;
    std::uint64_t decode_attempts = 0;
    std::uint64_t decode_successes = 0;

    std::optional<double> decode_success_rate() const;
    nlohmann::json to_json() const;
    void print_table(std::ostream& os) const;
};

/// Runs the transmission loop. Throws std::runtime_error naming the step when encoding fails.
SimReport simulate(const LpcCode& code, const SimOptions& options);

struct SimConfig {
    nlohmann::json code;  ///< code object, or a path string resolved against the config directory
    SimOptions options;
};

/// {"code", "steps", "policy", "hot", "seed", "decay", "channel_flips"}; throws FormatError.
SimConfig parse_sim_config(const nlohmann::json& j);
SimReport simulate_config_file(const std::filesystem::path& path);

}  // namespace lpc
