#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpc/code_model.hpp"

namespace lpc {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::exhaustive;
    /// Sampled mode: number of (codeset, hot set) draws.
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    /// Exhaustive mode refuses when C(n,t) * (total codewords) exceeds this.
    std::uint64_t budget = kDefaultWorkBudget;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
};

struct WeightWitness {
    std::uint64_t codeset = 0;
    Codeword word;
};

struct DisjointWitness {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    Codeword word;
};

struct CoolingWitness {
    std::vector<Wire> hot;
    std::uint64_t codeset = 0;
};

/// Result of checking a code against the LPC/CPC/cooling definitions. Each property
/// carries a witness when it fails.
struct VerifyReport {
    VerifyMode mode = VerifyMode::exhaustive;
    bool weight_ok = true;
    bool disjoint_ok = true;
    bool cooling_ok = true;
    std::optional<WeightWitness> weight_failure;
    std::optional<DisjointWitness> disjoint_failure;
    std::optional<CoolingWitness> cooling_failure;
    std::uint64_t codesets_checked = 0;
    std::uint64_t hot_sets_checked = 0;
    std::uint64_t avoid_checks = 0;

    bool pass() const noexcept { return weight_ok && disjoint_ok && cooling_ok; }
    /// Combines two reports over disjoint slices of the same check. Associative and
    /// commutative: the smallest witness of each kind survives.
    void merge(const VerifyReport& other);
    nlohmann::json to_json() const;
};

/// Checks (a) codeword weights per kind, (b) pairwise codeset disjointness and (c) that
/// every codeset has a word avoiding every t-subset. Exhaustive mode throws
/// BudgetExceeded instead of falling back to sampling.
VerifyReport verify_code(const LpcCode& code, const VerifyOptions& options = {});

/// Minimum Hamming distance over all pairs of distinct codewords; nullopt when the code
/// has fewer than two codewords. Throws BudgetExceeded above `pair_budget` pairs.
std::optional<std::uint32_t> min_distance(const LpcCode& code, std::uint64_t pair_budget = kDefaultWorkBudget);

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace lpc
