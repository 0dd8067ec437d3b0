#include "lpc/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

// Dense bitmaps of every codeword, codeset-major.
class MaskTable {
public:
    MaskTable(std::uint32_t n, const std::vector<Codeset>& codesets) : limbs_((n + 63) / 64) {
        offsets_.push_back(0);
        for (const auto& cs : codesets) {
            for (const auto& word : cs) {
                const std::size_t base = bits_.size();
                bits_.resize(base + limbs_, 0);
                for (Wire wire : word.support()) bits_[base + wire / 64] |= std::uint64_t{1} << (wire % 64);
            }
            offsets_.push_back(offsets_.back() + cs.size());
        }
    }

    std::size_t limbs() const { return limbs_; }
    std::size_t codesets() const { return offsets_.size() - 1; }

    // True if some word of codeset i misses the mask; counts the words inspected.
    bool has_avoider(std::size_t i, const std::vector<std::uint64_t>& hot, std::uint64_t& checks) const {
        for (std::size_t w = offsets_[i]; w < offsets_[i + 1]; ++w) {
            ++checks;
            const std::uint64_t* word = bits_.data() + w * limbs_;
            bool clear = true;
            for (std::size_t l = 0; l < limbs_ && clear; ++l) clear = (word[l] & hot[l]) == 0;
            if (clear) return true;
        }
        return false;
    }

private:
    std::size_t limbs_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint64_t> bits_;
};

std::vector<std::uint64_t> to_mask(const std::vector<Wire>& wires, std::size_t limbs) {
    std::vector<std::uint64_t> m(limbs, 0);
    for (Wire w : wires) m[w / 64] |= std::uint64_t{1} << (w % 64);
    return m;
}

bool weight_valid(const CodeParams& p, const Codeword& word) {
    switch (p.kind) {
        case CodeKind::cpc:
        case CodeKind::cpecc: return word.weight() == p.w;
        case CodeKind::lpc: return word.weight() <= p.w;
        case CodeKind::cooling: return true;
    }
    return true;
}

void check_weights(const CodeParams& p, std::uint64_t index, const Codeset& cs, VerifyReport& report) {
    for (const auto& word : cs) {
        if (word.length() != p.n || !weight_valid(p, word)) {
            WeightWitness wit{index, word};
            report.weight_ok = false;
            if (!report.weight_failure || std::tie(index, word) < std::tie(report.weight_failure->codeset,
                                                                          report.weight_failure->word))
                report.weight_failure = wit;
            return;
        }
    }
}

void check_disjoint(const std::vector<Codeset>& codesets, VerifyReport& report) {
    std::map<std::vector<Wire>, std::uint64_t> owner;
    for (std::uint64_t i = 0; i < codesets.size(); ++i) {
        for (const auto& word : codesets[i]) {
            auto [it, inserted] = owner.emplace(word.support(), i);
            if (!inserted && it->second != i) {
                report.disjoint_ok = false;
                DisjointWitness wit{it->second, i, word};
                if (!report.disjoint_failure ||
                    std::tie(wit.first, wit.second) <
                        std::tie(report.disjoint_failure->first, report.disjoint_failure->second))
                    report.disjoint_failure = wit;
            }
        }
    }
}

// Visits every k-subset of [0, n) in lexicographic order; stops when fn returns false.
template <class Fn>
void for_each_subset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<Wire> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void record_cooling(VerifyReport& report, std::vector<Wire> hot, std::uint64_t codeset) {
    report.cooling_ok = false;
    if (!report.cooling_failure ||
        std::tie(hot, codeset) < std::tie(report.cooling_failure->hot, report.cooling_failure->codeset))
        report.cooling_failure = CoolingWitness{std::move(hot), codeset};
}

VerifyReport exhaustive(const LpcCode& code, const VerifyOptions& opt) {
    const CodeParams p = code.params();
    const std::uint64_t hot_sets = binomial_saturating(p.n, p.t);
    const std::uint64_t m = code.size();
    const std::uint64_t first_size = code.codeset(0).size();
    auto over = [&](std::uint64_t a, std::uint64_t b) { return b != 0 && a > opt.budget / b; };
    if (over(hot_sets, m) || over(hot_sets * m, first_size))
        throw BudgetExceeded("exhaustive verification needs about C(" + std::to_string(p.n) + "," +
                             std::to_string(p.t) + ") x " + std::to_string(m) + " x " + std::to_string(first_size) +
                             " avoid-checks, over the budget of " + std::to_string(opt.budget));
    const std::vector<Codeset> codesets = code.materialize(opt.budget);
    std::uint64_t total_words = 0;
    for (const auto& cs : codesets) total_words += cs.size();
    if (over(hot_sets, total_words))
        throw BudgetExceeded("exhaustive verification needs C(" + std::to_string(p.n) + "," + std::to_string(p.t) +
                             ") x " + std::to_string(total_words) + " avoid-checks, over the budget of " +
                             std::to_string(opt.budget));

    VerifyReport report;
    report.mode = VerifyMode::exhaustive;
    report.codesets_checked = codesets.size();
    report.hot_sets_checked = hot_sets;
    for (std::uint64_t i = 0; i < codesets.size(); ++i) check_weights(p, i, codesets[i], report);
    check_disjoint(codesets, report);

    const MaskTable masks(p.n, codesets);
    unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, codesets.size()));
    std::vector<VerifyReport> partial(threads);
    auto worker = [&](unsigned slice) {
        VerifyReport& local = partial[slice];
        local.cooling_ok = true;
        for_each_subset(p.n, p.t, [&](const std::vector<Wire>& hot) {
            const auto mask = to_mask(hot, masks.limbs());
            for (std::size_t i = slice; i < masks.codesets(); i += threads) {
                if (!masks.has_avoider(i, mask, local.avoid_checks)) {
                    record_cooling(local, hot, i);
                    return false;  // first failure in (S, codeset) order for this slice
                }
            }
            return true;
        });
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned s = 0; s < threads; ++s) pool.emplace_back(worker, s);
    }
    for (const auto& part : partial) {
        report.avoid_checks += part.avoid_checks;
        if (part.cooling_failure) record_cooling(report, part.cooling_failure->hot, part.cooling_failure->codeset);
    }
    return report;
}

VerifyReport sampled(const LpcCode& code, const VerifyOptions& opt) {
    const CodeParams p = code.params();
    VerifyReport report;
    report.mode = VerifyMode::sampled;
    std::mt19937_64 rng(opt.seed);
    const std::uint64_t m = code.size();
    std::uniform_int_distribution<std::uint64_t> pick_codeset(0, m - 1);
    std::vector<Wire> wires(p.n);
    std::iota(wires.begin(), wires.end(), 0);

    if (code.is_explicit()) check_disjoint(code.codesets(), report);
    const std::size_t limbs = (p.n + 63) / 64;
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        const std::uint64_t i = pick_codeset(rng);
        std::vector<Wire> hot;
        std::sample(wires.begin(), wires.end(), std::back_inserter(hot), p.t, rng);
        const Codeset cs = code.codeset(i);
        check_weights(p, i, cs, report);
        if (!code.is_explicit()) {
            // Decoding every member back to i rules out a shared word with another codeset.
            for (const auto& word : cs) {
                std::uint64_t got = 0;
                bool ok = true;
                try {
                    got = code.decode(word);
                } catch (const DecodeError&) {
                    ok = false;
                }
                if (!ok || got != i) {
                    report.disjoint_ok = false;
                    DisjointWitness wit{std::min(i, got), std::max(i, got), word};
                    if (!report.disjoint_failure) report.disjoint_failure = wit;
                }
            }
        }
        const MaskTable masks(p.n, {cs});
        std::uint64_t checks = 0;
        if (!masks.has_avoider(0, to_mask(hot, limbs), checks)) record_cooling(report, hot, i);
        report.avoid_checks += checks;
        ++report.codesets_checked;
        ++report.hot_sets_checked;
    }
    return report;
}

}  // namespace

void VerifyReport::merge(const VerifyReport& other) {
    weight_ok = weight_ok && other.weight_ok;
    disjoint_ok = disjoint_ok && other.disjoint_ok;
    if (other.weight_failure &&
        (!weight_failure || std::tie(other.weight_failure->codeset, other.weight_failure->word) <
                                std::tie(weight_failure->codeset, weight_failure->word)))
        weight_failure = other.weight_failure;
    if (other.disjoint_failure &&
        (!disjoint_failure || std::tie(other.disjoint_failure->first, other.disjoint_failure->second) <
                                  std::tie(disjoint_failure->first, disjoint_failure->second)))
        disjoint_failure = other.disjoint_failure;
    if (other.cooling_failure) record_cooling(*this, other.cooling_failure->hot, other.cooling_failure->codeset);
    cooling_ok = cooling_ok && other.cooling_ok;
    codesets_checked += other.codesets_checked;
    hot_sets_checked += other.hot_sets_checked;
    avoid_checks += other.avoid_checks;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["mode"] = mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
    j["pass"] = pass();
    j["weight_ok"] = weight_ok;
    j["disjoint_ok"] = disjoint_ok;
    j["cooling_ok"] = cooling_ok;
    j["codesets_checked"] = codesets_checked;
    j["hot_sets_checked"] = hot_sets_checked;
    j["avoid_checks"] = avoid_checks;
    if (weight_failure)
        j["weight_failure"] = {{"codeset", weight_failure->codeset}, {"word", weight_failure->word.support()}};
    if (disjoint_failure)
        j["disjoint_failure"] = {{"codesets", {disjoint_failure->first, disjoint_failure->second}},
                                 {"word", disjoint_failure->word.support()}};
    if (cooling_failure)
        j["cooling_failure"] = {{"hot", cooling_failure->hot}, {"codeset", cooling_failure->codeset}};
    return j;
}

VerifyReport verify_code(const LpcCode& code, const VerifyOptions& options) {
    return options.mode == VerifyMode::exhaustive ? exhaustive(code, options) : sampled(code, options);
}

std::optional<std::uint32_t> min_distance(const LpcCode& code, std::uint64_t pair_budget) {
    std::uint64_t words_cap = 2;
    while (words_cap * (words_cap - 1) / 2 < pair_budget) words_cap *= 2;
    const std::vector<Codeset> codesets = code.materialize(words_cap);
    std::vector<Codeword> all;
    for (const auto& cs : codesets) all.insert(all.end(), cs.begin(), cs.end());
    const std::uint64_t pairs = all.size() * (all.size() - 1) / 2;
    if (pairs > pair_budget)
        throw BudgetExceeded("min_distance needs " + std::to_string(pairs) + " pair comparisons, over the budget of " +
                             std::to_string(pair_budget));
    if (all.size() < 2) return std::nullopt;
    const CodeParams p = code.params();
    const std::size_t limbs = (p.n + 63) / 64;
    std::vector<std::uint64_t> bits(all.size() * limbs, 0);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (Wire w : all[i].support()) bits[i * limbs + w / 64] |= std::uint64_t{1} << (w % 64);
    std::uint32_t best = p.n + 1;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            std::uint32_t d = 0;
            for (std::size_t l = 0; l < limbs; ++l)
                d += static_cast<std::uint32_t>(std::popcount(bits[i * limbs + l] ^ bits[j * limbs + l]));
            best = std::min(best, d);
        }
    }
    return best;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace lpc
