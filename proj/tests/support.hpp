#pragma once

// Small independent helpers shared by the test suites. Nothing here calls into the
// library's own combinatorics, so results can serve as oracles.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "lpc/code_model.hpp"

namespace lpc_test {

/// C(n, k) through Pascal's triangle.
inline std::uint64_t pascal(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        row[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[n][k];
}

/// Calls fn on every k-subset of {0..n-1}, lexicographic; stops early when fn returns false.
inline void for_each_subset(unsigned n, unsigned k, const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> s(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i;
    if (k > n) return;
    while (true) {
        if (!fn(s)) return;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
        if (i < 0) return;
        ++s[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

inline std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, unsigned n, unsigned k) {
    std::vector<std::uint32_t> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

inline bool disjoint(const std::vector<std::uint32_t>& word, const std::vector<std::uint32_t>& hot) {
    for (auto a : word)
        for (auto b : hot)
            if (a == b) return false;
    return true;
}

/// Symmetric difference size, computed by marking.
inline unsigned support_distance(const lpc::Codeword& a, const lpc::Codeword& b) {
    std::vector<int> mark(a.length(), 0);
    for (auto x : a.support()) mark[x] ^= 1;
    for (auto x : b.support()) mark[x] ^= 1;
    unsigned d = 0;
    for (int v : mark) d += static_cast<unsigned>(v);
    return d;
}

/// Flips one wire of a codeword.
inline lpc::Codeword flip(const lpc::Codeword& word, std::uint32_t wire) {
    std::vector<std::uint32_t> s;
    bool found = false;
    for (auto x : word.support()) {
        if (x == wire)
            found = true;
        else
            s.push_back(x);
    }
    if (!found) s.push_back(wire);
    return lpc::Codeword(word.length(), s);
}

}  // namespace lpc_test
