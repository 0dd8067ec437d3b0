#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace lpc {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Upper bounds on the number of codesets of an (n,t,w) code.
struct SizeBounds {
    BigInt lpc_count;   ///< sum_{i<=w} C(n-t, i)
    BigInt cpc_count;   ///< C(n-t, w)
    BigInt cpc_turan;   ///< floor((n-w+1)/(t+1) * C(n-t-1, w-1)), via de Caen's Turan-number bound
    BigInt lpc_turan;   ///< sum_{i<=w-1} C(n, i) + cpc_turan

    nlohmann::json to_json() const;
};

/// Throws ParameterError unless t + w <= n and w >= 1.
SizeBounds bounds(std::uint32_t n, std::uint32_t t, std::uint32_t w);

/// de Caen's lower bound on the Turan number T(n,k,r), rounded up.
BigInt de_caen_turan_lower(std::uint32_t n, std::uint32_t k, std::uint32_t r);

/// Concatenation construction: (m*s, t, m*w')-LPC code from q-ary parameters.
struct ConcatParams {
    std::uint32_t m = 0;
    std::uint32_t s = 0;
    std::uint32_t w_inner = 0;
    std::uint32_t q = 0;
    std::uint32_t t = 0;
};

/// Sunflower construction: (n, t, w)-LPC code of size 2^{n-t-r}. Existence of the two
/// binary linear codes is taken on the caller's word.
struct SunflowerParams {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint32_t w = 0;
    std::uint32_t s = 0;
    std::uint32_t r = 0;
};

struct ComparisonEntry {
    std::string construction;
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint32_t w = 0;
    bool applicable = false;
    std::string reason;             ///< failed hypothesis when not applicable
    std::optional<BigInt> size;
    std::optional<std::uint32_t> log2_size;  ///< set when size is a power of two

    nlohmann::json to_json() const;
};

ComparisonEntry concat_size(const ConcatParams& p);
ComparisonEntry sunflower_size(const SunflowerParams& p);

}  // namespace lpc
