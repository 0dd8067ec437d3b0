#include "lpc/bounds.hpp"

#include "lpc/errors.hpp"
#include "lpc/finite_field.hpp"

namespace lpc {

namespace {

std::optional<std::uint32_t> exact_log2(const BigInt& v) {
    if (v <= 0) return std::nullopt;
    const std::uint32_t msb = static_cast<std::uint32_t>(boost::multiprecision::msb(v));
    if (v != (BigInt(1) << msb)) return std::nullopt;
    return msb;
}

BigInt ipow(std::uint64_t base, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SizeBounds bounds(std::uint32_t n, std::uint32_t t, std::uint32_t w) {
    if (w == 0) throw ParameterError("bounds need w >= 1");
    if (t + w > n)
        throw ParameterError("bounds need t + w <= n (t = " + std::to_string(t) + ", w = " + std::to_string(w) +
                             ", n = " + std::to_string(n) + ")");
    SizeBounds b;
    for (std::uint32_t i = 0; i <= w; ++i) b.lpc_count += binomial(n - t, i);
    b.cpc_count = binomial(n - t, w);
    b.cpc_turan = BigInt(n - w + 1) * binomial(n - t - 1, w - 1) / (t + 1);
    BigInt low = 0;
    for (std::uint32_t i = 0; i + 1 <= w; ++i) low += binomial(n, i);
    b.lpc_turan = low + b.cpc_turan;
    return b;
}

BigInt de_caen_turan_lower(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
    if (!(n >= k && k >= r && r >= 1)) throw ParameterError("de Caen bound needs n >= k >= r >= 1");
    const BigInt num = BigInt(n - k + 1) * binomial(n, r);
    const BigInt den = BigInt(n - r + 1) * binomial(k - 1, r - 1);
    return (num + den - 1) / den;
}

nlohmann::json SizeBounds::to_json() const {
    return {{"lpc_count_bound", lpc_count.str()},
            {"cpc_count_bound", cpc_count.str()},
            {"cpc_turan_bound", cpc_turan.str()},
            {"lpc_turan_bound", lpc_turan.str()}};
}

ComparisonEntry concat_size(const ConcatParams& p) {
    ComparisonEntry e;
    e.construction = "concatenation";
    e.n = p.m * p.s;
    e.t = p.t;
    e.w = p.m * p.w_inner;
    BigInt ball = 0;
    for (std::uint32_t i = 0; i <= p.w_inner; ++i) ball += binomial(p.s, i);
    if (factor_prime_power(p.q).prime == 0) {
        e.reason = "q is not a prime power";
    } else if (BigInt(p.q) > ball) {
        e.reason = "q > sum_{i<=w'} C(s,i)";
    } else if (p.t > p.s) {
        e.reason = "t > s";
    } else {
        const bool half = 2 * (p.t + 1) <= p.m;
        const bool mds = p.t + 1 <= p.m && p.m <= p.q + 1;
        if (!half && !mds) {
            e.reason = "neither t+1 <= m/2 nor t+1 <= m <= q+1";
        } else {
            e.applicable = true;
            BigInt best = 0;
            if (half) best = ipow(p.q, p.m - p.t - 1);
            if (mds) best = std::max(best, ipow(p.q, p.m - p.t));
            e.size = best;
            e.log2_size = exact_log2(best);
        }
    }
    return e;
}

ComparisonEntry sunflower_size(const SunflowerParams& p) {
    ComparisonEntry e;
    e.construction = "sunflower";
    e.n = p.n;
    e.t = p.t;
    e.w = p.w;
    if (p.s > p.n) {
        e.reason = "s > n: no [n,s] code";
    } else if (p.t > p.n || p.r > p.n - p.t) {
        e.reason = "r > n - t: no [n-t,r] code";
    } else if (2 * (p.r + p.t) > p.n + p.s) {
        e.reason = "r + t > (n+s)/2";
    } else {
        e.applicable = true;
        e.size = BigInt(1) << (p.n - p.t - p.r);
        e.log2_size = p.n - p.t - p.r;
    }
    return e;
}

nlohmann::json ComparisonEntry::to_json() const {
    nlohmann::json j{{"construction", construction}, {"n", n}, {"t", t}, {"w", w}, {"applicable", applicable}};
    if (!applicable) j["reason"] = reason;
    if (size) j["size"] = size->str();
    if (log2_size) j["log2_size"] = *log2_size;
    return j;
}

}  // namespace lpc
