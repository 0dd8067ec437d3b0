#include "lpc/gf2.hpp"

#include "lpc/errors.hpp"

namespace lpc {

namespace {

std::size_t highest_bit(const Gf2Vector& v) {
    std::size_t hi = v.find_first();
    for (std::size_t b = hi; b != Gf2Vector::npos; b = v.find_next(b)) hi = b;
    return hi;
}

}  // namespace

std::vector<Gf2Vector> gf2_left_kernel(std::span<const Gf2Vector> rows) {
    const std::size_t count = rows.size();
    if (count == 0) return {};
    const std::size_t len = rows[0].size();
    std::vector<Gf2Vector> data(rows.begin(), rows.end());
    std::vector<Gf2Vector> tag(count, Gf2Vector(count));
    for (std::size_t i = 0; i < count; ++i) {
        if (data[i].size() != len) throw ParameterError("gf2 rows differ in length");
        tag[i].set(i);
    }
    std::size_t lead = 0;
    for (std::size_t c = 0; c < len && lead < count; ++c) {
        std::size_t piv = lead;
        while (piv < count && !data[piv].test(c)) ++piv;
        if (piv == count) continue;
        std::swap(data[lead], data[piv]);
        std::swap(tag[lead], tag[piv]);
        for (std::size_t i = 0; i < count; ++i) {
            if (i != lead && data[i].test(c)) {
                data[i] ^= data[lead];
                tag[i] ^= tag[lead];
            }
        }
        ++lead;
    }
    return {tag.begin() + static_cast<std::ptrdiff_t>(lead), tag.end()};
}

std::optional<Gf2Vector> gf2_kernel_vector(std::span<const Gf2Vector> rows) {
    return gf2_span_minimum(gf2_left_kernel(rows));
}

std::optional<Gf2Vector> gf2_span_minimum(std::vector<Gf2Vector> basis) {
    std::vector<Gf2Vector> echelon;
    std::vector<std::size_t> pivots;
    for (auto& v : basis) {
        for (bool changed = true; changed && v.any();) {
            changed = false;
            const std::size_t hi = highest_bit(v);
            for (std::size_t i = 0; i < echelon.size(); ++i) {
                if (pivots[i] == hi) {
                    v ^= echelon[i];
                    changed = true;
                    break;
                }
            }
        }
        if (v.none()) continue;
        pivots.push_back(highest_bit(v));
        echelon.push_back(std::move(v));
    }
    if (echelon.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < echelon.size(); ++i)
        if (pivots[i] < pivots[best]) best = i;
    return echelon[best];
}

}  // namespace lpc
