#include "lpc/cooling_spread_lpc.hpp"

#include "lpc/errors.hpp"
#include "lpc/gf2.hpp"

namespace lpc {

std::shared_ptr<const SpreadCoolingCode> SpreadCoolingCode::build(std::uint32_t n, std::uint32_t t) {
    if (n == 0 || n > kMaxLength) throw ParameterError("spread cooling code needs 1 <= n <= 64");
    const std::uint32_t tau = t + 1;
    if (tau > 16) throw ParameterError("spread cooling code needs t + 1 <= 16");
    if (tau > n || n % tau != 0)
        throw ParameterError("spread cooling code needs (t+1) | n (t + 1 = " + std::to_string(tau) +
                             ", n = " + std::to_string(n) + "); partial spreads are not supported");
    std::shared_ptr<SpreadCoolingCode> code(new SpreadCoolingCode(GaloisField(1u << tau), n, tau));
    const std::uint64_t Q = std::uint64_t{1} << tau;
    const std::uint32_t k = code->k_;
    // offsets_[c] = 1 + Q + ... + Q^(k-2-c): lines led by a later coordinate come first.
    code->offsets_.assign(k, 0);
    std::uint64_t acc = 0;
    std::uint64_t power = 1;
    for (std::uint32_t c = k; c-- > 0;) {
        code->offsets_[c] = acc;
        acc += power;
        if (c > 0) power *= Q;
    }
    code->size_ = acc;
    return code;
}

CodeParams SpreadCoolingCode::params() const { return CodeParams{n_, tau_ - 1, n_, CodeKind::cooling, 0}; }

std::uint64_t SpreadCoolingCode::pack(const std::vector<Elem>& coords) const {
    std::uint64_t bits = 0;
    for (std::uint32_t c = 0; c < k_; ++c) bits |= std::uint64_t{coords[c]} << (c * tau_);
    return bits;
}

std::vector<Elem> SpreadCoolingCode::unpack(std::uint64_t bits) const {
    std::vector<Elem> coords(k_);
    const std::uint64_t mask = (std::uint64_t{1} << tau_) - 1;
    for (std::uint32_t c = 0; c < k_; ++c) coords[c] = static_cast<Elem>((bits >> (c * tau_)) & mask);
    return coords;
}

std::vector<Elem> SpreadCoolingCode::representative(std::uint64_t index) const {
    if (index >= size_) throw ParameterError("line index out of range");
    // offsets_ decreases with c, so the leading coordinate is the first c with offset <= index.
    std::uint32_t c = 0;
    while (offsets_[c] > index) ++c;
    std::uint64_t tail = index - offsets_[c];
    std::vector<Elem> coords(k_, 0);
    coords[c] = 1;
    const std::uint64_t Q = std::uint64_t{1} << tau_;
    for (std::uint32_t j = k_; j-- > c + 1;) {
        coords[j] = static_cast<Elem>(tail % Q);
        tail /= Q;
    }
    return coords;
}

std::uint64_t SpreadCoolingCode::line_of(const std::vector<Elem>& coords) const {
    if (coords.size() != k_) throw ParameterError("coordinate vector length mismatch");
    std::uint32_t c = 0;
    while (c < k_ && coords[c] == 0) ++c;
    if (c == k_) throw MalformedCodeword("the zero word lies on no line");
    const Elem scale = field_.inv(coords[c]);
    const std::uint64_t Q = std::uint64_t{1} << tau_;
    std::uint64_t tail = 0;
    for (std::uint32_t j = c + 1; j < k_; ++j) tail = tail * Q + field_.mul(coords[j], scale);
    return offsets_[c] + tail;
}

Codeword SpreadCoolingCode::word_of(std::uint64_t bits) const {
    std::vector<Wire> support;
    for (std::uint32_t i = 0; i < n_; ++i)
        if ((bits >> i) & 1u) support.push_back(i);
    return Codeword(n_, std::move(support));
}

Codeset SpreadCoolingCode::codeset(std::uint64_t index) const {
    const std::vector<Elem> v = representative(index);
    Codeset out;
    std::vector<Elem> scaled(k_);
    for (Elem lambda = 1; lambda < field_.order(); ++lambda) {
        for (std::uint32_t c = 0; c < k_; ++c) scaled[c] = field_.mul(lambda, v[c]);
        out.push_back(word_of(pack(scaled)));
    }
    return out;
}

Codeword SpreadCoolingCode::encode(std::uint64_t index, const HotSet& hot) const {
    hot.check(n_, tau_ - 1);
    const std::vector<Elem> v = representative(index);
    // F_2 basis of the line: x^b * v for b < tau.
    std::vector<std::uint64_t> basis(tau_);
    std::vector<Gf2Vector> restricted(tau_, Gf2Vector(hot.size()));
    std::vector<Elem> scaled(k_);
    for (std::uint32_t b = 0; b < tau_; ++b) {
        for (std::uint32_t c = 0; c < k_; ++c) scaled[c] = field_.mul(Elem{1} << b, v[c]);
        basis[b] = pack(scaled);
        for (std::size_t s = 0; s < hot.size(); ++s) restricted[b][s] = (basis[b] >> hot.wires()[s]) & 1u;
    }
    std::vector<Gf2Vector> kernel_words;
    for (const auto& combo : gf2_left_kernel(restricted)) {
        std::uint64_t bits = 0;
        for (std::uint32_t b = 0; b < tau_; ++b)
            if (combo[b]) bits ^= basis[b];
        Gf2Vector word(n_);
        for (std::uint32_t i = 0; i < n_; ++i) word[i] = (bits >> i) & 1u;
        kernel_words.push_back(std::move(word));
    }
    const auto least = gf2_span_minimum(std::move(kernel_words));
    if (!least) throw std::logic_error("line has no nonzero point avoiding the hot set");
    std::vector<Wire> support;
    for (auto i = least->find_first(); i != Gf2Vector::npos; i = least->find_next(i))
        support.push_back(static_cast<Wire>(i));
    Codeword word(n_, std::move(support));
    if (word.weight() == 0 || !avoids(word, hot)) throw std::logic_error("cooling encoder produced an invalid word");
    return word;
}

std::uint64_t SpreadCoolingCode::decode(const Codeword& word) const {
    if (word.length() != n_) throw MalformedCodeword("word length does not match the code");
    std::uint64_t bits = 0;
    for (Wire wire : word.support()) bits |= std::uint64_t{1} << wire;
    return line_of(unpack(bits));
}

nlohmann::json SpreadCoolingCode::descriptor() const {
    return {{"construction", "spread_cooling"}, {"params", {{"n", n_}, {"t", tau_ - 1}}}};
}

MappingPtr mapping_231() {
    static const MappingPtr map = synthesize_mapping({{0}, {1, 2}}, 1).mapping;
    return map;
}

MappingPtr mapping_9_15_3() {
    static const MappingPtr map = synthesize_balanced(9, 15, 3);
    return map;
}

MappingPtr mapping_12_20_4() {
    static const MappingPtr map = synthesize_balanced(12, 20, 4);
    return map;
}

std::shared_ptr<const DominatedLpcCode> build_spread_231(std::uint32_t w, std::uint32_t t) {
    if (w < 1) throw ParameterError("spread (2,3,1) code needs w >= 1");
    auto cooling = SpreadCoolingCode::build(2 * w, t);
    std::vector<MappingPtr> copies(w, mapping_231());
    return DominatedLpcCode::build(LpcCode::from_generator(cooling), DominationMapping::product(std::move(copies)),
                                   {{"construction", "spread_231"}, {"params", {{"w", w}, {"t", t}}}});
}

std::shared_ptr<const DominatedLpcCode> build_construction4(std::uint32_t w, std::uint32_t t, std::uint32_t alpha,
                                                             std::uint32_t beta) {
    if (w < 6) throw ParameterError("Construction 4 needs w >= 6");
    if (9 * alpha + 12 * beta != 3 * w)
        throw ParameterError("Construction 4 needs 9*alpha + 12*beta = 3w (got " + std::to_string(9 * alpha + 12 * beta) +
                             " vs " + std::to_string(3 * w) + ")");
    auto cooling = SpreadCoolingCode::build(3 * w, t);
    std::vector<MappingPtr> factors;
    for (std::uint32_t i = 0; i < alpha; ++i) factors.push_back(mapping_9_15_3());
    for (std::uint32_t i = 0; i < beta; ++i) factors.push_back(mapping_12_20_4());
    return DominatedLpcCode::build(
        LpcCode::from_generator(cooling), DominationMapping::product(std::move(factors)),
        {{"construction", "construction4"}, {"params", {{"w", w}, {"t", t}, {"alpha", alpha}, {"beta", beta}}}});
}

}  // namespace lpc
