#include "lpc/recursive_cpc.hpp"

#include <algorithm>

#include "lpc/code_io.hpp"
#include "lpc/errors.hpp"

namespace lpc {

std::shared_ptr<const RecursiveCpcCode> RecursiveCpcCode::build(std::uint32_t q, LpcCode inner,
                                                                nlohmann::json descriptor) {
    GaloisField f(q);
    const CodeParams ip = inner.params();
    if (ip.kind == CodeKind::cooling) throw ParameterError("inner code must be an LPC or CPC code");
    if (ip.w < 1) throw ParameterError("inner code needs w >= 1");
    if (std::uint64_t{q} < std::uint64_t{ip.n} + ip.w - 1)
        throw ParameterError("recursive construction needs q >= n + w - 1 (q = " + std::to_string(q) +
                             ", n + w - 1 = " + std::to_string(ip.n + ip.w - 1) + ")");
    if (std::uint64_t{q} * ip.n > (std::uint64_t{1} << 31)) throw ParameterError("n * q too large");

    std::shared_ptr<RecursiveCpcCode> code(new RecursiveCpcCode(f, inner));
    if (inner.is_explicit()) {
        for (std::size_t l = 0; l < inner.codesets().size(); ++l) {
            const Codeset& cs = inner.codesets()[l];
            const std::uint32_t wt = cs.front().weight();
            for (const auto& word : cs)
                if (word.weight() != wt)
                    throw ParameterError("inner codeset " + std::to_string(l) +
                                         " mixes codeword weights; each codeset must be uniform");
            if (wt < 1) throw ParameterError("inner codeset " + std::to_string(l) + " holds the empty word");
            code->weights_.push_back(wt);
        }
    } else {
        if (ip.kind == CodeKind::lpc)
            throw ParameterError("a generator-backed inner code must be constant-weight (cpc or cpecc)");
        code->weights_.assign(inner.size(), ip.w);
    }

    code->offsets_.assign(1, 0);
    for (std::uint32_t wt : code->weights_) {
        const std::uint64_t classes = checked_power(q, wt - 1);
        if (code->offsets_.back() > (std::uint64_t{1} << 62) - classes) throw ParameterError("code size overflows");
        code->offsets_.push_back(code->offsets_.back() + classes);
    }

    code->a_ = field_elements(0, ip.n);
    code->b_ = field_elements(ip.n, ip.w - 1);
    code->z_at_a_.resize(ip.w + 1);
    for (std::uint32_t wt = 1; wt <= ip.w; ++wt) {
        const Poly z = poly_from_roots(f, std::span<const Elem>(code->b_.data(), wt - 1));
        for (Elem a : code->a_) code->z_at_a_[wt].push_back(poly_eval(f, z, a));
    }
    if (descriptor.is_null())
        descriptor = {{"construction", "recursive_cpc"}, {"params", {{"q", q}, {"inner", code_to_json(inner)}}}};
    code->descriptor_ = std::move(descriptor);
    return code;
}

CodeParams RecursiveCpcCode::params() const {
    const CodeParams ip = inner_.params();
    return CodeParams{ip.n * q(), ip.t * q(), ip.w, ip.kind == CodeKind::lpc ? CodeKind::lpc : CodeKind::cpc, 0};
}

std::vector<std::string> RecursiveCpcCode::warnings() const {
    const CodeParams ip = inner_.params();
    if (std::uint64_t{ip.t} * ip.w < ip.n)
        return {"inner code has t < n/w (t = " + std::to_string(ip.t) + ", n = " + std::to_string(ip.n) +
                ", w = " + std::to_string(ip.w) + "); the direct Reed-Solomon construction is usually larger here"};
    return {};
}

std::uint64_t RecursiveCpcCode::index_of(Label label) const {
    if (label.inner >= weights_.size()) throw ParameterError("inner codeset index out of range");
    const std::uint64_t classes = offsets_[label.inner + 1] - offsets_[label.inner];
    if (label.sigma >= classes) throw ParameterError("outer class index out of range");
    return offsets_[label.inner] + label.sigma;
}

RecursiveCpcCode::Label RecursiveCpcCode::label_of(std::uint64_t index) const {
    if (index >= size()) throw ParameterError("codeset index out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const std::uint64_t l = static_cast<std::uint64_t>(it - offsets_.begin()) - 1;
    return Label{index - offsets_[l], l};
}

std::vector<Elem> RecursiveCpcCode::block_values(std::uint32_t weight, std::uint64_t sigma, Elem lambda) const {
    if (weight < 1 || weight > inner_.params().w) throw ParameterError("block weight out of range");
    const std::vector<Elem> s = index_to_sigma(sigma, q(), weight - 1);
    std::vector<EvalPoint> pts(weight - 1);
    for (std::uint32_t i = 0; i + 1 < weight; ++i) pts[i] = {b_[i], s[i]};
    const Poly base = lagrange_interpolate(field_, pts);
    std::vector<Elem> values(a_.size());
    for (std::size_t j = 0; j < a_.size(); ++j)
        values[j] = field_.add(poly_eval(field_, base, a_[j]), field_.mul(lambda, z_at_a_[weight][j]));
    return values;
}

Codeword RecursiveCpcCode::lift(const std::vector<Elem>& values, const Codeword& inner_word) const {
    std::vector<Wire> support;
    support.reserve(inner_word.weight());
    for (Wire j : inner_word.support()) support.push_back(grid_wire(q(), {values[j], j}));
    return Codeword(static_cast<std::uint32_t>(a_.size()) * q(), std::move(support));
}

Codeset RecursiveCpcCode::codeset(std::uint64_t index) const {
    const Label label = label_of(index);
    const std::uint32_t wt = weights_[label.inner];
    const Codeset inner_words = inner_.codeset(label.inner);
    Codeset out;
    out.reserve(inner_words.size() * q());
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        const std::vector<Elem> values = block_values(wt, label.sigma, lambda);
        for (const auto& u : inner_words) out.push_back(lift(values, u));
    }
    return out;
}

Codeword RecursiveCpcCode::encode(std::uint64_t index, const HotSet& hot) const {
    const CodeParams p = params();
    hot.check(p.n, p.t);
    const Label label = label_of(index);
    const std::uint32_t wt = weights_[label.inner];
    const std::uint32_t t_inner = inner_.params().t;
    const std::vector<Elem> base = block_values(wt, label.sigma, 0);
    std::vector<Elem> values(a_.size());
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        std::vector<Wire> inner_hot;
        for (std::size_t j = 0; j < a_.size() && inner_hot.size() <= t_inner; ++j) {
            values[j] = field_.add(base[j], field_.mul(lambda, z_at_a_[wt][j]));
            if (hot.contains(grid_wire(q(), {values[j], static_cast<std::uint32_t>(j)})))
                inner_hot.push_back(static_cast<Wire>(j));
        }
        if (inner_hot.size() > t_inner) continue;
        const Codeword u = inner_.encode(label.inner, HotSet(std::move(inner_hot)));
        return lift(values, u);
    }
    throw ParameterError("no block of the class meets the hot set in at most t_inner points");
}

RecursiveCpcCode::Label RecursiveCpcCode::decode_label(const Codeword& word) const {
    const CodeParams p = params();
    if (word.length() != p.n) throw MalformedCodeword("word length does not match the code");
    const auto cols = grid_columns(q(), static_cast<std::uint32_t>(a_.size()), word);
    std::vector<Wire> inner_support;
    std::vector<EvalPoint> pts;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() > 1) throw MalformedCodeword("two lit wires in grid column " + std::to_string(j));
        if (cols[j].size() == 1) {
            inner_support.push_back(static_cast<Wire>(j));
            pts.emplace_back(a_[j], cols[j][0]);
        }
    }
    const std::uint32_t wt = static_cast<std::uint32_t>(pts.size());
    if (wt < 1 || wt > p.w) throw MalformedCodeword("word weight outside [1, w]");
    std::uint64_t l = 0;
    try {
        l = inner_.decode(Codeword(inner_.params().n, inner_support));
    } catch (const DecodeError& err) {
        throw MalformedCodeword(std::string("column pattern is not an inner codeword: ") + err.what());
    }
    if (weights_.at(l) != wt) throw MalformedCodeword("inner codeset weight does not match the word");
    // The unique polynomial of degree < wt through the lit points identifies the block.
    const Poly f = lagrange_interpolate(field_, pts);
    std::vector<Elem> sigma(wt - 1);
    for (std::uint32_t i = 0; i + 1 < wt; ++i) sigma[i] = poly_eval(field_, f, b_[i]);
    return Label{sigma_to_index(sigma, q()), l};
}

std::uint64_t RecursiveCpcCode::decode(const Codeword& word) const { return index_of(decode_label(word)); }

LpcCode build_trivial_inner(std::uint32_t n, std::uint32_t w, std::uint32_t t) {
    CodeParams p{n, t, w, CodeKind::cpc, 0};
    p.check();
    return LpcCode::from_codesets(p, {all_words_of_weight(n, w)});
}

std::shared_ptr<const RecursiveCpcCode> build_recursive_trivial(std::uint32_t n, std::uint32_t t, std::uint32_t w,
                                                                 std::uint32_t q) {
    return RecursiveCpcCode::build(
        q, build_trivial_inner(n, w, t),
        {{"construction", "recursive_trivial"}, {"params", {{"n", n}, {"t", t}, {"w", w}, {"q", q}}}});
}

std::shared_ptr<const RecursiveCpcCode> build_lpc_union(std::uint32_t n, std::uint32_t t, std::uint32_t w,
                                                         std::uint32_t q) {
    CodeParams p{n, t, w, CodeKind::lpc, 0};
    p.check();
    if (w < 1) throw ParameterError("LPC union needs w >= 1");
    std::vector<Codeset> sets;
    for (std::uint32_t wt = 1; wt <= w; ++wt) sets.push_back(all_words_of_weight(n, wt));
    return RecursiveCpcCode::build(q, LpcCode::from_codesets(p, std::move(sets)),
                                   {{"construction", "lpc_union"}, {"params", {{"n", n}, {"t", t}, {"w", w}, {"q", q}}}});
}

}  // namespace lpc
