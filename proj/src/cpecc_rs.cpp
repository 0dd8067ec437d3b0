#include "lpc/cpecc_rs.hpp"

#include <algorithm>

#include "lpc/errors.hpp"
#include "lpc/matrix.hpp"

namespace lpc {

namespace {

constexpr std::uint64_t kBruteForceSubsetCap = 20'000;

std::uint64_t count_subsets(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kBruteForceSubsetCap) return r;
    }
    return r;
}

std::size_t agreements(const GaloisField& f, const Poly& p, std::span<const EvalPoint> pts) {
    std::size_t n = 0;
    for (const auto& [x, y] : pts) n += poly_eval(f, p, x) == y;
    return n;
}

std::optional<Poly> decode_brute_force(const GaloisField& f, std::span<const EvalPoint> pts, std::uint32_t k,
                                       std::size_t radius) {
    const std::size_t m = pts.size();
    std::vector<bool> dropped(m, false);
    for (std::size_t s = 0; s <= radius; ++s) {
        // Walk the s-subsets of error positions in lexicographic order.
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::fill(dropped.begin(), dropped.end(), false);
            for (std::size_t i : idx) dropped[i] = true;
            std::vector<EvalPoint> basis;
            for (std::size_t i = 0; i < m && basis.size() < k; ++i)
                if (!dropped[i]) basis.push_back(pts[i]);
            const Poly cand = lagrange_interpolate(f, basis);
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                if (!dropped[i]) ok = poly_eval(f, cand, pts[i].first) == pts[i].second;
            if (ok) return cand;

            std::size_t i = s;
            while (i > 0 && idx[i - 1] == m - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Poly> decode_berlekamp_welch(const GaloisField& f, std::span<const EvalPoint> pts, std::uint32_t k,
                                           std::size_t radius) {
    const std::size_t m = pts.size();
    const std::size_t tau = radius;
    // Unknowns: E = x^tau + sum_{l<tau} e_l x^l and Q = sum_{j<tau+k} c_j x^j with
    // Q(x_i) = y_i E(x_i). The system is written transposed so that solve_left applies.
    const std::size_t unknowns = tau + tau + k;
    MatrixQ sys(unknowns, m);
    std::vector<Elem> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto [x, y] = pts[i];
        Elem xp = 1;
        for (std::size_t j = 0; j < tau + k; ++j) {
            sys.at(tau + j, i) = xp;
            if (j < tau) sys.at(j, i) = f.neg(f.mul(y, xp));
            xp = f.mul(xp, x);
        }
        rhs[i] = f.mul(y, f.pow(x, tau));
    }
    const auto sol = solve_left(f, sys, rhs);
    if (!sol) return std::nullopt;
    std::vector<Elem> ecoef(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(tau));
    ecoef.push_back(1);
    const Poly err(ecoef);
    const Poly num(std::vector<Elem>(sol->begin() + static_cast<std::ptrdiff_t>(tau), sol->end()));
    auto [quot, rem] = poly_divmod(f, num, err);
    if (!rem.is_zero() || quot.degree() >= static_cast<int>(k)) return std::nullopt;
    if (agreements(f, quot, pts) + radius < m) return std::nullopt;
    return quot;
}

}  // namespace

std::optional<Poly> rs_decode_errors_erasures(const GaloisField& f, std::span<const Elem> points,
                                              std::span<const RsSymbol> received, std::uint32_t k, RsDecoder method) {
    if (points.size() != received.size()) throw ParameterError("received word length differs from the point count");
    if (k == 0) throw ParameterError("Reed-Solomon dimension must be positive");
    std::vector<EvalPoint> pts;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (received[i]) pts.emplace_back(points[i], *received[i]);
    if (pts.size() < k) return std::nullopt;
    const std::size_t radius = (pts.size() - k) / 2;

    if (method == RsDecoder::automatic)
        method = count_subsets(pts.size(), radius) <= kBruteForceSubsetCap ? RsDecoder::brute_force
                                                                            : RsDecoder::berlekamp_welch;
    if (method == RsDecoder::brute_force) return decode_brute_force(f, pts, k, radius);
    return decode_berlekamp_welch(f, pts, k, radius);
}

std::shared_ptr<const CpeccCode> CpeccCode::build(std::uint32_t q, std::uint32_t w, std::uint32_t e) {
    if (e < 1) throw ParameterError("CPECC needs e >= 1");
    if (w < e + 2) throw ParameterError("CPECC needs w >= e + 2 (w = " + std::to_string(w) + ", e = " +
                                        std::to_string(e) + ")");
    GaloisField f(q);
    if (q < 2 * w - e - 1)
        throw ParameterError("CPECC needs q >= 2w - e - 1 (q = " + std::to_string(q) + ", 2w - e - 1 = " +
                             std::to_string(2 * w - e - 1) + ")");
    std::shared_ptr<CpeccCode> code(new CpeccCode(f, w, e));
    code->a_ = field_elements(0, w);
    code->b_ = field_elements(w, w - e - 1);
    code->size_ = checked_power(q, w - e - 1);
    const Poly z = poly_from_roots(f, code->b_);
    for (Elem a : code->a_) code->z_at_a_.push_back(poly_eval(f, z, a));
    return code;
}

CodeParams CpeccCode::params() const { return CodeParams{q() * w_, q() - 1, w_, CodeKind::cpecc, e_}; }

Codeword CpeccCode::word_of(const Poly& f) const {
    std::vector<Wire> support(w_);
    for (std::uint32_t j = 0; j < w_; ++j) support[j] = grid_wire(q(), {poly_eval(field_, f, a_[j]), j});
    return Codeword(q() * w_, std::move(support));
}

std::vector<Elem> CpeccCode::base_values(std::span<const Elem> sigma) const {
    if (sigma.size() != b_.size()) throw ParameterError("sigma must have w - e - 1 symbols");
    std::vector<EvalPoint> pts(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (!field_.contains(sigma[i])) throw ParameterError("sigma symbol outside the field");
        pts[i] = {b_[i], sigma[i]};
    }
    const Poly base = lagrange_interpolate(field_, pts);
    std::vector<Elem> values(w_);
    for (std::uint32_t j = 0; j < w_; ++j) values[j] = poly_eval(field_, base, a_[j]);
    return values;
}

Codeset CpeccCode::codeset_sigma(std::span<const Elem> sigma) const {
    const std::vector<Elem> base = base_values(sigma);
    Codeset out;
    out.reserve(q());
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        std::vector<Wire> support(w_);
        for (std::uint32_t j = 0; j < w_; ++j)
            support[j] = grid_wire(q(), {field_.add(base[j], field_.mul(lambda, z_at_a_[j])), j});
        out.emplace_back(q() * w_, std::move(support));
    }
    return out;
}

Codeword CpeccCode::encode_sigma(std::span<const Elem> sigma, const HotSet& hot) const {
    const CodeParams p = params();
    hot.check(p.n, p.t);
    const std::vector<Elem> base = base_values(sigma);
    std::vector<Wire> support(w_);
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        bool clear = true;
        for (std::uint32_t j = 0; j < w_ && clear; ++j) {
            support[j] = grid_wire(q(), {field_.add(base[j], field_.mul(lambda, z_at_a_[j])), j});
            clear = !hot.contains(support[j]);
        }
        if (clear) return Codeword(p.n, support);
    }
    throw ParameterError("no member of the codeset avoids the hot set");
}

std::vector<Elem> CpeccCode::decode_sigma(const Codeword& received, RsDecoder method) const {
    if (received.length() != q() * w_) throw MalformedCodeword("word length does not match the code");
    const auto cols = grid_columns(q(), w_, received);
    std::vector<RsSymbol> y(w_);
    for (std::uint32_t j = 0; j < w_; ++j)
        if (cols[j].size() == 1) y[j] = cols[j][0];
    const auto poly = rs_decode_errors_erasures(field_, a_, y, w_ - e_, method);
    if (!poly) throw DecodeError("too many errors and erasures to decode");
    std::vector<Elem> sigma(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) sigma[i] = poly_eval(field_, *poly, b_[i]);
    return sigma;
}

Codeset CpeccCode::codeset(std::uint64_t index) const {
    if (index >= size_) throw ParameterError("codeset index out of range");
    return codeset_sigma(index_to_sigma(index, q(), b_.size()));
}

Codeword CpeccCode::encode(std::uint64_t index, const HotSet& hot) const {
    if (index >= size_) throw ParameterError("codeset index out of range");
    return encode_sigma(index_to_sigma(index, q(), b_.size()), hot);
}

std::uint64_t CpeccCode::decode(const Codeword& word) const { return sigma_to_index(decode_sigma(word), q()); }

nlohmann::json CpeccCode::descriptor() const {
    return {{"construction", "cpecc"}, {"params", {{"q", q()}, {"w", w_}, {"e", e_}}}};
}

}  // namespace lpc
