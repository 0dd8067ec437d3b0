#include "lpc/mds_cpc.hpp"

#include <algorithm>
#include <numeric>

#include "lpc/errors.hpp"
#include "lpc/poly.hpp"

namespace lpc {

namespace {

constexpr std::uint64_t kMessageEnumerationCap = std::uint64_t{1} << 20;
constexpr std::uint32_t kSubsetSearchMaxLength = 24;

std::uint32_t weight_of(std::span<const Elem> v) {
    return static_cast<std::uint32_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

// Calls fn(subset) for every k-subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

MatrixQ extended_rs_generator(const GaloisField& f, std::uint32_t k) {
    const std::uint32_t q = f.order();
    MatrixQ g(k, q + 1);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (Elem x = 0; x < q; ++x) g.at(i, x) = f.pow(x, i);
        g.at(i, q) = (i + 1 == k) ? 1 : 0;
    }
    return g;
}

std::uint32_t linear_min_weight(const GaloisField& f, const MatrixQ& generator, std::vector<Elem>* witness) {
    const std::size_t k = generator.rows();
    const std::size_t n = generator.cols();
    if (k == 0 || rank(f, generator) != k) throw ParameterError("generator matrix must have full row rank");
    const std::uint32_t q = f.order();

    std::uint32_t best = static_cast<std::uint32_t>(n) + 1;
    auto consider = [&](const std::vector<Elem>& c) {
        const std::uint32_t wt = weight_of(c);
        if (wt != 0 && wt < best) {
            best = wt;
            if (witness) *witness = c;
        }
    };

    std::uint64_t messages = 1;
    bool small = true;
    for (std::size_t i = 0; i < k && small; ++i) {
        messages *= q;
        small = messages <= kMessageEnumerationCap;
    }
    if (small) {
        // One message per projective point: first nonzero coordinate equal to 1.
        for (std::uint64_t idx = 1; idx < messages; ++idx) {
            const std::vector<Elem> x = index_to_sigma(idx, q, k);
            const auto first = std::find_if(x.begin(), x.end(), [](Elem v) { return v != 0; });
            if (*first != 1) continue;
            consider(vec_mat(f, x, generator));
        }
        return best;
    }
    if (n > kSubsetSearchMaxLength)
        throw ParameterError("minimum-weight search needs N <= 24 or q^K <= 2^20");
    // A minimum-weight word vanishes on some K-1 columns of rank K-1, and is then the
    // unique (up to scale) combination killing them.
    for_each_subset(n, k - 1, [&](std::span<const std::size_t> cols) {
        const auto ker = left_kernel(f, generator.select_columns(cols));
        if (ker.size() == 1) consider(vec_mat(f, ker[0], generator));
    });
    return best;
}

std::shared_ptr<const MdsCpcCode> MdsCpcCode::build_rs(std::uint32_t q, std::uint32_t w) {
    if (w < 2) throw ParameterError("Reed-Solomon CPC needs w >= 2");
    GaloisField f(q);
    if (q < 2 * w - 2)
        throw ParameterError("Reed-Solomon CPC needs q >= 2w - 2 (q = " + std::to_string(q) +
                             ", w = " + std::to_string(w) + ")");
    std::shared_ptr<MdsCpcCode> code(new MdsCpcCode(f, w));
    code->rs_ = true;
    code->N_ = q + 1;
    code->K_ = w;
    code->D_ = q - w + 2;
    code->supplied_ = extended_rs_generator(f, w);
    code->order_.resize(code->N_);
    std::iota(code->order_.begin(), code->order_.end(), 0);
    code->finish_setup(code->supplied_);
    return code;
}

std::shared_ptr<const MdsCpcCode> MdsCpcCode::build_linear(std::uint32_t q, const MatrixQ& generator,
                                                           std::uint32_t w) {
    GaloisField f(q);
    for (Elem v : generator.data())
        if (!f.contains(v)) throw ParameterError("generator entry outside GF(" + std::to_string(q) + ")");
    const std::uint32_t N = static_cast<std::uint32_t>(generator.cols());
    const std::uint32_t K = static_cast<std::uint32_t>(generator.rows());
    if (K < 1 || N < K) throw ParameterError("generator must be K x N with 1 <= K <= N");

    std::vector<Elem> witness;
    const std::uint32_t D = linear_min_weight(f, generator, &witness);
    if (w > D)
        throw ParameterError("linear CPC needs w <= D (w = " + std::to_string(w) + ", D = " + std::to_string(D) + ")");
    if (N - D + 1 > w)
        throw ParameterError("linear CPC needs N - D + 1 <= w (N = " + std::to_string(N) +
                             ", D = " + std::to_string(D) + ", w = " + std::to_string(w) + ")");

    std::shared_ptr<MdsCpcCode> code(new MdsCpcCode(f, w));
    code->N_ = N;
    code->K_ = K;
    code->D_ = D;
    code->supplied_ = generator;

    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    const std::span<const std::size_t> tail(order.data() + D, N - D);
    if (rank(f, generator.select_columns(tail)) != K - 1) {
        // Move the zero set of a minimum-weight word to the end.
        std::stable_partition(order.begin(), order.end(), [&](std::size_t c) { return witness[c] != 0; });
    }
    code->order_ = order;
    code->finish_setup(generator.select_columns(order));
    return code;
}

void MdsCpcCode::finish_setup(const MatrixQ& permuted) {
    const GaloisField& f = field_;
    MatrixQ g = permuted;
    const std::size_t suffix_begin = D_;
    std::size_t r = 0;
    for (std::size_t c = suffix_begin; c < N_ && r + 1 < K_; ++c) {
        std::size_t piv = r;
        while (piv < K_ && g.at(piv, c) == 0) ++piv;
        if (piv == K_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < N_; ++j) std::swap(g.at(piv, j), g.at(r, j));
        const Elem scale = f.inv(g.at(r, c));
        for (std::size_t j = 0; j < N_; ++j) g.at(r, j) = f.mul(g.at(r, j), scale);
        for (std::size_t i = 0; i < K_; ++i) {
            if (i == r || g.at(i, c) == 0) continue;
            const Elem factor = g.at(i, c);
            for (std::size_t j = 0; j < N_; ++j) g.at(i, j) = f.sub(g.at(i, j), f.mul(factor, g.at(r, j)));
        }
        info_.push_back(c);
        ++r;
    }
    if (r + 1 != K_) throw ParameterError("the last N - D columns do not have rank K - 1");
    for (std::size_t c = suffix_begin; c < N_; ++c)
        if (g.at(K_ - 1, c) != 0) throw ParameterError("the last N - D columns have rank K, expected K - 1");
    std::size_t lead = 0;
    while (lead < N_ && g.at(K_ - 1, lead) == 0) ++lead;
    if (lead == N_) throw ParameterError("generator lost rank during reduction");
    const Elem scale = f.inv(g.at(K_ - 1, lead));
    for (std::size_t j = 0; j < N_; ++j) g.at(K_ - 1, j) = f.mul(g.at(K_ - 1, j), scale);
    normal_ = std::move(g);
    size_ = checked_power(q(), K_ - 1);
}

CodeParams MdsCpcCode::params() const {
    return CodeParams{q() * w_, q() - 1, w_, CodeKind::cpc, 0};
}

Codeword MdsCpcCode::word_from_values(std::span<const Elem> values) const {
    std::vector<Wire> support(w_);
    for (std::uint32_t j = 0; j < w_; ++j) support[j] = grid_wire(q(), {values[j], j});
    return Codeword(q() * w_, std::move(support));
}

Codeset MdsCpcCode::codeset_sigma(std::span<const Elem> sigma) const {
    if (sigma.size() + 1 != K_) throw ParameterError("sigma must have K - 1 symbols");
    std::vector<Elem> x(sigma.begin(), sigma.end());
    x.push_back(0);
    Codeset out;
    out.reserve(q());
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        x.back() = lambda;
        std::vector<Elem> values = vec_mat(field_, x, normal_);
        values.resize(w_);
        out.push_back(word_from_values(values));
    }
    return out;
}

Codeword MdsCpcCode::encode_sigma(std::span<const Elem> sigma, const HotSet& hot) const {
    const CodeParams p = params();
    hot.check(p.n, p.t);
    if (sigma.size() + 1 != K_) throw ParameterError("sigma must have K - 1 symbols");
    for (Elem s : sigma)
        if (!field_.contains(s)) throw ParameterError("sigma symbol outside the field");

    std::vector<Elem> r(w_, 0);
    for (std::size_t i = 0; i + 1 < K_; ++i) {
        if (sigma[i] == 0) continue;
        for (std::uint32_t j = 0; j < w_; ++j) r[j] = field_.add(r[j], field_.mul(sigma[i], normal_.at(i, j)));
    }
    std::vector<Elem> values(w_);
    for (Elem lambda = 0; lambda < q(); ++lambda) {
        bool clear = true;
        for (std::uint32_t j = 0; j < w_ && clear; ++j) {
            values[j] = field_.add(r[j], field_.mul(lambda, normal_.at(K_ - 1, j)));
            clear = !hot.contains(grid_wire(q(), {values[j], j}));
        }
        if (clear) return word_from_values(values);
    }
    throw ParameterError("no member of the codeset avoids the hot set");
}

std::vector<Elem> MdsCpcCode::read_columns(const Codeword& word) const {
    if (word.length() != q() * w_) throw MalformedCodeword("word length does not match the code");
    const auto cols = grid_columns(q(), w_, word);
    std::vector<Elem> y(w_);
    for (std::uint32_t j = 0; j < w_; ++j) {
        if (cols[j].size() != 1)
            throw MalformedCodeword("column " + std::to_string(j) + " has " + std::to_string(cols[j].size()) +
                                    " lit wires, expected exactly one");
        y[j] = cols[j][0];
    }
    return y;
}

std::vector<Elem> MdsCpcCode::decode_sigma(const Codeword& word) const {
    if (!rs_) return decode_sigma_linear(word);
    const std::vector<Elem> y = read_columns(word);
    // Clean coordinates are the first w field elements; the suffix holds the remaining
    // K-2 largest ones and infinity.
    std::vector<EvalPoint> pts(w_);
    for (std::uint32_t j = 0; j < w_; ++j) pts[j] = {j, y[j]};
    std::vector<Elem> sigma(K_ - 1);
    for (std::size_t i = 0; i + 2 < K_; ++i) sigma[i] = lagrange_eval(field_, pts, static_cast<Elem>(info_[i]));
    sigma[K_ - 2] = lagrange_leading_coeff(field_, pts);
    return sigma;
}

std::vector<Elem> MdsCpcCode::decode_sigma_linear(const Codeword& word) const {
    const std::vector<Elem> y = read_columns(word);
    std::vector<std::size_t> first(w_);
    std::iota(first.begin(), first.end(), 0);
    const auto x = solve_left(field_, normal_.select_columns(first), y);
    if (!x) throw DecodeError("received word is not a codeword of the underlying linear code");
    return std::vector<Elem>(x->begin(), x->end() - 1);
}

Codeset MdsCpcCode::codeset(std::uint64_t index) const {
    if (index >= size_) throw ParameterError("codeset index out of range");
    return codeset_sigma(index_to_sigma(index, q(), K_ - 1));
}

Codeword MdsCpcCode::encode(std::uint64_t index, const HotSet& hot) const {
    if (index >= size_) throw ParameterError("codeset index out of range");
    return encode_sigma(index_to_sigma(index, q(), K_ - 1), hot);
}

std::uint64_t MdsCpcCode::decode(const Codeword& word) const { return sigma_to_index(decode_sigma(word), q()); }

nlohmann::json MdsCpcCode::descriptor() const {
    if (rs_) return {{"construction", "mds_cpc"}, {"params", {{"q", q()}, {"w", w_}}}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < supplied_.rows(); ++i) {
        const auto row = supplied_.row(i);
        rows.push_back(std::vector<Elem>(row.begin(), row.end()));
    }
    return {{"construction", "linear_cpc"}, {"params", {{"q", q()}, {"w", w_}, {"generator", rows}}}};
}

}  // namespace lpc
