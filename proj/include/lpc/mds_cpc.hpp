#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lpc/code_model.hpp"
#include "lpc/finite_field.hpp"
#include "lpc/matrix.hpp"

namespace lpc {

/// Constant-weight cooling code built from a linear [N,K,D]_q code.
///
/// Wires form the grid F_q x [w]. The generator is kept in the block form
/// [A B; beta 0], where rows 0..K-2 restricted to `info_columns` form the identity and
/// the last row vanishes on the final N-D coordinates. Codeset sigma collects the q
/// codewords sigma*A + lambda*beta restricted to the first w coordinates, each drawn on
/// the grid as {(y_j, j)}.
class MdsCpcCode final : public CodeGenerator {
public:
    /// Extended Reed-Solomon code over GF(q): N = q+1, K = w, D = q-w+2. Coordinates are
    /// the field elements in ord order followed by the point at infinity (leading
    /// coefficient). Needs q >= 2w-2 and w >= 2.
    static std::shared_ptr<const MdsCpcCode> build_rs(std::uint32_t q, std::uint32_t w);

    /// Any K x N generator of full row rank. The minimum distance is found exhaustively,
    /// so either N <= 24 or q^K <= 2^20 is required. Needs N-D+1 <= w <= D.
    static std::shared_ptr<const MdsCpcCode> build_linear(std::uint32_t q, const MatrixQ& generator, std::uint32_t w);

    const GaloisField& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.order(); }
    std::uint32_t w() const noexcept { return w_; }
    std::uint32_t length() const noexcept { return N_; }
    std::uint32_t dimension() const noexcept { return K_; }
    std::uint32_t distance() const noexcept { return D_; }
    bool is_reed_solomon() const noexcept { return rs_; }
    /// Generator in block form, columns already permuted.
    const MatrixQ& normal_generator() const noexcept { return normal_; }
    /// column_order()[j] = column of the supplied generator placed at position j.
    const std::vector<std::size_t>& column_order() const noexcept { return order_; }
    /// Positions (among the last N-D) carrying the sigma symbols.
    const std::vector<std::size_t>& info_columns() const noexcept { return info_; }

    Codeword encode_sigma(std::span<const Elem> sigma, const HotSet& hot) const;
    /// Throws MalformedCodeword unless the word has exactly one point per column.
    std::vector<Elem> decode_sigma(const Codeword& word) const;
    /// Erasure decoding by solving x * G|[w] = y; the Reed-Solomon path uses
    /// interpolation instead and the two agree.
    std::vector<Elem> decode_sigma_linear(const Codeword& word) const;
    /// The q members of codeset sigma in lambda (ord) order.
    Codeset codeset_sigma(std::span<const Elem> sigma) const;

    CodeParams params() const override;
    std::uint64_t size() const override { return size_; }
    Codeset codeset(std::uint64_t index) const override;
    Codeword encode(std::uint64_t index, const HotSet& hot) const override;
    std::uint64_t decode(const Codeword& word) const override;
    nlohmann::json descriptor() const override;

private:
    MdsCpcCode(GaloisField field, std::uint32_t w) : field_(std::move(field)), w_(w) {}
    void finish_setup(const MatrixQ& permuted);
    std::vector<Elem> read_columns(const Codeword& word) const;
    Codeword word_from_values(std::span<const Elem> values) const;

    GaloisField field_;
    std::uint32_t w_;
    std::uint32_t N_ = 0;
    std::uint32_t K_ = 0;
    std::uint32_t D_ = 0;
    bool rs_ = false;
    std::uint64_t size_ = 0;
    MatrixQ supplied_;
    MatrixQ normal_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> info_;
};

/// Minimum Hamming weight of the code spanned by the rows of a full-rank generator,
/// found exhaustively. `witness`, when given, receives one codeword of that weight.
std::uint32_t linear_min_weight(const GaloisField& f, const MatrixQ& generator, std::vector<Elem>* witness = nullptr);

/// K x (q+1) generator of the extended Reed-Solomon code: row i holds x^i at every field
/// element and, in the last column, 1 for i = K-1 and 0 otherwise.
MatrixQ extended_rs_generator(const GaloisField& f, std::uint32_t k);

}  // namespace lpc
