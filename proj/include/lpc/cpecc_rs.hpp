#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lpc/code_model.hpp"
#include "lpc/poly.hpp"

namespace lpc {

enum class RsDecoder { automatic, brute_force, berlekamp_welch };

/// Received Reed-Solomon symbol; nullopt marks an erasure.
using RsSymbol = std::optional<Elem>;

/// Polynomial of degree < k agreeing with `received` (evaluated at `points`) on all but
/// at most floor((unerased - k) / 2) unerased positions, or nullopt when none exists.
/// Correct whenever 2 * errors + erasures <= points.size() - k.
std::optional<Poly> rs_decode_errors_erasures(const GaloisField& f, std::span<const Elem> points,
                                              std::span<const RsSymbol> received, std::uint32_t k,
                                              RsDecoder method = RsDecoder::automatic);

/// Error-correcting constant-weight cooling code from polynomial evaluations.
///
/// Wires form the grid F_q x [w]. A polynomial f of degree <= w-e-1 gives the word
/// {(f(a_j), j)}; codeset sigma holds the q polynomials with f(b_i) = sigma_i. The a
/// points are the first w field elements and the b points the next w-e-1, in ord order.
class CpeccCode final : public CodeGenerator {
public:
    /// Needs e >= 1, w >= e+2 and q >= 2w-e-1.
    static std::shared_ptr<const CpeccCode> build(std::uint32_t q, std::uint32_t w, std::uint32_t e);

    const GaloisField& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.order(); }
    std::uint32_t w() const noexcept { return w_; }
    std::uint32_t e() const noexcept { return e_; }
    const std::vector<Elem>& a_points() const noexcept { return a_; }
    const std::vector<Elem>& b_points() const noexcept { return b_; }

    /// The codeword drawn from polynomial f.
    Codeword word_of(const Poly& f) const;
    /// Members of codeset sigma in lambda (ord) order: f = L_sigma + lambda * Z.
    Codeset codeset_sigma(std::span<const Elem> sigma) const;
    Codeword encode_sigma(std::span<const Elem> sigma, const HotSet& hot) const;
    /// Columns with exactly one lit wire give a symbol, the rest are erasures. Throws
    /// DecodeError when the erasure/error pattern is beyond the decoder.
    std::vector<Elem> decode_sigma(const Codeword& received, RsDecoder method = RsDecoder::automatic) const;

    CodeParams params() const override;
    std::uint64_t size() const override { return size_; }
    Codeset codeset(std::uint64_t index) const override;
    Codeword encode(std::uint64_t index, const HotSet& hot) const override;
    std::uint64_t decode(const Codeword& word) const override;
    nlohmann::json descriptor() const override;

private:
    CpeccCode(GaloisField field, std::uint32_t w, std::uint32_t e) : field_(std::move(field)), w_(w), e_(e) {}
    std::vector<Elem> base_values(std::span<const Elem> sigma) const;

    GaloisField field_;
    std::uint32_t w_;
    std::uint32_t e_;
    std::uint64_t size_ = 0;
    std::vector<Elem> a_;
    std::vector<Elem> b_;
    std::vector<Elem> z_at_a_;  // prod_i (a_j - b_i)
};

}  // namespace lpc
