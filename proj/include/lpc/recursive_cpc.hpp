#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lpc/code_model.hpp"
#include "lpc/poly.hpp"

namespace lpc {

/// (n*q, t*q, w) code obtained by substituting an inner (n,t,w) code into the blocks of
/// polynomial parallel classes over F_q x [n].
///
/// The outer block of a polynomial f is {(f(a_j), j) : j in [n]}; a points are the first
/// n field elements, b points the next w-1. An inner codeset of weight w' is paired with
/// the classes of polynomials of degree <= w'-1 (w' - 1 b points fixed), so a uniform
/// inner code of size m gives m * q^(w-1) codesets. Inner wire j maps to grid column j.
///
/// Codesets are numbered inner-codeset major: all classes of inner codeset 0 first, each
/// class by its sigma integer.
class RecursiveCpcCode final : public CodeGenerator {
public:
    /// Needs q prime power, q >= n + w - 1, inner codesets of uniform weight >= 1.
    /// A null descriptor records q and the inner code inline.
    static std::shared_ptr<const RecursiveCpcCode> build(std::uint32_t q, LpcCode inner,
                                                         nlohmann::json descriptor = nullptr);

    struct Label {
        std::uint64_t sigma = 0;  ///< outer class, as a base-q integer
        std::uint64_t inner = 0;  ///< inner codeset
        friend bool operator==(const Label&, const Label&) = default;
    };

    const GaloisField& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.order(); }
    const LpcCode& inner() const noexcept { return inner_; }
    const std::vector<Elem>& a_points() const noexcept { return a_; }
    const std::vector<Elem>& b_points() const noexcept { return b_; }
    std::uint32_t inner_weight(std::uint64_t inner_index) const { return weights_.at(inner_index); }

    std::uint64_t index_of(Label label) const;
    Label label_of(std::uint64_t index) const;

    /// Column values of the block lambda in class sigma of weight-w' polynomials.
    std::vector<Elem> block_values(std::uint32_t weight, std::uint64_t sigma, Elem lambda) const;
    Label decode_label(const Codeword& word) const;

    CodeParams params() const override;
    std::uint64_t size() const override { return offsets_.back(); }
    Codeset codeset(std::uint64_t index) const override;
    Codeword encode(std::uint64_t index, const HotSet& hot) const override;
    std::uint64_t decode(const Codeword& word) const override;
    nlohmann::json descriptor() const override { return descriptor_; }
    std::vector<std::string> warnings() const override;

private:
    RecursiveCpcCode(GaloisField f, LpcCode inner) : field_(std::move(f)), inner_(std::move(inner)) {}
    Codeword lift(const std::vector<Elem>& values, const Codeword& inner_word) const;

    GaloisField field_;
    LpcCode inner_;
    std::vector<Elem> a_;
    std::vector<Elem> b_;
    std::vector<std::uint32_t> weights_;        // per inner codeset
    std::vector<std::uint64_t> offsets_;        // prefix sums of q^(w'-1), size m+1
    std::vector<std::vector<Elem>> z_at_a_;     // [w'] -> prod_{i<w'-1} (a_j - b_i)
    nlohmann::json descriptor_;
};

/// Single codeset holding every weight-w word on n wires: an (n, t, w)-CPC for t <= n-w.
LpcCode build_trivial_inner(std::uint32_t n, std::uint32_t w, std::uint32_t t);

/// (nq, tq, w)-CPC of size q^(w-1) from the trivial inner code.
std::shared_ptr<const RecursiveCpcCode> build_recursive_trivial(std::uint32_t n, std::uint32_t t, std::uint32_t w,
                                                                 std::uint32_t q);

/// (nq, tq, w)-LPC of size sum_{i<w} q^i: the trivial constructions for every weight
/// 1..w side by side.
std::shared_ptr<const RecursiveCpcCode> build_lpc_union(std::uint32_t n, std::uint32_t t, std::uint32_t w,
                                                         std::uint32_t q);

}  // namespace lpc
