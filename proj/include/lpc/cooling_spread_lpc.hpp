#pragma once

#include <memory>
#include <vector>

#include "lpc/code_model.hpp"
#include "lpc/domination_map.hpp"
#include "lpc/finite_field.hpp"

namespace lpc {

/// (n, t)-cooling code whose codesets are the nonzero points of the lines of GF(Q)^k,
/// Q = 2^(t+1), k = n / (t+1).
///
/// Binary wire c*(t+1) + b carries bit b of coordinate c. A line is indexed by its
/// representative with first nonzero coordinate 1; representatives are numbered in
/// lexicographic order, coordinate 0 most significant.
class SpreadCoolingCode final : public CodeGenerator {
public:
    static constexpr std::uint32_t kMaxLength = 64;

    /// Needs (t+1) | n, n <= 64 and t+1 <= 16.
    static std::shared_ptr<const SpreadCoolingCode> build(std::uint32_t n, std::uint32_t t);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t t() const noexcept { return tau_ - 1; }
    std::uint32_t dimension() const noexcept { return k_; }
    const GaloisField& field() const noexcept { return field_; }
    /// Every integer below 2^(n-t-1) is a valid message index.
    std::uint32_t message_bits() const noexcept { return n_ - tau_; }

    /// Canonical representative of line `index` as GF(Q) coordinates.
    std::vector<Elem> representative(std::uint64_t index) const;
    /// Line index of a nonzero vector.
    std::uint64_t line_of(const std::vector<Elem>& coords) const;

    std::uint64_t pack(const std::vector<Elem>& coords) const;
    std::vector<Elem> unpack(std::uint64_t bits) const;

    CodeParams params() const override;
    std::uint64_t size() const override { return size_; }
    /// The Q-1 nonzero multiples lambda * representative, lambda in ord order.
    Codeset codeset(std::uint64_t index) const override;
    /// The least (as an integer, wire i worth 2^i) nonzero word of the line vanishing on
    /// the hot wires.
    Codeword encode(std::uint64_t index, const HotSet& hot) const override;
    std::uint64_t decode(const Codeword& word) const override;
    nlohmann::json descriptor() const override;

private:
    SpreadCoolingCode(GaloisField f, std::uint32_t n, std::uint32_t tau)
        : field_(std::move(f)), n_(n), tau_(tau), k_(n / tau) {}
    Codeword word_of(std::uint64_t bits) const;

    GaloisField field_;
    std::uint32_t n_;
    std::uint32_t tau_;
    std::uint32_t k_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> offsets_;  // [c] = first index whose leading coordinate is c
};

/// Cooling code through w copies of the (2,3,1) leaf: a (3w, t, w)-LPC code of size
/// (2^(2w) - 1) / (2^(t+1) - 1). Needs (t+1) | 2w.
std::shared_ptr<const DominatedLpcCode> build_spread_231(std::uint32_t w, std::uint32_t t);

/// Cooling code on m = 3w wires through alpha (9,15,3) and beta (12,20,4) mappings: a
/// (5w, t, w)-LPC code. Needs w >= 6, 9 alpha + 12 beta = 3w and (t+1) | 3w.
std::shared_ptr<const DominatedLpcCode> build_construction4(std::uint32_t w, std::uint32_t t, std::uint32_t alpha,
                                                             std::uint32_t beta);

/// The (2,3,1) leaf: groups {0}, {1,2}; 00 -> 000, 10 -> 100, 01 -> 010, 11 -> 001.
MappingPtr mapping_231();
/// Balanced-partition syntheses, computed once per process.
MappingPtr mapping_9_15_3();
MappingPtr mapping_12_20_4();

}  // namespace lpc
