#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace lpc {

/// Field element of GF(p^k): the little-endian base-p digits of the value are the
/// coefficients of the element over the prime subfield. This numbering ("ord") is also
/// the order in which field elements are enumerated everywhere in the library.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct PrimePower {
    std::uint32_t prime = 0;
    std::uint32_t exponent = 0;
};

/// Decomposes q as p^k; returns {0,0} when q is not a prime power.
PrimePower factor_prime_power(std::uint64_t q);

/// Monic irreducible of degree k over GF(p) whose non-leading coefficients, read as
/// base-p digits (constant term first), give the smallest integer. Coefficients are
/// returned lowest degree first, leading 1 included.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k);

/// Arithmetic context for GF(q), q = p^k <= 2^16.
///
/// Multiplication goes through log/antilog tables built from the least primitive
/// element; addition is XOR for p = 2, modular for k = 1 and digit-wise otherwise.
/// Instances are immutable and share their tables, so copies are cheap and safe to
/// use from several threads.
class GaloisField {
public:
    explicit GaloisField(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    const std::vector<std::uint32_t>& modulus() const noexcept;
    Elem primitive() const noexcept;
    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws ParameterError for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept { return a.q_ == b.q_; }

private:
    struct Tables;
    std::uint32_t q_;
    std::uint32_t p_;
    std::uint32_t k_;
    std::shared_ptr<const Tables> tables_;
};

/// Counts GF(q) multiplications, divisions and inversions performed by the current
/// thread since the counter was created.
class MulCounter {
public:
    MulCounter() noexcept;
    std::uint64_t count() const noexcept;

private:
    std::uint64_t start_;
};

/// The first `count` elements of GF(q) in ord order, starting at `first`.
std::vector<Elem> field_elements(std::uint32_t first, std::uint32_t count);

/// sigma vector <-> integer, sigma[0] being the least significant base-q digit.
std::uint64_t sigma_to_index(std::span<const Elem> sigma, std::uint32_t q);
std::vector<Elem> index_to_sigma(std::uint64_t index, std::uint32_t q, std::size_t length);

/// q^e, throwing ParameterError if it does not fit in 63 bits.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t e);

}  // namespace lpc
