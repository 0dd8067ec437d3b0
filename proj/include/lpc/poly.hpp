#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lpc/finite_field.hpp"

namespace lpc {

/// Polynomial over the active field, lowest degree first, kept without trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);

    static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Elem> coeffs_;
};

using EvalPoint = std::pair<Elem, Elem>;  // (x, y)

/// Horner evaluation.
Elem poly_eval(const GaloisField& f, const Poly& p, Elem x);
Poly poly_add(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_scale(const GaloisField& f, const Poly& a, Elem c);
Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b);
/// Returns (quotient, remainder); throws ParameterError on division by zero.
std::pair<Poly, Poly> poly_divmod(const GaloisField& f, const Poly& a, const Poly& b);
/// prod_i (x - roots[i]).
Poly poly_from_roots(const GaloisField& f, std::span<const Elem> roots);

/// Unique polynomial of degree < points.size() through the points. Throws
/// ParameterError on repeated x.
Poly lagrange_interpolate(const GaloisField& f, std::span<const EvalPoint> points);

/// Value at z of the interpolant through `points` without forming its coefficients.
Elem lagrange_eval(const GaloisField& f, std::span<const EvalPoint> points, Elem z);

/// Leading (degree points.size()-1) coefficient of the interpolant through `points`.
Elem lagrange_leading_coeff(const GaloisField& f, std::span<const EvalPoint> points);

}  // namespace lpc
