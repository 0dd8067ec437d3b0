#include "lpc/poly.hpp"

#include <algorithm>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_distinct(std::span<const EvalPoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ParameterError("interpolation points share an x coordinate");
}

}  // namespace

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Elem poly_eval(const GaloisField& f, const Poly& p, Elem x) {
    Elem acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
}

Poly poly_add(const GaloisField& f, const Poly& a, const Poly& b) {
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly poly_scale(const GaloisField& f, const Poly& a, Elem s) {
    std::vector<Elem> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.coeffs()[i], s);
    return Poly(std::move(c));
}

Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const GaloisField& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ParameterError("polynomial division by zero");
    std::vector<Elem> rem = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    if (rem.size() <= db) return {Poly{}, a};
    std::vector<Elem> quot(rem.size() - db, 0);
    const Elem lead_inv = f.inv(b.coeffs().back());
    for (std::size_t i = rem.size(); i-- > db;) {
        const Elem c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_from_roots(const GaloisField& f, std::span<const Elem> roots) {
    std::vector<Elem> c{1};
    for (Elem r : roots) {
        std::vector<Elem> next(c.size() + 1, 0);
        const Elem nr = f.neg(r);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], c[i]);
            next[i] = f.add(next[i], f.mul(c[i], nr));
        }
        c = std::move(next);
    }
    return Poly(std::move(c));
}

Poly lagrange_interpolate(const GaloisField& f, std::span<const EvalPoint> points) {
    require_distinct(points);
    const std::size_t m = points.size();
    if (m == 0) return {};
    std::vector<Elem> xs(m);
    for (std::size_t i = 0; i < m; ++i) xs[i] = points[i].first;
    // Master polynomial prod (x - x_i); each basis numerator is master / (x - x_j).
    const Poly master = poly_from_roots(f, xs);
    std::vector<Elem> acc(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        if (points[j].second == 0) continue;
        // Synthetic division of master by (x - x_j).
        std::vector<Elem> num(m, 0);
        Elem carry = 0;
        const auto& mc = master.coeffs();
        for (std::size_t i = m; i-- > 0;) {
            carry = f.add(mc[i + 1], f.mul(carry, xs[j]));
            num[i] = carry;
        }
        Elem denom = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (i != j) denom = f.mul(denom, f.sub(xs[j], xs[i]));
        const Elem scale = f.div(points[j].second, denom);
        for (std::size_t i = 0; i < m; ++i) acc[i] = f.add(acc[i], f.mul(num[i], scale));
    }
    return Poly(std::move(acc));
}

Elem lagrange_eval(const GaloisField& f, std::span<const EvalPoint> points, Elem z) {
    require_distinct(points);
    Elem total = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].second == 0) continue;
        Elem num = 1;
        Elem den = 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == j) continue;
            num = f.mul(num, f.sub(z, points[i].first));
            den = f.mul(den, f.sub(points[j].first, points[i].first));
        }
        total = f.add(total, f.mul(points[j].second, f.div(num, den)));
    }
    return total;
}

Elem lagrange_leading_coeff(const GaloisField& f, std::span<const EvalPoint> points) {
    require_distinct(points);
    Elem total = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].second == 0) continue;
        Elem den = 1;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (i != j) den = f.mul(den, f.sub(points[j].first, points[i].first));
        total = f.add(total, f.div(points[j].second, den));
    }
    return total;
}

}  // namespace lpc
