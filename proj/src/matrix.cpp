#include "lpc/matrix.hpp"

#include "lpc/errors.hpp"

namespace lpc {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ParameterError("matrix data length does not match its shape");
}

MatrixQ MatrixQ::select_columns(std::span<const std::size_t> cols) const {
    MatrixQ out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = at(r, cols[c]);
    return out;
}

std::size_t rank(const GaloisField& f, MatrixQ m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(r, k), m.at(piv, k));
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Elem factor = f.mul(m.at(i, c), inv);
            if (factor == 0) continue;
            for (std::size_t k = c; k < m.cols(); ++k) m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(r, k)));
        }
        ++r;
    }
    return r;
}

std::vector<Elem> vec_mat(const GaloisField& f, std::span<const Elem> x, const MatrixQ& m) {
    if (x.size() != m.rows()) throw ParameterError("vector length does not match matrix rows");
    std::vector<Elem> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], m.at(r, c)));
    }
    return out;
}

std::vector<std::vector<Elem>> left_kernel(const GaloisField& f, const MatrixQ& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // [m | I] reduced on the m part; zero rows carry kernel vectors in the identity part.
    MatrixQ aug(rows, cols + rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, cols + r) = 1;
    }
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && aug.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t k = 0; k < aug.cols(); ++k) std::swap(aug.at(lead, k), aug.at(piv, k));
        const Elem inv = f.inv(aug.at(lead, c));
        for (std::size_t i = lead + 1; i < rows; ++i) {
            const Elem factor = f.mul(aug.at(i, c), inv);
            if (factor == 0) continue;
            for (std::size_t k = c; k < aug.cols(); ++k)
                aug.at(i, k) = f.sub(aug.at(i, k), f.mul(factor, aug.at(lead, k)));
        }
        ++lead;
    }
    std::vector<std::vector<Elem>> basis;
    for (std::size_t r = lead; r < rows; ++r) basis.emplace_back(aug.row(r).begin() + cols, aug.row(r).end());
    return basis;
}

std::optional<std::vector<Elem>> solve_left(const GaloisField& f, const MatrixQ& m, std::span<const Elem> y) {
    if (y.size() != m.cols()) throw ParameterError("right-hand side length does not match matrix columns");
    const std::size_t eqs = m.cols();
    const std::size_t unknowns = m.rows();
    // Transposed system m^T x = y with y appended as the last column.
    MatrixQ a(eqs, unknowns + 1);
    for (std::size_t e = 0; e < eqs; ++e) {
        for (std::size_t u = 0; u < unknowns; ++u) a.at(e, u) = m.at(u, e);
        a.at(e, unknowns) = y[e];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < unknowns && lead < eqs; ++c) {
        std::size_t piv = lead;
        while (piv < eqs && a.at(piv, c) == 0) ++piv;
        if (piv == eqs) continue;
        for (std::size_t k = c; k <= unknowns; ++k) std::swap(a.at(lead, k), a.at(piv, k));
        const Elem inv = f.inv(a.at(lead, c));
        for (std::size_t k = c; k <= unknowns; ++k) a.at(lead, k) = f.mul(a.at(lead, k), inv);
        for (std::size_t i = 0; i < eqs; ++i) {
            if (i == lead || a.at(i, c) == 0) continue;
            const Elem factor = a.at(i, c);
            for (std::size_t k = c; k <= unknowns; ++k) a.at(i, k) = f.sub(a.at(i, k), f.mul(factor, a.at(lead, k)));
        }
        pivot_col.push_back(c);
        ++lead;
    }
    for (std::size_t i = lead; i < eqs; ++i)
        if (a.at(i, unknowns) != 0) return std::nullopt;
    std::vector<Elem> x(unknowns, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a.at(i, unknowns);
    return x;
}

}  // namespace lpc
