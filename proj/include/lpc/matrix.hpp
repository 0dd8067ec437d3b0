#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lpc/finite_field.hpp"

namespace lpc {

/// Dense row-major matrix over GF(q).
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    MatrixQ(std::size_t rows, std::size_t cols, std::vector<Elem> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& data() const noexcept { return data_; }

    MatrixQ select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

std::size_t rank(const GaloisField& f, MatrixQ m);

/// x * m for a row vector x of length m.rows().
std::vector<Elem> vec_mat(const GaloisField& f, std::span<const Elem> x, const MatrixQ& m);

/// Basis of {x : x * m = 0}.
std::vector<std::vector<Elem>> left_kernel(const GaloisField& f, const MatrixQ& m);

/// Some x with x * m = y, or nullopt when y is outside the row space. Unique when
/// m has full row rank.
std::optional<std::vector<Elem>> solve_left(const GaloisField& f, const MatrixQ& m, std::span<const Elem> y);

}  // namespace lpc
