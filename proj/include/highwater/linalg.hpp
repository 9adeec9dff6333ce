#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "highwater/scalar.hpp"

namespace highwater {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& field, std::size_t n);
bool is_zero_vec(const Vec& v);

/// Dense matrix over a Field, row-major.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    Vec apply(const Vec& v) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    Scalar determinant() const;
    /// Basis of {v : M v = 0}.
    std::vector<Vec> nullspace() const;
    /// Some solution of M x = b, if one exists.
    std::optional<Vec> solve(const Vec& b) const;
    std::optional<Matrix> inverse() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Incrementally maintained reduced echelon basis of a subspace of F^n.
/// Pivots are chosen by a caller-supplied column priority (earlier columns are eliminated first).
class EchelonBasis {
public:
    EchelonBasis(const Field& field, std::size_t dim);
    EchelonBasis(const Field& field, std::size_t dim, std::vector<std::size_t> priority);

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const Vec& v);
    /// Canonical remainder of v modulo the span (zero at every pivot column).
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::size_t> priority_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace highwater
