#include "highwater/linalg.hpp"

#include <numeric>

namespace highwater {

Vec zero_vec(const Field& field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
        Scalar inv = (*this)(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c).is_zero()) continue;
            Scalar f = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw AlgebraError("determinant of a non-square matrix");
    Matrix m = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && m(piv, c).is_zero()) ++piv;
        if (piv == rows_) return Scalar::zero(field_);
        if (piv != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<Vec> Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(field_, cols_);
        v[free] = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x = zero_vec(field_, cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = Scalar::one(field_);
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

EchelonBasis::EchelonBasis(const Field& field, std::size_t dim) : field_(field), dim_(dim), priority_(dim) {
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

EchelonBasis::EchelonBasis(const Field& field, std::size_t dim, std::vector<std::size_t> priority)
    : field_(field), dim_(dim), priority_(std::move(priority)) {
    if (priority_.size() != dim_) throw AlgebraError("column priority must list every column once");
}

Vec EchelonBasis::reduce(const Vec& v) const {
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = r[pivots_[k]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_[k][j].is_zero()) r[j] -= c * rows_[k][j];
    }
    return r;
}

bool EchelonBasis::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t piv = dim_;
    for (auto c : priority_)
        if (!r[c].is_zero()) {
            piv = c;
            break;
        }
    if (piv == dim_) return false;
    Scalar inv = r[piv].inverse();
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
        const Scalar c = row[piv];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero()) row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

}  // namespace highwater
