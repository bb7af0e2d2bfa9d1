#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"
#include "shape.hpp"

namespace hypermat {

/// Dense row-major m×n matrix. Public element access is 1-based.
template <Scalar T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(index_t rows, index_t cols) : rows_(rows), cols_(cols), data_(checked_mul(rows, cols), T{0}) {}
    Matrix(index_t rows, index_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != checked_mul(rows, cols))
            throw shape_error("matrix data length " + std::to_string(data_.size()) + " != " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    }
    /// Rows given as nested lists, e.g. {{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows.size() ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw shape_error("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(index_t n) {
        Matrix m(n, n);
        for (index_t i = 0; i < n; ++i) m.data_[i * n + i] = T{1};
        return m;
    }
    static Matrix column(std::vector<T> v) {
        const index_t n = v.size();
        return Matrix(n, 1, std::move(v));
    }
    static Matrix row(std::vector<T> v) {
        const index_t n = v.size();
        return Matrix(1, n, std::move(v));
    }

    [[nodiscard]] index_t rows() const { return rows_; }
    [[nodiscard]] index_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<T>& flat() const { return data_; }
    [[nodiscard]] std::vector<T>& flat() { return data_; }

    [[nodiscard]] const T& at(index_t i, index_t j) const { return data_[offset(i, j)]; }
    T& at(index_t i, index_t j) { return data_[offset(i, j)]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    [[nodiscard]] index_t offset(index_t i, index_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw bounds_error("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                               std::to_string(rows_) + "x" + std::to_string(cols_));
        return (i - 1) * cols_ + (j - 1);
    }

    index_t rows_ = 0;
    index_t cols_ = 0;
    std::vector<T> data_;
};

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (index_t i = 0; i < a.rows(); ++i)
        for (index_t j = 0; j < a.cols(); ++j) t.flat()[j * a.rows() + i] = a.flat()[i * a.cols() + j];
    return t;
}

/// Ordinary product; accumulation runs over k in ascending order.
template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw shape_error("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<T> c(a.rows(), b.cols());
    const index_t n = a.cols(), q = b.cols();
    for (index_t i = 0; i < a.rows(); ++i) {
        T* out = c.flat().data() + i * q;
        for (index_t k = 0; k < n; ++k) {
            const T aik = a.flat()[i * n + k];
            if (aik == T{0}) continue;
            const T* brow = b.flat().data() + k * q;
            for (index_t j = 0; j < q; ++j) out[j] += aik * brow[j];
        }
    }
    return c;
}

template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw shape_error("matrix sum: shape mismatch");
    Matrix<T> c = a;
    for (index_t k = 0; k < c.flat().size(); ++k) c.flat()[k] += b.flat()[k];
    return c;
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw shape_error("matrix difference: shape mismatch");
    Matrix<T> c = a;
    for (index_t k = 0; k < c.flat().size(); ++k) c.flat()[k] -= b.flat()[k];
    return c;
}

template <Scalar T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw shape_error("vector sum: length mismatch");
    std::vector<T> c = a;
    for (index_t k = 0; k < c.size(); ++k) c[k] += b[k];
    return c;
}

template <Scalar T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw shape_error("vector difference: length mismatch");
    std::vector<T> c = a;
    for (index_t k = 0; k < c.size(); ++k) c[k] -= b[k];
    return c;
}

}  // namespace hypermat
