#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hypermatrix.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "scalar.hpp"
#include "shape.hpp"
#include "stp.hpp"

namespace hypermat {

/// Ordered, duplicate-free list of 1-based axis labels.
using IndexTuple = std::vector<index_t>;

inline std::string tuple_to_string(const IndexTuple& t) {
    std::string s = "(";
    for (index_t k = 0; k < t.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(t[k]);
    }
    return s + ")";
}

inline void validate_tuple(const IndexTuple& t, index_t d, const char* what) {
    std::vector<bool> seen(d + 1, false);
    for (index_t a : t) {
        if (a < 1 || a > d)
            throw bounds_error(std::string(what) + ": axis " + std::to_string(a) + " outside 1.." + std::to_string(d));
        if (seen[a]) throw shape_error(std::string(what) + ": duplicate axis " + std::to_string(a));
        seen[a] = true;
    }
}

inline void validate_partition(const IndexTuple& rows, const IndexTuple& cols, index_t d) {
    validate_tuple(rows, d, "row axes");
    validate_tuple(cols, d, "column axes");
    std::vector<bool> seen(d + 1, false);
    for (index_t a : rows) seen[a] = true;
    for (index_t a : cols) {
        if (seen[a]) throw shape_error("axis " + std::to_string(a) + " is both a row and a column axis");
        seen[a] = true;
    }
    if (rows.size() + cols.size() != d)
        throw shape_error("row axes " + tuple_to_string(rows) + " and column axes " + tuple_to_string(cols) +
                          " do not cover all " + std::to_string(d) + " axes");
}

/// Axes of ⟨d⟩ not in t, ascending.
inline IndexTuple complement(const IndexTuple& t, index_t d) {
    validate_tuple(t, d, "axes");
    std::vector<bool> in(d + 1, false);
    for (index_t a : t) in[a] = true;
    IndexTuple out;
    for (index_t a = 1; a <= d; ++a)
        if (!in[a]) out.push_back(a);
    return out;
}

inline bool is_increasing(const IndexTuple& t) { return std::is_sorted(t.begin(), t.end()); }

inline Shape sub_shape(const Shape& dims, const IndexTuple& axes) {
    std::vector<index_t> out;
    out.reserve(axes.size());
    for (index_t a : axes) out.push_back(dims.dim(a));
    return Shape(std::move(out));
}

/// M_A^{rows×cols}: rows enumerate the row axes in ID order (listed order), columns likewise.
template <Scalar T>
struct MatrixExpression {
    Matrix<T> mat;
    IndexTuple rows;
    IndexTuple cols;
    Shape dims;

    friend bool operator==(const MatrixExpression&, const MatrixExpression&) = default;
};

// Stacking forms.

template <Scalar T>
std::vector<T> vr(const Matrix<T>& m) {
    return m.flat();
}

template <Scalar T>
std::vector<T> vc(const Matrix<T>& m) {
    return transpose(m).flat();
}

/// s entries per row.
template <Scalar T>
Matrix<T> vrs(const std::vector<T>& x, index_t s) {
    if (s == 0 || x.size() % s != 0)
        throw shape_error("vrs: " + std::to_string(s) + " does not divide length " + std::to_string(x.size()));
    return Matrix<T>(x.size() / s, s, x);
}

/// s entries per column.
template <Scalar T>
Matrix<T> vcs(const std::vector<T>& x, index_t s) {
    if (s == 0 || x.size() % s != 0)
        throw shape_error("vcs: " + std::to_string(s) + " does not divide length " + std::to_string(x.size()));
    return transpose(Matrix<T>(x.size() / s, s, x));
}

template <Scalar T>
Matrix<T> vrs(const Matrix<T>& a, index_t s) {
    return vrs(vr(a), s);
}

template <Scalar T>
Matrix<T> vcs(const Matrix<T>& a, index_t s) {
    return vcs(vc(a), s);
}

// σ-transpose.

/// A^σ by direct index shuffle: shape (n_{σ(1)},…,n_{σ(d)}), (A^σ)_k = a_j with j_{σ(i)} = k_i.
template <Scalar T>
Hypermatrix<T> sigma_transpose(const Hypermatrix<T>& a, const Permutation& sigma) {
    const index_t d = a.order();
    if (sigma.size() != d)
        throw shape_error("sigma_transpose: permutation of length " + std::to_string(sigma.size()) +
                          " for order " + std::to_string(d));
    std::vector<index_t> dims(d);
    for (index_t i = 0; i < d; ++i) dims[i] = a.shape().dims()[sigma.image()[i] - 1];
    MultiIndex j(d);
    return Hypermatrix<T>::generate(Shape(dims), [&](const MultiIndex& k) {
        for (index_t i = 0; i < d; ++i) j[sigma.image()[i] - 1] = k[i];
        return a.at(j);
    });
}

/// V_{A^σ} = V_A (W^σ)ᵀ, applied as a gather through the transposed permutation matrix.
template <Scalar T>
Hypermatrix<T> sigma_transpose_via_perm(const Hypermatrix<T>& a, const Permutation& sigma) {
    if (sigma.size() != a.order())
        throw shape_error("sigma_transpose_via_perm: permutation of length " + std::to_string(sigma.size()) +
                          " for order " + std::to_string(a.order()));
    const LogicalMatrix wt = transpose_lm(build_perm_matrix(a.shape(), sigma));
    std::vector<index_t> dims(a.order());
    for (index_t i = 0; i < dims.size(); ++i) dims[i] = a.shape().dims()[sigma.image()[i] - 1];
    return Hypermatrix<T>(Shape(dims), apply_right(a.flat(), wt));
}

// Matrix expressions.

template <Scalar T>
MatrixExpression<T> matrix_expression(const Hypermatrix<T>& a, const IndexTuple& rows, const IndexTuple& cols) {
    const index_t d = a.order();
    validate_partition(rows, cols, d);
    const Shape rs = sub_shape(a.shape(), rows);
    const Shape cs = sub_shape(a.shape(), cols);
    Matrix<T> m(rs.size(), cs.size());
    MultiIndex ri(rows.size()), ci(cols.size());
    a.for_each([&](const MultiIndex& idx, const T& v) {
        for (index_t k = 0; k < rows.size(); ++k) ri[k] = idx[rows[k] - 1];
        for (index_t k = 0; k < cols.size(); ++k) ci[k] = idx[cols[k] - 1];
        m.at(linearize(rs, ri), linearize(cs, ci)) = v;
    });
    return {std::move(m), rows, cols, a.shape()};
}

/// Columns default to the complement of rows, ascending.
template <Scalar T>
MatrixExpression<T> matrix_expression(const Hypermatrix<T>& a, const IndexTuple& rows) {
    return matrix_expression(a, rows, complement(rows, a.order()));
}

template <Scalar T>
MatrixExpression<T> vector_expression(const Hypermatrix<T>& a) {
    return matrix_expression(a, IndexTuple{});
}

/// Inverse of matrix_expression for any tuple order.
template <Scalar T>
Hypermatrix<T> hypermatrix_from_expression(const MatrixExpression<T>& m) {
    const index_t d = m.dims.order();
    validate_partition(m.rows, m.cols, d);
    const Shape rs = sub_shape(m.dims, m.rows);
    const Shape cs = sub_shape(m.dims, m.cols);
    if (m.mat.rows() != rs.size() || m.mat.cols() != cs.size())
        throw shape_error("matrix expression is " + std::to_string(m.mat.rows()) + "x" +
                          std::to_string(m.mat.cols()) + ", axes require " + std::to_string(rs.size()) + "x" +
                          std::to_string(cs.size()));
    MultiIndex ri(m.rows.size()), ci(m.cols.size());
    return Hypermatrix<T>::generate(m.dims, [&](const MultiIndex& idx) {
        for (index_t k = 0; k < m.rows.size(); ++k) ri[k] = idx[m.rows[k] - 1];
        for (index_t k = 0; k < m.cols.size(); ++k) ci[k] = idx[m.cols[k] - 1];
        return m.mat.at(linearize(rs, ri), linearize(cs, ci));
    });
}

/// σ_{i_r}: ⟨d⟩ → (i_r, ⟨d⟩∖i_r) as an image array.
inline Permutation partition_permutation(const IndexTuple& rows, index_t d) {
    IndexTuple img = rows;
    const IndexTuple rest = complement(rows, d);
    img.insert(img.end(), rest.begin(), rest.end());
    return Permutation(std::move(img));
}

namespace detail {
inline void require_increasing(const IndexTuple& t, const char* what) {
    if (!is_increasing(t))
        throw shape_error(std::string(what) + ": axes " + tuple_to_string(t) +
                          " must be increasing; use matrix_expression for other orders");
}
}  // namespace detail

/// M_A^{rows×rest} = V_r^{n_rest}(V_A (W^σ)ᵀ) with σ = σ_rows.
template <Scalar T>
MatrixExpression<T> vec_to_matrix_form(const std::vector<T>& v, const Shape& dims, const IndexTuple& rows) {
    detail::require_increasing(rows, "vec_to_matrix_form");
    if (v.size() != dims.size())
        throw shape_error("vec_to_matrix_form: vector of length " + std::to_string(v.size()) + " for shape " +
                          dims.to_string());
    const IndexTuple cols = complement(rows, dims.order());
    const Permutation sigma = partition_permutation(rows, dims.order());
    const std::vector<T> permuted = apply_right(v, transpose_lm(build_perm_matrix(dims, sigma)));
    return {vrs(permuted, sub_shape(dims, cols).size()), rows, cols, dims};
}

/// V_A = (M ⋉ δ^I_{n_rest})ᵀ W^σ with σ = σ_rows.
template <Scalar T>
std::vector<T> matrix_form_to_vec(const MatrixExpression<T>& m) {
    detail::require_increasing(m.rows, "matrix_form_to_vec");
    const index_t d = m.dims.order();
    validate_partition(m.rows, m.cols, d);
    if (m.cols != complement(m.rows, d))
        throw shape_error("matrix_form_to_vec: column axes " + tuple_to_string(m.cols) +
                          " are not the ascending complement of the row axes");
    const index_t t = sub_shape(m.dims, m.cols).size();
    if (m.mat.rows() != sub_shape(m.dims, m.rows).size() || m.mat.cols() != t)
        throw shape_error("matrix_form_to_vec: matrix size does not match its axes");
    const Matrix<T> stacked = mm_stp(m.mat, Matrix<T>::column(delta_I<T>(t)));
    const Permutation sigma = partition_permutation(m.rows, d);
    return apply_right(stacked.flat(), build_perm_matrix(m.dims, sigma));
}

/// Re-partitions through V_r^{n_rest}[(M ⋉ δ^I)ᵀ W^{σ_i} (W^{σ_j})ᵀ].
template <Scalar T>
MatrixExpression<T> convert_expression(const MatrixExpression<T>& m, const IndexTuple& new_rows) {
    detail::require_increasing(m.rows, "convert_expression");
    detail::require_increasing(new_rows, "convert_expression");
    const index_t d = m.dims.order();
    validate_partition(m.rows, m.cols, d);
    validate_tuple(new_rows, d, "new row axes");
    if (new_rows == m.rows) return m;
    const index_t t = sub_shape(m.dims, m.cols).size();
    const Matrix<T> stacked = mm_stp(m.mat, Matrix<T>::column(delta_I<T>(t)));
    const LogicalMatrix wi = build_perm_matrix(m.dims, partition_permutation(m.rows, d));
    const LogicalMatrix wj = build_perm_matrix(m.dims, partition_permutation(new_rows, d));
    const std::vector<T> v = apply_right(stacked.flat(), compose_lm(wi, transpose_lm(wj)));
    const IndexTuple new_cols = complement(new_rows, d);
    return {vrs(v, sub_shape(m.dims, new_cols).size()), new_rows, new_cols, m.dims};
}

template <Scalar T>
MatrixExpression<T> transpose_expr(const MatrixExpression<T>& m) {
    return {transpose(m.mat), m.cols, m.rows, m.dims};
}

// Symmetry.

namespace detail {
template <Scalar T>
bool check_symmetry(const Hypermatrix<T>& a, bool skew) {
    if (!a.shape().is_hypercubic()) throw shape_error("symmetry test needs a hypercubic hypermatrix");
    const index_t d = a.order();
    for (index_t k = 1; k < d; ++k) {
        std::vector<index_t> img(d);
        for (index_t i = 0; i < d; ++i) img[i] = i + 1;
        std::swap(img[k - 1], img[k]);
        const Hypermatrix<T> at = sigma_transpose(a, Permutation(img));
        for (index_t i = 0; i < a.size(); ++i) {
            const T expected = skew ? -a.flat()[i] : a.flat()[i];
            if (at.flat()[i] != expected) return false;
        }
    }
    return true;
}
}  // namespace detail

/// A^σ = A for all σ; adjacent transpositions generate S_d, so they suffice.
template <Scalar T>
bool is_symmetric(const Hypermatrix<T>& a) {
    return detail::check_symmetry(a, false);
}

/// A^σ = sgn(σ)·A for all σ.
template <Scalar T>
bool is_skew_symmetric(const Hypermatrix<T>& a) {
    return detail::check_symmetry(a, true);
}

}  // namespace hypermat
