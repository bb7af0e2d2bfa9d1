#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expression.hpp"
#include "hypermatrix.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "stp.hpp"

namespace hypermat {

/// Pairs A-axis a_axes[t] with B-axis b_axes[t].
struct ContractionSpec {
    IndexTuple a_axes;
    IndexTuple b_axes;
};

/// Contracted dims ℓ_t after checking the spec against both shapes.
inline std::vector<index_t> validate_contraction(const Shape& a, const Shape& b, const ContractionSpec& spec) {
    if (spec.a_axes.size() != spec.b_axes.size())
        throw shape_error("contraction pairs " + std::to_string(spec.a_axes.size()) + " A-axes with " +
                          std::to_string(spec.b_axes.size()) + " B-axes");
    validate_tuple(spec.a_axes, a.order(), "A axes");
    validate_tuple(spec.b_axes, b.order(), "B axes");
    std::vector<index_t> ell;
    for (index_t t = 0; t < spec.a_axes.size(); ++t) {
        const index_t na = a.dim(spec.a_axes[t]), nb = b.dim(spec.b_axes[t]);
        if (na != nb)
            throw shape_error("contraction pair " + std::to_string(t + 1) + ": A-axis " +
                              std::to_string(spec.a_axes[t]) + " has dim " + std::to_string(na) + ", B-axis " +
                              std::to_string(spec.b_axes[t]) + " has dim " + std::to_string(nb));
        ell.push_back(na);
    }
    return ell;
}

/// Output shape: A's free axes then B's free axes, each ascending.
inline Shape contraction_shape(const Shape& a, const Shape& b, const ContractionSpec& spec) {
    std::vector<index_t> dims;
    for (index_t ax : complement(spec.a_axes, a.order())) dims.push_back(a.dim(ax));
    for (index_t ax : complement(spec.b_axes, b.order())) dims.push_back(b.dim(ax));
    return Shape(std::move(dims));
}

/// Direct summation; contracted indices run in ID order for every output entry.
template <Scalar T>
Hypermatrix<T> contract_bruteforce(const Hypermatrix<T>& a, const Hypermatrix<T>& b, const ContractionSpec& spec) {
    const std::vector<index_t> ell = validate_contraction(a.shape(), b.shape(), spec);
    const IndexTuple a_free = complement(spec.a_axes, a.order());
    const IndexTuple b_free = complement(spec.b_axes, b.order());
    const Shape out_shape = contraction_shape(a.shape(), b.shape(), spec);
    const Shape k_shape(ell);
    MultiIndex ai(a.order()), bi(b.order());
    return Hypermatrix<T>::generate(out_shape, [&](const MultiIndex& o) {
        for (index_t k = 0; k < a_free.size(); ++k) ai[a_free[k] - 1] = o[k];
        for (index_t k = 0; k < b_free.size(); ++k) bi[b_free[k] - 1] = o[a_free.size() + k];
        T acc{0};
        for (const MultiIndex& kk : index_range(k_shape)) {
            for (index_t t = 0; t < kk.size(); ++t) {
                ai[spec.a_axes[t] - 1] = kk[t];
                bi[spec.b_axes[t] - 1] = kk[t];
            }
            acc += a.at(ai) * b.at(bi);
        }
        return acc;
    });
}

/// M_A^{free×a_axes} · M_B^{b_axes×free}, read back as the output hypermatrix.
template <Scalar T>
Hypermatrix<T> contract_via_expression(const Hypermatrix<T>& a, const Hypermatrix<T>& b,
                                       const ContractionSpec& spec) {
    validate_contraction(a.shape(), b.shape(), spec);
    const MatrixExpression<T> ma = matrix_expression(a, complement(spec.a_axes, a.order()), spec.a_axes);
    const MatrixExpression<T> mb = matrix_expression(b, spec.b_axes, complement(spec.b_axes, b.order()));
    Matrix<T> c = matmul(ma.mat, mb.mat);
    return Hypermatrix<T>(contraction_shape(a.shape(), b.shape(), spec), std::move(c.flat()));
}

enum class OntoMethod { expression, stp };

/// A ×_{rs} B where B's shape is (n_{r₁},…,n_{r_s}); the result keeps A's other axes.
template <Scalar T>
Hypermatrix<T> onto_contract(const Hypermatrix<T>& a, const Hypermatrix<T>& b, const IndexTuple& rs,
                             OntoMethod method) {
    const index_t d = a.order();
    validate_tuple(rs, d, "onto axes");
    if (!is_increasing(rs)) throw shape_error("onto_contract: axes " + tuple_to_string(rs) + " must be increasing");
    if (!(b.shape() == sub_shape(a.shape(), rs)))
        throw shape_error("onto_contract: B has shape " + b.shape().to_string() + ", expected " +
                          sub_shape(a.shape(), rs).to_string());
    const IndexTuple free = complement(rs, d);
    const Shape out_shape = sub_shape(a.shape(), free);
    if (method == OntoMethod::expression) {
        const MatrixExpression<T> ma = matrix_expression(a, free, rs);
        return Hypermatrix<T>(out_shape, mv_stp(ma.mat, b.flat()));
    }
    // Contracted axes first, so the STP pairs V_B with the most significant block.
    IndexTuple img = rs;
    img.insert(img.end(), free.begin(), free.end());
    const LogicalMatrix w = build_perm_matrix(a.shape(), Permutation(img));
    const Matrix<T> row = Matrix<T>::row(apply_right(a.flat(), transpose_lm(w)));
    Matrix<T> c = mm_stp(row, Matrix<T>::column(b.flat()));
    return Hypermatrix<T>(out_shape, std::move(c.flat()));
}

/// Rank-one hypermatrix x₁ ⊗ ⋯ ⊗ x_d.
template <Scalar T>
struct HyperVector {
    std::vector<std::vector<T>> factors;
};

template <Scalar T>
Hypermatrix<T> hypervector_expand(const HyperVector<T>& h) {
    std::vector<index_t> dims;
    for (const auto& f : h.factors) {
        if (f.empty()) throw shape_error("hypervector factor is empty");
        dims.push_back(f.size());
    }
    return Hypermatrix<T>(Shape(std::move(dims)), kron_chain(h.factors));
}

namespace detail {
template <Scalar T>
Matrix<T> stp_chain_right(Matrix<T> acc, const std::vector<std::vector<T>>& xs) {
    for (const auto& x : xs) acc = mm_stp(acc, Matrix<T>::column(x));
    return acc;
}
}  // namespace detail

/// V_Π ⋉ x₁ ⋉ ⋯ ⋉ x_d.
template <Scalar T>
T eval_multilinear_scalar(const Hypermatrix<T>& pi, const std::vector<std::vector<T>>& xs) {
    if (xs.size() != pi.order())
        throw shape_error("eval_multilinear_scalar: " + std::to_string(xs.size()) + " arguments for order " +
                          std::to_string(pi.order()));
    for (index_t k = 0; k < xs.size(); ++k)
        if (xs[k].size() != pi.shape().dims()[k])
            throw shape_error("argument " + std::to_string(k + 1) + " has length " + std::to_string(xs[k].size()) +
                              ", axis has dim " + std::to_string(pi.shape().dims()[k]));
    const Matrix<T> r = detail::stp_chain_right(Matrix<T>::row(pi.flat()), xs);
    return r.flat().at(0);
}

/// M ⋉ x₁ ⋉ ⋯ ⋉ x_d for an expression with a single output axis.
template <Scalar T>
std::vector<T> eval_multilinear_vector(const MatrixExpression<T>& m, const std::vector<std::vector<T>>& xs) {
    if (m.rows.size() != 1)
        throw shape_error("eval_multilinear_vector: expression has " + std::to_string(m.rows.size()) +
                          " row axes, expected 1");
    if (xs.size() != m.cols.size())
        throw shape_error("eval_multilinear_vector: " + std::to_string(xs.size()) + " arguments for " +
                          std::to_string(m.cols.size()) + " column axes");
    for (index_t k = 0; k < xs.size(); ++k)
        if (xs[k].size() != m.dims.dim(m.cols[k]))
            throw shape_error("argument " + std::to_string(k + 1) + " has length " + std::to_string(xs[k].size()) +
                              ", axis has dim " + std::to_string(m.dims.dim(m.cols[k])));
    return detail::stp_chain_right(m.mat, xs).flat();
}

/// T(x₁,…,x_r; ω₁,…,ω_s) = (ω_s ⋉ ⋯ ⋉ ω₁) ⋉ M_Ω^{j×i} ⋉ x₁ ⋉ ⋯ ⋉ x_r, where Ω has axes (i₁…i_r, j₁…j_s).
template <Scalar T>
T eval_tensor(const Hypermatrix<T>& omega, const std::vector<std::vector<T>>& covectors,
              const std::vector<std::vector<T>>& vectors) {
    const index_t r = vectors.size(), s = covectors.size();
    if (omega.order() != r + s)
        throw shape_error("eval_tensor: order " + std::to_string(omega.order()) + " for " + std::to_string(r) +
                          " vectors and " + std::to_string(s) + " covectors");
    if (!omega.shape().is_hypercubic()) throw shape_error("eval_tensor: all dimensions must be equal");
    const index_t n = omega.order() ? omega.shape().dims()[0] : 1;
    for (const auto& v : vectors)
        if (v.size() != n) throw shape_error("eval_tensor: vector length " + std::to_string(v.size()));
    for (const auto& w : covectors)
        if (w.size() != n) throw shape_error("eval_tensor: covector length " + std::to_string(w.size()));
    IndexTuple rows, cols;
    for (index_t k = 1; k <= r; ++k) cols.push_back(k);
    for (index_t k = r + 1; k <= r + s; ++k) rows.push_back(k);
    const MatrixExpression<T> m = matrix_expression(omega, rows, cols);
    Matrix<T> left = Matrix<T>::row({T{1}});
    for (index_t k = s; k-- > 0;) left = mm_stp(left, Matrix<T>::row(covectors[k]));
    return detail::stp_chain_right(mm_stp(left, m.mat), vectors).flat().at(0);
}

namespace detail {
inline IndexTuple block(index_t first, index_t d) {
    IndexTuple t;
    for (index_t k = 0; k < d; ++k) t.push_back(first + k);
    return t;
}

template <Scalar T>
void check_blocks(const Hypermatrix<T>& a, index_t blocks, index_t d, const char* what) {
    if (a.order() != blocks * d)
        throw shape_error(std::string(what) + ": operator has order " + std::to_string(a.order()) + ", expected " +
                          std::to_string(blocks * d));
    for (index_t k = d; k < a.order(); ++k)
        if (a.shape().dims()[k] != a.shape().dims()[k % d])
            throw shape_error(std::string(what) + ": axis " + std::to_string(k + 1) + " has dim " +
                              std::to_string(a.shape().dims()[k]) + ", block pattern requires " +
                              std::to_string(a.shape().dims()[k % d]));
}
}  // namespace detail

/// A ×^{d+1..2d}_{1..d} B.
template <Scalar T>
Hypermatrix<T> unary_apply(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
    const index_t d = b.order();
    detail::check_blocks(a, 2, d, "unary_apply");
    return contract_via_expression(a, b, {detail::block(d + 1, d), detail::block(1, d)});
}

/// (A ×^{2d+1..3d}_{1..d} B) ×^{d+1..2d}_{1..d} C.
template <Scalar T>
Hypermatrix<T> binary_apply(const Hypermatrix<T>& a, const Hypermatrix<T>& b, const Hypermatrix<T>& c) {
    const index_t d = b.order();
    if (c.order() != d) throw shape_error("binary_apply: operands have different orders");
    detail::check_blocks(a, 3, d, "binary_apply");
    const Hypermatrix<T> ab = contract_via_expression(a, b, {detail::block(2 * d + 1, d), detail::block(1, d)});
    return contract_via_expression(ab, c, {detail::block(d + 1, d), detail::block(1, d)});
}

/// Operand i binds index block k+2−i: each operand contracts the current last block.
template <Scalar T>
Hypermatrix<T> kary_apply(const Hypermatrix<T>& a, const std::vector<Hypermatrix<T>>& bs) {
    if (bs.empty()) throw shape_error("kary_apply: no operands");
    const index_t k = bs.size();
    const index_t d = bs.front().order();
    for (const auto& b : bs)
        if (b.order() != d) throw shape_error("kary_apply: operands have different orders");
    detail::check_blocks(a, k + 1, d, "kary_apply");
    Hypermatrix<T> acc = a;
    for (index_t i = 0; i < k; ++i) {
        const index_t last = acc.order() - d + 1;
        acc = contract_via_expression(acc, bs[i], {detail::block(last, d), detail::block(1, d)});
    }
    return acc;
}

}  // namespace hypermat
