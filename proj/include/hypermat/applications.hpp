#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "contraction.hpp"
#include "error.hpp"
#include "expression.hpp"
#include "hypermatrix.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "stp.hpp"

namespace hypermat {

// Cross product on R³.

/// M_C^{3×(1,2)} for c^k_{ij} with axes (i, j, k).
template <Scalar T>
MatrixExpression<T> cross_product_fixture() {
    Matrix<T> m{{0, 0, 0, 0, 0, 1, 0, -1, 0}, {0, 0, -1, 0, 0, 0, 1, 0, 0}, {0, 1, 0, -1, 0, 0, 0, 0, 0}};
    return {std::move(m), {3}, {1, 2}, Shape{3, 3, 3}};
}

template <Scalar T>
std::vector<T> cross_product(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != 3 || y.size() != 3) throw shape_error("cross_product needs two vectors of length 3");
    static const MatrixExpression<T> fixture = cross_product_fixture<T>();
    return eval_multilinear_vector(fixture, {x, y});
}

// gl(2).

/// The published 4×16 structure matrix, stored densely as printed. Columns 7 and 10 are the
/// extended entries "1−4" and "−1+4", read as (1,0,0,−4) and (−1,0,0,4).
inline Matrix<Int> gl2_published_fixture() {
    // Signed δ₄ column codes; 0 is the zero column.
    const int codes[16] = {0, 2, -3, 0, -2, 0, 0, 0, 3, 0, 0, -3, 0, 0, 3, 0};
    Matrix<Int> m(4, 16);
    for (index_t j = 0; j < 16; ++j) {
        const int c = codes[j];
        if (c != 0) m.at(static_cast<index_t>(std::abs(c)), j + 1) = Int{c > 0 ? 1 : -1};
    }
    m.at(1, 7) = Int{1};
    m.at(4, 7) = Int{-4};
    m.at(1, 10) = Int{-1};
    m.at(4, 10) = Int{4};
    return m;
}

namespace detail {
/// The k-th basis matrix under V_c: δ₄¹ = E₁₁, δ₄² = E₂₁, δ₄³ = E₁₂, δ₄⁴ = E₂₂.
template <Scalar T>
Matrix<T> gl2_basis_vc(index_t k) {
    std::vector<T> v(4, T{0});
    v[k - 1] = T{1};
    return vcs(v, 2);
}

/// The k-th basis matrix under V_r: δ₄¹ = E₁₁, δ₄² = E₁₂, δ₄³ = E₂₁, δ₄⁴ = E₂₂.
template <Scalar T>
Matrix<T> gl2_basis_vr(index_t k) {
    std::vector<T> v(4, T{0});
    v[k - 1] = T{1};
    return vrs(v, 2);
}

template <Scalar T, typename Basis, typename Flatten>
Matrix<T> gl2_structure_from(Basis basis, Flatten flatten) {
    Matrix<T> m(4, 16);
    for (index_t i = 1; i <= 4; ++i)
        for (index_t j = 1; j <= 4; ++j) {
            const Matrix<T> a = basis(i), b = basis(j);
            const std::vector<T> c = flatten(matmul(a, b) - matmul(b, a));
            for (index_t k = 1; k <= 4; ++k) m.at(k, (i - 1) * 4 + j) = c[k - 1];
        }
    return m;
}
}  // namespace detail

/// Structure constants of [X, Y] = XY − YX in the V_c coordinates, derived from the commutator.
template <Scalar T>
Matrix<T> gl2_structure_matrix() {
    return detail::gl2_structure_from<T>([](index_t k) { return detail::gl2_basis_vc<T>(k); },
                                         [](const Matrix<T>& m) { return vc(m); });
}

/// [X, Y] via V_c([X,Y]) = M ⋉ V_c(X) ⋉ V_c(Y).
template <Scalar T>
Matrix<T> gl2_bracket(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2)
        throw shape_error("gl2_bracket needs 2x2 matrices");
    static const Matrix<T> m = gl2_structure_matrix<T>();
    const Matrix<T> z = mm_stp(mm_stp(m, Matrix<T>::column(vc(x))), Matrix<T>::column(vc(y)));
    return vcs(z.flat(), 2);
}

struct Gl2FixtureErratum {
    /// 1-based column (i−1)·4 + j of the 4×16 matrix.
    index_t column;
    std::vector<Int> printed;
    std::vector<Int> derived;
};

/// Columns where the published matrix disagrees with the commutator. The published basis
/// labels E₁₂ as δ₄², i.e. V_r coordinates, so that is the basis used for the comparison.
inline std::vector<Gl2FixtureErratum> gl2_fixture_errata() {
    const Matrix<Int> printed = gl2_published_fixture();
    const Matrix<Int> derived = detail::gl2_structure_from<Int>(
        [](index_t k) { return detail::gl2_basis_vr<Int>(k); }, [](const Matrix<Int>& m) { return vr(m); });
    std::vector<Gl2FixtureErratum> out;
    for (index_t j = 1; j <= 16; ++j) {
        Gl2FixtureErratum e{j, {}, {}};
        for (index_t k = 1; k <= 4; ++k) {
            e.printed.push_back(printed.at(k, j));
            e.derived.push_back(derived.at(k, j));
        }
        if (e.printed != e.derived) out.push_back(std::move(e));
    }
    return out;
}

// Finite games.

template <Scalar T>
struct GamePayoff {
    std::vector<index_t> strategy_counts;
    /// D_i for each player, each of shape strategy_counts.
    std::vector<Hypermatrix<T>> payoffs;
};

template <Scalar T>
GamePayoff<T> make_game(std::vector<index_t> counts, std::vector<Hypermatrix<T>> payoffs) {
    const Shape s(counts);
    for (index_t i = 0; i < payoffs.size(); ++i)
        if (!(payoffs[i].shape() == s))
            throw shape_error("payoff of player " + std::to_string(i + 1) + " has shape " +
                              payoffs[i].shape().to_string() + ", expected " + s.to_string());
    return {std::move(counts), std::move(payoffs)};
}

/// c_i = V_{D_i} ⋉ x₁ ⋉ ⋯ ⋉ x_n for each player.
template <Scalar T>
std::vector<T> game_payoff(const GamePayoff<T>& g, const std::vector<std::vector<T>>& xs) {
    if (xs.size() != g.strategy_counts.size())
        throw shape_error("game_payoff: " + std::to_string(xs.size()) + " strategies for " +
                          std::to_string(g.strategy_counts.size()) + " players");
    std::vector<T> out;
    for (const auto& d : g.payoffs) out.push_back(eval_multilinear_scalar(d, xs));
    return out;
}

// Yang–Baxter.

template <Scalar T>
struct YbeInstance {
    index_t n;
    Hypermatrix<T> r;
};

template <Scalar T>
YbeInstance<T> make_ybe(Hypermatrix<T> r) {
    if (r.order() != 4 || !r.shape().is_hypercubic()) throw shape_error("Yang-Baxter R must have shape (N,N,N,N)");
    const index_t n = r.shape().dims()[0];
    return {n, std::move(r)};
}

enum class YbeSide { lhs, rhs };
enum class YbeMethod { bruteforce, matrix };

namespace detail {
/// Reads V_T off M_T^{(1,2,3)×(4,5,6)}, permutes by σ, and restacks with `per_row` entries per row.
template <Scalar T>
Matrix<T> ybe_restack(const Matrix<T>& mt, const Shape& dims, const Permutation& sigma, index_t per_row) {
    const std::vector<T> vt = mm_stp(mt, Matrix<T>::column(delta_I<T>(mt.cols()))).flat();
    const LogicalMatrix w = transpose_lm(build_perm_matrix(dims, sigma));
    return vrs(apply_right(vt, w), per_row);
}
}  // namespace detail

/// One side of the equation as an order-6 hypermatrix.
/// Brute force: LHS = (R ×⁴₁ R) ×^{(2,6)}_{(3,4)} R, RHS = R ×^{(1,2)}_{(3,4)} (R ×⁴₁ R).
/// Matrix: M_T = M_R^{(1,2,3)×4} M_R^{1×(2,3,4)}, regrouped by σ_s = (1,3,4,5,2,6) or σ_t = (3,4,1,2,5,6)
/// and multiplied by M_R^{(3,4)×(1,2)}.
template <Scalar T>
Hypermatrix<T> ybe_sides(const YbeInstance<T>& inst, YbeSide side, YbeMethod method) {
    const Hypermatrix<T>& r = inst.r;
    const index_t n = inst.n;
    const Shape six{n, n, n, n, n, n};
    if (method == YbeMethod::bruteforce) {
        const Hypermatrix<T> t = contract_bruteforce(r, r, {{4}, {1}});
        if (side == YbeSide::lhs) return contract_bruteforce(t, r, {{2, 6}, {3, 4}});
        return contract_bruteforce(r, t, {{1, 2}, {3, 4}});
    }
    const Matrix<T> mt =
        matmul(matrix_expression(r, {1, 2, 3}, {4}).mat, matrix_expression(r, {1}, {2, 3, 4}).mat);
    const Matrix<T> mr = matrix_expression(r, {3, 4}, {1, 2}).mat;
    const index_t n2 = n * n;
    if (side == YbeSide::lhs) {
        const Matrix<T> left = detail::ybe_restack(mt, six, Permutation{1, 3, 4, 5, 2, 6}, n2);
        Matrix<T> out = matmul(left, mr);
        return Hypermatrix<T>(six, std::move(out.flat()));
    }
    const Matrix<T> right = detail::ybe_restack(mt, six, Permutation{3, 4, 1, 2, 5, 6}, n2 * n2);
    Matrix<T> out = matmul(mr, right);
    return Hypermatrix<T>(six, std::move(out.flat()));
}

/// max |LHS − RHS| over all entries.
template <std::floating_point T>
T ybe_residual(const YbeInstance<T>& inst, YbeMethod method = YbeMethod::bruteforce) {
    const Hypermatrix<T> l = ybe_sides(inst, YbeSide::lhs, method);
    const Hypermatrix<T> r = ybe_sides(inst, YbeSide::rhs, method);
    T worst = 0;
    for (index_t k = 0; k < l.size(); ++k) worst = std::max(worst, std::fabs(l.flat()[k] - r.flat()[k]));
    return worst;
}

}  // namespace hypermat
