#pragma once

#include <cmath>
#include <concepts>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "shape.hpp"

namespace hypermat {

/// t = lcm(n, p) with the replication factors t/n and t/p.
struct DimPair {
    index_t t;
    index_t left_factor;
    index_t right_factor;
};

inline DimPair make_dim_pair(index_t n, index_t p) {
    if (n == 0 || p == 0) throw shape_error("STP with an empty inner dimension");
    const index_t g = std::gcd(n, p);
    const index_t t = checked_mul(n / g, p);
    return {t, t / n, t / p};
}

template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    const index_t rows = checked_mul(a.rows(), b.rows());
    const index_t cols = checked_mul(a.cols(), b.cols());
    Matrix<T> out(rows, cols);
    for (index_t i = 0; i < a.rows(); ++i)
        for (index_t j = 0; j < a.cols(); ++j) {
            const T aij = a.flat()[i * a.cols() + j];
            if (aij == T{0}) continue;
            for (index_t k = 0; k < b.rows(); ++k)
                for (index_t l = 0; l < b.cols(); ++l)
                    out.flat()[(i * b.rows() + k) * cols + j * b.cols() + l] = aij * b.flat()[k * b.cols() + l];
        }
    return out;
}

template <Scalar T>
std::vector<T> kron(const std::vector<T>& x, const std::vector<T>& y) {
    std::vector<T> out;
    out.reserve(checked_mul(x.size(), y.size()));
    for (const T& a : x)
        for (const T& b : y) out.push_back(a * b);
    return out;
}

/// x₁ ⊗ ⋯ ⊗ x_d; the empty chain is (1).
template <Scalar T>
std::vector<T> kron_chain(const std::vector<std::vector<T>>& xs) {
    std::vector<T> out{T{1}};
    for (const auto& x : xs) out = kron(out, x);
    return out;
}

/// M-M STP (A ⊗ I_{t/n})(B ⊗ I_{t/p}), evaluated without forming either Kronecker factor.
/// Each output entry accumulates over the shared index in ascending order.
template <Scalar T>
Matrix<T> mm_stp(const Matrix<T>& a, const Matrix<T>& b) {
    const auto [t, fa, fb] = make_dim_pair(a.cols(), b.rows());
    const index_t rows = checked_mul(a.rows(), fa);
    const index_t cols = checked_mul(b.cols(), fb);
    Matrix<T> out(rows, cols);
    const index_t n = a.cols(), q = b.cols();
    for (index_t r = 0; r < rows; ++r) {
        T* orow = out.flat().data() + r * cols;
        const index_t ar = r / fa, rr = r % fa;
        for (index_t k1 = 0; k1 < n; ++k1) {
            const T av = a.flat()[ar * n + k1];
            if (av == T{0}) continue;
            // Row k1·fa + rr of the expanded B meets row r of the expanded A.
            const index_t big_k = k1 * fa + rr;
            const index_t bk = big_k / fb, kr = big_k % fb;
            const T* brow = b.flat().data() + bk * q;
            for (index_t cb = 0; cb < q; ++cb) orow[cb * fb + kr] += av * brow[cb];
        }
    }
    return out;
}

/// M-V STP (A ⊗ I_{t/n})(x ⊗ 1_{t/p}).
template <Scalar T>
std::vector<T> mv_stp(const Matrix<T>& a, const std::vector<T>& x) {
    const auto [t, fa, fx] = make_dim_pair(a.cols(), x.size());
    const index_t rows = checked_mul(a.rows(), fa);
    std::vector<T> out(rows, T{0});
    const index_t n = a.cols();
    for (index_t r = 0; r < rows; ++r) {
        const index_t ar = r / fa, rr = r % fa;
        T acc{0};
        for (index_t k1 = 0; k1 < n; ++k1) acc += a.flat()[ar * n + k1] * x[(k1 * fa + rr) / fx];
        out[r] = acc;
    }
    return out;
}

/// V-V STP (x ⊗ 1_{t/m})ᵀ(y ⊗ 1_{t/n}).
template <Scalar T>
T vv_stp(const std::vector<T>& x, const std::vector<T>& y) {
    const auto [t, fx, fy] = make_dim_pair(x.size(), y.size());
    T acc{0};
    for (index_t k = 0; k < t; ++k) acc += x[k / fx] * y[k / fy];
    return acc;
}

enum class Sign { plus, minus };

/// (x ⊗ 1_{t/p}) ± (y ⊗ 1_{t/q}).
template <Scalar T>
std::vector<T> vec_oplus(const std::vector<T>& x, const std::vector<T>& y, Sign sign = Sign::plus) {
    const auto [t, fx, fy] = make_dim_pair(x.size(), y.size());
    std::vector<T> out(t);
    for (index_t k = 0; k < t; ++k) out[k] = sign == Sign::plus ? x[k / fx] + y[k / fy] : x[k / fx] - y[k / fy];
    return out;
}

/// ⟨x, y⟩ = vv_stp(x, y) / t. Integer inputs are summed exactly, then divided once.
template <Scalar T>
double stp_inner(const std::vector<T>& x, const std::vector<T>& y) {
    const index_t t = make_dim_pair(x.size(), y.size()).t;
    return to_double(vv_stp(x, y)) / static_cast<double>(t);
}

template <std::floating_point T>
T stp_norm(const std::vector<T>& x) {
    return std::sqrt(stp_inner(x, x));
}

template <std::floating_point T>
T stp_distance(const std::vector<T>& x, const std::vector<T>& y) {
    return stp_norm(vec_oplus(x, y, Sign::minus));
}

/// δ_n^I = V_r(I_n), as a column vector of length n².
template <Scalar T>
std::vector<T> delta_I(index_t n) {
    if (n == 0) throw shape_error("delta_I needs n >= 1");
    std::vector<T> v(checked_mul(n, n), T{0});
    for (index_t i = 0; i < n; ++i) v[i * n + i] = T{1};
    return v;
}

}  // namespace hypermat
