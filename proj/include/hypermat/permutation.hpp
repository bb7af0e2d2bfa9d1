#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"
#include "shape.hpp"

namespace hypermat {

/// σ ∈ S_d stored as its 1-based image array (σ(1),…,σ(d)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<index_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size() + 1, false);
        for (index_t v : image_) {
            if (v < 1 || v > image_.size() || seen[v])
                throw shape_error("permutation image " + to_string() + " is not a bijection of 1.." +
                                  std::to_string(image_.size()));
            seen[v] = true;
        }
    }
    Permutation(std::initializer_list<index_t> image) : Permutation(std::vector<index_t>(image)) {}

    static Permutation identity(index_t d) {
        std::vector<index_t> img(d);
        std::iota(img.begin(), img.end(), index_t{1});
        return Permutation(std::move(img));
    }

    [[nodiscard]] index_t size() const { return image_.size(); }
    [[nodiscard]] const std::vector<index_t>& image() const { return image_; }
    /// σ(i) for 1-based i.
    [[nodiscard]] index_t operator()(index_t i) const {
        if (i < 1 || i > image_.size()) throw bounds_error("permutation argument " + std::to_string(i));
        return image_[i - 1];
    }
    [[nodiscard]] bool is_identity() const {
        for (index_t k = 0; k < image_.size(); ++k)
            if (image_[k] != k + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (index_t k = 0; k < image_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(image_[k]);
        }
        return s + ")";
    }

private:
    std::vector<index_t> image_;
};

/// sgn(σ) as +1 or −1.
inline int parity(const Permutation& p) {
    const index_t d = p.size();
    std::vector<bool> visited(d, false);
    index_t transpositions = 0;
    for (index_t start = 0; start < d; ++start) {
        if (visited[start]) continue;
        index_t len = 0;
        for (index_t k = start; !visited[k]; k = p.image()[k] - 1) {
            visited[k] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

/// Composition oriented so that W^{perm_compose(σ,μ)} = W^σ·W^μ, i.e. i ↦ μ(σ(i)).
inline Permutation perm_compose(const Permutation& sigma, const Permutation& mu) {
    if (sigma.size() != mu.size())
        throw shape_error("perm_compose: lengths " + std::to_string(sigma.size()) + " and " +
                          std::to_string(mu.size()) + " differ");
    std::vector<index_t> img(sigma.size());
    for (index_t i = 0; i < img.size(); ++i) img[i] = mu.image()[sigma.image()[i] - 1];
    return Permutation(std::move(img));
}

inline Permutation perm_invert(const Permutation& p) {
    std::vector<index_t> img(p.size());
    for (index_t i = 0; i < img.size(); ++i) img[p.image()[i] - 1] = i + 1;
    return Permutation(std::move(img));
}

/// Every element of S_d in lexicographic order of image arrays.
inline std::vector<Permutation> all_permutations(index_t d) {
    std::vector<index_t> img(d);
    std::iota(img.begin(), img.end(), index_t{1});
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// m×n logical matrix δ_m[c₁,…,c_n]: column j is δ_m^{c_j}.
class LogicalMatrix {
public:
    LogicalMatrix() = default;
    LogicalMatrix(index_t rows, std::vector<index_t> cols) : rows_(rows), cols_(std::move(cols)) {
        for (index_t j = 0; j < cols_.size(); ++j)
            if (cols_[j] < 1 || cols_[j] > rows_)
                throw bounds_error("column " + std::to_string(j + 1) + " points at row " + std::to_string(cols_[j]) +
                                   " outside 1.." + std::to_string(rows_));
    }

    static LogicalMatrix identity(index_t n) {
        std::vector<index_t> c(n);
        std::iota(c.begin(), c.end(), index_t{1});
        return {n, std::move(c)};
    }

    [[nodiscard]] index_t rows() const { return rows_; }
    [[nodiscard]] index_t cols() const { return cols_.size(); }
    [[nodiscard]] const std::vector<index_t>& columns() const { return cols_; }

    /// True when square and the columns form a permutation of ⟨n⟩.
    [[nodiscard]] bool is_permutation() const {
        if (rows_ != cols_.size()) return false;
        std::vector<bool> seen(rows_ + 1, false);
        for (index_t c : cols_) {
            if (seen[c]) return false;
            seen[c] = true;
        }
        return true;
    }

    friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

private:
    index_t rows_ = 0;
    std::vector<index_t> cols_;
};

struct PermMatrixBuild {
    LogicalMatrix matrix;
    /// Some nᵢ = 1, outside the nᵢ ≥ 2 assumption of the construction.
    bool degenerate_axes = false;
};

/// σ-permutation matrix W^σ_{[n₁,…,n_d]} together with the degenerate-axis flag.
inline PermMatrixBuild build_perm_matrix_report(const Shape& dims, const Permutation& sigma) {
    const index_t d = dims.order();
    if (sigma.size() != d)
        throw shape_error("permutation of length " + std::to_string(sigma.size()) + " for shape of order " +
                          std::to_string(d));
    std::vector<index_t> permuted_dims(d);
    for (index_t k = 0; k < d; ++k) permuted_dims[k] = dims.dims()[sigma.image()[k] - 1];
    const Shape target(permuted_dims);

    // Column c enumerates (m₁,…,m_d) in ID order over dims; its row is the rank of
    // (m_{σ(1)},…,m_{σ(d)}) over (n_{σ(1)},…,n_{σ(d)}).
    std::vector<index_t> cols;
    cols.reserve(dims.size());
    MultiIndex j(d);
    for (const MultiIndex& m : index_range(dims)) {
        for (index_t k = 0; k < d; ++k) j[k] = m[sigma.image()[k] - 1];
        cols.push_back(linearize(target, j));
    }
    const bool degenerate = std::any_of(dims.dims().begin(), dims.dims().end(), [](index_t n) { return n < 2; });
    return {LogicalMatrix(dims.size(), std::move(cols)), degenerate};
}

inline LogicalMatrix build_perm_matrix(const Shape& dims, const Permutation& sigma) {
    return build_perm_matrix_report(dims, sigma).matrix;
}

/// W·x by scatter: output[c_j] += x[j]. Call it qualified; std::apply is visible through ADL on vectors.
template <Scalar T>
std::vector<T> apply(const LogicalMatrix& w, const std::vector<T>& x) {
    if (x.size() != w.cols())
        throw shape_error("apply: vector of length " + std::to_string(x.size()) + " for " +
                          std::to_string(w.cols()) + " columns");
    std::vector<T> out(w.rows(), T{0});
    for (index_t j = 0; j < x.size(); ++j) out[w.columns()[j] - 1] += x[j];
    return out;
}

/// Row vector times W by gather: output[j] = x[c_j].
template <Scalar T>
std::vector<T> apply_right(const std::vector<T>& x, const LogicalMatrix& w) {
    if (x.size() != w.rows())
        throw shape_error("apply_right: row vector of length " + std::to_string(x.size()) + " for " +
                          std::to_string(w.rows()) + " rows");
    std::vector<T> out;
    out.reserve(w.cols());
    for (index_t c : w.columns()) out.push_back(x[c - 1]);
    return out;
}

inline LogicalMatrix compose_lm(const LogicalMatrix& w1, const LogicalMatrix& w2) {
    if (w2.rows() != w1.cols())
        throw shape_error("compose_lm: " + std::to_string(w1.rows()) + "x" + std::to_string(w1.cols()) + " times " +
                          std::to_string(w2.rows()) + "x" + std::to_string(w2.cols()));
    std::vector<index_t> cols;
    cols.reserve(w2.cols());
    for (index_t c : w2.columns()) cols.push_back(w1.columns()[c - 1]);
    return {w1.rows(), std::move(cols)};
}

inline LogicalMatrix invert_lm(const LogicalMatrix& w) {
    if (!w.is_permutation()) throw shape_error("invert_lm: logical matrix is not a permutation matrix");
    std::vector<index_t> inv(w.cols());
    for (index_t j = 0; j < w.cols(); ++j) inv[w.columns()[j] - 1] = j + 1;
    return {w.rows(), std::move(inv)};
}

inline LogicalMatrix transpose_lm(const LogicalMatrix& w) {
    if (!w.is_permutation()) throw shape_error("transpose_lm: only permutation matrices are closed under transpose");
    return invert_lm(w);
}

}  // namespace hypermat
