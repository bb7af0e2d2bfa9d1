#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"
#include "shape.hpp"

namespace hypermat {

/// Order-d array a_{i₁…i_d} stored flat in natural ID order. Immutable after construction.
template <Scalar T>
class Hypermatrix {
public:
    using value_type = T;

    /// Scalar 0 of order 0.
    Hypermatrix() : data_(1, T{0}) {}

    Hypermatrix(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != shape_.size())
            throw shape_error("data length " + std::to_string(data_.size()) + " does not match shape " +
                              shape_.to_string() + " of size " + std::to_string(shape_.size()));
    }

    static Hypermatrix zeros(Shape shape) {
        const index_t n = shape.size();
        return Hypermatrix(std::move(shape), std::vector<T>(n, T{0}));
    }

    /// Builds entries from f(const MultiIndex&), visited in ID order.
    template <typename F>
    static Hypermatrix generate(Shape shape, F&& f) {
        std::vector<T> data;
        data.reserve(shape.size());
        for (const MultiIndex& idx : index_range(shape)) data.push_back(static_cast<T>(f(idx)));
        return Hypermatrix(std::move(shape), std::move(data));
    }

    [[nodiscard]] const Shape& shape() const { return shape_; }
    [[nodiscard]] index_t order() const { return shape_.order(); }
    [[nodiscard]] index_t size() const { return data_.size(); }
    [[nodiscard]] const std::vector<T>& flat() const { return data_; }

    [[nodiscard]] const T& at(std::span<const index_t> idx) const { return data_[linearize(shape_, idx) - 1]; }
    [[nodiscard]] const T& at(std::initializer_list<index_t> idx) const {
        return at(std::span<const index_t>(idx.begin(), idx.size()));
    }

    /// Visits (MultiIndex, value) pairs in ID order.
    template <typename F>
    void for_each(F&& f) const {
        auto value = data_.begin();
        for (const MultiIndex& idx : index_range(shape_)) f(idx, *value++);
    }

    friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }

private:
    Shape shape_;
    std::vector<T> data_;
};

template <Scalar T>
Hypermatrix<T> from_flat(Shape shape, std::vector<T> data) {
    return Hypermatrix<T>(std::move(shape), std::move(data));
}

template <Scalar T>
Hypermatrix<T> scalar_hypermatrix(T v) {
    return Hypermatrix<T>(Shape{}, std::vector<T>{v});
}

/// Exact backend: element-wise equality. Float backend: |a−b| ≤ tol·max(1,|a|,|b|).
template <Scalar T>
bool approx_equal(const Hypermatrix<T>& a, const Hypermatrix<T>& b, double tol = 1e-12) {
    if (!(a.shape() == b.shape()))
        throw shape_error("approx_equal: shapes " + a.shape().to_string() + " and " + b.shape().to_string() +
                          " differ");
    if constexpr (is_exact_v<T>) {
        return a.flat() == b.flat();
    } else {
        for (index_t k = 0; k < a.size(); ++k) {
            const double x = a.flat()[k];
            const double y = b.flat()[k];
            if (std::fabs(x - y) > tol * std::max({1.0, std::fabs(x), std::fabs(y)})) return false;
        }
        return true;
    }
}

template <Scalar T>
Hypermatrix<double> to_float(const Hypermatrix<T>& a) {
    std::vector<double> d;
    d.reserve(a.size());
    for (const T& v : a.flat()) d.push_back(to_double(v));
    return Hypermatrix<double>(a.shape(), std::move(d));
}

}  // namespace hypermat
