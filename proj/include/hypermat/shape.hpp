#pragma once

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace hypermat {

using index_t = std::size_t;

/// 1-based position of every axis of a hypermatrix, (i₁,…,i_d).
using MultiIndex = std::vector<index_t>;

inline index_t checked_mul(index_t a, index_t b) {
    index_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("size product overflows index type");
    return r;
}

inline index_t checked_product(std::span<const index_t> dims) {
    index_t p = 1;
    for (index_t n : dims) p = checked_mul(p, n);
    return p;
}

/// Dimensions (n₁,…,n_d) of a hypermatrix. Order 0 denotes a scalar.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<index_t> dims) : dims_(std::move(dims)) { validate(); }
    Shape(std::initializer_list<index_t> dims) : dims_(dims) { validate(); }

    [[nodiscard]] index_t order() const { return dims_.size(); }
    [[nodiscard]] index_t size() const { return size_; }
    [[nodiscard]] const std::vector<index_t>& dims() const { return dims_; }

    /// Dimension of a 1-based axis.
    [[nodiscard]] index_t dim(index_t axis) const {
        if (axis < 1 || axis > dims_.size())
            throw bounds_error("axis " + std::to_string(axis) + " outside 1.." + std::to_string(dims_.size()));
        return dims_[axis - 1];
    }

    [[nodiscard]] bool is_hypercubic() const {
        for (index_t n : dims_)
            if (n != dims_.front()) return false;
        return true;
    }

    friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (index_t k = 0; k < dims_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(dims_[k]);
        }
        return s + ")";
    }

private:
    void validate() {
        for (index_t k = 0; k < dims_.size(); ++k)
            if (dims_[k] == 0) throw shape_error("dimension of axis " + std::to_string(k + 1) + " must be >= 1");
        size_ = checked_product(dims_);
    }

    std::vector<index_t> dims_;
    index_t size_ = 1;
};

/// Flat 1-based rank of idx in natural ID order (i₁ most significant).
inline index_t linearize(const Shape& shape, std::span<const index_t> idx) {
    if (idx.size() != shape.order())
        throw bounds_error("multi-index has " + std::to_string(idx.size()) + " entries, shape has order " +
                           std::to_string(shape.order()));
    index_t r = 0;
    for (index_t k = 0; k < idx.size(); ++k) {
        const index_t n = shape.dims()[k];
        if (idx[k] < 1 || idx[k] > n)
            throw bounds_error("index " + std::to_string(idx[k]) + " on axis " + std::to_string(k + 1) +
                               " outside 1.." + std::to_string(n));
        r = r * n + (idx[k] - 1);
    }
    return r + 1;
}

inline MultiIndex delinearize(const Shape& shape, index_t rank) {
    if (rank < 1 || rank > shape.size())
        throw bounds_error("rank " + std::to_string(rank) + " outside 1.." + std::to_string(shape.size()));
    MultiIndex idx(shape.order());
    index_t r = rank - 1;
    for (index_t k = shape.order(); k-- > 0;) {
        const index_t n = shape.dims()[k];
        idx[k] = r % n + 1;
        r /= n;
    }
    return idx;
}

/// Odometer over every multi-index of a shape in ID order.
class IndexRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MultiIndex;
        using difference_type = std::ptrdiff_t;
        using pointer = const MultiIndex*;
        using reference = const MultiIndex&;

        iterator() = default;
        iterator(const std::vector<index_t>* dims, index_t rank, index_t end)
            : dims_(dims), idx_(dims->size(), 1), rank_(rank), end_(end) {}

        reference operator*() const { return idx_; }
        pointer operator->() const { return &idx_; }
        iterator& operator++() {
            ++rank_;
            for (index_t k = idx_.size(); k-- > 0;) {
                if (++idx_[k] <= (*dims_)[k]) break;
                idx_[k] = 1;
            }
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.rank_ == b.rank_; }

        /// 0-based flat position of the current index.
        [[nodiscard]] index_t offset() const { return rank_; }

    private:
        const std::vector<index_t>* dims_ = nullptr;
        MultiIndex idx_;
        index_t rank_ = 0;
        index_t end_ = 0;
    };

    explicit IndexRange(const Shape& shape) : dims_(shape.dims()), size_(shape.size()) {}

    [[nodiscard]] iterator begin() const { return {&dims_, 0, size_}; }
    [[nodiscard]] iterator end() const { return {&dims_, size_, size_}; }

private:
    std::vector<index_t> dims_;
    index_t size_;
};

inline IndexRange index_range(const Shape& shape) { return IndexRange(shape); }

}  // namespace hypermat
