#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <type_traits>

#include "error.hpp"

namespace hypermat {

/// 64-bit integer whose ring operations throw overflow_error instead of wrapping.
class Int {
public:
    constexpr Int() = default;
    constexpr Int(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of a numeric wrapper

    [[nodiscard]] constexpr std::int64_t value() const { return value_; }

    friend Int operator+(Int a, Int b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.value_, b.value_, &r)) throw overflow_error("integer overflow in addition");
        return Int{r};
    }
    friend Int operator-(Int a, Int b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.value_, b.value_, &r)) throw overflow_error("integer overflow in subtraction");
        return Int{r};
    }
    friend Int operator*(Int a, Int b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw overflow_error("integer overflow in multiplication");
        return Int{r};
    }
    Int operator-() const { return Int{0} - *this; }

    Int& operator+=(Int o) { return *this = *this + o; }
    Int& operator-=(Int o) { return *this = *this - o; }
    Int& operator*=(Int o) { return *this = *this * o; }

    friend constexpr bool operator==(Int, Int) = default;
    friend constexpr auto operator<=>(Int, Int) = default;

    friend std::ostream& operator<<(std::ostream& os, Int v) { return os << v.value_; }

private:
    std::int64_t value_ = 0;
};

/// The two scalar backends: exact checked integers and binary64 floats.
template <typename T>
concept Scalar = std::same_as<T, Int> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Int>;

template <Scalar T>
T scalar_abs(T v) {
    if constexpr (is_exact_v<T>) {
        return v < T{0} ? -v : v;
    } else {
        return std::fabs(v);
    }
}

template <Scalar T>
double to_double(T v) {
    if constexpr (is_exact_v<T>) {
        return static_cast<double>(v.value());
    } else {
        return v;
    }
}

}  // namespace hypermat
