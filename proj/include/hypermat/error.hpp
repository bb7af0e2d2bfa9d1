#pragma once

#include <stdexcept>
#include <string>

namespace hypermat {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An index, rank or axis label outside its valid range.
class bounds_error : public error {
public:
    using error::error;
};

/// Incompatible shapes, lengths, partitions or contraction specs.
class shape_error : public error {
public:
    using error::error;
};

/// Exact-integer arithmetic or a size computation would overflow.
class overflow_error : public error {
public:
    using error::error;
};

/// Malformed text or document input.
class format_error : public error {
public:
    using error::error;
};

}  // namespace hypermat
