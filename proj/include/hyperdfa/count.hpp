#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperdfa {

// Path and error counts grow exponentially with the state count, so every
// count in the library is an arbitrary-precision nonnegative integer.
using Count = boost::multiprecision::cpp_int;

/// Size of a symmetric difference of two languages: a finite exact count or
/// infinity.
class DiffCount {
public:
    DiffCount() = default;
    explicit DiffCount(Count value) : value_(std::move(value)) {}

    static DiffCount infinite() {
        DiffCount d;
        d.value_.reset();
        return d;
    }

    bool is_finite() const { return value_.has_value(); }
    bool is_infinite() const { return !value_.has_value(); }

    // Precondition: is_finite().
    const Count& value() const { return *value_; }

    /// Decimal for finite counts, `inf` otherwise.
    std::string to_string() const { return value_ ? value_->str() : std::string("inf"); }

    friend bool operator==(const DiffCount& a, const DiffCount& b) = default;
    friend bool operator==(const DiffCount& a, const Count& b) { return a.value_ && *a.value_ == b; }

    friend std::ostream& operator<<(std::ostream& os, const DiffCount& d) { return os << d.to_string(); }

private:
    std::optional<Count> value_{Count(0)};
};

}  // namespace hyperdfa
