#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "tricomi/errors.hpp"

namespace tricomi {

/// How a value was obtained.
enum class Method {
    quadrature,
    connection_series,
    asymptotic_large_x,
    terminating_series,  // a = 0 or a a negative integer
    recurrence,          // contiguous relation in a from quadrature seeds
};

std::string_view to_string(Method m);

/// A computed scalar with an estimated absolute error.
template <class T>
struct BasicValue {
    T value{};
    double abs_error = 0.0;
    Method method = Method::quadrature;

    [[nodiscard]] double rel_error() const {
        const double mag = std::abs(value);
        return mag > 0.0 ? abs_error / mag : INFINITY;
    }
};

using FunctionValue = BasicValue<double>;
using ComplexValue = BasicValue<std::complex<double>>;

/// A point (a, c, x) of the Tricomi function's parameter space.
struct ParameterPoint {
    double a = 0.0;
    double c = 0.0;
    double x = 1.0;

    /// Throws DomainError unless x > 0 and a, c are finite.
    void validate() const;
};

/// |c - round(c)| below this counts as integer c.
inline constexpr double kIntegerGuard = 1e-6;

[[nodiscard]] inline bool near_integer(double v, double guard = kIntegerGuard) {
    return std::abs(v - std::round(v)) < guard;
}

/// True when v is exactly 0, -1, -2, ...
[[nodiscard]] inline bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::round(v);
}

}  // namespace tricomi
