#pragma once

#include <complex>

#include "tricomi/types.hpp"

namespace tricomi {

/// Stopping and budget controls for the Kummer series.
struct SeriesOptions {
    double tol = 1e-16;     // stop after two consecutive |term| < tol * |partial sum|
    int max_terms = 10000;  // hard budget
};

/// Kummer's function M(a, c, z) = Σ (a)_k / ((c)_k k!) z^k.
///
/// For Re z < 0 the series is summed after the Kummer transformation
/// M(a, c, z) = e^z M(c - a, c, -z), which keeps the terms of one sign for
/// large |z|. Throws PoleError when c is a nonpositive integer and
/// ConvergenceError when the term budget runs out.
ComplexValue kummer_m(double a, double c, std::complex<double> z, const SeriesOptions& opts = {});

/// Real-argument convenience overload.
FunctionValue kummer_m(double a, double c, double x, const SeriesOptions& opts = {});

}  // namespace tricomi
