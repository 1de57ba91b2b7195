#include "tricomi/kummer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tricomi/errors.hpp"

namespace tricomi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

ComplexValue sum_series(double a, double c, std::complex<double> z, const SeriesOptions& opts) {
    std::complex<double> term = 1.0;
    std::complex<double> total = 1.0;
    // Σ (k+2)|t_k| bounds the rounding accumulated by the recursive terms.
    double weighted = 2.0;
    int small_run = 0;
    int k = 0;
    for (;; ++k) {
        if (k == opts.max_terms)
            throw ConvergenceError("Kummer series did not converge within " +
                                   std::to_string(opts.max_terms) + " terms");
        term *= (a + k) / ((c + k) * (k + 1.0)) * z;
        total += term;
        const double mag = std::abs(term);
        weighted += (k + 3.0) * mag;
        if (mag == 0.0) break;  // a is a nonpositive integer: polynomial
        small_run = (mag < opts.tol * std::abs(total)) ? small_run + 1 : 0;
        const double next_ratio = std::abs((a + k + 1) * z / ((c + k + 1) * (k + 2.0)));
        if (small_run >= 2 && next_ratio < 0.5 && k + 1 > std::abs(a)) break;
    }
    ComplexValue out;
    out.value = total;
    // the tail after the last term is bounded by a geometric series with ratio < 1/2
    out.abs_error = kEps * weighted + 2.0 * std::abs(term);
    out.method = Method::connection_series;
    return out;
}

}  // namespace

ComplexValue kummer_m(double a, double c, std::complex<double> z, const SeriesOptions& opts) {
    if (is_nonpositive_integer(c))
        throw PoleError("Kummer M undefined for c = " + std::to_string(c));
    if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("Kummer M needs finite arguments");
    if (z == 0.0) return {1.0, 0.0, Method::connection_series};
    if (z.real() >= 0.0) return sum_series(a, c, z, opts);
    auto inner = sum_series(c - a, c, -z, opts);
    const std::complex<double> scale = std::exp(z);
    inner.value *= scale;
    inner.abs_error = inner.abs_error * std::abs(scale) + 2.0 * kEps * std::abs(inner.value);
    return inner;
}

FunctionValue kummer_m(double a, double c, double x, const SeriesOptions& opts) {
    const auto v = kummer_m(a, c, std::complex<double>(x, 0.0), opts);
    return {v.value.real(), v.abs_error, v.method};
}

}  // namespace tricomi
