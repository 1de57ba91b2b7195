#include "tricomi/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tricomi/errors.hpp"
#include "tricomi/types.hpp"

namespace tricomi {

namespace {

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_positive(double z) {
    // z >= 1/2
    const double zm1 = z - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (zm1 + static_cast<double>(i));
    const double t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double LogGamma::value() const { return sign * std::exp(log_abs); }

double sin_pi(double z) {
    // reduce to r in [-1, 1]; z - 2 round(z/2) is exact in binary floating point
    const double r = z - 2.0 * std::round(0.5 * z);
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(std::numbers::pi * r);
}

LogGamma log_gamma(double z) {
    if (std::isnan(z)) throw DomainError("log_gamma of NaN");
    if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at " + std::to_string(z));
    if (z >= 0.5) return {log_gamma_positive(z), 1};
    // Γ(z) Γ(1-z) = π / sin(πz); Γ(1-z) > 0 here
    const double s = sin_pi(z);
    return {std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma_positive(1.0 - z),
            s > 0.0 ? 1 : -1};
}

double gamma(double z) { return log_gamma(z).value(); }

double reciprocal_gamma(double z) {
    if (is_nonpositive_integer(z)) return 0.0;
    const auto lg = log_gamma(z);
    return lg.sign * std::exp(-lg.log_abs);
}

double pochhammer(double a, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

}  // namespace tricomi
