#pragma once

namespace tricomi {

/// log|Γ(z)| together with the sign of Γ(z).
struct LogGamma {
    double log_abs = 0.0;
    int sign = 1;

    [[nodiscard]] double value() const;
};

/// Lanczos evaluation for z >= 1/2 and the reflection formula below that.
/// Throws PoleError for z in {0, -1, -2, ...}.
LogGamma log_gamma(double z);

/// Γ(z) as a double; overflows to ±inf like std::tgamma.
double gamma(double z);

/// 1/Γ(z), which is entire: returns exactly 0 at the poles.
double reciprocal_gamma(double z);

/// sin(πz) with the argument reduced exactly, so integers give 0.
double sin_pi(double z);

/// Rising factorial (a)_n.
double pochhammer(double a, int n);

}  // namespace tricomi
