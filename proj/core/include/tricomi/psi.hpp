#pragma once

#include <complex>

#include "tricomi/types.hpp"

namespace tricomi {

/// Large-x expansion ψ(a,c,x) ~ x^{-a} Σ_k (a)_k (a-c+1)_k / k! (-x)^{-k}.
struct AsymptoticSeries {
    double alpha1 = 0.0;  // a(c - a - 1)
    double alpha2 = 0.0;  // a(a+1)(a+1-c)(a+2-c)/2
    int order = 2;
    double remainder = 0.0;  // magnitude of the first omitted term, relative to x^{-a}

    static AsymptoticSeries make(double a, double c, int order);
};

double asymptotic_alpha1(double a, double c);
double asymptotic_alpha2(double a, double c);

/// Requested relative accuracy for the quadrature route.
inline constexpr double kDefaultPsiTol = 1e-13;

/// ψ(a,c,x) from the Laplace-type integral
///   (1/Γ(a)) ∫_0^∞ e^{-xt} t^{a-1} (1+t)^{c-a-1} dt,  a > 0, x > 0.
/// Throws DomainError for a <= 0 and ConvergenceError if tol is not reached.
FunctionValue psi_quadrature(const ParameterPoint& p, double tol = kDefaultPsiTol);

/// ψ(a,c,z) for complex z on the principal branch by contour rotation of the
/// same integral: the ray is turned to arg t = -θ with θ chosen so that
/// Re(z t) > 0. Needs a > 0 and |arg z| < π + π/2 - margin; works for every
/// real c, integer or not.
ComplexValue psi_quadrature_complex(double a, double c, std::complex<double> z,
                                    double tol = kDefaultPsiTol);

/// ψ(a,c,z) from the connection formula
///   Γ(1-c)/Γ(a-c+1) M(a,c,z) + Γ(c-1)/Γ(a) z^{1-c} M(a-c+1,2-c,z),
/// with z^{1-c} = exp((1-c) Log z) on the principal branch. a = 0 gives
/// exactly 1 and a = -n the terminating polynomial. Throws DomainError when
/// c is within kIntegerGuard of an integer and CancellationError when the
/// two terms cancel beyond the error budget.
ComplexValue psi_connection(double a, double c, std::complex<double> z);

/// Real positive argument convenience overload.
FunctionValue psi_connection(double a, double c, double x);

/// ψ(a, c, t e^{iπ}), i.e. just above the negative real axis.
ComplexValue psi_negative_axis(double a, double c, double t);

/// Truncated large-x series through the (order)-th term. The error estimate
/// is the first omitted term. Throws ConvergenceError when the terms grow
/// before the truncation order is reached.
FunctionValue psi_asymptotic(const ParameterPoint& p, int order);

struct PsiOptions {
    double tol = kDefaultPsiTol;
    /// Also evaluate by the connection formula where it is well conditioned
    /// and throw DisagreementError if the two routes disagree.
    bool cross_check = false;
};

/// x beyond which the dispatcher prefers the asymptotic series.
double asymptotic_threshold(double a, double c);

/// Method dispatcher for real x > 0:
///   a = 0 or a negative integer -> terminating series;
///   a > 0, x past asymptotic_threshold -> asymptotic series summed to rounding;
///   a > 0 -> quadrature;
///   a <= 0, a - c + 1 > 0 -> x^{1-c} ψ(a-c+1, 2-c, x) by quadrature;
///   otherwise -> downward recurrence in a from two quadrature seeds.
FunctionValue psi(const ParameterPoint& p, const PsiOptions& opts = {});

inline FunctionValue psi(double a, double c, double x, const PsiOptions& opts = {}) {
    return psi(ParameterPoint{a, c, x}, opts);
}

}  // namespace tricomi
