#include "tricomi/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "tricomi/gamma.hpp"
#include "tricomi/kummer.hpp"
#include "tricomi/quadrature.hpp"

namespace tricomi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
using cplx = std::complex<double>;

// U(-m, b, z) = (-1)^m Σ_s C(m,s) (b+s)_{m-s} (-z)^s
ComplexValue terminating(int m, double b, cplx z) {
    cplx total = 0.0;
    double magnitude = 0.0;
    double binom = 1.0;
    cplx zpow = 1.0;
    for (int s = 0; s <= m; ++s) {
        const cplx term = binom * pochhammer(b + s, m - s) * zpow;
        total += term;
        magnitude += std::abs(term);
        binom = binom * (m - s) / (s + 1.0);
        zpow *= -z;
    }
    if (m % 2 == 1) total = -total;
    return {total, 4.0 * (m + 1) * kEps * magnitude, Method::terminating_series};
}

FunctionValue real_part(const ComplexValue& v) { return {v.value.real(), v.abs_error, v.method}; }

// Coefficient Γ(num)/Γ(den) as sign * exp(log); den at a pole gives 0.
struct GammaQuotient {
    double value = 0.0;
    double rel_error = 0.0;
};

GammaQuotient gamma_quotient(double num, double den) {
    if (is_nonpositive_integer(den)) return {0.0, 0.0};
    const auto ln = log_gamma(num);
    const auto ld = log_gamma(den);
    const double lq = ln.log_abs - ld.log_abs;
    return {ln.sign * ld.sign * std::exp(lq),
            kEps * (8.0 + std::abs(ln.log_abs) + std::abs(ld.log_abs))};
}

std::string point_text(double a, double c, double x) {
    return "(a=" + std::to_string(a) + ", c=" + std::to_string(c) + ", x=" + std::to_string(x) + ")";
}

}  // namespace

double asymptotic_alpha1(double a, double c) { return a * (c - a - 1.0); }

double asymptotic_alpha2(double a, double c) { return 0.5 * a * (a + 1.0) * (a + 1.0 - c) * (a + 2.0 - c); }

AsymptoticSeries AsymptoticSeries::make(double a, double c, int order) {
    AsymptoticSeries s;
    s.alpha1 = asymptotic_alpha1(a, c);
    s.alpha2 = asymptotic_alpha2(a, c);
    s.order = order;
    return s;
}

FunctionValue psi_quadrature(const ParameterPoint& p, double tol) {
    p.validate();
    if (!(p.a > 0.0)) throw DomainError("integral representation needs a > 0 " + point_text(p.a, p.c, p.x));
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    const double x = p.x;
    const double beta = p.c - p.a - 1.0;
    auto g = [x, beta](double t) { return std::exp(-x * t + beta * std::log1p(t)); };
    quad::HalfLineShape shape;
    shape.alpha = p.a - 1.0;
    shape.inner_scale = std::min(1.0, 1.0 / x);
    shape.decay_onset = std::max(1.0, 2.0 * (std::abs(p.a - 1.0) + std::max(beta, 0.0)) / x);
    const auto r = quad::integrate_half_line(g, shape, tol);
    const auto lg = log_gamma(p.a);
    const double scale = std::exp(-lg.log_abs);
    FunctionValue out;
    out.value = r.value * scale;
    out.abs_error = r.abs_error * scale + kEps * (4.0 + std::abs(lg.log_abs)) * std::abs(out.value);
    out.method = Method::quadrature;
    return out;
}

ComplexValue psi_quadrature_complex(double a, double c, cplx z, double tol) {
    if (!(a > 0.0)) throw DomainError("integral representation needs a > 0");
    if (z == 0.0) throw DomainError("psi_quadrature_complex needs z != 0");
    const double arg = std::arg(z);
    // ray direction keeps Re(z t) > 0 and stays off the cut of (1+t)^{c-a-1}
    const double phi = std::clamp(-arg, -0.75 * std::numbers::pi, 0.75 * std::numbers::pi);
    if (std::cos(arg + phi) < 0.2)
        throw DomainError("psi_quadrature_complex: argument too far round the branch point");
    const cplx dir = std::polar(1.0, phi);
    const double beta = c - a - 1.0;
    auto integrand = [&](double r) {
        const cplx t = r * dir;
        return std::exp(-z * t + beta * std::log(1.0 + t));
    };
    const double rate = std::real(z * dir);
    quad::HalfLineShape shape;
    shape.alpha = a - 1.0;
    shape.inner_scale = std::min(1.0, 1.0 / std::abs(z));
    shape.decay_onset = std::max(1.0, 2.0 * (std::abs(a - 1.0) + std::abs(beta)) / rate);

    const auto r = quad::integrate_half_line(integrand, shape, tol);
    const auto lg = log_gamma(a);
    const cplx scale = std::polar(std::exp(-lg.log_abs), phi * a);
    ComplexValue out;
    out.value = scale * r.value;
    out.abs_error = std::abs(scale) * r.abs_error +
                    kEps * (8.0 + std::abs(lg.log_abs) + std::abs(phi * a)) * std::abs(out.value);
    out.method = Method::quadrature;
    return out;
}

ComplexValue psi_connection(double a, double c, cplx z) {
    if (!std::isfinite(a) || !std::isfinite(c)) throw DomainError("parameters must be finite");
    if (z == 0.0) throw DomainError("psi_connection needs z != 0");
    if (a == 0.0) return {1.0, 0.0, Method::terminating_series};
    if (is_nonpositive_integer(a) && a > -1e4) return terminating(static_cast<int>(-a), c, z);
    const double ap = a - c + 1.0;
    if (is_nonpositive_integer(ap) && ap > -1e4) {
        // ψ(a,c,z) = z^{1-c} ψ(a-c+1, 2-c, z)
        auto v = terminating(static_cast<int>(-ap), 2.0 - c, z);
        const cplx power = std::exp((1.0 - c) * std::log(z));
        v.value *= power;
        v.abs_error = v.abs_error * std::abs(power) + 4.0 * kEps * std::abs(v.value);
        return v;
    }
    if (near_integer(c))
        throw DomainError("connection formula degenerates for integer c = " + std::to_string(c));

    const auto q1 = gamma_quotient(1.0 - c, ap);
    const auto q2 = gamma_quotient(c - 1.0, a);
    const cplx log_z = std::log(z);
    const cplx power = std::exp((1.0 - c) * log_z);
    const auto m1 = kummer_m(a, c, z);
    const auto m2 = kummer_m(ap, 2.0 - c, z);
    const cplx t1 = q1.value * m1.value;
    const cplx t2 = q2.value * power * m2.value;

    ComplexValue out;
    out.value = t1 + t2;
    out.method = Method::connection_series;
    const double power_rel = kEps * (4.0 + std::abs((1.0 - c) * log_z));
    out.abs_error = std::abs(q1.value) * m1.abs_error + q1.rel_error * std::abs(t1) +
                    std::abs(q2.value * power) * m2.abs_error +
                    (q2.rel_error + power_rel) * std::abs(t2) +
                    2.0 * kEps * (std::abs(t1) + std::abs(t2));
    if (!std::isfinite(std::abs(out.value)) || out.abs_error >= std::abs(out.value))
        throw CancellationError("connection formula terms cancel beyond precision at " +
                                point_text(a, c, std::abs(z)));
    return out;
}

FunctionValue psi_connection(double a, double c, double x) {
    return real_part(psi_connection(a, c, cplx(x, 0.0)));
}

ComplexValue psi_negative_axis(double a, double c, double t) {
    if (!(t > 0.0)) throw DomainError("psi_negative_axis needs t > 0");
    // +0.0 imaginary part puts the argument exactly at arg = π
    const cplx z(-t, 0.0);
    if (!near_integer(c) || a == 0.0 || is_nonpositive_integer(a) || is_nonpositive_integer(a - c + 1.0))
        return psi_connection(a, c, z);
    return psi_quadrature_complex(a, c, z);
}

FunctionValue psi_asymptotic(const ParameterPoint& p, int order) {
    p.validate();
    if (order < 1) throw DomainError("asymptotic order must be at least 1");
    const double a = p.a, b = p.a - p.c + 1.0, x = p.x;
    double term = 1.0, sum = 1.0, magnitude = 1.0;
    for (int k = 0; k < order; ++k) {
        const double next = term * (a + k) * (b + k) / ((k + 1.0) * -x);
        if (term != 0.0 && std::abs(next) > std::abs(term))
            throw ConvergenceError("asymptotic series diverges before order " + std::to_string(order) +
                                   " at " + point_text(p.a, p.c, x));
        term = next;
        sum += term;
        magnitude += std::abs(term);
    }
    const double omitted = std::abs(term * (a + order) * (b + order) / ((order + 1.0) * x));
    const double lead = std::pow(x, -a);
    return {lead * sum, lead * (omitted + 2.0 * kEps * magnitude), Method::asymptotic_large_x};
}

double asymptotic_threshold(double a, double c) {
    const double s = 1.0 + std::abs(a) + std::abs(c);
    return 50.0 * s * s;
}

namespace {

// Sum the large-x series to rounding; empty result if it starts diverging.
std::optional<FunctionValue> asymptotic_to_rounding(double a, double c, double x) {
    const double b = a - c + 1.0;
    double term = 1.0, sum = 1.0, magnitude = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double next = term * (a + k) * (b + k) / ((k + 1.0) * -x);
        if (std::abs(next) > std::abs(term)) return std::nullopt;
        term = next;
        sum += term;
        magnitude += std::abs(term);
        if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) {
            const double lead = std::pow(x, -a);
            return FunctionValue{lead * sum, lead * (std::abs(term) + 2.0 * kEps * magnitude) +
                                                 kEps * std::abs(lead * sum) * (1.0 + std::abs(a * std::log(x))),
                                 Method::asymptotic_large_x};
        }
    }
    return std::nullopt;
}

FunctionValue psi_positive_a(double a, double c, double x, double tol) {
    if (x > asymptotic_threshold(a, c)) {
        if (auto v = asymptotic_to_rounding(a, c, x)) return *v;
    }
    return psi_quadrature({a, c, x}, tol);
}

FunctionValue psi_unchecked(double a, double c, double x, double tol) {
    if (a == 0.0 || (is_nonpositive_integer(a) && a > -1e4))
        return psi_connection(a, c, x);
    if (a > 0.0) return psi_positive_a(a, c, x, tol);

    const double ap = a - c + 1.0;
    if (ap > 0.0 || (is_nonpositive_integer(ap) && ap > -1e4)) {
        // ψ(a,c,x) = x^{1-c} ψ(a-c+1, 2-c, x)
        auto v = ap > 0.0 ? psi_positive_a(ap, 2.0 - c, x, tol) : psi_connection(a, c, x);
        if (ap > 0.0) {
            const double power = std::pow(x, 1.0 - c);
            v.value *= power;
            v.abs_error = v.abs_error * power +
                          kEps * (2.0 + std::abs((1.0 - c) * std::log(x))) * std::abs(v.value);
        }
        return v;
    }

    // Downward recurrence U(α-1) = (2α - c + x) U(α) - α(α - c + 1) U(α+1),
    // stable because U is the minimal solution as α grows.
    const int steps = static_cast<int>(std::floor(-a)) + 1;
    const double a0 = a + steps;
    auto upper = psi_positive_a(a0 + 1.0, c, x, tol);
    auto current = psi_positive_a(a0, c, x, tol);
    double u_hi = upper.value, e_hi = upper.abs_error;
    double u = current.value, e = current.abs_error;
    for (int k = 0; k < steps; ++k) {
        const double alpha = a0 - k;
        const double p1 = (2.0 * alpha - c + x);
        const double p2 = alpha * (alpha - c + 1.0);
        const double next = p1 * u - p2 * u_hi;
        const double next_err = std::abs(p1) * e + std::abs(p2) * e_hi +
                                2.0 * kEps * (std::abs(p1 * u) + std::abs(p2 * u_hi));
        u_hi = u;
        e_hi = e;
        u = next;
        e = next_err;
    }
    if (!(e < std::abs(u)))
        throw CancellationError("recurrence lost all precision at " + point_text(a, c, x));
    return {u, e, Method::recurrence};
}

}  // namespace

FunctionValue psi(const ParameterPoint& p, const PsiOptions& opts) {
    p.validate();
    auto v = psi_unchecked(p.a, p.c, p.x, opts.tol);
    if (opts.cross_check && !near_integer(p.c) && v.method != Method::connection_series &&
        v.method != Method::terminating_series) {
        try {
            const auto w = psi_connection(p.a, p.c, p.x);
            const double diff = std::abs(v.value - w.value);
            const double budget = std::max(1e-8 * std::abs(v.value), v.abs_error + w.abs_error);
            if (diff > budget)
                throw DisagreementError("psi routes disagree by " + std::to_string(diff) + " at " +
                                        point_text(p.a, p.c, p.x));
        } catch (const CancellationError&) {
            // connection route unusable here; nothing to compare
        }
    }
    return v;
}

}  // namespace tricomi
