#include "tricomi/turanian.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tricomi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Triple {
    FunctionValue center, lower, upper;
};

Triple evaluate_triple(TuranianKind kind, const ParameterPoint& p, const PsiOptions& opts) {
    p.validate();
    const auto [da, dc] = shift_of(kind);
    return {psi(p, opts), psi({p.a - da, p.c - dc, p.x}, opts), psi({p.a + da, p.c + dc, p.x}, opts)};
}

}  // namespace

std::string_view to_string(TuranianKind kind) {
    switch (kind) {
        case TuranianKind::both_shift: return "both_shift";
        case TuranianKind::first_shift: return "first_shift";
        case TuranianKind::second_shift: return "second_shift";
    }
    return "unknown";
}

TuranianKind parse_turanian_kind(std::string_view text) {
    if (text == "both" || text == "both_shift") return TuranianKind::both_shift;
    if (text == "first" || text == "first_shift") return TuranianKind::first_shift;
    if (text == "second" || text == "second_shift") return TuranianKind::second_shift;
    throw DomainError("unknown Turanian kind '" + std::string(text) + "'");
}

std::pair<double, double> shift_of(TuranianKind kind) {
    switch (kind) {
        case TuranianKind::both_shift: return {1.0, 1.0};
        case TuranianKind::first_shift: return {1.0, 0.0};
        case TuranianKind::second_shift: return {0.0, 1.0};
    }
    return {0.0, 0.0};
}

FunctionValue turanian(TuranianKind kind, const ParameterPoint& p, const PsiOptions& opts) {
    const auto t = evaluate_triple(kind, p, opts);
    const double square = t.center.value * t.center.value;
    const double product = t.lower.value * t.upper.value;
    FunctionValue out;
    out.value = square - product;
    out.abs_error = 2.0 * std::abs(t.center.value) * t.center.abs_error +
                    std::abs(t.upper.value) * t.lower.abs_error +
                    std::abs(t.lower.value) * t.upper.abs_error +
                    2.0 * kEps * (square + std::abs(product));
    out.method = t.center.method;
    return out;
}

FunctionValue turanian_ratio(TuranianKind kind, const ParameterPoint& p, const PsiOptions& opts) {
    const auto t = evaluate_triple(kind, p, opts);
    if (!(std::abs(t.center.value) > t.center.abs_error))
        throw DomainError("psi(a,c,x) indistinguishable from zero; ratio undefined");
    const double q = t.lower.value * t.upper.value / (t.center.value * t.center.value);
    FunctionValue out;
    out.value = 1.0 - q;
    out.abs_error = std::abs(q) * (t.lower.rel_error() + t.upper.rel_error() + 2.0 * t.center.rel_error() +
                                   4.0 * kEps) +
                    kEps;
    out.method = t.center.method;
    return out;
}

double SharpnessLimit::limit_value(double a, double c) const {
    if (normalization == Normalization::ratio_times_x2) {
        // x²Δ/ψ² tends to c-a-1 at infinity and to 0 at the origin
        return direction == LimitDirection::x_to_infinity ? c - a - 1.0 : 0.0;
    }
    if (direction == LimitDirection::x_to_infinity) return 0.0;
    switch (kind) {
        case TuranianKind::both_shift: return 1.0 / c;
        case TuranianKind::first_shift: return 1.0 / (1.0 + a - c);
        case TuranianKind::second_shift: return a / (c * (1.0 + a - c));
    }
    return 0.0;
}

bool SharpnessLimit::in_region(double a, double c) const {
    if (direction == LimitDirection::x_to_infinity) return a > 0.0 && c < 1.0;
    if (normalization == Normalization::ratio_times_x2) return a > 0.0 && c < 0.0;
    switch (kind) {
        case TuranianKind::both_shift: return a > 0.0 && c < 0.0;
        case TuranianKind::first_shift: return a > 1.0 && c < 1.0;
        case TuranianKind::second_shift: return a > 1.0 && c < -1.0;
    }
    return false;
}

FunctionValue SharpnessLimit::normalized(const ParameterPoint& p, const PsiOptions& opts) const {
    auto r = turanian_ratio(kind, p, opts);
    if (normalization == Normalization::ratio_times_x2) {
        const double x2 = p.x * p.x;
        r.value *= x2;
        r.abs_error *= x2;
    }
    return r;
}

const std::vector<SharpnessLimit>& sharpness_limits() {
    using K = TuranianKind;
    using D = LimitDirection;
    using N = Normalization;
    static const std::vector<SharpnessLimit> limits = {
        {"zeta_both_inf", K::both_shift, D::x_to_infinity, N::ratio_times_x2},
        {"eta_both_zero", K::both_shift, D::x_to_zero, N::ratio_times_x2},
        {"both_zero", K::both_shift, D::x_to_zero, N::ratio},
        {"first_zero", K::first_shift, D::x_to_zero, N::ratio},
        {"second_zero", K::second_shift, D::x_to_zero, N::ratio},
        {"both_inf", K::both_shift, D::x_to_infinity, N::ratio},
        {"first_inf", K::first_shift, D::x_to_infinity, N::ratio},
        {"second_inf", K::second_shift, D::x_to_infinity, N::ratio},
    };
    return limits;
}

const SharpnessLimit& find_sharpness_limit(std::string_view id) {
    for (const auto& l : sharpness_limits())
        if (l.id == id) return l;
    throw DomainError("unknown sharpness limit '" + std::string(id) + "'");
}

std::vector<double> default_scan(LimitDirection direction) {
    if (direction == LimitDirection::x_to_zero) return {1.0, 1e-1, 1e-2, 1e-3};
    return {10.0, 1e2, 1e3};
}

ScanResult sharpness_scan(const SharpnessLimit& limit, double a, double c,
                          const std::vector<double>& sequence, const PsiOptions& opts) {
    if (!limit.in_region(a, c))
        throw RegionError("(a=" + std::to_string(a) + ", c=" + std::to_string(c) +
                          ") outside the region of limit " + std::string(limit.id));
    if (sequence.size() < 2) throw DomainError("sharpness scan needs at least two points");
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        const bool toward = limit.direction == LimitDirection::x_to_zero ? sequence[i] < sequence[i - 1]
                                                                         : sequence[i] > sequence[i - 1];
        if (!toward) throw DomainError("scan sequence must move monotonically toward the limit");
    }
    ScanResult out;
    out.limit_value = limit.limit_value(a, c);
    for (double x : sequence) {
        ScanPoint sp;
        sp.x = x;
        sp.normalized = limit.normalized({a, c, x}, opts);
        sp.deviation = std::abs(sp.normalized.value - out.limit_value);
        if (sp.normalized.abs_error >= sp.deviation) out.inconclusive = true;
        out.points.push_back(sp);
    }
    const std::size_t start = out.points.size() / 2;
    out.eventually_decreasing = true;
    for (std::size_t i = std::max<std::size_t>(start, 1); i < out.points.size(); ++i)
        if (!(out.points[i].deviation < out.points[i - 1].deviation)) out.eventually_decreasing = false;
    return out;
}

}  // namespace tricomi
