#include "tricomi/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <string>

#include "tricomi/gamma.hpp"
#include "tricomi/psi.hpp"
#include "tricomi/quadrature.hpp"

namespace tricomi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ∫_0^∞ t^alpha w(t) φ̃(t) dt where φ̃ is the smooth part and w a smooth
// weight; the largest relative error of φ̃ seen is folded into the budget.
template <class Weight>
FunctionValue integrate_density(const WeightDensity& d, double alpha, double inner_scale, Weight weight,
                                double tol) {
    double worst_rel = 0.0;
    auto g = [&](double t) {
        if (t == 0.0) t = std::numeric_limits<double>::min();
        const auto s = d.smooth_part(t);
        if (s.value > 0.0) worst_rel = std::max(worst_rel, s.abs_error / s.value);
        return weight(t) * s.value;
    };
    quad::HalfLineShape shape;
    shape.alpha = alpha;
    shape.inner_scale = inner_scale;
    // e^{-t} t^{2a-c} decays beyond this
    shape.decay_onset = 2.0 * (2.0 * d.a() + std::abs(d.c()) + 1.0);
    const auto r = quad::integrate_half_line(g, shape, tol);
    return {r.value, r.abs_error + worst_rel * std::abs(r.value) + 4.0 * kEps * std::abs(r.value),
            Method::quadrature};
}

}  // namespace

WeightDensity WeightDensity::make(double a, double c) {
    if (!(a > 0.0) || !(c < 1.0))
        throw DomainError("weight density needs a > 0 and c < 1, got a=" + std::to_string(a) +
                          ", c=" + std::to_string(c));
    const double lp = -(log_gamma(a + 1.0).log_abs + log_gamma(a - c + 1.0).log_abs);
    std::shared_ptr<Memo> memo;
    if (near_integer(c)) memo = std::make_shared<Memo>();
    return WeightDensity(a, c, lp, std::move(memo));
}

struct WeightDensity::Memo {
    std::mutex mutex;
    std::unordered_map<double, FunctionValue> values;
};

FunctionValue WeightDensity::smooth_part(double t) const {
    if (!memo_) return compute_smooth_part(t);
    {
        std::lock_guard lock(memo_->mutex);
        if (auto it = memo_->values.find(t); it != memo_->values.end()) return it->second;
    }
    const auto v = compute_smooth_part(t);
    std::lock_guard lock(memo_->mutex);
    memo_->values.emplace(t, v);
    return v;
}

FunctionValue WeightDensity::compute_smooth_part(double t) const {
    const auto v = psi_negative_axis(a_, c_, t);
    const double mod = std::abs(v.value);
    if (!(mod > v.abs_error)) throw DomainError("|psi(a,c,te^{i pi})| indistinguishable from 0");
    const double value = std::exp(log_prefactor_ - t - 2.0 * std::log(mod));
    const double rel = 2.0 * v.abs_error / mod + kEps * (4.0 + t + std::abs(log_prefactor_));
    return {value, rel * value, v.method};
}

FunctionValue phi(const WeightDensity& d, double t) {
    if (!(t > 0.0)) throw DomainError("phi needs t > 0");
    auto s = d.smooth_part(t);
    const double power = std::pow(t, -d.c());
    s.value *= power;
    s.abs_error = s.abs_error * power + 2.0 * kEps * s.value;
    return s;
}

bool moment_in_region(int power, double a, double c) {
    switch (power) {
        case 1:
        case 0: return a > 0.0 && c < 1.0;
        case -1: return a > 0.0 && c < 0.0;
        case -2: return a > 1.0 && c < -1.0;
        default: return false;
    }
}

MomentIdentity moment_identity(int power, double a, double c) {
    if (power < -2 || power > 1) throw DomainError("moment power must be in {-2,-1,0,1}");
    if (!moment_in_region(power, a, c))
        throw RegionError("moment " + std::to_string(power) + " identity does not hold at a=" +
                          std::to_string(a) + ", c=" + std::to_string(c));
    switch (power) {
        case 1: return {1, 1.0 + a - c};
        case 0: return {0, 1.0};
        case -1: return {-1, -1.0 / c};
        default: return {-2, (c - a) / (c * c * (c + 1.0))};
    }
}

FunctionValue phi_moment(const WeightDensity& d, int power, double tol) {
    moment_identity(power, d.a(), d.c());  // region check
    return integrate_density(d, power - d.c(), 1.0, [](double) { return 1.0; }, tol);
}

FunctionValue stieltjes_ratio(const WeightDensity& d, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("stieltjes_ratio needs x > 0");
    auto r = integrate_density(d, 1.0 - d.c(), std::min(1.0, x),
                               [x](double t) { return 1.0 / ((x + t) * (x + t)); }, tol);
    r.value = -r.value;
    return r;
}

FunctionValue stieltjes_first_shift(const WeightDensity& d, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("stieltjes_first_shift needs x > 0");
    const auto r = integrate_density(
        d, -d.c(), std::min(1.0, x), [x](double t) { return x * x / ((x + t) * (x + t)); }, tol);
    const double scale = 1.0 / (1.0 + d.a() - d.c());
    return {(1.0 - r.value) * scale, (r.abs_error + kEps) * scale + kEps * std::abs(1.0 - r.value) * scale,
            Method::quadrature};
}

FunctionValue stieltjes_second_shift(const WeightDensity& d, double x, double tol) {
    auto r = stieltjes_ratio(d, x, tol);
    const double scale = d.a() / (1.0 + d.a() - d.c());
    r.value *= scale;
    r.abs_error = r.abs_error * scale + 2.0 * kEps * std::abs(r.value);
    return r;
}

}  // namespace tricomi
