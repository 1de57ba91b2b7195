#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

#include "tricomi/errors.hpp"

namespace tricomi::quad {

/// Integral value (double or std::complex<double>) with an error estimate.
template <class V>
struct BasicResult {
    V value{};
    double abs_error = 0.0;
    int evaluations = 0;
};

using Result = BasicResult<double>;

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class V>
struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    V value{};
    double error = 0.0;
    double resabs = 0.0;

    // Error already at the rounding floor: splitting cannot help.
    [[nodiscard]] bool saturated() const { return error <= 100.0 * kEps * resabs; }
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
using value_of = std::decay_t<std::invoke_result_t<F&, double>>;

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace detail

/// One Gauss-Kronrod 21 panel with the QUADPACK error heuristic.
template <class F, class V = detail::value_of<F>>
detail::Panel<V> kronrod21(F& f, double lo, double hi) {
    using namespace detail;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const V fc = f(center);
    V resk = kKronrodWeights[10] * fc;
    V resg{};
    double resabs = std::abs(resk);
    std::array<V, 10> f1{}, f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const V sum = f1[j] + f2[j];
        resk += kKronrodWeights[j] * sum;
        resabs += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kGaussWeights[j / 2] * sum;
    }
    const V mean = 0.5 * resk;
    double resasc = kKronrodWeights[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j)
        resasc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    Panel<V> p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    p.resabs = resabs;
    p.error = std::max(err, 50.0 * kEps * resabs);
    if (!finite(p.value) || !std::isfinite(p.error))
        throw ConvergenceError("non-finite integrand value in quadrature panel");
    return p;
}

/// Globally adaptive bisection over an initial set of panels. Stops when the
/// summed error is below max(abs_tol, rel_tol * |I|) or what remains is
/// rounding noise; throws ConvergenceError when the split budget runs out
/// first.
template <class F, class V>
BasicResult<V> refine(F& f, std::vector<detail::Panel<V>> panels, double abs_tol, double rel_tol,
                      int max_splits = 4000) {
    BasicResult<V> out;
    out.evaluations = 21 * static_cast<int>(panels.size());
    std::priority_queue<detail::Panel<V>> open;
    V total{};
    double frozen = 0.0, open_err = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        if (p.saturated()) {
            frozen += p.error;
        } else {
            open.push(p);
            open_err += p.error;
        }
    }
    auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
    auto must_continue = [&] {
        return !open.empty() && frozen + open_err > target() &&
               open_err > std::max(target() - frozen, 0.25 * frozen);
    };
    int splits = 0;
    while (must_continue()) {
        if (splits == max_splits)
            throw ConvergenceError("quadrature tolerance not achieved within subdivision budget");
        const detail::Panel<V> worst = open.top();
        open.pop();
        open_err = std::max(0.0, open_err - worst.error);
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            frozen += worst.error;
            continue;
        }
        const detail::Panel<V> children[2] = {kronrod21(f, worst.lo, mid), kronrod21(f, mid, worst.hi)};
        out.evaluations += 42;
        total += children[0].value + children[1].value - worst.value;
        for (const auto& child : children) {
            if (child.saturated()) {
                frozen += child.error;
            } else {
                open.push(child);
                open_err += child.error;
            }
        }
        ++splits;
    }
    out.value = total;
    out.abs_error = frozen + open_err;
    return out;
}

/// ∫_lo^hi f with adaptive Gauss-Kronrod.
template <class F>
auto integrate(F&& f, double lo, double hi, double abs_tol, double rel_tol, int max_splits = 4000) {
    std::vector panels{kronrod21(f, lo, hi)};
    return refine(f, std::move(panels), abs_tol, rel_tol, max_splits);
}

/// Shape information for ∫_0^∞ t^alpha g(t) dt with g smooth near the origin.
struct HalfLineShape {
    double alpha = 0.0;        // endpoint exponent, must exceed -1
    double inner_scale = 1.0;  // smallest length scale on which g varies
    double decay_onset = 1.0;  // beyond this t the integrand decays monotonically
};

/// ∫_0^∞ t^alpha g(t) dt to max(rel_tol |I|, abs_floor).
///
/// The head panel [0, t0] is mapped by t = t0 u^(1/(alpha+1)), which absorbs
/// the endpoint power exactly. The rest of the half line is cut into doubling
/// panels until the panels past `decay_onset` contribute below rounding; then
/// all panels are refined together.
template <class G>
auto integrate_half_line(G&& g, const HalfLineShape& shape, double rel_tol, double abs_floor = 0.0,
                         int max_panels = 400) {
    if (!(shape.alpha > -1.0)) throw DomainError("half-line integrand is not integrable at 0");
    const double t0 = 0.25 * std::min(1.0, shape.inner_scale);
    const double p = shape.alpha + 1.0;
    const double head_scale = std::pow(t0, p) / p;

    auto head = [&](double u) { return head_scale * g(t0 * std::pow(u, 1.0 / p)); };
    auto body = [&](double t) { return std::pow(t, shape.alpha) * g(t); };

    std::vector head_panels{kronrod21(head, 0.0, 1.0)};
    decltype(head_panels) body_panels;
    auto sum = head_panels.front().value;
    double hi = t0;
    for (int k = 0, quiet = 0; quiet < 3; ++k) {
        if (k == max_panels) throw ConvergenceError("half-line integrand does not decay");
        const double lo = hi;
        hi = 2.0 * lo;
        body_panels.push_back(kronrod21(body, lo, hi));
        sum += body_panels.back().value;
        const double resabs = body_panels.back().resabs;
        const double scale = std::abs(sum);
        if (lo > shape.decay_onset && resabs <= std::max(1e-18 * scale, 1e-5 * abs_floor))
            quiet = resabs <= 1e-30 * scale ? 3 : quiet + 1;
        else
            quiet = 0;
    }

    const double abs_target = 0.5 * std::max(rel_tol * std::abs(sum), abs_floor);
    const auto h = refine(head, std::move(head_panels), abs_target, 0.0);
    const auto b = refine(body, std::move(body_panels), abs_target, 0.0);
    return BasicResult<decltype(sum)>{h.value + b.value, h.abs_error + b.abs_error,
                                      h.evaluations + b.evaluations};
}

}  // namespace tricomi::quad
