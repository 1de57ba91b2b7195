#include "tricomi/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "tricomi/bounds.hpp"
#include "tricomi/errors.hpp"
#include "tricomi/measure.hpp"
#include "tricomi/psi.hpp"
#include "tricomi/turanian.hpp"

namespace tricomi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr SuiteName kSuiteNames[] = {
    {Suite::kernel_crosscheck, "kernel_crosscheck"},
    {Suite::ode_residual, "ode_residual"},
    {Suite::derivative, "derivative"},
    {Suite::moments, "moments"},
    {Suite::stieltjes, "stieltjes"},
    {Suite::bounds, "bounds"},
    {Suite::dominance, "dominance"},
    {Suite::sharpness, "sharpness"},
    {Suite::monotonicity, "monotonicity"},
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw DomainError("not a finite number: '" + std::string(text) + "'");
    return v;
}

int parse_int(std::string_view text) {
    text = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw DomainError("not an integer: '" + std::string(text) + "'");
    return v;
}

// Sort key and row; rows are ordered by (suite, claim, grid index).
struct KeyedRow {
    int suite = 0;
    int claim = 0;
    std::array<int, 3> index{};
    ReportRow row;
};

using Task = std::function<std::vector<KeyedRow>()>;

struct Context {
    const RunConfig& config;
    std::vector<Task> tasks;
};

constexpr int kExploratorySuite = static_cast<int>(Suite::bounds) * 2 + 1;

int suite_key(Suite s) { return static_cast<int>(s) * 2; }

std::string status_for(bool ok) { return ok ? "pass" : "fail"; }

KeyedRow make_row(int suite_k, std::string_view suite, int claim_k, std::string claim, std::array<int, 3> idx,
                  double a, double c, double x) {
    KeyedRow k;
    k.suite = suite_k;
    k.claim = claim_k;
    k.index = idx;
    k.row.suite = std::string(suite);
    k.row.claim = std::move(claim);
    k.row.a = a;
    k.row.c = c;
    k.row.x = x;
    return k;
}

void mark_error(KeyedRow& k, const std::exception& e) {
    k.row.lhs = k.row.rhs = k.row.margin = k.row.budget = kNaN;
    k.row.status = "error";
    k.row.anchor = std::string("error: ") + e.what();
}

// Tolerance-style check: pass iff |lhs - rhs| <= allowed.
void set_agreement(KeyedRow& k, double lhs, double rhs, double allowed) {
    k.row.lhs = lhs;
    k.row.rhs = rhs;
    k.row.budget = allowed;
    k.row.margin = allowed - std::abs(lhs - rhs);
    k.row.status = status_for(k.row.margin >= 0.0);
}

void set_record(KeyedRow& k, const VerificationRecord& r) {
    k.row.lhs = r.lhs.value;
    k.row.rhs = r.rhs.value;
    k.row.margin = r.margin;
    k.row.budget = r.budget;
    k.row.status = std::string(to_string(r.status));
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// ---------------------------------------------------------------- kernel

// Connection-formula values with a larger relative error bound are too
// cancelled to serve as an independent check.
constexpr double kConnectionConditioning = 1e-6;

void add_kernel_crosscheck(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::kernel_crosscheck);
    const auto name = to_string(Suite::kernel_crosscheck);
    for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
        for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic)
            for (int ix = 0; ix < static_cast<int>(g.x.size()); ++ix) {
                const ParameterPoint p{g.a[ia], g.c[ic], g.x[ix]};
                if (!(p.a > 0.0) || near_integer(p.c)) continue;
                ctx.tasks.push_back([=] {
                    auto k = make_row(suite_key(Suite::kernel_crosscheck), name, 0, "quadrature_vs_connection",
                                      {ia, ic, ix}, p.a, p.c, p.x);
                    k.row.anchor = "integral representation against the connection formula";
                    try {
                        const auto q = psi_quadrature(p);
                        try {
                            const auto s = psi_connection(p.a, p.c, p.x);
                            const double allowed = std::max(tol * std::abs(q.value), q.abs_error + s.abs_error);
                            set_agreement(k, q.value, s.value, allowed);
                            // a pass against a budget this loose says nothing
                            if (k.row.status == "pass" && s.rel_error() > kConnectionConditioning)
                                k.row.status = "inconclusive";
                        } catch (const CancellationError&) {
                            k.row.lhs = q.value;
                            k.row.rhs = k.row.margin = k.row.budget = kNaN;
                            k.row.status = "inconclusive";
                        }
                    } catch (const std::exception& e) {
                        mark_error(k, e);
                    }
                    return std::vector{k};
                });
            }
}

void add_ode_residual(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::ode_residual);
    const auto name = to_string(Suite::ode_residual);
    const auto xs = sorted_unique(g.x);
    for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
        for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic)
            for (int ix = 0; ix < static_cast<int>(g.x.size()); ++ix) {
                const double a = g.a[ia], c = g.c[ic], x = g.x[ix];
                // interior: strictly inside the x range of the grid
                if (xs.size() < 3 || x <= xs.front() || x >= xs.back()) continue;
                ctx.tasks.push_back([=] {
                    auto k = make_row(suite_key(Suite::ode_residual), name, 0, "kummer_ode", {ia, ic, ix}, a, c, x);
                    k.row.anchor = "x y'' + (c - x) y' - a y = 0";
                    try {
                        const double h = 1e-4 * x;
                        const double f0 = psi(a, c, x).value;
                        const double fp = psi(a, c, x + h).value;
                        const double fm = psi(a, c, x - h).value;
                        const double d1 = (fp - fm) / (2.0 * h);
                        const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
                        const double scale = std::abs(x * d2) + std::abs((c - x) * d1) + std::abs(a * f0);
                        const double residual = x * d2 + (c - x) * d1 - a * f0;
                        set_agreement(k, residual, 0.0, tol * scale);
                    } catch (const std::exception& e) {
                        mark_error(k, e);
                    }
                    return std::vector{k};
                });
            }
}

void add_derivative(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::derivative);
    const auto name = to_string(Suite::derivative);
    for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
        for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic)
            for (int ix = 0; ix < static_cast<int>(g.x.size()); ++ix) {
                const double a = g.a[ia], c = g.c[ic], x = g.x[ix];
                ctx.tasks.push_back([=] {
                    auto k = make_row(suite_key(Suite::derivative), name, 0, "derivative_identity", {ia, ic, ix}, a,
                                      c, x);
                    k.row.anchor = "d/dx psi(a,c,x) = -a psi(a+1,c+1,x)";
                    try {
                        const double h = 1e-3 * x;
                        const double d = (-psi(a, c, x + 2.0 * h).value + 8.0 * psi(a, c, x + h).value -
                                          8.0 * psi(a, c, x - h).value + psi(a, c, x - 2.0 * h).value) /
                                         (12.0 * h);
                        const double ref = -a * psi(a + 1.0, c + 1.0, x).value;
                        set_agreement(k, d, ref, tol * std::abs(ref));
                    } catch (const std::exception& e) {
                        mark_error(k, e);
                    }
                    return std::vector{k};
                });
            }
}

// ---------------------------------------------------------------- measure

constexpr int kMomentPowers[] = {1, 0, -1, -2};

std::string moment_claim(int power) {
    switch (power) {
        case 1: return "moment_t";
        case 0: return "moment_1";
        case -1: return "moment_inv_t";
        default: return "moment_inv_t2";
    }
}

void add_moments(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::moments);
    const auto name = to_string(Suite::moments);
    for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
        for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic) {
            const double a = g.a[ia], c = g.c[ic];
            if (!moment_in_region(0, a, c)) continue;
            ctx.tasks.push_back([=] {
                std::vector<KeyedRow> rows;
                std::optional<WeightDensity> d;
                std::string setup_error;
                try {
                    d = WeightDensity::make(a, c);
                } catch (const std::exception& e) {
                    setup_error = e.what();
                }
                for (int j = 0; j < 4; ++j) {
                    const int power = kMomentPowers[j];
                    if (!moment_in_region(power, a, c)) continue;
                    auto k = make_row(suite_key(Suite::moments), name, j, moment_claim(power), {ia, ic, 0}, a, c,
                                      kNaN);
                    k.row.anchor = "integral of t^" + std::to_string(power) + " phi(t) against its closed form";
                    try {
                        if (!d) throw DomainError(setup_error);
                        const auto m = phi_moment(*d, power);
                        const auto id = moment_identity(power, a, c);
                        set_agreement(k, m.value, id.closed_form, tol + m.abs_error);
                    } catch (const std::exception& e) {
                        mark_error(k, e);
                    }
                    rows.push_back(std::move(k));
                }
                return rows;
            });
        }
}

void add_stieltjes(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::stieltjes);
    const auto name = to_string(Suite::stieltjes);
    for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
        for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic) {
            const double a = g.a[ia], c = g.c[ic];
            if (!(a > 0.0 && c < 1.0)) continue;
            ctx.tasks.push_back([=, xs = g.x] {
                std::vector<KeyedRow> rows;
                const auto d = WeightDensity::make(a, c);
                for (int ix = 0; ix < static_cast<int>(xs.size()); ++ix) {
                    const double x = xs[ix];
                    const std::pair<TuranianKind, std::string_view> claims[] = {
                        {TuranianKind::both_shift, "stieltjes_both"},
                        {TuranianKind::first_shift, "stieltjes_first"},
                        {TuranianKind::second_shift, "stieltjes_second"},
                    };
                    for (int j = 0; j < 3; ++j) {
                        auto k = make_row(suite_key(Suite::stieltjes), name, j, std::string(claims[j].second),
                                          {ia, ic, ix}, a, c, x);
                        k.row.anchor = "direct Turanian ratio against its phi-integral representation";
                        try {
                            const auto direct = turanian_ratio(claims[j].first, {a, c, x});
                            FunctionValue integral;
                            switch (claims[j].first) {
                                case TuranianKind::both_shift: integral = stieltjes_ratio(d, x, tol); break;
                                case TuranianKind::first_shift: integral = stieltjes_first_shift(d, x, tol); break;
                                case TuranianKind::second_shift:
                                    integral = stieltjes_second_shift(d, x, tol);
                                    break;
                            }
                            set_agreement(k, direct.value, integral.value, direct.abs_error + integral.abs_error);
                        } catch (const std::exception& e) {
                            mark_error(k, e);
                        }
                        rows.push_back(std::move(k));
                    }
                }
                return rows;
            });
        }
}

// ---------------------------------------------------------------- bounds

void add_bounds(Context& ctx) {
    const auto& g = ctx.config.grid;
    PsiOptions opts;
    opts.tol = ctx.config.tolerance(Suite::bounds);
    const auto& catalog = bound_catalog();
    for (int j = 0; j < static_cast<int>(catalog.size()); ++j) {
        const auto& spec = catalog[j];
        const int sk = spec.exploratory ? kExploratorySuite : suite_key(Suite::bounds);
        const std::string suite = spec.exploratory ? "bounds_exploratory" : "bounds";
        for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
            for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic)
                for (int ix = 0; ix < static_cast<int>(g.x.size()); ++ix) {
                    const ParameterPoint p{g.a[ia], g.c[ic], g.x[ix]};
                    if (!spec.region.contains(p)) continue;
                    ctx.tasks.push_back([=, &spec] {
                        auto k = make_row(sk, suite, j, spec.id, {ia, ic, ix}, p.a, p.c, p.x);
                        k.row.anchor = spec.anchor;
                        try {
                            set_record(k, check_bound(spec, p, opts));
                        } catch (const std::exception& e) {
                            mark_error(k, e);
                        }
                        return std::vector{k};
                    });
                }
    }
}

void add_dominance(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double roundoff = ctx.config.tolerance(Suite::dominance);
    const auto name = to_string(Suite::dominance);
    const auto& catalog = dominance_catalog();
    for (int j = 0; j < static_cast<int>(catalog.size()); ++j) {
        const auto& spec = catalog[j];
        for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
            for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic)
                for (int ix = 0; ix < static_cast<int>(g.x.size()); ++ix) {
                    const ParameterPoint p{g.a[ia], g.c[ic], g.x[ix]};
                    if (!spec.region.contains(p) || !spec.threshold(p)) continue;
                    ctx.tasks.push_back([=, &spec] {
                        auto k = make_row(suite_key(Suite::dominance), name, j, spec.id, {ia, ic, ix}, p.a, p.c,
                                          p.x);
                        k.row.anchor = spec.anchor + " (" + spec.threshold_text + ")";
                        try {
                            set_record(k, check_dominance(spec, p, roundoff));
                        } catch (const std::exception& e) {
                            mark_error(k, e);
                        }
                        return std::vector{k};
                    });
                }
    }
}

// ---------------------------------------------------------------- limits

// Aitken Δ² estimate from the last three values; falls back to the last value
// when the differences do not shrink geometrically.
double extrapolate(const std::vector<ScanPoint>& pts) {
    const std::size_t n = pts.size();
    const double s2 = pts[n - 1].normalized.value;
    if (n < 3) return s2;
    const double s1 = pts[n - 2].normalized.value, s0 = pts[n - 3].normalized.value;
    const double d1 = s1 - s0, d2 = s2 - s1;
    const double denom = d2 - d1;
    if (denom == 0.0 || d1 * d2 <= 0.0 || std::abs(d2) >= std::abs(d1)) return s2;
    return s2 - d2 * d2 / denom;
}

// The default scans extended by extra decades so that the extrapolation works
// in the asymptotic regime even when the approach is slow (e.g. like x^{-c}).
std::vector<double> suite_scan(LimitDirection direction) {
    auto seq = default_scan(direction);
    const double step = direction == LimitDirection::x_to_zero ? 0.1 : 10.0;
    const int extra = direction == LimitDirection::x_to_zero ? 3 : 2;
    for (int i = 0; i < extra; ++i) seq.push_back(seq.back() * step);
    return seq;
}

void add_sharpness(Context& ctx) {
    const auto& g = ctx.config.grid;
    const double tol = ctx.config.tolerance(Suite::sharpness);
    const auto name = to_string(Suite::sharpness);
    const auto& limits = sharpness_limits();
    for (int j = 0; j < static_cast<int>(limits.size()); ++j) {
        const auto& limit = limits[j];
        for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
            for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic) {
                const double a = g.a[ia], c = g.c[ic];
                if (!limit.in_region(a, c)) continue;
                ctx.tasks.push_back([=, &limit] {
                    const auto seq = suite_scan(limit.direction);
                    auto k = make_row(suite_key(Suite::sharpness), name, j, std::string(limit.id), {ia, ic, 0}, a, c,
                                      seq.back());
                    k.row.anchor = std::string(to_string(limit.kind)) +
                                   (limit.normalization == Normalization::ratio_times_x2 ? " x^2 ratio" : " ratio") +
                                   (limit.direction == LimitDirection::x_to_zero ? " as x -> 0" : " as x -> infinity");
                    try {
                        const auto scan = sharpness_scan(limit, a, c, seq);
                        const double estimate = extrapolate(scan.points);
                        const double scale = scan.limit_value != 0.0 ? std::abs(scan.limit_value)
                                                                     : std::abs(scan.points.front().normalized.value);
                        set_agreement(k, estimate, scan.limit_value, tol * scale);
                        if (!scan.eventually_decreasing) k.row.status = "fail";
                    } catch (const std::exception& e) {
                        mark_error(k, e);
                    }
                    return std::vector{k};
                });
            }
    }
}

// ---------------------------------------------------------------- monotone

struct MonotoneClaim {
    std::string id;
    int direction;  // +1 increasing, -1 decreasing
    std::string anchor;
    std::function<bool(double, double)> in_region;
    std::function<FunctionValue(double, double, double, const PsiOptions&)> value;
};

std::vector<MonotoneClaim> monotone_claims() {
    std::vector<MonotoneClaim> out;
    for (auto which : {Auxiliary::f, Auxiliary::g, Auxiliary::h}) {
        const int dir = auxiliary_direction(which);
        out.push_back({"aux_" + std::string(to_string(which)), dir,
                       std::string(to_string(which)) + (dir > 0 ? " increasing in x" : " decreasing in x"),
                       [which](double a, double c) { return auxiliary_in_region(which, a, c); },
                       [which](double a, double c, double x, const PsiOptions& o) {
                           return auxiliary_log_ratio(which, a, c, x, o);
                       }});
    }
    out.push_back({"x2_ratio_both", -1, "x^2 D_both/psi^2 decreasing in x",
                   [](double a, double c) { return a > 0.0 && c < 1.0; },
                   [](double a, double c, double x, const PsiOptions& o) {
                       auto r = turanian_ratio(TuranianKind::both_shift, {a, c, x}, o);
                       r.value *= x * x;
                       r.abs_error *= x * x;
                       return r;
                   }});
    return out;
}

void add_monotonicity(Context& ctx) {
    const auto& g = ctx.config.grid;
    PsiOptions opts;
    opts.tol = ctx.config.tolerance(Suite::monotonicity);
    const auto name = to_string(Suite::monotonicity);
    const auto xs = sorted_unique(g.x);
    static const auto claims = monotone_claims();
    for (int j = 0; j < static_cast<int>(claims.size()); ++j) {
        const auto& claim = claims[j];
        for (int ia = 0; ia < static_cast<int>(g.a.size()); ++ia)
            for (int ic = 0; ic < static_cast<int>(g.c.size()); ++ic) {
                const double a = g.a[ia], c = g.c[ic];
                if (!claim.in_region(a, c) || xs.size() < 2) continue;
                ctx.tasks.push_back([=, &claim] {
                    std::vector<KeyedRow> rows;
                    std::vector<std::optional<FunctionValue>> values(xs.size());
                    std::vector<std::string> errors(xs.size());
                    for (std::size_t i = 0; i < xs.size(); ++i) {
                        try {
                            values[i] = claim.value(a, c, xs[i], opts);
                        } catch (const std::exception& e) {
                            errors[i] = e.what();
                        }
                    }
                    for (std::size_t i = 1; i < xs.size(); ++i) {
                        auto k = make_row(suite_key(Suite::monotonicity), name, j, claim.id,
                                          {ia, ic, static_cast<int>(i)}, a, c, xs[i]);
                        k.row.anchor = claim.anchor;
                        if (!values[i - 1] || !values[i]) {
                            mark_error(k, DomainError(errors[values[i - 1] ? i : i - 1]));
                        } else {
                            const auto& lo = *values[i - 1];
                            const auto& hi = *values[i];
                            k.row.lhs = lo.value;
                            k.row.rhs = hi.value;
                            k.row.margin = claim.direction * (hi.value - lo.value);
                            k.row.budget = lo.abs_error + hi.abs_error;
                            k.row.status = std::string(to_string(classify(k.row.margin, k.row.budget)));
                        }
                        rows.push_back(std::move(k));
                    }
                    return rows;
                });
            }
    }
}

std::vector<std::vector<KeyedRow>> execute(const std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<KeyedRow>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

std::string_view to_string(Suite suite) {
    for (const auto& s : kSuiteNames)
        if (s.suite == suite) return s.name;
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (const auto& s : kSuiteNames)
        if (s.name == name) return s.suite;
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> v;
        for (const auto& s : kSuiteNames) v.push_back(s.suite);
        return v;
    }();
    return suites;
}

double default_tolerance(Suite suite) {
    switch (suite) {
        case Suite::kernel_crosscheck: return 1e-8;
        case Suite::ode_residual: return 1e-4;
        case Suite::derivative: return 1e-6;
        case Suite::moments: return 1e-6;
        case Suite::stieltjes: return kDefaultMeasureTol;
        case Suite::bounds: return kDefaultPsiTol;
        case Suite::dominance: return 1e-14;
        case Suite::sharpness: return 0.05;
        case Suite::monotonicity: return kDefaultPsiTol;
    }
    return 1e-8;
}

std::string_view to_string(ReportFormat format) { return format == ReportFormat::csv ? "csv" : "json"; }

ReportFormat parse_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw DomainError("unknown report format '" + std::string(name) + "'");
}

Grid default_grid() {
    return {{0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0},
            {-5.0, -2.5, -1.5, -0.5, 0.25, 0.75},
            {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0}};
}

double RunConfig::tolerance(Suite suite) const {
    const auto it = tolerances.find(suite);
    return it == tolerances.end() ? default_tolerance(suite) : it->second;
}

void RunConfig::validate() const {
    if (suites.empty()) throw DomainError("no suites selected");
    if (std::set<Suite>(suites.begin(), suites.end()).size() != suites.size())
        throw DomainError("suite listed twice");
    if (grid.a.empty() || grid.c.empty() || grid.x.empty()) throw DomainError("grids must be nonempty");
    for (double v : grid.a)
        if (!std::isfinite(v)) throw DomainError("grid a values must be finite");
    for (double v : grid.c)
        if (!std::isfinite(v)) throw DomainError("grid c values must be finite");
    for (double v : grid.x)
        if (!std::isfinite(v) || !(v > 0.0)) throw DomainError("grid x values must be positive and finite");
    for (const auto& [s, t] : tolerances)
        if (!std::isfinite(t) || !(t > 0.0))
            throw DomainError("tolerance for " + std::string(to_string(s)) + " must be positive");
    if (jobs < 1) throw DomainError("jobs must be at least 1");
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    for (auto item : split(text, ',')) out.push_back(parse_number(item));
    return out;
}

std::vector<Suite> parse_suite_list(std::string_view text) {
    if (trim(text) == "all") return all_suites();
    std::vector<Suite> out;
    for (auto item : split(text, ',')) out.push_back(parse_suite(item));
    return out;
}

void apply_config_text(RunConfig& config, std::string_view text) {
    int line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try {
            if (key == "suites") config.suites = parse_suite_list(value);
            else if (key == "grid_a") config.grid.a = parse_number_list(value);
            else if (key == "grid_c") config.grid.c = parse_number_list(value);
            else if (key == "grid_x") config.grid.x = parse_number_list(value);
            else if (key == "out") config.output_path = std::string(value);
            else if (key == "format") config.format = parse_format(value);
            else if (key == "jobs") config.jobs = parse_int(value);
            else if (key.substr(0, 4) == "tol_") config.tolerances[parse_suite(key.substr(4))] = parse_number(value);
            else throw DomainError("unknown key '" + std::string(key) + "'");
        } catch (const DomainError& e) {
            throw DomainError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    apply_config_text(config, ss.str());
}

bool RunResult::any_fail() const {
    return std::any_of(summaries.begin(), summaries.end(),
                       [](const SuiteSummary& s) { return !s.exploratory && s.fail > 0; });
}

bool RunResult::any_error() const {
    return std::any_of(summaries.begin(), summaries.end(),
                       [](const SuiteSummary& s) { return !s.exploratory && s.error > 0; });
}

int RunResult::exit_code() const {
    if (any_error()) return 2;
    return any_fail() ? 1 : 0;
}

RunResult run(const RunConfig& config) {
    config.validate();
    Context ctx{config, {}};
    std::vector<Suite> ordered = config.suites;
    std::sort(ordered.begin(), ordered.end());
    for (Suite s : ordered) {
        switch (s) {
            case Suite::kernel_crosscheck: add_kernel_crosscheck(ctx); break;
            case Suite::ode_residual: add_ode_residual(ctx); break;
            case Suite::derivative: add_derivative(ctx); break;
            case Suite::moments: add_moments(ctx); break;
            case Suite::stieltjes: add_stieltjes(ctx); break;
            case Suite::bounds: add_bounds(ctx); break;
            case Suite::dominance: add_dominance(ctx); break;
            case Suite::sharpness: add_sharpness(ctx); break;
            case Suite::monotonicity: add_monotonicity(ctx); break;
        }
    }

    auto results = execute(ctx.tasks, config.jobs);
    std::vector<KeyedRow> keyed;
    for (auto& r : results)
        for (auto& k : r) keyed.push_back(std::move(k));
    std::stable_sort(keyed.begin(), keyed.end(), [](const KeyedRow& l, const KeyedRow& r) {
        return std::tie(l.suite, l.claim, l.index) < std::tie(r.suite, r.claim, r.index);
    });

    RunResult out;
    for (Suite s : ordered) {
        SuiteSummary sum;
        sum.suite = std::string(to_string(s));
        out.summaries.push_back(sum);
        if (s == Suite::bounds) {
            SuiteSummary ex;
            ex.suite = "bounds_exploratory";
            ex.exploratory = true;
            out.summaries.push_back(ex);
        }
    }
    for (auto& k : keyed) {
        for (auto& sum : out.summaries) {
            if (sum.suite != k.row.suite) continue;
            if (k.row.status == "pass") ++sum.pass;
            else if (k.row.status == "fail") ++sum.fail;
            else if (k.row.status == "inconclusive") ++sum.inconclusive;
            else ++sum.error;
        }
        out.rows.push_back(std::move(k.row));
    }
    for (auto& sum : out.summaries)
        if (sum.rows() == 0) sum.note = "empty region: no grid point satisfies the claim's region";
    return out;
}

}  // namespace tricomi
