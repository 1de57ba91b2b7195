#include "tricomi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tricomi/errors.hpp"
#include "tricomi/gamma.hpp"
#include "tricomi/turanian.hpp"

namespace tricomi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Var = Constraint::Var;
using Op = Constraint::Op;

Constraint gt(Var v, double k) { return {v, Op::greater, k, false}; }
Constraint lt(Var v, double k) { return {v, Op::less, k, false}; }
Constraint le(Var v, double k) { return {v, Op::less_equal, k, false}; }
Constraint lt_a_plus(Var v, double k) { return {v, Op::less, k, true}; }

Region region(std::initializer_list<Constraint> cs) { return Region{std::vector<Constraint>(cs)}; }

FunctionValue exact(double v) { return {v, 8.0 * kEps * std::abs(v), Method::quadrature}; }

FunctionValue product(const FunctionValue& u, const FunctionValue& v) {
    const double value = u.value * v.value;
    return {value, std::abs(u.value) * v.abs_error + std::abs(v.value) * u.abs_error + kEps * std::abs(value),
            u.method};
}

FunctionValue scaled(const FunctionValue& u, double k) {
    return {k * u.value, std::abs(k) * u.abs_error + kEps * std::abs(k * u.value), u.method};
}

TuranianKind kind_of(BoundTarget t) {
    switch (t) {
        case BoundTarget::ratio_first: return TuranianKind::first_shift;
        case BoundTarget::ratio_second: return TuranianKind::second_shift;
        default: return TuranianKind::both_shift;
    }
}

// (Γ(a-c+1)/Γ(s) ψ)^{power} computed in logs; s = 1-c or -c, both positive here.
FunctionValue normalized_power(const FunctionValue& v, double a, double c, double s, double power) {
    if (!(v.value > 0.0)) throw DomainError("psi must be positive in a normalized power");
    const double log_base = log_gamma(a - c + 1.0).log_abs - log_gamma(s).log_abs + std::log(v.value);
    const double value = std::exp(power * log_base);
    const double rel = std::abs(power) * (v.rel_error() + kEps * (4.0 + std::abs(log_base)));
    return {value, rel * value + kEps * value, v.method};
}

BoundSpec ratio_spec(std::string id, BoundTarget target, BoundSide side, Region r, std::string statement,
                     std::string anchor, std::function<double(const ParameterPoint&)> fn,
                     bool exploratory = false) {
    BoundSpec s;
    s.id = std::move(id);
    s.target = target;
    s.side = side;
    s.region = std::move(r);
    s.statement = std::move(statement);
    s.anchor = std::move(anchor);
    s.exploratory = exploratory;
    s.bound_fn = fn;
    s.evaluate = [target, side, fn](const ParameterPoint& p, const PsiOptions& opts) {
        const auto ratio = turanian_ratio(kind_of(target), p, opts);
        const auto bound = exact(fn(p));
        return side == BoundSide::lower ? ClaimSides{bound, ratio} : ClaimSides{ratio, bound};
    };
    return s;
}

BoundSpec raw_spec(std::string id, BoundSide side, Region r, std::string statement, std::string anchor,
                   std::function<ClaimSides(const ParameterPoint&, const PsiOptions&)> eval,
                   bool exploratory = false) {
    BoundSpec s;
    s.id = std::move(id);
    s.target = BoundTarget::raw_psi_relation;
    s.side = side;
    s.region = std::move(r);
    s.statement = std::move(statement);
    s.anchor = std::move(anchor);
    s.exploratory = exploratory;
    s.evaluate = std::move(eval);
    return s;
}

// Δ_c ≥ -(1/x) ψ(a,c,x) times `other`, where other is ψ(a,c-1,x), ψ²... etc.
ClaimSides second_shift_lower(const ParameterPoint& p, const PsiOptions& opts, const FunctionValue& factor) {
    const auto delta = turanian(TuranianKind::second_shift, p, opts);
    return {scaled(factor, -1.0 / p.x), delta};
}

std::vector<BoundSpec> build_catalog() {
    const auto a_pos = gt(Var::a, 0.0);
    const auto a_gt1 = gt(Var::a, 1.0);
    const auto c_lt1 = lt(Var::c, 1.0);
    const auto c_neg = lt(Var::c, 0.0);
    const auto c_ltm1 = lt(Var::c, -1.0);
    const auto both = BoundTarget::ratio_both;
    const auto first = BoundTarget::ratio_first;
    const auto second = BoundTarget::ratio_second;
    const auto lower = BoundSide::lower;
    const auto upper = BoundSide::upper;

    std::vector<BoundSpec> out;
    out.push_back(ratio_spec("T1L", both, lower, region({a_pos, c_lt1}), "(c-a-1)/x^2 < D_both/psi^2",
                             "lower bound sharp as x -> infinity",
                             [](const ParameterPoint& p) { return (p.c - p.a - 1.0) / (p.x * p.x); }));
    out.push_back(ratio_spec("T1U", both, upper, region({a_gt1, c_ltm1}),
                             "D_both/psi^2 < 1/c + 2x(c-a)/(c^2(c+1))", "upper bound sharp as x -> 0",
                             [](const ParameterPoint& p) {
                                 return 1.0 / p.c + 2.0 * p.x * (p.c - p.a) / (p.c * p.c * (p.c + 1.0));
                             }));
    out.push_back(ratio_spec("T2L", both, lower, region({a_pos, c_lt1}), "-1/(2x) < D_both/psi^2",
                             "lower bound from the Stieltjes representation",
                             [](const ParameterPoint& p) { return -0.5 / p.x; }));
    out.push_back(ratio_spec("P1L", both, lower, region({a_pos, c_neg}), "1/c < D_both/psi^2",
                             "earlier lower bound, sharp as x -> 0",
                             [](const ParameterPoint& p) { return 1.0 / p.c; }));
    out.push_back(ratio_spec("P1U", both, upper, region({a_pos, c_lt1}), "D_both/psi^2 < 0",
                             "earlier sign result for the both-shift Turanian",
                             [](const ParameterPoint&) { return 0.0; }));
    out.push_back(ratio_spec("T3L", first, lower, region({a_pos, c_neg}),
                             "(1+x/(2c))/(1+a-c) < D_first/psi^2", "lower bound sharp as x -> 0",
                             [](const ParameterPoint& p) {
                                 return (1.0 + p.x / (2.0 * p.c)) / (1.0 + p.a - p.c);
                             }));
    out.push_back(ratio_spec("T3U", first, upper, region({a_pos, c_lt1}), "D_first/psi^2 < 2/x",
                             "upper bound sharp as x -> infinity",
                             [](const ParameterPoint& p) { return 2.0 / p.x; }));
    out.push_back(ratio_spec("T5L", first, lower, region({a_gt1, c_ltm1}),
                             "(1-(c-a)x^2/(c^2(c+1)))/(1+a-c) < D_first/psi^2", "lower bound sharp as x -> 0",
                             [](const ParameterPoint& p) {
                                 const double c = p.c;
                                 return (1.0 - (c - p.a) * p.x * p.x / (c * c * (c + 1.0))) / (1.0 + p.a - c);
                             }));
    out.push_back(ratio_spec("P2L", first, lower, region({a_pos, c_lt1}), "0 < D_first/psi^2",
                             "earlier sign result for the first-shift Turanian",
                             [](const ParameterPoint&) { return 0.0; }));
    out.push_back(ratio_spec("P2U", first, upper, region({a_gt1, c_lt1}), "D_first/psi^2 < 1/(1+a-c)",
                             "earlier upper bound, sharp as x -> 0",
                             [](const ParameterPoint& p) { return 1.0 / (1.0 + p.a - p.c); }));
    out.push_back(ratio_spec("T6L", second, lower, region({a_pos, c_lt1}), "-a/x^2 < D_second/psi^2",
                             "lower bound sharp as x -> infinity",
                             [](const ParameterPoint& p) { return -p.a / (p.x * p.x); }));
    out.push_back(ratio_spec("T6U", second, upper, region({a_gt1, c_ltm1}),
                             "D_second/psi^2 < a(1+2x(c-a)/(c(c+1)))/(c(1+a-c))", "upper bound sharp as x -> 0",
                             [](const ParameterPoint& p) {
                                 const double a = p.a, c = p.c;
                                 return a / (c * (1.0 + a - c)) * (1.0 + 2.0 * p.x * (c - a) / (c * (c + 1.0)));
                             }));
    out.push_back(ratio_spec("P3L", second, lower, region({a_pos, c_neg}), "a/(c(1+a-c)) < D_second/psi^2",
                             "earlier lower bound, sharp as x -> 0",
                             [](const ParameterPoint& p) { return p.a / (p.c * (1.0 + p.a - p.c)); }));
    out.push_back(ratio_spec("P3U", second, upper, region({a_pos}), "D_second/psi^2 < 0",
                             "earlier sign result for the second-shift Turanian, any real c",
                             [](const ParameterPoint&) { return 0.0; }));
    out.push_back(ratio_spec("P4U", both, upper, region({a_gt1}), "D_both/psi^2 < 1/a",
                             "earlier upper bound via Holder or Laplace convolution, any real c",
                             [](const ParameterPoint& p) { return 1.0 / p.a; }));
    out.push_back(ratio_spec("P4U_low_a", both, upper, region({a_pos, le(Var::a, 1.0)}), "D_both/psi^2 < 1/a",
                             "probe of the same bound for 0 < a <= 1",
                             [](const ParameterPoint& p) { return 1.0 / p.a; }, true));

    out.push_back(raw_spec("S1", lower, region({a_pos, lt_a_plus(Var::c, 2.0)}),
                           "-(1/x) psi(a,c,x) psi(a,c-1,x) <= D_second",
                           "lower bound on the raw second-shift Turanian",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const auto u = psi(p.a, p.c, p.x, o);
                               const auto v = psi(p.a, p.c - 1.0, p.x, o);
                               return second_shift_lower(p, o, product(u, v));
                           }));
    out.push_back(raw_spec("S2", lower, region({a_gt1, lt_a_plus(Var::c, 1.0)}),
                           "-(1/x) psi(a,c,x)^2 psi(a+1,c+1,x) <= D_second",
                           "lower bound on the raw second-shift Turanian, cubic right side as quoted",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const auto u = psi(p.a, p.c, p.x, o);
                               const auto v = psi(p.a + 1.0, p.c + 1.0, p.x, o);
                               return second_shift_lower(p, o, product(product(u, u), v));
                           },
                           true));
    out.push_back(raw_spec("S2_homogeneous", lower, region({a_gt1, lt_a_plus(Var::c, 1.0)}),
                           "-(1/x) psi(a,c,x) psi(a+1,c+1,x) <= D_second",
                           "quadratic variant of S2 with one psi(a,c,x) factor",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const auto u = psi(p.a, p.c, p.x, o);
                               const auto v = psi(p.a + 1.0, p.c + 1.0, p.x, o);
                               return second_shift_lower(p, o, product(u, v));
                           },
                           true));

    out.push_back(raw_spec("I1", upper, region({a_pos, c_neg}),
                           "(G(a-c+1)/G(-c) psi(a+1,c+1,x))^(1/(a+1)) < (G(a-c+1)/G(1-c) psi(a,c,x))^(1/a)",
                           "Gamma-normalized comparison from f increasing",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const double a = p.a, c = p.c;
                               const auto lhs = normalized_power(psi(a + 1.0, c + 1.0, p.x, o), a, c, -c,
                                                                 1.0 / (a + 1.0));
                               const auto rhs = normalized_power(psi(a, c, p.x, o), a, c, 1.0 - c, 1.0 / a);
                               return ClaimSides{lhs, rhs};
                           }));
    out.push_back(raw_spec("I2", lower, region({a_pos, c_neg}),
                           "2 < psi(a,c,x)/psi(a+1,c+1,x) - (1/c)(G(a-c+1)/G(1-c) psi(a,c,x))^(1/a)",
                           "consequence of I1 and the arithmetic-geometric mean inequality",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const double a = p.a, c = p.c;
                               const auto u = psi(a, c, p.x, o);
                               const auto v = psi(a + 1.0, c + 1.0, p.x, o);
                               const double q = u.value / v.value;
                               const double q_err = std::abs(q) * (u.rel_error() + v.rel_error() + kEps);
                               const auto w = scaled(normalized_power(u, a, c, 1.0 - c, 1.0 / a), -1.0 / c);
                               const double value = q + w.value;
                               return ClaimSides{exact(2.0),
                                                 {value, q_err + w.abs_error + kEps * std::abs(value), u.method}};
                           }));
    out.push_back(raw_spec("I3", lower, region({a_pos, c_ltm1}),
                           "(G(a-c+1)/G(1-c) psi(a,c,x))^(c/(a(c+1))) < (G(a-c+1)/G(-c) psi(a+1,c+1,x))^(1/(a+1))",
                           "Gamma-normalized comparison from g decreasing",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const double a = p.a, c = p.c;
                               const auto lhs =
                                   normalized_power(psi(a, c, p.x, o), a, c, 1.0 - c, c / (a * (c + 1.0)));
                               const auto rhs = normalized_power(psi(a + 1.0, c + 1.0, p.x, o), a, c, -c,
                                                                 1.0 / (a + 1.0));
                               return ClaimSides{lhs, rhs};
                           }));
    out.push_back(raw_spec("I4", upper, region({a_pos, c_neg}), "psi(a+1,c+1,x) < -(1/c) psi(a,c,x)",
                           "comparison from h increasing",
                           [](const ParameterPoint& p, const PsiOptions& o) {
                               const auto lhs = psi(p.a + 1.0, p.c + 1.0, p.x, o);
                               const auto rhs = scaled(psi(p.a, p.c, p.x, o), -1.0 / p.c);
                               return ClaimSides{lhs, rhs};
                           }));
    return out;
}

std::vector<DominanceSpec> build_dominance() {
    const auto a_pos = gt(Var::a, 0.0);
    const auto a_gt1 = gt(Var::a, 1.0);
    const auto c_lt1 = lt(Var::c, 1.0);
    const auto c_neg = lt(Var::c, 0.0);
    const auto c_ltm1 = lt(Var::c, -1.0);
    auto below_critical = [](const ParameterPoint& p) {
        return p.x < p.c * (p.c + 1.0) / (2.0 * (p.a - p.c));
    };
    auto square_above = [](const ParameterPoint& p) { return p.x * p.x > p.c * (p.c - p.a - 1.0); };

    std::vector<DominanceSpec> out;
    out.push_back({"D1", "T1L", "P1L", region({a_pos, c_neg}), "x^2 > c(c-a-1)",
                   "T1L is tighter than P1L for large x", square_above});
    out.push_back({"D2", "T1U", "P1U", region({a_gt1, c_ltm1}), "x < c(c+1)/(2(a-c))",
                   "T1U is tighter than the zero bound for small x", below_critical});
    out.push_back({"D3", "T2L", "P1L", region({a_pos, c_neg}), "x > -c/2",
                   "T2L is tighter than P1L away from the origin",
                   [](const ParameterPoint& p) { return p.x > -p.c / 2.0; }});
    out.push_back({"D4", "T3L", "P2L", region({a_pos, c_neg}), "x < -3c/2",
                   "T3L is tighter than the zero bound for small x",
                   [](const ParameterPoint& p) { return p.x < -1.5 * p.c; }});
    out.push_back({"D5", "T3U", "P2U", region({a_gt1, c_lt1}), "x > 2(1+a-c)",
                   "T3U is tighter than P2U for large x",
                   [](const ParameterPoint& p) { return p.x > 2.0 * (1.0 + p.a - p.c); }});
    out.push_back({"D6", "T5L", "P2L", region({a_gt1, c_ltm1}), "x^2 < c^2(c+1)/(c-a)",
                   "T5L is tighter than the zero bound for small x",
                   [](const ParameterPoint& p) {
                       return p.x * p.x < p.c * p.c * (p.c + 1.0) / (p.c - p.a);
                   }});
    out.push_back({"D7", "T6L", "P3L", region({a_pos, c_neg}), "x^2 > c(c-a-1)",
                   "T6L is tighter than P3L for large x", square_above});
    out.push_back({"D8", "T6U", "P3U", region({a_gt1, c_ltm1}), "x < c(c+1)/(2(a-c))",
                   "T6U is tighter than the zero bound for small x", below_critical});
    return out;
}

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

std::string_view to_string(BoundTarget target) {
    switch (target) {
        case BoundTarget::ratio_both: return "ratio_both";
        case BoundTarget::ratio_first: return "ratio_first";
        case BoundTarget::ratio_second: return "ratio_second";
        case BoundTarget::raw_psi_relation: return "raw_psi_relation";
    }
    return "unknown";
}

std::string_view to_string(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

std::string_view to_string(Status status) {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "unknown";
}

bool Constraint::holds(const ParameterPoint& p) const {
    const double lhs = var == Var::a ? p.a : var == Var::c ? p.c : p.x;
    const double rhs = offset + (relative_to_a ? p.a : 0.0);
    switch (op) {
        case Op::less: return lhs < rhs;
        case Op::greater: return lhs > rhs;
        case Op::less_equal: return lhs <= rhs;
    }
    return false;
}

std::string Constraint::text() const {
    std::string s = var == Var::a ? "a" : var == Var::c ? "c" : "x";
    s += op == Op::less ? "<" : op == Op::greater ? ">" : "<=";
    if (relative_to_a) {
        s += "a";
        if (offset > 0.0) s += "+" + format_number(offset);
        if (offset < 0.0) s += format_number(offset);
    } else {
        s += format_number(offset);
    }
    return s;
}

bool Region::contains(const ParameterPoint& p) const {
    return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& k) { return k.holds(p); });
}

std::string Region::text() const {
    std::string s;
    for (const auto& k : constraints) {
        if (!s.empty()) s += " & ";
        s += k.text();
    }
    return s.empty() ? "all" : s;
}

const std::vector<BoundSpec>& bound_catalog() {
    static const std::vector<BoundSpec> catalog = build_catalog();
    return catalog;
}

const BoundSpec& find_bound(std::string_view id) {
    for (const auto& s : bound_catalog())
        if (s.id == id) return s;
    throw DomainError("unknown bound id '" + std::string(id) + "'");
}

Status classify(double margin, double budget) {
    if (margin > budget) return Status::pass;
    if (margin < -budget) return Status::fail;
    return Status::inconclusive;
}

VerificationRecord check_bound(const BoundSpec& spec, const ParameterPoint& p, const PsiOptions& opts) {
    p.validate();
    if (!spec.region.contains(p))
        throw RegionError(spec.id + " is not claimed at a=" + format_number(p.a) + ", c=" + format_number(p.c) +
                          ", x=" + format_number(p.x) + " (region " + spec.region.text() + ")");
    const auto sides = spec.evaluate(p, opts);
    VerificationRecord r;
    r.id = spec.id;
    r.point = p;
    r.lhs = sides.lhs;
    r.rhs = sides.rhs;
    r.margin = sides.rhs.value - sides.lhs.value;
    r.budget = sides.lhs.abs_error + sides.rhs.abs_error;
    r.status = classify(r.margin, r.budget);
    return r;
}

VerificationRecord check_bound(std::string_view id, const ParameterPoint& p, const PsiOptions& opts) {
    return check_bound(find_bound(id), p, opts);
}

double bound_value(const BoundSpec& spec, const ParameterPoint& p) {
    if (!spec.bound_fn) throw DomainError(spec.id + " has no closed-form bound");
    return spec.bound_fn(p);
}

const std::vector<DominanceSpec>& dominance_catalog() {
    static const std::vector<DominanceSpec> catalog = build_dominance();
    return catalog;
}

const DominanceSpec& find_dominance(std::string_view id) {
    for (const auto& s : dominance_catalog())
        if (s.id == id) return s;
    throw DomainError("unknown dominance id '" + std::string(id) + "'");
}

VerificationRecord check_dominance(const DominanceSpec& spec, const ParameterPoint& p, double roundoff) {
    p.validate();
    if (!spec.region.contains(p))
        throw RegionError(spec.id + " is not claimed at a=" + format_number(p.a) + ", c=" + format_number(p.c) +
                          " (region " + spec.region.text() + ")");
    const auto& tight = find_bound(spec.tighter);
    const auto& weak = find_bound(spec.weaker);
    const double t = bound_value(tight, p);
    const double w = bound_value(weak, p);
    const double scale = std::max({std::abs(t), std::abs(w), std::numeric_limits<double>::min()});
    VerificationRecord r;
    r.id = spec.id;
    r.point = p;
    const bool lower = tight.side == BoundSide::lower;
    r.lhs = {lower ? w : t, 0.5 * roundoff * scale, Method::quadrature};
    r.rhs = {lower ? t : w, 0.5 * roundoff * scale, Method::quadrature};
    r.margin = r.rhs.value - r.lhs.value;
    r.budget = roundoff * scale;
    r.status = classify(r.margin, r.budget);
    r.threshold_met = spec.threshold(p);
    return r;
}

VerificationRecord check_dominance(std::string_view id, const ParameterPoint& p, double roundoff) {
    return check_dominance(find_dominance(id), p, roundoff);
}

std::string_view to_string(Auxiliary which) {
    switch (which) {
        case Auxiliary::f: return "f";
        case Auxiliary::g: return "g";
        case Auxiliary::h: return "h";
    }
    return "unknown";
}

Auxiliary parse_auxiliary(std::string_view text) {
    if (text == "f") return Auxiliary::f;
    if (text == "g") return Auxiliary::g;
    if (text == "h") return Auxiliary::h;
    throw DomainError("unknown auxiliary function '" + std::string(text) + "'");
}

bool auxiliary_in_region(Auxiliary which, double a, double c) {
    switch (which) {
        case Auxiliary::f: return a > 0.0 && c < 0.0;
        case Auxiliary::g: return a > 0.0 && c < -1.0;
        case Auxiliary::h: return a > 0.0;
    }
    return false;
}

int auxiliary_direction(Auxiliary which) { return which == Auxiliary::g ? -1 : 1; }

namespace {

// (weight of log ψ(a,c,x), weight of log ψ(a+1,c+1,x))
std::pair<double, double> auxiliary_weights(Auxiliary which, double a, double c) {
    switch (which) {
        case Auxiliary::f: return {1.0 / a, -1.0 / (a + 1.0)};
        case Auxiliary::g: return {c / (a * (c + 1.0)), -1.0 / (a + 1.0)};
        case Auxiliary::h: return {1.0, -1.0};
    }
    return {0.0, 0.0};
}

}  // namespace

FunctionValue auxiliary_log_ratio(Auxiliary which, double a, double c, double x, const PsiOptions& opts) {
    if (!auxiliary_in_region(which, a, c))
        throw RegionError(std::string(to_string(which)) + " is not claimed monotone at a=" + format_number(a) +
                          ", c=" + format_number(c));
    const auto [wu, wv] = auxiliary_weights(which, a, c);
    const auto u = psi(a, c, x, opts);
    const auto v = psi(a + 1.0, c + 1.0, x, opts);
    if (!(u.value > u.abs_error) || !(v.value > v.abs_error))
        throw DomainError("psi indistinguishable from zero in a log ratio");
    const double lu = std::log(u.value), lv = std::log(v.value);
    const double value = wu * lu + wv * lv;
    const double err = std::abs(wu) * (u.rel_error() + kEps * std::abs(lu)) +
                       std::abs(wv) * (v.rel_error() + kEps * std::abs(lv)) + kEps * std::abs(value);
    return {value, err, u.method};
}

double auxiliary_limit_at_zero(Auxiliary which, double a, double c) {
    if (!auxiliary_in_region(which, a, c) || !(c < 0.0))
        throw RegionError("small-x limit of " + std::string(to_string(which)) + " needs a>0>c");
    const auto [wu, wv] = auxiliary_weights(which, a, c);
    const double denom = log_gamma(a - c + 1.0).log_abs;
    const double lu = log_gamma(1.0 - c).log_abs - denom;
    const double lv = log_gamma(-c).log_abs - denom;
    return wu * lu + wv * lv;
}

}  // namespace tricomi
