#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tricomi/psi.hpp"
#include "tricomi/types.hpp"

namespace tricomi {

/// What a catalogued inequality constrains.
enum class BoundTarget { ratio_both, ratio_first, ratio_second, raw_psi_relation };
/// lower: bound < quantity; upper: quantity < bound.
enum class BoundSide { lower, upper };

std::string_view to_string(BoundTarget target);
std::string_view to_string(BoundSide side);

/// One interval constraint `var op (offset + [a])`, e.g. c < a + 2.
struct Constraint {
    enum class Var { a, c, x };
    enum class Op { less, greater, less_equal };
    Var var = Var::a;
    Op op = Op::greater;
    double offset = 0.0;
    bool relative_to_a = false;

    [[nodiscard]] bool holds(const ParameterPoint& p) const;
    [[nodiscard]] std::string text() const;
};

/// Conjunction of constraints; empty means every point.
struct Region {
    std::vector<Constraint> constraints;

    [[nodiscard]] bool contains(const ParameterPoint& p) const;
    [[nodiscard]] std::string text() const;
};

/// Both sides of a claim `lhs < rhs` evaluated at a point.
struct ClaimSides {
    FunctionValue lhs;
    FunctionValue rhs;
};

struct BoundSpec {
    std::string id;
    BoundTarget target = BoundTarget::ratio_both;
    BoundSide side = BoundSide::lower;
    Region region;
    /// Human-readable statement of the inequality.
    std::string statement;
    /// Short description of where the inequality comes from.
    std::string anchor;
    /// Exploratory specs are reported but never count as failures.
    bool exploratory = false;
    /// Closed-form bound for ratio targets; empty for raw relations.
    std::function<double(const ParameterPoint&)> bound_fn;
    /// Evaluates the claim as lhs < rhs. Lower specs put the bound on the
    /// left, upper specs on the right.
    std::function<ClaimSides(const ParameterPoint&, const PsiOptions&)> evaluate;
};

/// The full bound catalog in a fixed order.
const std::vector<BoundSpec>& bound_catalog();
/// Throws DomainError for an unknown id.
const BoundSpec& find_bound(std::string_view id);

enum class Status { pass, fail, inconclusive };
std::string_view to_string(Status status);

/// pass iff margin > budget, fail iff margin < -budget.
Status classify(double margin, double budget);

struct VerificationRecord {
    std::string id;
    ParameterPoint point;
    FunctionValue lhs;
    FunctionValue rhs;
    double margin = 0.0;  // rhs - lhs
    double budget = 0.0;  // lhs.abs_error + rhs.abs_error
    Status status = Status::inconclusive;
    /// Dominance checks only: whether the claimed threshold holds at the point.
    bool threshold_met = true;
};

/// Checks one catalogued inequality. Throws RegionError outside its region.
VerificationRecord check_bound(const BoundSpec& spec, const ParameterPoint& p, const PsiOptions& opts = {});
VerificationRecord check_bound(std::string_view id, const ParameterPoint& p, const PsiOptions& opts = {});

/// A claim that one bound is tighter than another beyond a threshold in x.
struct DominanceSpec {
    std::string id;
    std::string tighter;  // bound id claimed tighter
    std::string weaker;   // bound id it is compared against; "zero" bounds are P-family specs
    Region region;
    std::string threshold_text;
    std::string anchor;
    std::function<bool(const ParameterPoint&)> threshold;
};

const std::vector<DominanceSpec>& dominance_catalog();
const DominanceSpec& find_dominance(std::string_view id);

/// Compares the two closed-form bound values. lhs is the weaker bound value
/// and rhs the tighter one for lower bounds (reversed for upper bounds), so a
/// positive margin means the claimed bound is tighter. The default roundoff
/// budget is relative to the bound magnitudes.
VerificationRecord check_dominance(const DominanceSpec& spec, const ParameterPoint& p,
                                   double roundoff = 1e-14);
VerificationRecord check_dominance(std::string_view id, const ParameterPoint& p, double roundoff = 1e-14);

/// Closed-form value of a ratio bound. Throws DomainError for raw relations.
double bound_value(const BoundSpec& spec, const ParameterPoint& p);

/// The monotone auxiliary functions behind the Γ-normalized inequalities:
/// f = log ψ(a,c,x)/a - log ψ(a+1,c+1,x)/(a+1)            (increasing, a>0>c)
/// g = c log ψ(a,c,x)/(a(c+1)) - log ψ(a+1,c+1,x)/(a+1)   (decreasing, a>0, c<-1)
/// h = log ψ(a,c,x) - log ψ(a+1,c+1,x)                     (increasing, a>0)
enum class Auxiliary { f, g, h };
std::string_view to_string(Auxiliary which);
Auxiliary parse_auxiliary(std::string_view text);
bool auxiliary_in_region(Auxiliary which, double a, double c);
/// +1 if claimed increasing, -1 if decreasing.
int auxiliary_direction(Auxiliary which);
/// Throws RegionError outside the region.
FunctionValue auxiliary_log_ratio(Auxiliary which, double a, double c, double x, const PsiOptions& opts = {});
/// Value of the auxiliary function as x → 0 from the small-x asymptotics of ψ.
double auxiliary_limit_at_zero(Auxiliary which, double a, double c);

}  // namespace tricomi
