#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tricomi/psi.hpp"
#include "tricomi/types.hpp"

namespace tricomi {

/// Which parameters the Turánian shifts.
enum class TuranianKind {
    both_shift,    // ψ²(a,c,x) - ψ(a-1,c-1,x) ψ(a+1,c+1,x)
    first_shift,   // ψ²(a,c,x) - ψ(a-1,c,x) ψ(a+1,c,x)
    second_shift,  // ψ²(a,c,x) - ψ(a,c-1,x) ψ(a,c+1,x)
};

std::string_view to_string(TuranianKind kind);
/// Accepts "both", "first", "second" and the full enum spellings.
TuranianKind parse_turanian_kind(std::string_view text);

/// (δa, δc) for the kind.
std::pair<double, double> shift_of(TuranianKind kind);

/// Turánian with first-order error propagation from the three ψ values.
FunctionValue turanian(TuranianKind kind, const ParameterPoint& p, const PsiOptions& opts = {});

/// Turánian divided by ψ²(a,c,x), evaluated as 1 - ψ₋ψ₊/ψ².
/// Throws DomainError when ψ(a,c,x) is indistinguishable from 0.
FunctionValue turanian_ratio(TuranianKind kind, const ParameterPoint& p, const PsiOptions& opts = {});

enum class LimitDirection { x_to_zero, x_to_infinity };
enum class Normalization { ratio, ratio_times_x2 };

/// A limit of a normalized Turánian ratio and its closed form.
struct SharpnessLimit {
    std::string_view id;
    TuranianKind kind = TuranianKind::both_shift;
    LimitDirection direction = LimitDirection::x_to_infinity;
    Normalization normalization = Normalization::ratio;

    /// Closed-form limit value at (a, c).
    [[nodiscard]] double limit_value(double a, double c) const;
    /// Whether (a, c) lies in the region where the limit is established.
    [[nodiscard]] bool in_region(double a, double c) const;
    /// Normalized ratio at a point: Δ/ψ² or x²Δ/ψ².
    [[nodiscard]] FunctionValue normalized(const ParameterPoint& p, const PsiOptions& opts = {}) const;
};

/// Every limit attached to the three Turánians.
const std::vector<SharpnessLimit>& sharpness_limits();
const SharpnessLimit& find_sharpness_limit(std::string_view id);

/// Default scan sequences, ordered toward the limit.
std::vector<double> default_scan(LimitDirection direction);

struct ScanPoint {
    double x = 0.0;
    FunctionValue normalized;
    double deviation = 0.0;  // |normalized - limit|
};

struct ScanResult {
    double limit_value = 0.0;
    std::vector<ScanPoint> points;
    bool eventually_decreasing = false;  // deviations shrink over the last half of the scan
    bool inconclusive = false;           // some error budget exceeds its deviation
};

/// Deviations of the normalized ratio from its limit along `sequence`.
/// Throws RegionError outside the limit's region and DomainError when the
/// sequence does not move monotonically toward the limit.
ScanResult sharpness_scan(const SharpnessLimit& limit, double a, double c,
                          const std::vector<double>& sequence, const PsiOptions& opts = {});

}  // namespace tricomi
