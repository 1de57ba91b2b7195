#pragma once

#include <memory>

#include "tricomi/types.hpp"

namespace tricomi {

/// φ_{a,c}(t) = t^{-c} e^{-t} |ψ(a,c,t e^{iπ})|^{-2} / (Γ(a+1) Γ(a-c+1)),
/// the density behind the Stieltjes-type representation of the both-shift
/// Turánian ratio. Defined for a > 0, c < 1.
class WeightDensity {
public:
    /// Throws DomainError unless a > 0 and c < 1.
    static WeightDensity make(double a, double c);

    [[nodiscard]] double a() const { return a_; }
    [[nodiscard]] double c() const { return c_; }
    /// log(1/(Γ(a+1)Γ(a-c+1))).
    [[nodiscard]] double log_prefactor() const { return log_prefactor_; }

    /// e^{-t} |ψ(a,c,te^{iπ})|^{-2} times the prefactor: φ without t^{-c}.
    /// Values are memoised when ψ on the cut needs quadrature (integer c);
    /// copies share the memo and it is safe to use from several threads.
    [[nodiscard]] FunctionValue smooth_part(double t) const;

private:
    struct Memo;

    WeightDensity(double a, double c, double log_prefactor, std::shared_ptr<Memo> memo)
        : a_(a), c_(c), log_prefactor_(log_prefactor), memo_(std::move(memo)) {}

    FunctionValue compute_smooth_part(double t) const;

    double a_;
    double c_;
    double log_prefactor_;
    std::shared_ptr<Memo> memo_;
};

/// φ(t) >= 0 for t > 0.
FunctionValue phi(const WeightDensity& d, double t);

/// ∫_0^∞ t^power φ(t) dt paired with its closed form.
struct MomentIdentity {
    int power = 0;
    double closed_form = 0.0;
};

/// Closed forms: power 1 -> 1+a-c, 0 -> 1, -1 -> -1/c, -2 -> (c-a)/(c²(c+1)).
/// Throws RegionError when (a, c) is outside the region the identity holds in
/// (power 1, 0: a>0, c<1; power -1: a>0>c; power -2: a>1, c<-1).
MomentIdentity moment_identity(int power, double a, double c);
bool moment_in_region(int power, double a, double c);

/// Requested relative accuracy of the φ-integrals.
inline constexpr double kDefaultMeasureTol = 1e-12;

/// Quadrature value of the moment; the error includes the density's own
/// evaluation error.
FunctionValue phi_moment(const WeightDensity& d, int power, double tol = kDefaultMeasureTol);

/// -∫_0^∞ t φ(t) / (x+t)² dt, equal to the both-shift Turánian ratio.
FunctionValue stieltjes_ratio(const WeightDensity& d, double x, double tol = kDefaultMeasureTol);

/// (1 - ∫_0^∞ x² φ(t) / (x+t)² dt) / (1+a-c), equal to the first-shift ratio.
FunctionValue stieltjes_first_shift(const WeightDensity& d, double x, double tol = kDefaultMeasureTol);

/// a/(1+a-c) times stieltjes_ratio, equal to the second-shift ratio.
FunctionValue stieltjes_second_shift(const WeightDensity& d, double x, double tol = kDefaultMeasureTol);

}  // namespace tricomi
