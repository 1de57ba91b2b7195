#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "sampling.hpp"
#include "tricomi/errors.hpp"
#include "tricomi/gamma.hpp"
#include "tricomi/psi.hpp"

using namespace tricomi;
using cplx = std::complex<double>;

namespace {

// Γ(1-c)/Γ(a-c+1), the x -> 0 value of ψ for a > 0, c < 1.
double small_x_value(double a, double c) {
    return std::exp(std::lgamma(1.0 - c) - std::lgamma(a - c + 1.0));
}

}  // namespace

TEST(PsiQuadrature, ClosedFormWhenSecondParameterIsFirstPlusOne) {
    EXPECT_NEAR(psi_quadrature({1.0, 2.0, 2.0}).value, 0.5, 1e-14);
    EXPECT_NEAR(psi_quadrature({2.0, 3.0, 4.0}).value, 0.0625, 1e-15);
    for (double a : {0.5, 1.0, 2.0, 3.0, 7.5})
        for (double x : {1e-3, 0.1, 1.0, 10.0, 200.0}) {
            const auto v = psi_quadrature({a, a + 1.0, x});
            const double exact = std::pow(x, -a);
            EXPECT_NEAR(v.value / exact, 1.0, 1e-12) << a << " " << x;
            EXPECT_LE(std::abs(v.value - exact), v.abs_error + 1e-15 * exact) << a << " " << x;
        }
}

TEST(PsiQuadrature, SmallArgumentApproachesGammaRatio) {
    const auto v = psi_quadrature({0.5, 0.5, 1e-8});
    // next term is Γ(c-1)/Γ(a) x^{1-c} = -2e-4
    EXPECT_NEAR(v.value, std::sqrt(std::numbers::pi), 3e-4);
    EXPECT_NEAR(v.value, std::sqrt(std::numbers::pi) - 2e-4, 1e-7);
}

TEST(PsiQuadrature, RejectsNonPositiveA) {
    EXPECT_THROW(psi_quadrature({0.0, 1.0, 1.0}), DomainError);
    EXPECT_THROW(psi_quadrature({-1.5, 1.0, 1.0}), DomainError);
    EXPECT_THROW(psi_quadrature({1.0, 1.0, 0.0}), DomainError);
}

TEST(PsiQuadrature, PositiveOnRandomSamples) {
    auto rng = sampling::make_rng(30);
    for (int i = 0; i < 300; ++i) {
        const double a = sampling::log_uniform(rng, 0.05, 12.0);
        const double c = sampling::uniform(rng, -8.0, 8.0);
        const double x = sampling::log_uniform(rng, 1e-4, 80.0);
        const auto v = psi_quadrature({a, c, x});
        EXPECT_GT(v.value, 0.0) << a << " " << c << " " << x;
        EXPECT_GT(v.value, v.abs_error) << a << " " << c << " " << x;
    }
}

TEST(PsiConnection, ZeroAIsOne) {
    EXPECT_EQ(psi_connection(0.0, -0.5, 3.0).value, 1.0);
    EXPECT_EQ(psi_connection(0.0, 2.5, cplx(-3.0, 1.0)).value, cplx(1.0, 0.0));
}

TEST(PsiConnection, NegativeIntegerAIsPolynomial) {
    // U(-1, b, z) = z - b
    const auto v = psi_connection(-1.0, 0.3, cplx(2.0, -1.0));
    EXPECT_LT(std::abs(v.value - (cplx(2.0, -1.0) - 0.3)), 1e-14);
}

TEST(PsiConnection, AgreesWithQuadrature) {
    const auto q = psi_quadrature({1.0, 1.5, 4.0});
    const auto s = psi_connection(1.0, 1.5, 4.0);
    EXPECT_LE(std::abs(q.value - s.value), q.abs_error + s.abs_error);
}

TEST(PsiConnection, RandomAgreementWithQuadrature) {
    auto rng = sampling::make_rng(31);
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
        const double a = sampling::uniform(rng, 0.1, 5.0);
        const double c = sampling::off_integer(rng, -4.5, 4.5, 0.05);
        const double x = sampling::log_uniform(rng, 0.01, 15.0);
        FunctionValue s;
        try {
            s = psi_connection(a, c, x);
        } catch (const CancellationError&) {
            continue;
        }
        const auto q = psi_quadrature({a, c, x});
        EXPECT_LE(std::abs(q.value - s.value), q.abs_error + s.abs_error) << a << " " << c << " " << x;
        ++compared;
    }
    EXPECT_GT(compared, 250);
}

TEST(PsiComplexQuadrature, SchwarzReflectionNearNegativeAxis) {
    // integer c = -2 is outside the connection formula; the rotated integral covers it
    const cplx z = std::polar(5.0, 3.1);
    const auto u = psi_quadrature_complex(2.0, -2.0, z);
    const auto v = psi_quadrature_complex(2.0, -2.0, std::conj(z));
    EXPECT_LE(std::abs(u.value - std::conj(v.value)), u.abs_error + v.abs_error + 1e-14 * std::abs(u.value));
    EXPECT_GT(std::abs(psi_negative_axis(2.0, -2.0, 5.0).value), 0.0);
}

TEST(PsiConnection, RandomSchwarzReflection) {
    auto rng = sampling::make_rng(32);
    for (int i = 0; i < 100; ++i) {
        const double a = sampling::uniform(rng, -2.0, 4.0);
        const double c = sampling::off_integer(rng, -3.5, 3.5, 0.05);
        const cplx z = std::polar(sampling::uniform(rng, 0.1, 8.0), sampling::uniform(rng, -3.0, 3.0));
        const auto u = psi_connection(a, c, z);
        const auto v = psi_connection(a, c, std::conj(z));
        EXPECT_LE(std::abs(u.value - std::conj(v.value)), u.abs_error + v.abs_error + 1e-300);
    }
}

TEST(PsiConnection, IntegerSecondParameterRejected) {
    EXPECT_THROW(psi_connection(1.5, 2.0, 1.0), DomainError);
    EXPECT_THROW(psi_connection(1.0, -1.0 + 1e-8, 1.0), DomainError);
    // a - c + 1 = 0 terminates: ψ(a, a+1, z) = z^{-a}
    EXPECT_NEAR(psi_connection(1.0, 2.0, 4.0).value, 0.25, 1e-15);
}

TEST(PsiComplexQuadrature, MatchesConnectionOffTheAxis) {
    auto rng = sampling::make_rng(33);
    for (int i = 0; i < 60; ++i) {
        const double a = sampling::uniform(rng, 0.3, 4.0);
        const double c = sampling::off_integer(rng, -3.5, 0.9, 0.05);
        const cplx z = std::polar(sampling::uniform(rng, 0.5, 6.0), sampling::uniform(rng, -3.1, 3.1));
        const auto q = psi_quadrature_complex(a, c, z);
        const auto s = psi_connection(a, c, z);
        EXPECT_LE(std::abs(q.value - s.value), 1e-9 * std::abs(s.value) + q.abs_error + s.abs_error)
            << a << " " << c << " " << z;
    }
}

TEST(PsiNegativeAxis, IntegerCMatchesNeighbours) {
    // continuity in c at an integer: c = -2 sits between c = -2 ± 1e-5
    const double t = 3.0;
    const auto mid = psi_negative_axis(2.0, -2.0, t);
    const auto lo = psi_negative_axis(2.0, -2.0 - 1e-5, t);
    const auto hi = psi_negative_axis(2.0, -2.0 + 1e-5, t);
    EXPECT_LT(std::abs(mid.value - 0.5 * (lo.value + hi.value)), 1e-6 * std::abs(mid.value));
}

TEST(PsiAsymptotic, SpecExamples) {
    EXPECT_NEAR(psi_asymptotic({1.0, 2.0, 100.0}, 2).value, 0.01, 1e-17);
    EXPECT_NEAR(psi_asymptotic({1.0, 1.0, 100.0}, 2).value, 0.009902, 1e-15);
    // α1 = a(c-a-1) = -6 for (2, 0)
    EXPECT_NEAR(psi_asymptotic({2.0, 0.0, 1e3}, 1).value, 1e-6 * (1.0 - 6e-3), 1e-20);
}

TEST(PsiAsymptotic, AgreesWithQuadratureToFirstOmittedTerm) {
    for (const auto& p : {ParameterPoint{1.0, 1.0, 100.0}, ParameterPoint{2.0, 0.0, 1e3},
                          ParameterPoint{2.0, -2.0, 500.0}, ParameterPoint{0.5, -1.5, 200.0}}) {
        const auto s = psi_asymptotic(p, 2);
        const auto q = psi_quadrature(p);
        EXPECT_LE(std::abs(s.value - q.value), 2.0 * s.abs_error + q.abs_error) << p.a << " " << p.c;
    }
}

TEST(PsiAsymptotic, ScaledRemainderStaysBounded) {
    // |asymptotic - quadrature| x² / x^{-a} is bounded along x = 1e2, 1e3, 1e4
    for (double a : {1.0, 2.0, 3.5})
        for (double c : {-2.5, -0.5, 0.5}) {
            double previous = INFINITY;
            for (double x : {1e2, 1e3, 1e4}) {
                const ParameterPoint p{a, c, x};
                const double scaled =
                    std::abs(psi_asymptotic(p, 2).value - psi_quadrature(p).value) * x * x / std::pow(x, -a);
                EXPECT_LT(scaled, 1.05 * previous + 1e-6) << a << " " << c << " " << x;
                EXPECT_LT(scaled, 1.0 + std::abs(asymptotic_alpha2(a, c)) * 10.0);
                previous = scaled;
            }
        }
}

TEST(PsiAsymptotic, CoefficientIdentities) {
    auto rng = sampling::make_rng(34);
    for (int i = 0; i < 200; ++i) {
        const double a = sampling::uniform(rng, 1.2, 6.0);
        const double c = sampling::uniform(rng, -6.0, 2.0);
        // contiguous combination behind the large-x limit of the both-shift ratio
        const double lhs = 2.0 * asymptotic_alpha1(a, c);
        const double rhs = asymptotic_alpha1(a - 1.0, c - 1.0) + asymptotic_alpha1(a + 1.0, c + 1.0);
        EXPECT_NEAR(lhs, rhs, 1e-12 * (1.0 + std::abs(lhs)));
        EXPECT_NEAR(asymptotic_alpha1(a, c), a * (c - a - 1.0), 1e-12 * (1.0 + std::abs(lhs)));
        EXPECT_NEAR(asymptotic_alpha2(a, c), 0.5 * a * (a + 1.0) * (a + 1.0 - c) * (a + 2.0 - c),
                    1e-12 * (1.0 + std::abs(asymptotic_alpha2(a, c))));
    }
}

TEST(Psi, DispatcherExamples) {
    EXPECT_NEAR(psi(1.0, 2.0, 2.0).value, 0.5, 1e-14);
    const auto one = psi(0.0, -1.0, 7.0);
    EXPECT_EQ(one.value, 1.0);
    EXPECT_EQ(one.method, Method::terminating_series);
    EXPECT_NEAR(psi(2.0, -2.0, 1e-3).value, 2.0 / 24.0, 1e-3);
    EXPECT_EQ(psi(1.0, 0.5, 1e6).method, Method::asymptotic_large_x);
    EXPECT_EQ(psi(1.0, 0.5, 1.0).method, Method::quadrature);
}

TEST(Psi, NonPositiveAMatchesConnection) {
    auto rng = sampling::make_rng(35);
    for (int i = 0; i < 200; ++i) {
        const double a = sampling::off_integer(rng, -4.0, -0.05, 0.05);
        const double c = sampling::off_integer(rng, -5.0, 3.0, 0.05);
        const double x = sampling::log_uniform(rng, 0.05, 20.0);
        FunctionValue ref;
        try {
            ref = psi_connection(a, c, x);
        } catch (const CancellationError&) {
            continue;
        }
        const auto v = psi(a, c, x);
        EXPECT_LE(std::abs(v.value - ref.value), v.abs_error + ref.abs_error + 1e-12 * std::abs(ref.value))
            << a << " " << c << " " << x;
    }
}

TEST(Psi, NegativeIntegerA) {
    // U(-2, b, x) = x² - 2(b+1)x + b(b+1)
    for (double b : {-3.0, -1.0, 0.5, 2.0})
        for (double x : {0.5, 3.0}) {
            const auto v = psi(-2.0, b, x);
            EXPECT_NEAR(v.value, x * x - 2.0 * (b + 1.0) * x + b * (b + 1.0), 1e-12) << b << " " << x;
        }
}

TEST(Psi, SmallXLimitApproachedMonotonically) {
    auto rng = sampling::make_rng(36);
    for (int i = 0; i < 60; ++i) {
        const double a = sampling::uniform(rng, 0.3, 5.0);
        // the correction decays like x^{1-c}
        const double c = sampling::uniform(rng, -5.0, 0.5);
        const double limit = small_x_value(a, c);
        double previous = INFINITY;
        for (double x : {1e-2, 1e-4, 1e-6}) {
            const double dev = std::abs(psi(a, c, x).value - limit);
            EXPECT_LE(dev, previous) << a << " " << c << " " << x;
            previous = dev;
        }
        EXPECT_LT(previous / limit, 1e-2) << a << " " << c;
    }
}

TEST(Psi, CrossCheckOption) {
    PsiOptions opts;
    opts.cross_check = true;
    const auto v = psi(1.0, 1.5, 4.0, opts);
    EXPECT_NEAR(v.value, psi_quadrature({1.0, 1.5, 4.0}).value, 1e-12);
}

TEST(Psi, InvalidArgumentsThrow) {
    EXPECT_THROW(psi(1.0, 1.0, -1.0), DomainError);
    EXPECT_THROW(psi(NAN, 1.0, 1.0), DomainError);
}
