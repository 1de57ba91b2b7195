#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "sampling.hpp"
#include "tricomi/errors.hpp"
#include "tricomi/kummer.hpp"

using namespace tricomi;
using cplx = std::complex<double>;

namespace {

// Plain term-by-term sum in long double; only trusted for moderate |z|.
std::complex<long double> naive_m(long double a, long double c, std::complex<long double> z) {
    std::complex<long double> term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 400; ++k) {
        term *= (a + k) / ((c + k) * (k + 1.0L)) * z;
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

TEST(KummerM, ZeroArgumentIsOne) {
    for (double a : {-2.5, 0.0, 1.0, 7.25})
        for (double c : {-1.5, 0.5, 3.0}) EXPECT_EQ(kummer_m(a, c, 0.0).value, 1.0);
}

TEST(KummerM, ExponentialCase) {
    // M(1,1,z) = e^z
    EXPECT_NEAR(kummer_m(1.0, 1.0, 1.0).value, std::exp(1.0), 1e-15);
    EXPECT_NEAR(kummer_m(1.0, 1.0, -20.0).value / std::exp(-20.0), 1.0, 1e-13);
}

TEST(KummerM, ExpMinusOneOverZ) {
    // M(1,2,z) = (e^z - 1)/z
    EXPECT_NEAR(kummer_m(1.0, 2.0, 1.0).value, std::exp(1.0) - 1.0, 1e-15);
    EXPECT_NEAR(kummer_m(1.0, 2.0, 30.0).value, std::expm1(30.0) / 30.0, 1e-14 * std::expm1(30.0) / 30.0);
}

TEST(KummerM, PoleInSecondParameterThrows) {
    EXPECT_THROW(kummer_m(1.0, 0.0, 1.0), PoleError);
    EXPECT_THROW(kummer_m(1.0, -3.0, cplx(1.0, 1.0)), PoleError);
}

TEST(KummerM, TerminatesForNegativeIntegerA) {
    // M(-2, c, z) = 1 - 2z/c + z²/(c(c+1))
    const double c = 1.5, z = 3.0;
    EXPECT_NEAR(kummer_m(-2.0, c, z).value, 1.0 - 2.0 * z / c + z * z / (c * (c + 1.0)), 1e-14);
}

TEST(KummerM, AgreesWithNaiveSeriesOnRandomComplexArguments) {
    auto rng = sampling::make_rng(10);
    for (int i = 0; i < 500; ++i) {
        const double a = sampling::uniform(rng, -4.0, 6.0);
        const double c = sampling::off_integer(rng, -4.5, 6.0, 0.1);
        const cplx z = std::polar(sampling::uniform(rng, 0.0, 8.0), sampling::uniform(rng, -3.14, 3.14));
        const auto m = kummer_m(a, c, z);
        const auto ref = naive_m(a, c, {z.real(), z.imag()});
        const cplx r(static_cast<double>(ref.real()), static_cast<double>(ref.imag()));
        EXPECT_LE(std::abs(m.value - r), m.abs_error + 1e-12 * std::abs(r)) << a << " " << c << " " << z;
        EXPECT_GE(m.abs_error, 0.0);
    }
}

TEST(KummerM, ErrorEstimateCoversTransformedEvaluation) {
    // negative real part goes through M(a,c,z) = e^z M(c-a,c,-z); compare
    // against the identity evaluated in the other direction
    auto rng = sampling::make_rng(11);
    for (int i = 0; i < 200; ++i) {
        const double a = sampling::uniform(rng, 0.1, 5.0);
        const double c = sampling::off_integer(rng, -3.0, 4.0, 0.1);
        const double x = sampling::uniform(rng, 0.5, 25.0);
        const auto lhs = kummer_m(a, c, -x);
        const auto rhs = kummer_m(c - a, c, x);
        const double expected = std::exp(-x) * rhs.value;
        EXPECT_LE(std::abs(lhs.value - expected), lhs.abs_error + std::exp(-x) * rhs.abs_error + 1e-15)
            << a << " " << c << " " << x;
    }
}

TEST(KummerM, SchwarzReflection) {
    auto rng = sampling::make_rng(12);
    for (int i = 0; i < 100; ++i) {
        const double a = sampling::uniform(rng, -2.0, 4.0);
        const double c = sampling::off_integer(rng, -2.5, 4.0, 0.1);
        const cplx z(sampling::uniform(rng, -10.0, 10.0), sampling::uniform(rng, -10.0, 10.0));
        const auto u = kummer_m(a, c, z);
        const auto v = kummer_m(a, c, std::conj(z));
        EXPECT_LE(std::abs(u.value - std::conj(v.value)), u.abs_error + v.abs_error);
    }
}

TEST(KummerM, TermBudgetExhaustionThrows) {
    SeriesOptions opts;
    opts.max_terms = 5;
    EXPECT_THROW(kummer_m(0.5, 1.5, 40.0, opts), ConvergenceError);
}
