#include <cmath>

#include <gtest/gtest.h>

#include "sampling.hpp"
#include "tricomi/errors.hpp"
#include "tricomi/turanian.hpp"

using namespace tricomi;
using K = TuranianKind;

TEST(Turanian, SignExamples) {
    const auto both = turanian(K::both_shift, {1.0, 0.5, 1.0});
    EXPECT_LT(both.value, -both.abs_error);
    const auto first = turanian(K::first_shift, {2.0, 0.5, 1.0});
    EXPECT_GT(first.value, first.abs_error);
}

TEST(Turanian, ClosedFormCaseVanishes) {
    // ψ(1,2,2)=1/2, ψ(0,1,2)=1, ψ(2,3,2)=1/4
    const auto v = turanian(K::both_shift, {1.0, 2.0, 2.0});
    EXPECT_NEAR(v.value, 0.0, 1e-14);
    EXPECT_LE(std::abs(v.value), v.abs_error + 1e-16);
}

TEST(Turanian, KindParsingAndShifts) {
    EXPECT_EQ(parse_turanian_kind("both"), K::both_shift);
    EXPECT_EQ(parse_turanian_kind("first_shift"), K::first_shift);
    EXPECT_EQ(parse_turanian_kind("second"), K::second_shift);
    EXPECT_THROW(parse_turanian_kind("third"), DomainError);
    EXPECT_EQ(shift_of(K::both_shift), std::make_pair(1.0, 1.0));
    EXPECT_EQ(shift_of(K::first_shift), std::make_pair(1.0, 0.0));
    EXPECT_EQ(shift_of(K::second_shift), std::make_pair(0.0, 1.0));
    EXPECT_EQ(to_string(K::second_shift), "second_shift");
}

TEST(TuranianRatio, SmallXLimits) {
    EXPECT_NEAR(turanian_ratio(K::both_shift, {2.0, -2.0, 1e-6}).value, -0.5, 1e-4);
    EXPECT_NEAR(turanian_ratio(K::first_shift, {2.0, -1.0, 1e-6}).value, 0.25, 1e-4);
    EXPECT_NEAR(turanian_ratio(K::second_shift, {2.0, -2.0, 1e-6}).value, -0.2, 1e-4);
}

TEST(Turanian, SignInvariantsOnRandomSamples) {
    auto rng = sampling::make_rng(40);
    int decisive[3] = {0, 0, 0};
    for (int i = 0; i < 150; ++i) {
        const double a = sampling::log_uniform(rng, 0.1, 8.0);
        const double c = sampling::off_integer(rng, -6.0, 0.95, 0.02);
        const double x = sampling::log_uniform(rng, 1e-3, 50.0);
        const ParameterPoint p{a, c, x};
        const auto both = turanian_ratio(K::both_shift, p);
        if (std::abs(both.value) > both.abs_error) {
            EXPECT_LT(both.value, 0.0) << a << " " << c << " " << x;
            ++decisive[0];
        }
        const auto first = turanian_ratio(K::first_shift, p);
        if (std::abs(first.value) > first.abs_error) {
            EXPECT_GT(first.value, 0.0) << a << " " << c << " " << x;
            ++decisive[1];
        }
        // the second-shift sign holds for every real c
        const auto second = turanian_ratio(K::second_shift, {a, c + sampling::uniform(rng, 0.0, 6.0), x});
        if (std::abs(second.value) > second.abs_error) {
            EXPECT_LT(second.value, 0.0) << a << " " << c << " " << x;
            ++decisive[2];
        }
    }
    for (int n : decisive) EXPECT_GT(n, 120);
}

TEST(Turanian, DirectValueMatchesRatioTimesPsiSquared) {
    auto rng = sampling::make_rng(41);
    for (int i = 0; i < 60; ++i) {
        const double a = sampling::uniform(rng, 0.2, 5.0);
        const double c = sampling::off_integer(rng, -4.0, 0.9, 0.05);
        const double x = sampling::log_uniform(rng, 0.01, 30.0);
        const ParameterPoint p{a, c, x};
        for (K kind : {K::both_shift, K::first_shift, K::second_shift}) {
            const auto direct = turanian(kind, p);
            const auto ratio = turanian_ratio(kind, p);
            const auto base = psi(p);
            const double sq = base.value * base.value;
            const double budget = direct.abs_error + ratio.abs_error * sq +
                                  2.0 * std::abs(ratio.value) * sq * base.rel_error() + 1e-300;
            EXPECT_LE(std::abs(direct.value - ratio.value * sq), budget) << a << " " << c << " " << x;
        }
    }
}

TEST(SharpnessLimit, ClosedForms) {
    const double a = 2.0, c = -2.0;
    EXPECT_EQ(find_sharpness_limit("zeta_both_inf").limit_value(a, c), c - a - 1.0);
    EXPECT_EQ(find_sharpness_limit("both_zero").limit_value(a, c), 1.0 / c);
    EXPECT_EQ(find_sharpness_limit("first_zero").limit_value(a, c), 1.0 / (1.0 + a - c));
    EXPECT_EQ(find_sharpness_limit("second_zero").limit_value(a, c), a / (c * (1.0 + a - c)));
    for (const char* id : {"both_inf", "first_inf", "second_inf", "eta_both_zero"})
        EXPECT_EQ(find_sharpness_limit(id).limit_value(a, c), 0.0) << id;
    EXPECT_THROW(find_sharpness_limit("nope"), DomainError);
    EXPECT_EQ(sharpness_limits().size(), 8u);
}

TEST(SharpnessScan, ZetaDeviationsShrink) {
    const auto r = sharpness_scan(find_sharpness_limit("zeta_both_inf"), 1.0, 0.0, {10.0, 1e2, 1e3});
    EXPECT_EQ(r.limit_value, -2.0);
    ASSERT_EQ(r.points.size(), 3u);
    EXPECT_TRUE(r.eventually_decreasing);
    EXPECT_LT(r.points[2].deviation, r.points[1].deviation);
    EXPECT_LT(r.points[1].deviation, r.points[0].deviation);
}

TEST(SharpnessScan, BothRatioAtZero) {
    const auto r = sharpness_scan(find_sharpness_limit("both_zero"), 2.0, -2.0, {1e-1, 1e-2, 1e-3});
    EXPECT_EQ(r.limit_value, -0.5);
    EXPECT_TRUE(r.eventually_decreasing);
    EXPECT_LT(r.points.back().deviation, 0.01);
}

TEST(SharpnessScan, PlainRatiosVanishAtInfinity) {
    for (const char* id : {"both_inf", "first_inf", "second_inf"}) {
        const auto r = sharpness_scan(find_sharpness_limit(id), 2.0, -2.0, default_scan(LimitDirection::x_to_infinity));
        EXPECT_TRUE(r.eventually_decreasing) << id;
        EXPECT_LT(r.points.back().deviation, r.points.front().deviation) << id;
    }
}

TEST(SharpnessScan, Errors) {
    const auto& both_zero = find_sharpness_limit("both_zero");
    EXPECT_THROW(sharpness_scan(both_zero, 2.0, 0.5, {1e-1, 1e-2}), RegionError);
    EXPECT_THROW(sharpness_scan(both_zero, 2.0, -2.0, {1e-2, 1e-1}), DomainError);
    EXPECT_THROW(sharpness_scan(both_zero, 2.0, -2.0, {1e-2}), DomainError);
    EXPECT_THROW(sharpness_scan(find_sharpness_limit("second_zero"), 0.5, -2.0, {1e-1, 1e-2}), RegionError);
}
