#include "doctest.h"

#include "excycles/enumeration.hpp"
#include "excycles/gf.hpp"
#include "support/test_support.hpp"

#include <cmath>

#include <stdexcept>
#include <string>

using namespace excycles;

TEST_CASE("tree function point: interval ends") {
    TreePoint p0 = tree_function_point(Fixed(0));
    CHECK(p0.r.is_zero());
    CHECK(p0.t.is_zero());
    TreePoint p1 = tree_function_point(Fixed::inv_e());
    CHECK(p1.r.to_decimal(20) == "1.00000000000000000000");
    CHECK(p1.t.to_decimal(20) == "0.50000000000000000000");
    CHECK_THROWS_AS(tree_function_point(Fixed(1)), std::invalid_argument);
    CHECK_THROWS_AS(tree_function_point(Fixed(-1)), std::invalid_argument);
}

TEST_CASE("e^{-T(1/(2e))} reproduces the published connectivity value") {
    TreePoint p = tree_function_point(Fixed::inv_e().half_pow(1));
    CHECK(Fixed::exp(-p.t).to_decimal(6) == "0.814600");
}

TEST_CASE("connectivity constants to six decimals") {
    CHECK(connectivity_constant(0).to_decimal(6) == "0.606531");
    CHECK(connectivity_constant(1).to_decimal(6) == "0.814600");
    CHECK(connectivity_constant(2).to_decimal(6) == "0.907879");
    CHECK(connectivity_constant(3).to_decimal(6) == "0.953998");
    CHECK(connectivity_constant(4).to_decimal(6) == "0.977005");
    CHECK_THROWS_AS(connectivity_constant(-1), std::invalid_argument);
}

TEST_CASE("apex constants in closed form") {
    Fixed c1 = apex_constant(1);
    Fixed half_inv_e = Fixed::inv_e().half_pow(1); // 1/(2e)
    CHECK((c1 - half_inv_e).abs() < Fixed::from_ratio(BigInt(1), BigInt::power(10, 40)));
    Fixed c2 = apex_constant(2);
    Fixed ref2 = (Fixed::inv_e() * Fixed::inv_e()).div_small(16); // 1/(16 e^2)
    CHECK((c2 - ref2).abs() < Fixed::from_ratio(BigInt(1), BigInt::power(10, 40)));
    Fixed c3 = apex_constant(3);
    Fixed ref3 = (Fixed::inv_e() * Fixed::inv_e() * Fixed::inv_e()).div_small(64).div_small(6);
    CHECK((c3 - ref3).abs() < Fixed::from_ratio(BigInt(1), BigInt::power(10, 40)));
    CHECK_THROWS_AS(apex_constant(0), std::invalid_argument);
}

TEST_CASE("wheel constants with certified residuals") {
    GfConstants gc = wheel_constants();
    CHECK(gc.x.to_decimal(6) == "0.315411");
    CHECK(gc.r.to_decimal(6) == "0.230089");
    CHECK(gc.gamma.to_decimal(3) == "4.346");
    CHECK(gc.c.to_decimal(3) == "0.158");
    Fixed bound = Fixed::from_ratio(BigInt(1), BigInt::power(10, 25));
    CHECK(gc.residual_s < bound);
    CHECK(gc.residual_r < bound);
    // root certification: S(x (1 +- 1e-20)) brackets 1
    Fixed eps = Fixed::from_ratio(BigInt(1), BigInt::power(10, 20));
    Fixed lo = gc.x * (Fixed(1) - eps), hi = gc.x * (Fixed(1) + eps);
    CHECK((spider_point(lo) - Fixed(1)).signum() < 0);
    CHECK((spider_point(hi) - Fixed(1)).signum() > 0);
    // e < gamma < 2e
    CHECK(Fixed::e() < gc.gamma);
    CHECK(gc.gamma < Fixed::e().mul_small(2));
}

TEST_CASE("series and point evaluations agree to 1e-12") {
    RationalSeries t = RationalSeries::tree_egf(200);
    Fixed tol = Fixed::from_ratio(BigInt(1), BigInt::power(10, 12));
    for (int k = 1; k <= 4; ++k) {
        Fixed z = Fixed::inv_e().half_pow(static_cast<unsigned>(k));
        Fixed series_val = evaluate_series(t, z);
        Fixed point_val = tree_function_point(z).t;
        CHECK((series_val - point_val).abs() < tol);
    }
}

TEST_CASE("wheel series against the brute-force hairy cycle oracle, n <= 6") {
    WheelSeriesSet ws = wheel_series(8);
    for (int n = 1; n <= 6; ++n) {
        BigRational got_plus = ws.hplus.egf_count(n);
        BigRational got_restricted = ws.h.egf_count(n);
        CHECK(got_plus == BigRational(testsupport::count_coloured_hairy_cycles(n, false)));
        CHECK(got_restricted == BigRational(testsupport::count_coloured_hairy_cycles(n, true)));
    }
}

TEST_CASE("restriction only removes graphs and the removed part grows slowly") {
    WheelSeriesSet ws = wheel_series(40);
    for (int n = 0; n <= 40; ++n) {
        BigRational hp = ws.hplus.egf_count(n);
        BigRational h = ws.h.egf_count(n);
        CHECK((h < hp || h == hp));
        CHECK((h.signum() >= 0));
    }
    // (H+ - H)/H+ tends to zero: compare scaled gaps at two orders
    auto gap_ratio = [&](int n) {
        BigRational hp = ws.hplus.egf_count(n);
        BigRational h = ws.h.egf_count(n);
        return (hp - h).to_double() / hp.to_double();
    };
    CHECK(gap_ratio(36) < gap_ratio(18));
    CHECK(gap_ratio(36) < 1e-6);
}

TEST_CASE("wheel coefficients equal the hub-weighted census counts, n <= 6") {
    WheelSeriesSet ws = wheel_series(6);
    for (int n = 4; n <= 6; ++n) {
        CountRecord rec = census(n, 1, 2);
        CHECK(ws.w.egf_count(n) == BigRational(rec.wheel_rooted));
    }
}

TEST_CASE("low-order wheel pipeline agrees with generic composition") {
    const int n = 12;
    WheelSeriesSet ws = wheel_series(n);
    RationalSeries s = RationalSeries::spider(n);
    RationalSeries c = RationalSeries::cycle_egf(n);
    CHECK(ws.hplus == c.compose(s));
    RationalSeries r = RationalSeries::tree_root(n);
    CHECK(ws.wplus == r * c.compose(s).compose(r));
    CHECK(ws.w == r * ws.h.compose(r));
}

TEST_CASE("wheel series sanity at tiny orders") {
    WheelSeriesSet ws = wheel_series(5);
    // the smallest generalized wheel is K4; the series counts it once per
    // hub reading, and K4 has four
    CHECK(ws.w.egf_count(3).is_zero());
    CHECK(ws.w.egf_count(4) == BigRational(4));
    // n = 5 by hand: 15 wheels W_5 (one hub), 30 one-edge-subdivided K4
    // (four hubs), 30 doubled-spoke wheels (two hubs), 20 K4-plus-pendant
    // (four hubs): 15 + 120 + 60 + 80
    CHECK(ws.w.egf_count(5) == BigRational(275));
}

TEST_CASE("integer engine verifies R = z e^R and T = R - R^2/2 at order 400") {
    const int n = 400;
    detail::EgfAlgebra a(n);
    detail::Egf r = a.zero(), t = a.zero();
    for (int i = 1; i <= n; ++i) {
        r.c[i] = BigInt::power(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i - 1));
        t.c[i] = tree_count(i);
    }
    detail::Egf er = a.exp_of(r);
    for (int i = 1; i <= n; ++i) {
        // (z e^R) scaled coefficient: i * er[i-1]
        BigInt want = er.c[i - 1] * BigInt(i);
        CHECK(r.c[i] == want);
    }
    detail::Egf r2 = a.mul(r, r);
    for (int i = 0; i <= n; ++i) {
        BigInt lhs = t.c[i] * BigInt(2);
        BigInt rhs = r.c[i] * BigInt(2) - r2.c[i];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the scaled wheel-plus ratio closes in on c between orders 100 and 300") {
    WheelSeriesSet ws = wheel_series(300);
    GfConstants gc = wheel_constants();
    double c_target = gc.c.to_double();
    double log2_gamma = std::log2(gc.gamma.to_double());
    auto ratio_at = [&](int n) {
        const BigRational& coeff = ws.wplus.coeff(n);
        double l2 = std::log2(static_cast<double>(n)) + coeff.num().log2_abs() -
                    coeff.den().log2_abs() - n * log2_gamma;
        return std::exp2(l2);
    };
    double r100 = ratio_at(100), r300 = ratio_at(300);
    CHECK(std::abs(r300 - c_target) < std::abs(r100 - c_target));
}
