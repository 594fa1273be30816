#include "doctest.h"

#include "excycles/series.hpp"

#include <stdexcept>

using namespace excycles;

TEST_CASE("tree root series to order 3") {
    RationalSeries r = RationalSeries::tree_root(3);
    CHECK(r.coeff(0) == BigRational(0));
    CHECK(r.coeff(1) == BigRational(1));
    CHECK(r.coeff(2) == BigRational(1));
    CHECK(r.coeff(3) == BigRational(BigInt(3), BigInt(2)));
}

TEST_CASE("exp and log invert each other") {
    int n = 24;
    RationalSeries z = RationalSeries::z(n);
    RationalSeries one_plus_z = RationalSeries::one(n) + z;
    CHECK(one_plus_z.log_series().exp_series() == one_plus_z);
    CHECK(z.exp_series().log_series() == z);
}

TEST_CASE("cycle series starts at z^3 with weight 1/6") {
    RationalSeries c = RationalSeries::cycle_egf(8);
    CHECK(c.coeff(0).is_zero());
    CHECK(c.coeff(1).is_zero());
    CHECK(c.coeff(2).is_zero());
    CHECK(c.coeff(3) == BigRational(BigInt(1), BigInt(6)));
    // matches the closed form -ln(1-z)/2 - z/2 - z^2/4
    int n = 16;
    RationalSeries one_minus_z = RationalSeries::one(n) - RationalSeries::z(n);
    RationalSeries closed = one_minus_z.log_series().scale(BigRational(BigInt(-1), BigInt(2)));
    closed = closed - RationalSeries::z(n).scale(BigRational(BigInt(1), BigInt(2)));
    RationalSeries z2(n);
    z2.set_coeff(2, BigRational(BigInt(1), BigInt(4)));
    closed = closed - z2;
    CHECK(closed == RationalSeries::cycle_egf(n));
}

TEST_CASE("the tree root satisfies R = z e^R") {
    int n = 40;
    RationalSeries r = RationalSeries::tree_root(n);
    RationalSeries rhs = RationalSeries::z(n) * r.exp_series();
    CHECK(r == rhs);
}

TEST_CASE("T = R - R^2/2 matches the direct coefficients") {
    int n = 40;
    RationalSeries r = RationalSeries::tree_root(n);
    RationalSeries t = r - (r * r).scale(BigRational(BigInt(1), BigInt(2)));
    CHECK(t == RationalSeries::tree_egf(n));
}

TEST_CASE("spider series matches hand counts") {
    int n = 14;
    RationalSeries s = RationalSeries::spider(n);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == BigRational(2));
    CHECK(s.egf_count(2) == BigRational(4));
    CHECK(s.egf_count(3) == BigRational(18));
}

TEST_CASE("compose uses Horner and demands zero inner constant") {
    int n = 10;
    RationalSeries z = RationalSeries::z(n);
    RationalSeries f = RationalSeries::cycle_egf(n);
    CHECK(f.compose(z) == f);
    CHECK_THROWS_AS(f.compose(RationalSeries::one(n)), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries::one(n).scale(BigRational(-1)).log_series(), std::invalid_argument);
    CHECK_THROWS_AS((RationalSeries::one(n) + RationalSeries::one(n)).log_series(), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries::one(n).exp_series(), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(5) * RationalSeries(6), std::invalid_argument);
}

TEST_CASE("derivative") {
    RationalSeries r = RationalSeries::tree_root(6);
    RationalSeries d = r.derivative();
    CHECK(d.coeff(0) == BigRational(1));
    CHECK(d.coeff(1) == BigRational(2));
    CHECK(d.coeff(2) == BigRational(BigInt(9), BigInt(2)));
}

TEST_CASE("integer EGF algebra agrees with the rational engine") {
    const int n = 18;
    detail::EgfAlgebra a(n);

    detail::Egf r_egf = a.zero();
    for (int i = 1; i <= n; ++i)
        r_egf.c[i] = BigInt::power(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i - 1));
    RationalSeries r = RationalSeries::tree_root(n);
    RationalSeries r2 = r * r;
    detail::Egf r2_egf = a.mul(r_egf, r_egf);
    for (int i = 0; i <= n; ++i)
        CHECK(r2.egf_count(i) == BigRational(r2_egf.c[i]));

    detail::Egf inner = a.shifted_geometric();
    detail::Egf ei = a.exp_of(inner);
    RationalSeries inner_r(n);
    for (int i = 1; i <= n; ++i) inner_r.set_coeff(i, BigRational(1));
    RationalSeries ei_r = inner_r.exp_series();
    for (int i = 0; i <= n; ++i)
        CHECK(ei_r.egf_count(i) == BigRational(ei.c[i]));

    detail::Egf geo = a.geometric();
    detail::Egf lg = a.log_of(geo);
    for (int i = 1; i <= n; ++i)
        CHECK(BigRational(lg.c[i], BigInt::factorial(static_cast<unsigned>(i))) ==
              BigRational(BigInt(1), BigInt(i)));
    detail::Egf q = a.div(a.one(), a.sub(a.one(), a.z()));
    for (int i = 0; i <= n; ++i) CHECK(q.c[i] == geo.c[i]);

    CHECK_THROWS_AS(a.exp_of(a.one()), std::invalid_argument);
    CHECK_THROWS_AS(a.log_of(a.z()), std::invalid_argument);
    CHECK_THROWS_AS(a.div(a.one(), a.z()), std::invalid_argument);
}
