#include "doctest.h"

#include "excycles/bigint.hpp"
#include "excycles/rng.hpp"

#include <string>

using excycles::BigInt;
using excycles::BigRational;
using excycles::SeededRng;

namespace {

BigInt random_bigint(SeededRng& rng, int max_limbs) {
    int limbs = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_limbs)));
    BigInt v;
    for (int i = 0; i < limbs; ++i) {
        std::uint64_t word = rng.next_u64();
        if (rng.below(4) == 0) word = rng.coin() ? ~0ull : (rng.coin() ? 0 : 1);
        v = (v << 64) + BigInt::from_u64(word);
    }
    if (rng.coin()) v = -v;
    return v;
}

} // namespace

TEST_CASE("small arithmetic and strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK(BigInt::from_string("-998244359987710471") == BigInt(1000000007) * BigInt(-998244353));
    CHECK(BigInt::factorial(20).to_string() == "2432902008176640000");
    CHECK(BigInt::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(BigInt::binomial(52, 5).to_string() == "2598960");
    CHECK(BigInt::binomial(300, 150).bit_length() > 290);
    CHECK(BigInt::power(7, 0) == BigInt(1));
    CHECK(BigInt::power(2, 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("string round trip") {
    SeededRng rng(7);
    for (int it = 0; it < 200; ++it) {
        BigInt a = random_bigint(rng, 12);
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("divmod property: a == q*b + r with |r| < |b|") {
    SeededRng rng(11);
    for (int it = 0; it < 2000; ++it) {
        BigInt a = random_bigint(rng, 10);
        BigInt b = random_bigint(rng, 6);
        if (b.is_zero()) b = BigInt(3);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("division edge patterns that exercise the quotient correction") {
    BigInt base = (BigInt(1) << 128) - BigInt(1);
    BigInt d = (BigInt(1) << 64) + BigInt(1);
    BigInt q, r;
    BigInt::divmod(base, d, q, r);
    CHECK(q * d + r == base);
    BigInt top = (BigInt(1) << 192) - (BigInt(1) << 64);
    BigInt::divmod(top, (BigInt(1) << 64) - BigInt(1), q, r);
    CHECK(q * ((BigInt(1) << 64) - BigInt(1)) + r == top);
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(0), BigInt(12)) == BigInt(12));
    CHECK(BigInt::gcd(BigInt(18), BigInt(24)) == BigInt(6));
    SeededRng rng(13);
    for (int it = 0; it < 300; ++it) {
        BigInt a = random_bigint(rng, 5).abs();
        BigInt b = random_bigint(rng, 5).abs();
        if (a.is_zero() && b.is_zero()) continue;
        BigInt g = BigInt::gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        BigInt ag = a / g, bg = b / g;
        CHECK(BigInt::gcd(ag, bg) == BigInt(1));
    }
}

TEST_CASE("karatsuba agrees with the small path") {
    SeededRng rng(17);
    for (int it = 0; it < 20; ++it) {
        BigInt a = random_bigint(rng, 120).abs();
        BigInt b = random_bigint(rng, 100).abs();
        // (a+b)^2 - (a-b)^2 == 4ab only holds if multiplication is consistent
        BigInt lhs = (a + b) * (a + b) - (a - b) * (a - b);
        BigInt ab = a * b;
        CHECK(lhs == ab.mul_small(4));
    }
}

TEST_CASE("shifts and small ops") {
    BigInt x = BigInt::from_string("123456789123456789123456789");
    CHECK(((x << 67) >> 67) == x);
    BigInt y = x;
    y.mul_small(1000);
    y.divexact_small(8);
    BigInt x125 = x;
    x125.mul_small(125);
    CHECK(y == x125);
    CHECK(BigInt(12345).to_double() == doctest::Approx(12345.0));
    CHECK((BigInt(1) << 100).log2_abs() == doctest::Approx(100.0));
}

TEST_CASE("rationals reduce and compare") {
    BigRational half(BigInt(2), BigInt(4));
    CHECK(half.to_string() == "1/2");
    CHECK((half + half).to_string() == "1");
    CHECK((half * BigRational(BigInt(2), BigInt(3))).to_string() == "1/3");
    CHECK(BigRational(BigInt(-4), BigInt(-8)) == half);
    CHECK(BigRational(BigInt(1), BigInt(-3)).to_string() == "-1/3");
    CHECK(BigRational(BigInt(1), BigInt(3)) < half);
    CHECK(half.to_double() == doctest::Approx(0.5));
    CHECK((BigRational(1) / BigRational(BigInt(7))).to_string() == "1/7");
}
