#pragma once

#include "excycles/bigint.hpp"

#include <string>

namespace excycles {

/// Fixed-point real with 256 fractional bits (~77 decimal digits), built on
/// BigInt. Enough headroom to certify every published constant to far more
/// than its 6 printed decimals.
class Fixed {
public:
    static constexpr unsigned kFracBits = 256;

    Fixed() = default;
    explicit Fixed(long long v) : mant_(BigInt(v) << kFracBits) {}
    static Fixed from_mantissa(BigInt m);
    static Fixed from_ratio(const BigInt& num, const BigInt& den);
    static Fixed from_rational(const BigRational& q) { return from_ratio(q.num(), q.den()); }
    static Fixed from_double(double v);

    const BigInt& mantissa() const { return mant_; }
    bool is_zero() const { return mant_.is_zero(); }
    int signum() const { return mant_.signum(); }

    Fixed operator-() const;
    Fixed abs() const;
    Fixed operator+(const Fixed& o) const;
    Fixed operator-(const Fixed& o) const;
    Fixed operator*(const Fixed& o) const;
    Fixed operator/(const Fixed& o) const;
    Fixed& operator+=(const Fixed& o) { return *this = *this + o; }
    Fixed& operator-=(const Fixed& o) { return *this = *this - o; }

    Fixed div_small(std::uint64_t d) const;
    Fixed mul_small(std::uint64_t m) const;
    Fixed half_pow(unsigned k) const { return from_mantissa(mant_ >> k); } // x / 2^k

    bool operator<(const Fixed& o) const { return mant_ < o.mant_; }
    bool operator<=(const Fixed& o) const { return mant_ <= o.mant_; }
    bool operator>(const Fixed& o) const { return mant_ > o.mant_; }
    bool operator>=(const Fixed& o) const { return mant_ >= o.mant_; }
    bool operator==(const Fixed& o) const { return mant_ == o.mant_; }

    double to_double() const;
    /// Decimal string rounded to `digits` places after the point.
    std::string to_decimal(unsigned digits) const;

    /// e^x by Taylor series; intended for |x| <= ~4.
    static Fixed exp(const Fixed& x);
    static Fixed e();        // exp(1)
    static Fixed inv_e();    // exp(-1)

private:
    BigInt mant_; // value = mant_ / 2^kFracBits
};

} // namespace excycles
