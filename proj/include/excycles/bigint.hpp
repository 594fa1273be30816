#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace excycles {

/// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs
/// (least significant first). Census counts, forest tables and the series
/// engine all run on this type; no floating point is involved anywhere.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_u64(std::uint64_t v);
    static BigInt from_string(const std::string& s);
    static BigInt power(std::uint64_t base, std::uint64_t exp);
    static BigInt factorial(unsigned n);
    static BigInt binomial(unsigned n, unsigned k);

    bool is_zero() const { return limbs_.empty(); }
    int signum() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }
    std::size_t bit_length() const;

    bool fits_u64() const { return sign_ >= 0 && limbs_.size() <= 1; }
    std::uint64_t to_u64() const;
    /// Nearest double; loses precision past 53 bits, saturates to +-inf.
    double to_double() const;
    /// log2 of |x| as a double (x != 0); accurate to ~1e-15 even for huge x.
    double log2_abs() const;

    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const; // truncated toward zero
    BigInt operator%(const BigInt& o) const; // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Quotient and remainder in one pass: a == q*b + r, |r| < |b|,
    /// q truncated toward zero, r carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& mul_small(std::uint64_t m);
    BigInt& add_small(std::uint64_t m);
    /// Division by a small divisor that is known to be exact (asserts).
    BigInt& divexact_small(std::uint64_t d);

    BigInt operator<<(unsigned bits) const;
    BigInt operator>>(unsigned bits) const; // arithmetic on magnitude, sign kept

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint64_t> limbs_;  // empty iff zero, no leading zero limb

    int cmp(const BigInt& o) const;
    void trim();

    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static void divmod_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& q, std::vector<std::uint64_t>& r);
};

/// Exact rational with reduced BigInt numerator/denominator (den > 0).
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long v) : num_(v), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    int signum() const { return num_.signum(); }

    BigRational operator-() const;
    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const;

    double to_double() const;
    /// "p" when integral, otherwise "p/q".
    std::string to_string() const;

private:
    BigInt num_, den_;
    void reduce();
};

} // namespace excycles
