#include "excycles/fixed_real.hpp"

#include <cmath>
#include <stdexcept>

namespace excycles {

Fixed Fixed::from_mantissa(BigInt m) {
    Fixed r;
    r.mant_ = std::move(m);
    return r;
}

Fixed Fixed::from_ratio(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Fixed: zero denominator");
    return from_mantissa((num << kFracBits) / den);
}

Fixed Fixed::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Fixed: non-finite double");
    bool neg = v < 0;
    v = std::fabs(v);
    int e = 0;
    double m = std::frexp(v, &e); // v = m * 2^e, m in [0.5, 1)
    auto mi = static_cast<std::uint64_t>(std::ldexp(m, 62));
    BigInt big = BigInt::from_u64(mi);
    int shift = static_cast<int>(kFracBits) + e - 62;
    Fixed r = from_mantissa(shift >= 0 ? (big << static_cast<unsigned>(shift))
                                       : (big >> static_cast<unsigned>(-shift)));
    return neg ? -r : r;
}

Fixed Fixed::operator-() const { return from_mantissa(-mant_); }
Fixed Fixed::abs() const { return from_mantissa(mant_.abs()); }
Fixed Fixed::operator+(const Fixed& o) const { return from_mantissa(mant_ + o.mant_); }
Fixed Fixed::operator-(const Fixed& o) const { return from_mantissa(mant_ - o.mant_); }

Fixed Fixed::operator*(const Fixed& o) const {
    return from_mantissa((mant_ * o.mant_) >> kFracBits);
}

Fixed Fixed::operator/(const Fixed& o) const {
    if (o.mant_.is_zero()) throw std::domain_error("Fixed division by zero");
    return from_mantissa((mant_ << kFracBits) / o.mant_);
}

Fixed Fixed::div_small(std::uint64_t d) const {
    BigInt m = mant_;
    BigInt q, r;
    BigInt::divmod(m, BigInt::from_u64(d), q, r);
    return from_mantissa(q);
}

Fixed Fixed::mul_small(std::uint64_t m) const {
    BigInt v = mant_;
    v.mul_small(m);
    return from_mantissa(v);
}

double Fixed::to_double() const { return std::ldexp(mant_.to_double(), -static_cast<int>(kFracBits)); }

std::string Fixed::to_decimal(unsigned digits) const {
    BigInt m = mant_;
    bool neg = m.is_negative();
    if (neg) m = -m;
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale.mul_small(10);
    // round to nearest, ties away from zero
    BigInt scaled = m * scale + (BigInt(1) << (kFracBits - 1));
    scaled = scaled >> kFracBits;
    std::string s = scaled.to_string();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = (neg ? "-" : "") + s.substr(0, s.size() - digits);
    if (digits) out += "." + s.substr(s.size() - digits);
    return out;
}

Fixed Fixed::exp(const Fixed& x) {
    // plain Taylor; terms shrink geometrically once k > |x|
    Fixed term(1), sum(1);
    const BigInt tiny = BigInt(1); // one ulp
    for (std::uint64_t k = 1; k < 500; ++k) {
        term = (term * x).div_small(k);
        if (term.mant_.abs() < tiny && k > 4) break;
        sum += term;
    }
    return sum;
}

Fixed Fixed::e() {
    static const Fixed v = exp(Fixed(1));
    return v;
}

Fixed Fixed::inv_e() {
    static const Fixed v = exp(Fixed(-1));
    return v;
}

} // namespace excycles
