#include "excycles/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace excycles {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 mag = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    limbs_.push_back(mag);
}

BigInt BigInt::from_u64(u64 v) {
    BigInt r;
    if (v) {
        r.sign_ = 1;
        r.limbs_.push_back(v);
    }
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

u64 BigInt::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt::to_u64: value out of range");
    return limbs_.empty() ? 0 : limbs_[0];
}

double BigInt::to_double() const {
    if (limbs_.empty()) return 0.0;
    double r = 0.0;
    std::size_t k = limbs_.size();
    std::size_t take = std::min<std::size_t>(k, 2);
    for (std::size_t i = 0; i < take; ++i)
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[k - 1 - i]);
    r = std::ldexp(r, 64 * static_cast<int>(k - take));
    return sign_ < 0 ? -r : r;
}

double BigInt::log2_abs() const {
    if (limbs_.empty()) throw std::domain_error("log2 of zero");
    std::size_t k = limbs_.size();
    double top = static_cast<double>(limbs_[k - 1]);
    if (k >= 2) top = top * 18446744073709551616.0 + static_cast<double>(limbs_[k - 2]);
    if (k >= 3) top = top * 18446744073709551616.0 + static_cast<double>(limbs_[k - 3]);
    std::size_t used = std::min<std::size_t>(k, 3);
    return std::log2(top) + 64.0 * static_cast<double>(k - used);
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ >= 0 ? c : -c;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& x = a.size() >= b.size() ? a : b;
    const std::vector<u64>& y = a.size() >= b.size() ? b : a;
    std::vector<u64> r(x.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        u128 s = static_cast<u128>(x[i]) + y[i] + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    for (std::size_t i = y.size(); i < x.size(); ++i) {
        u128 s = static_cast<u128>(x[i]) + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    r[x.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 ai = a[i];
        u64 t = ai - bi;
        u64 borrow2 = ai < bi;
        u64 t2 = t - borrow;
        borrow2 |= t < borrow;
        r[i] = t2;
        borrow = borrow2;
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

namespace {

// schoolbook product into r (r must be zeroed, size an+bn)
void mul_basecase(const u64* a, std::size_t an, const u64* b, std::size_t bn, u64* r) {
    for (std::size_t i = 0; i < an; ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < bn; ++j) {
            u128 cur = static_cast<u128>(ai) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + bn;
        while (carry) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
}

constexpr std::size_t kKaratsubaThreshold = 40;

std::vector<u64> mul_vec(const std::vector<u64>& a, const std::vector<u64>& b);

std::vector<u64> add_shifted(const std::vector<u64>& a, const std::vector<u64>& b,
                             std::size_t shift) {
    // a + (b << 64*shift)
    std::vector<u64> r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        u128 s = static_cast<u128>(r[i + shift]) + b[i] + carry;
        r[i + shift] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    std::size_t k = b.size() + shift;
    while (carry) {
        if (k == r.size()) r.push_back(0);
        u128 s = static_cast<u128>(r[k]) + carry;
        r[k] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
        ++k;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> sub_vec_loose(const std::vector<u64>& a, const std::vector<u64>& b) {
    // a - b, requires a >= b
    std::vector<u64> r(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 ai = a[i];
        u64 t = ai - bi;
        u64 borrow2 = ai < bi;
        u64 t2 = t - borrow;
        borrow2 |= t < borrow;
        r[i] = t2;
        borrow = borrow2;
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> mul_vec(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t an = a.size(), bn = b.size();
    if (std::min(an, bn) < kKaratsubaThreshold) {
        std::vector<u64> r(an + bn, 0);
        mul_basecase(a.data(), an, b.data(), bn, r.data());
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // Karatsuba split at half of the larger operand
    std::size_t h = std::max(an, bn) / 2;
    auto lo = [&](const std::vector<u64>& x) {
        std::vector<u64> v(x.begin(), x.begin() + std::min(h, x.size()));
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto hi = [&](const std::vector<u64>& x) {
        if (x.size() <= h) return std::vector<u64>{};
        return std::vector<u64>(x.begin() + h, x.end());
    };
    std::vector<u64> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<u64> z0 = mul_vec(a0, b0);
    std::vector<u64> z2 = mul_vec(a1, b1);
    std::vector<u64> as = add_shifted(a0, a1, 0);
    std::vector<u64> bs = add_shifted(b0, b1, 0);
    std::vector<u64> z1 = mul_vec(as, bs);
    z1 = sub_vec_loose(z1, z0);
    z1 = sub_vec_loose(z1, z2);
    std::vector<u64> r = z0;
    r = add_shifted(r, z1, h);
    r = add_shifted(r, z2, 2 * h);
    return r;
}

} // namespace

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    return mul_vec(a, b);
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            r.sign_ = o.sign_;
            r.limbs_ = sub_mag(o.limbs_, limbs_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.trim();
    return r;
}

void BigInt::divmod_mag(const std::vector<u64>& a, const std::vector<u64>& b,
                        std::vector<u64>& q, std::vector<u64>& r) {
    assert(!b.empty());
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        u64 d = b[0];
        q.assign(a.size(), 0);
        u128 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u128 cur = (rem << 64) | a[i];
            q[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<u64>(rem));
        return;
    }
    // Knuth algorithm D, base 2^64
    int shift = std::countl_zero(b.back());
    std::size_t n = b.size(), m = a.size() - n;
    std::vector<u64> v(n), u(a.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= b[i - 1] >> (64 - shift);
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        u64 x = a[i] << shift;
        if (shift && i > 0) x |= a[i - 1] >> (64 - shift);
        u[i] = x;
    }
    if (shift) u[a.size()] = a.back() >> (64 - shift);

    q.assign(m + 1, 0);
    const u64 vtop = v[n - 1], vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
        u64 qhat, rhat;
        if (static_cast<u64>(num >> 64) == vtop) {
            qhat = ~static_cast<u64>(0);
        } else {
            qhat = static_cast<u64>(num / vtop);
        }
        rhat = static_cast<u64>(num - static_cast<u128>(qhat) * vtop);
        // refine
        while (num - static_cast<u128>(qhat) * vtop <= ~static_cast<u64>(0) &&
               static_cast<u128>(qhat) * vnext >
                   ((static_cast<u128>(rhat) << 64) | u[j + n - 2])) {
            --qhat;
            u128 nr = static_cast<u128>(rhat) + vtop;
            if (nr >> 64) break;
            rhat = static_cast<u64>(nr);
        }
        // multiply and subtract
        u64 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = static_cast<u128>(qhat) * v[i] + carry;
            carry = static_cast<u64>(p >> 64);
            u64 plo = static_cast<u64>(p);
            u64 cur = u[j + i];
            u64 t = cur - plo;
            u64 b2 = cur < plo;
            u64 t2 = t - borrow;
            b2 |= t < borrow;
            u[j + i] = t2;
            borrow = b2;
        }
        u64 top = u[j + n];
        u64 t = top - carry;
        u64 b2 = top < carry;
        u64 t2 = t - borrow;
        b2 |= t < borrow;
        u[j + n] = t2;
        if (b2) {
            // qhat was one too large: add divisor back
            --qhat;
            u64 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 s = static_cast<u128>(u[j + i]) + v[i] + c;
                u[j + i] = static_cast<u64>(s);
                c = static_cast<u64>(s >> 64);
            }
            u[j + n] += c;
        }
        q[j] = qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            r[i] = (r[i] >> shift) | (r[i + 1] << (64 - shift));
        r[n - 1] >>= shift;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt division by zero");
    if (a.is_zero()) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<u64> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt& BigInt::mul_small(u64 m) {
    if (m == 0 || is_zero()) {
        *this = BigInt();
        return *this;
    }
    u64 carry = 0;
    for (auto& l : limbs_) {
        u128 p = static_cast<u128>(l) * m + carry;
        l = static_cast<u64>(p);
        carry = static_cast<u64>(p >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigInt& BigInt::add_small(u64 m) {
    if (sign_ < 0) {
        *this = *this + from_u64(m);
        return *this;
    }
    if (is_zero()) {
        *this = from_u64(m);
        return *this;
    }
    u64 carry = m;
    for (auto& l : limbs_) {
        u128 s = static_cast<u128>(l) + carry;
        l = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
        if (!carry) break;
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigInt& BigInt::divexact_small(u64 d) {
    assert(d != 0);
    if (is_zero()) return *this;
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    assert(rem == 0);
    trim();
    return *this;
}

BigInt BigInt::operator<<(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    unsigned w = bits / 64, s = bits % 64;
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() + w + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + w] |= s ? (limbs_[i] << s) : limbs_[i];
        if (s) r.limbs_[i + w + 1] |= limbs_[i] >> (64 - s);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator>>(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    unsigned w = bits / 64, s = bits % 64;
    if (w >= limbs_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.begin() + w, limbs_.end());
    if (s) {
        for (std::size_t i = 0; i + 1 < r.limbs_.size(); ++i)
            r.limbs_[i] = (r.limbs_[i] >> s) | (r.limbs_[i + 1] << (64 - s));
        r.limbs_.back() >>= s;
    }
    r.trim();
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.is_zero() ? 0 : 1;
    b.sign_ = b.is_zero() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // binary gcd: strip common twos, then subtract-and-shift
    auto twos = [](const BigInt& x) -> unsigned {
        unsigned t = 0;
        for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
            if (x.limbs_[i] == 0) {
                t += 64;
            } else {
                t += std::countr_zero(x.limbs_[i]);
                break;
            }
        }
        return t;
    };
    unsigned sa = twos(a), sb = twos(b);
    unsigned common = std::min(sa, sb);
    a = a >> sa;
    b = b >> sb;
    while (true) {
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) break;
        if (c < 0) std::swap(a, b);
        a = a - b;
        a = a >> twos(a);
    }
    return a << common;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    constexpr u64 kChunk = 10000000000000000000ull; // 10^19
    std::vector<u64> mag = limbs_;
    std::vector<u64> groups;
    while (!mag.empty()) {
        u128 rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            u128 cur = (rem << 64) | mag[i];
            mag[i] = static_cast<u64>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        groups.push_back(static_cast<u64>(rem));
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        s += std::string(19 - part.size(), '0') + part;
    }
    return s;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt::from_string: empty");
    std::size_t i = 0;
    int sign = 1;
    if (s[0] == '-') {
        sign = -1;
        i = 1;
    } else if (s[0] == '+') {
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt::from_string: no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt::from_string: bad digit");
        r.mul_small(10);
        r.add_small(static_cast<u64>(s[i] - '0'));
        if (!r.limbs_.empty()) r.sign_ = 1;
    }
    if (!r.limbs_.empty()) r.sign_ = sign;
    return r;
}

BigInt BigInt::power(u64 base, u64 exp) {
    BigInt r = 1;
    BigInt b = from_u64(base);
    while (exp) {
        if (exp & 1) r = r * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.divexact_small(i);
    }
    return r;
}

// ---- BigRational ----

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
    reduce();
}

void BigRational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = BigInt::gcd(num_.abs(), den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

bool BigRational::is_integer() const { return den_ == BigInt(1); }

BigRational BigRational::operator-() const {
    BigRational r = *this;
    r.num_ = -r.num_;
    return r;
}

BigRational BigRational::operator+(const BigRational& o) const {
    return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator-(const BigRational& o) const {
    return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator*(const BigRational& o) const {
    return BigRational(num_ * o.num_, den_ * o.den_);
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("BigRational division by zero");
    return BigRational(num_ * o.den_, den_ * o.num_);
}

bool BigRational::operator<(const BigRational& o) const {
    return (num_ * o.den_) < (o.num_ * den_);
}

double BigRational::to_double() const {
    if (num_.is_zero()) return 0.0;
    double l2 = num_.log2_abs() - den_.log2_abs();
    if (l2 > 1020 || l2 < -1020) {
        double r = std::exp2(l2);
        return num_.is_negative() ? -r : r;
    }
    // exact-ish: scale so quotient has ~64 significant bits
    int extra = 64 - static_cast<int>(num_.bit_length()) + static_cast<int>(den_.bit_length());
    if (extra < 0) extra = 0;
    BigInt scaled = (num_ << static_cast<unsigned>(extra)) / den_;
    return std::ldexp(scaled.to_double(), -extra);
}

std::string BigRational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace excycles
