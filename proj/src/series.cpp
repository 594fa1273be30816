#include "excycles/series.hpp"

#include "excycles/enumeration.hpp"

#include <stdexcept>
#include <utility>

namespace excycles {

RationalSeries::RationalSeries(int order) {
    if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, BigRational());
}

RationalSeries RationalSeries::one(int order) {
    RationalSeries s(order);
    s.c_[0] = BigRational(1);
    return s;
}

RationalSeries RationalSeries::z(int order) {
    RationalSeries s(order);
    if (order >= 1) s.c_[1] = BigRational(1);
    return s;
}

RationalSeries RationalSeries::from_coeffs(std::vector<BigRational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("RationalSeries: empty coefficient list");
    RationalSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

BigRational RationalSeries::egf_count(int n) const {
    return c_[n] * BigRational(BigInt::factorial(static_cast<unsigned>(n)));
}

void RationalSeries::check_same_order(const RationalSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("RationalSeries: mixed truncation orders");
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    check_same_order(o);
    RationalSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    check_same_order(o);
    RationalSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    check_same_order(o);
    RationalSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

RationalSeries RationalSeries::scale(const BigRational& s) const {
    RationalSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

RationalSeries RationalSeries::compose(const RationalSeries& inner) const {
    check_same_order(inner);
    if (!inner.c_[0].is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    RationalSeries acc(order());
    for (int i = order(); i >= 0; --i) {
        acc = acc * inner;
        acc.c_[0] += c_[i];
    }
    return acc;
}

RationalSeries RationalSeries::exp_series() const {
    if (!c_[0].is_zero())
        throw std::invalid_argument("exp_series: constant term must be zero");
    RationalSeries h(order());
    h.c_[0] = BigRational(1);
    // h' = f' h
    for (int n = 0; n < order(); ++n) {
        BigRational s;
        for (int i = 0; i <= n; ++i)
            s += c_[i + 1] * BigRational(i + 1) * h.c_[n - i];
        h.c_[n + 1] = s / BigRational(n + 1);
    }
    return h;
}

RationalSeries RationalSeries::log_series() const {
    if (c_[0].signum() <= 0)
        throw std::invalid_argument("log_series: constant term must be positive");
    if (c_[0] != BigRational(1))
        throw std::invalid_argument("log_series: constant term must be exactly 1 to stay rational");
    RationalSeries h(order());
    // f h' = f'
    for (int n = 0; n < order(); ++n) {
        BigRational s = c_[n + 1] * BigRational(n + 1);
        for (int i = 1; i <= n; ++i)
            s -= c_[i] * BigRational(n + 1 - i) * h.c_[n + 1 - i];
        h.c_[n + 1] = s / BigRational(n + 1);
    }
    return h;
}

RationalSeries RationalSeries::derivative() const {
    RationalSeries r(order());
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * BigRational(i);
    return r;
}

RationalSeries RationalSeries::tree_root(int order) {
    RationalSeries s(order);
    BigInt fact = 1;
    for (int n = 1; n <= order; ++n) {
        fact.mul_small(static_cast<std::uint64_t>(n));
        s.c_[n] = BigRational(BigInt::power(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - 1)), fact);
    }
    return s;
}

RationalSeries RationalSeries::tree_egf(int order) {
    RationalSeries s(order);
    BigInt fact = 1;
    for (int n = 1; n <= order; ++n) {
        fact.mul_small(static_cast<std::uint64_t>(n));
        s.c_[n] = BigRational(tree_count(n), fact);
    }
    return s;
}

RationalSeries RationalSeries::spider(int order) {
    // 2 z e^(z/(1-z))
    RationalSeries inner(order);
    for (int n = 1; n <= order; ++n) inner.c_[n] = BigRational(1);
    RationalSeries e = inner.exp_series();
    RationalSeries s(order);
    for (int n = 1; n <= order; ++n) s.c_[n] = e.c_[n - 1] * BigRational(2);
    return s;
}

RationalSeries RationalSeries::cycle_egf(int order) {
    RationalSeries s(order);
    for (int n = 3; n <= order; ++n) s.c_[n] = BigRational(BigInt(1), BigInt(2 * n));
    return s;
}

// ---- integer EGF algebra ----

namespace detail {

EgfAlgebra::EgfAlgebra(int order) : n_(order) {
    if (order < 0) throw std::invalid_argument("EgfAlgebra: negative order");
    binom_.resize(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        binom_[n].resize(static_cast<std::size_t>(n) + 1);
        binom_[n][0] = 1;
        binom_[n][n] = 1;
        for (int k = 1; k < n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + binom_[n - 1][k];
    }
}

Egf EgfAlgebra::zero() const {
    Egf e;
    e.c.assign(static_cast<std::size_t>(n_) + 1, BigInt());
    return e;
}

Egf EgfAlgebra::one() const {
    Egf e = zero();
    e.c[0] = 1;
    return e;
}

Egf EgfAlgebra::z() const {
    Egf e = zero();
    if (n_ >= 1) e.c[1] = 1;
    return e;
}

Egf EgfAlgebra::geometric() const {
    Egf e = zero();
    BigInt fact = 1;
    e.c[0] = 1;
    for (int n = 1; n <= n_; ++n) {
        fact.mul_small(static_cast<std::uint64_t>(n));
        e.c[n] = fact;
    }
    return e;
}

Egf EgfAlgebra::shifted_geometric() const {
    Egf e = geometric();
    e.c[0] = BigInt();
    return e;
}

Egf EgfAlgebra::add(const Egf& a, const Egf& b) const {
    Egf r = zero();
    for (int i = 0; i <= n_; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Egf EgfAlgebra::sub(const Egf& a, const Egf& b) const {
    Egf r = zero();
    for (int i = 0; i <= n_; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Egf EgfAlgebra::scale_int(const Egf& a, long long s) const {
    Egf r = zero();
    for (int i = 0; i <= n_; ++i) r.c[i] = a.c[i] * BigInt(s);
    return r;
}

Egf EgfAlgebra::mul(const Egf& a, const Egf& b) const {
    Egf r = zero();
    for (int n = 0; n <= n_; ++n) {
        BigInt s;
        for (int i = 0; i <= n; ++i) {
            if (a.c[i].is_zero() || b.c[n - i].is_zero()) continue;
            s += binom_[n][i] * a.c[i] * b.c[n - i];
        }
        r.c[n] = std::move(s);
    }
    return r;
}

Egf EgfAlgebra::exp_of(const Egf& g) const {
    if (!g.c[0].is_zero()) throw std::invalid_argument("EgfAlgebra::exp_of: g(0) must be 0");
    Egf f = zero();
    f.c[0] = 1;
    for (int n = 0; n < n_; ++n) {
        BigInt s;
        for (int i = 0; i <= n; ++i) {
            if (g.c[i + 1].is_zero() || f.c[n - i].is_zero()) continue;
            s += binom_[n][i] * g.c[i + 1] * f.c[n - i];
        }
        f.c[n + 1] = std::move(s);
    }
    return f;
}

Egf EgfAlgebra::log_of(const Egf& g) const {
    if (g.c[0] != BigInt(1)) throw std::invalid_argument("EgfAlgebra::log_of: g(0) must be 1");
    Egf h = zero();
    for (int n = 0; n < n_; ++n) {
        BigInt s = g.c[n + 1];
        for (int i = 1; i <= n; ++i) {
            if (g.c[i].is_zero() || h.c[n + 1 - i].is_zero()) continue;
            s -= binom_[n][i] * g.c[i] * h.c[n + 1 - i];
        }
        h.c[n + 1] = std::move(s);
    }
    return h;
}

Egf EgfAlgebra::div(const Egf& u, const Egf& v) const {
    if (v.c[0] != BigInt(1)) throw std::invalid_argument("EgfAlgebra::div: v(0) must be 1");
    Egf q = zero();
    for (int n = 0; n <= n_; ++n) {
        BigInt s = u.c[n];
        for (int i = 1; i <= n; ++i) {
            if (v.c[i].is_zero() || q.c[n - i].is_zero()) continue;
            s -= binom_[n][i] * v.c[i] * q.c[n - i];
        }
        q.c[n] = std::move(s);
    }
    return q;
}

} // namespace detail

} // namespace excycles
