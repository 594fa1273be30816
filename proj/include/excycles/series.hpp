#pragma once

#include "excycles/bigint.hpp"

#include <vector>

namespace excycles {

/// Truncated power series with exact rational coefficients. The truncation
/// order is fixed at construction; all arithmetic stays at that order and
/// mixed-order operands are rejected rather than silently truncated.
class RationalSeries {
public:
    explicit RationalSeries(int order);
    static RationalSeries zero(int order) { return RationalSeries(order); }
    static RationalSeries one(int order);
    static RationalSeries z(int order);
    static RationalSeries from_coeffs(std::vector<BigRational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BigRational& coeff(int n) const { return c_[n]; }
    void set_coeff(int n, BigRational v) { c_[n] = std::move(v); }
    /// n! [z^n], the labeled count when the series is an EGF.
    BigRational egf_count(int n) const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries scale(const BigRational& s) const;

    /// f(g(z)); requires g(0) = 0.
    RationalSeries compose(const RationalSeries& inner) const;
    /// e^f; requires f(0) = 0.
    RationalSeries exp_series() const;
    /// ln f; requires f(0) = 1 (a positive non-1 constant term would force an
    /// irrational constant, a nonpositive one is outside the domain).
    RationalSeries log_series() const;
    RationalSeries derivative() const;

    bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

    // named series of the toolkit
    static RationalSeries tree_root(int order); // R: sum n^(n-1) z^n / n!
    static RationalSeries tree_egf(int order);  // T: sum n^(n-2) z^n / n!
    static RationalSeries spider(int order);    // S = 2 z e^(z/(1-z))
    static RationalSeries cycle_egf(int order); // C = -ln(1-z)/2 - z/2 - z^2/4

private:
    std::vector<BigRational> c_;
    void check_same_order(const RationalSeries& o) const;
};

namespace detail {

/// EGF with integer scaled coefficients c[n] = n! [z^n] F. All recurrences
/// below (product, exp, log, division) close over the integers, which keeps
/// order-400 pipelines exact without per-coefficient gcd work.
struct Egf {
    std::vector<BigInt> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

class EgfAlgebra {
public:
    explicit EgfAlgebra(int order);
    int order() const { return n_; }

    Egf zero() const;
    Egf one() const;
    Egf z() const;
    Egf geometric() const;        // 1/(1-z): c[n] = n!
    Egf shifted_geometric() const; // z/(1-z): c[n] = n! for n >= 1

    Egf add(const Egf& a, const Egf& b) const;
    Egf sub(const Egf& a, const Egf& b) const;
    Egf scale_int(const Egf& a, long long s) const;
    Egf mul(const Egf& a, const Egf& b) const;
    Egf exp_of(const Egf& g) const;  // g.c[0] == 0
    Egf log_of(const Egf& g) const;  // g.c[0] == 1
    Egf div(const Egf& u, const Egf& v) const; // v.c[0] == 1

    const BigInt& binom(int n, int k) const { return binom_[n][k]; }

private:
    int n_;
    std::vector<std::vector<BigInt>> binom_;
};

} // namespace detail

} // namespace excycles
