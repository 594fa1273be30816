#include "excycles/gf.hpp"

#include <stdexcept>

namespace excycles {

namespace {

// |residual| must end below 1e-25; with 256 fractional bits Newton lands
// many orders of magnitude lower
const Fixed& residual_bound() {
    static const Fixed b = Fixed::from_ratio(BigInt(1), BigInt::power(10, 25));
    return b;
}

const Fixed& step_bound() {
    static const Fixed b = Fixed::from_mantissa(BigInt(1) << 16); // 2^-240
    return b;
}

} // namespace

TreePoint tree_function_point(const Fixed& z) {
    Fixed zero(0);
    Fixed inv_e = Fixed::inv_e();
    if (z < zero || inv_e < z)
        throw std::invalid_argument("tree_function_point: z must lie in [0, 1/e]");
    TreePoint out;
    if (z.is_zero()) {
        out.r = Fixed(0);
        out.t = Fixed(0);
        return out;
    }
    if (z == inv_e) {
        // boundary: R = 1 exactly, T = 1/2 (Newton degenerates, the root is double)
        out.r = Fixed(1);
        out.t = Fixed(1).half_pow(1);
        return out;
    }
    Fixed r = z;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        Fixed er = Fixed::exp(r);
        Fixed g = r - z * er;
        Fixed gp = Fixed(1) - z * er;
        if (gp.abs() < step_bound()) break; // fall through to bisection
        Fixed next = r - g / gp;
        if (next < zero || Fixed(1) < next) break;
        Fixed delta = (next - r).abs();
        r = next;
        if (delta < step_bound()) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        Fixed lo(0), hi(1);
        for (int it = 0; it < 300; ++it) {
            Fixed mid = (lo + hi).half_pow(1);
            Fixed g = mid - z * Fixed::exp(mid);
            if (g.signum() <= 0) lo = mid;
            else hi = mid;
            if ((hi - lo) < step_bound()) break;
        }
        r = (lo + hi).half_pow(1);
    }
    Fixed resid = (r - z * Fixed::exp(r)).abs();
    if (!(resid < residual_bound()))
        throw std::logic_error("tree_function_point: residual certification failed");
    out.r = r;
    out.t = r - (r * r).half_pow(1);
    return out;
}

Fixed connectivity_constant(int k) {
    if (k < 0) throw std::invalid_argument("connectivity_constant: k must be >= 0");
    Fixed z = Fixed::inv_e().half_pow(static_cast<unsigned>(k));
    TreePoint p = tree_function_point(z);
    return Fixed::exp(-p.t);
}

Fixed apex_constant(int k) {
    if (k < 1) throw std::invalid_argument("apex_constant: defined for k >= 1");
    unsigned kk = static_cast<unsigned>(k);
    BigInt two_pow = BigInt(1) << (kk * (kk + 1) / 2);
    BigInt kfact = BigInt::factorial(kk);
    Fixed denom = Fixed::from_ratio(BigInt(1), two_pow * kfact);
    Fixed ek(1);
    for (int i = 0; i < k; ++i) ek = ek * Fixed::e();
    return denom / ek;
}

Fixed spider_point(const Fixed& p) {
    return p.mul_small(2) * Fixed::exp(p / (Fixed(1) - p));
}

GfConstants wheel_constants() {
    GfConstants out;
    // Newton for 2x e^{x/(1-x)} = 1, root bracketed in (0, 1/2)
    Fixed x = Fixed::from_double(0.3);
    for (int it = 0; it < 200; ++it) {
        Fixed one(1);
        Fixed u = x / (one - x);
        Fixed eu = Fixed::exp(u);
        Fixed g = x.mul_small(2) * eu - one;
        Fixed omx = one - x;
        Fixed gp = eu * (Fixed(2) + (x / (omx * omx)).mul_small(2));
        Fixed next = x - g / gp;
        Fixed delta = (next - x).abs();
        x = next;
        if (delta < step_bound()) break;
    }
    if (x.signum() <= 0 || !(x < Fixed(1).half_pow(1)))
        throw std::logic_error("wheel_constants: root escaped (0, 1/2)");
    out.x = x;
    out.r = x * Fixed::exp(-x); // inverts R(r) = x since R = z e^R
    out.gamma = Fixed(1) / out.r;
    out.c = x.half_pow(1);
    out.residual_s = (spider_point(x) - Fixed(1)).abs();
    out.residual_r = (tree_function_point(out.r).r - x).abs();
    if (!(out.residual_s < residual_bound()) || !(out.residual_r < residual_bound()))
        throw std::logic_error("wheel_constants: residual certification failed");
    return out;
}

Fixed evaluate_series(const RationalSeries& s, const Fixed& z) {
    Fixed acc(0);
    for (int i = s.order(); i >= 0; --i) {
        acc = acc * z;
        if (!s.coeff(i).is_zero()) acc += Fixed::from_rational(s.coeff(i));
    }
    return acc;
}

namespace {

RationalSeries from_quarters(const detail::Egf& e) {
    // coefficients are c[n] / (4 n!)
    std::vector<BigRational> coeffs(e.c.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < e.c.size(); ++n) {
        if (n > 0) fact.mul_small(static_cast<std::uint64_t>(n));
        if (!e.c[n].is_zero()) coeffs[n] = BigRational(e.c[n], fact * BigInt(4));
    }
    return RationalSeries::from_coeffs(std::move(coeffs));
}

} // namespace

WheelSeriesSet wheel_series(int order) {
    if (order < 1) throw std::invalid_argument("wheel_series: order must be >= 1");
    using detail::Egf;
    detail::EgfAlgebra a(order);

    // spiders: S = 2 z e^{z/(1-z)}
    Egf spider_inner = a.shifted_geometric();
    Egf e_inner = a.exp_of(spider_inner);
    Egf s = a.zero();
    for (int n = 1; n <= order; ++n) {
        s.c[n] = e_inner.c[n - 1] * BigInt(2 * n); // multiply by z, then by 2
    }

    // rooted trees: R with n! [z^n] = n^{n-1}
    Egf r = a.zero();
    for (int n = 1; n <= order; ++n)
        r.c[n] = BigInt::power(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - 1));

    Egf one = a.one(), zz = a.z();

    // 4*C(S) = -2 ln(1-S) - 2S - S^2
    auto c_of_times4 = [&](const Egf& g) {
        Egf lg = a.log_of(a.sub(one, g));
        return a.sub(a.sub(a.scale_int(lg, -2), a.scale_int(g, 2)), a.mul(g, g));
    };

    Egf hplus4 = c_of_times4(s);

    // 4*C, 2*C', 2*C'' as explicit series in z
    Egf c4 = a.zero(), cp2 = a.zero(), cpp2 = a.zero();
    {
        BigInt fact = 1; // (n-1)! tracked from n = 1
        for (int n = 1; n <= order; ++n) {
            if (n >= 2) fact.mul_small(static_cast<std::uint64_t>(n - 1));
            if (n >= 3) c4.c[n] = fact * BigInt(2);            // 4 n!/(2n) = 2 (n-1)!
            if (n >= 2) cp2.c[n] = fact * BigInt(n);           // n!
            cpp2.c[n] = fact * BigInt(n) * BigInt(n + 1);      // (n+1)!
        }
    }
    Egf smz = a.sub(s, zz);
    Egf h4 = a.sub(a.sub(a.sub(hplus4, c4), a.scale_int(a.mul(cp2, smz), 2)),
                   a.mul(cpp2, a.mul(smz, smz)));

    // substituted versions: f = S(R) = 2 R e^{R/(1-R)}
    Egf f = a.scale_int(a.mul(r, a.exp_of(a.div(r, a.sub(one, r)))), 2);
    Egf cf4 = c_of_times4(f);
    Egf cr4 = c_of_times4(r);
    Egf inv1mr = a.div(one, a.sub(one, r));
    Egf cp2_r = a.sub(a.sub(inv1mr, one), r);              // 2 C'(R)
    Egf cpp2_r = a.sub(a.mul(inv1mr, inv1mr), one);        // 2 C''(R)
    Egf fmr = a.sub(f, r);
    Egf hr4 = a.sub(a.sub(a.sub(cf4, cr4), a.scale_int(a.mul(cp2_r, fmr), 2)),
                    a.mul(cpp2_r, a.mul(fmr, fmr)));

    WheelSeriesSet out(order);
    out.hplus = from_quarters(hplus4);
    out.h = from_quarters(h4);
    out.wplus = from_quarters(a.mul(r, cf4));
    out.w = from_quarters(a.mul(r, hr4));
    return out;
}

} // namespace excycles
