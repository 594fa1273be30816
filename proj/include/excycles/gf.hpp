#pragma once

#include "excycles/fixed_real.hpp"
#include "excycles/series.hpp"

#include <vector>

namespace excycles {

struct TreePoint {
    Fixed r; // solution of R = z e^R on the principal branch
    Fixed t; // T = R - R^2/2
};

/// Evaluates the tree functions at a point of [0, 1/e]. Newton from R0 = z
/// with a bisection fallback; the residual |R - z e^R| is certified below
/// 1e-25 before returning.
TreePoint tree_function_point(const Fixed& z);

/// p_k = exp(-T(1/(2^k e))), the limiting connectivity probability.
Fixed connectivity_constant(int k);

/// c_k = 1 / (2^binom(k+1,2) e^k k!), k >= 1.
Fixed apex_constant(int k);

struct GfConstants {
    Fixed x;     // root of S(x) = 1 in (0, 1/2)
    Fixed r;     // preimage with R(r) = x, i.e. r = x e^{-x}
    Fixed gamma; // 1/r
    Fixed c;     // x/2
    Fixed residual_s; // |S(x) - 1|
    Fixed residual_r; // |R(r) - x|
};

GfConstants wheel_constants();

/// S(p) = 2 p e^{p/(1-p)} evaluated in high precision.
Fixed spider_point(const Fixed& p);

/// Horner evaluation of a rational series at a high-precision point.
Fixed evaluate_series(const RationalSeries& s, const Fixed& z);

/// The four wheel-pipeline series, exact to the requested order:
/// hplus = C(S), h = hplus minus the hairy cycles with fewer than three
/// special rim vertices, wplus = R * C(S(R)), w = R * h(R).
struct WheelSeriesSet {
    int order = 0;
    RationalSeries hplus, h, wplus, w;
    WheelSeriesSet(int n) : order(n), hplus(n), h(n), wplus(n), w(n) {}
};

WheelSeriesSet wheel_series(int order);

} // namespace excycles
