#pragma once

#include "permstat/eulerian.hpp"
#include "permstat/series.hpp"
#include "permstat/verify/report.hpp"

namespace permstat::verify {

using TSeries = Series<MultiPoly>;

// The algebraic substitution pair behind the peak-descent inversions:
//   P = 2 / (1 + t + sqrt((1+t)^2 - 4yt)),  Q = 2 / (1 - t + sqrt(...)),
//   v = y t P^2,  u = (1-y) t Q^2,
// as t-series with polynomial coefficients in y. Substituting u, v back into
// y = (1+u)^2 v / ((u+v)(1+uv)) and t = (u+v)/(1+uv) recovers (y, t).
struct UVSeries {
    TSeries u, v, P, Q;
    int prec;
};

inline UVSeries uv_series(int prec) {
    if (prec < 2) throw std::invalid_argument("uv_series requires prec >= 2");
    VarId tv = vars::t();
    MultiPoly t = MultiPoly::var(tv), y = MultiPoly::var(vars::y());
    MultiPoly disc = (1 + t) * (1 + t) - 4 * y * t;
    TSeries root = series_from_poly(disc, tv, prec).sqrt();
    TSeries one_plus_t = series_from_poly(1 + t, tv, prec);
    TSeries one_minus_t = series_from_poly(1 - t, tv, prec);
    TSeries P = (one_plus_t + root).inverse().scale(2);
    TSeries Q = (one_minus_t + root).inverse().scale(2);
    TSeries v = series_from_poly(y * t, tv, prec) * P * P;
    TSeries u = series_from_poly((1 - y) * t, tv, prec) * Q * Q;
    return UVSeries{u, v, P, Q, prec};
}

// P = 1 - tP + ytP^2 and the (y, t) round trip, to series precision.
inline VerifyReport uv_roundtrip_check(int prec) {
    Checker ck("eq:uv-roundtrip", -1, -1);
    UVSeries uv = uv_series(prec);
    VarId tv = vars::t();
    MultiPoly t = MultiPoly::var(tv), y = MultiPoly::var(vars::y());

    TSeries tP = series_from_poly(t, tv, prec) * uv.P;
    TSeries ytPP = series_from_poly(y * t, tv, prec) * uv.P * uv.P;
    TSeries one = TSeries::constant(tv, prec, MultiPoly::constant(1));
    ck.require(uv.P == one - tP + ytPP, "P = 1 - tP + ytP^2");

    // Q = P / (1 - tP).
    ck.require(uv.Q * (one - tP) == uv.P, "Q = P/(1 - tP)");

    TSeries one_plus_u = one + uv.u;
    TSeries one_plus_uv = one + uv.u * uv.v;
    TSeries u_plus_v = uv.u + uv.v;
    TSeries lhs_y = series_from_poly(y, tv, prec) * u_plus_v * one_plus_uv;
    TSeries rhs_y = one_plus_u * one_plus_u * uv.v;
    ck.require(lhs_y == rhs_y, "y*(u+v)(1+uv) = (1+u)^2 v");
    TSeries lhs_t = series_from_poly(t, tv, prec) * one_plus_uv;
    ck.require(lhs_t == u_plus_v, "t*(1+uv) = u+v");
    return ck.finish();
}

// P^a Q^b against its explicit double binomial expansion in powers of y, t.
inline VerifyReport lagrange_PQ_check(int a, int b, int prec) {
    Checker ck("eq:lagrangePQ[a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]");
    UVSeries uv = uv_series(prec);
    TSeries lhs = uv.P.pow(static_cast<uint32_t>(a)) * uv.Q.pow(static_cast<uint32_t>(b));
    for (int j = 0; j < prec; ++j) {
        MultiPoly expect;
        for (int i = 0; i <= j; ++i) {
            Int c = binomial(a + b + i + j - 1, i) * binomial(a + j - 1, j - i) -
                    binomial(a + b + i + j - 1, i - 1) * binomial(a + j, j - i);
            if ((j - i) % 2) c = -c;
            if (c != 0) expect += MultiPoly::var(vars::y(), static_cast<uint32_t>(i)) * Rat(c);
        }
        ck.require_equal(lhs.coeff(j), expect, "t^" + std::to_string(j));
    }
    return ck.finish();
}

}  // namespace permstat::verify
