#pragma once

#include <vector>

#include "permstat/verify/general.hpp"

namespace permstat::verify {

// Primitive necklace counts: words over [k] (f), nowhere-zero twisted words
// over +-[k] (g), and blinking necklaces over {0} u +-[k] (h).
inline Rat necklace_f(uint32_t i, int k) {
    Rat s = 0;
    for (uint32_t d : divisors_of(i)) s += Rat(mobius(d)) * Rat(int_pow(Int(k), i / d));
    return s / Rat(i);
}

inline Rat necklace_g(uint32_t i, int k) {
    Rat s = 0;
    for (uint32_t d : divisors_of(i))
        if (d % 2) s += Rat(mobius(d)) * Rat(int_pow(Int(2 * k), i / d));
    return s / Rat(2 * i);
}

inline Rat necklace_h(uint32_t i, int k) {
    if (is_power_of_two(i)) return Rat(int_pow(Int(2 * k + 1), i) - 1) / Rat(2 * i);
    Rat s = 0;
    for (uint32_t d : divisors_of(i))
        if (d % 2) s += Rat(mobius(d)) * Rat(int_pow(Int(2 * k + 1), i / d));
    return s / Rat(2 * i);
}

// The cycle-type generating function's degree-m slices: sum over lambda |- m
// of L_lambda prod z_i^{N_i(lambda)}, x implicit.
inline Series<SymFunc> cycle_type_series(int prec) {
    Series<SymFunc> P(vars::x(), prec);
    P.set_coeff(0, SymFunc::one());
    for (int m = 1; m < prec; ++m)
        P.set_coeff(m, family_symfunc(static_cast<uint32_t>(m), FamilySpec::all(),
                                      FamilyWeight::CycleTypeZ));
    return P;
}

// The same series as the product over cycle lengths i of
// sum_m h_m[L_i] (z_i x^i)^m.
inline Series<SymFunc> cycle_type_series_product(int prec) {
    VarId xv = vars::x();
    Series<SymFunc> acc = Series<SymFunc>::constant(xv, prec, SymFunc::one());
    for (int i = 1; i < prec; ++i) {
        Series<SymFunc> factor(xv, prec);
        for (int m = 0; i * m < prec; ++m) {
            SymFunc hm_Li = plethysm(h_in_p(static_cast<uint32_t>(m)),
                                     lyndon(static_cast<uint32_t>(i)));
            factor.set_coeff(i * m,
                             hm_Li * RatFunc(MultiPoly::var(vars::zi(static_cast<unsigned>(i)),
                                                            static_cast<uint32_t>(m))));
        }
        acc = acc * factor;
    }
    return acc;
}

// exp-product closed form for Theta_{y,k}(P): factors over cycle lengths i
// with inner Mobius sums in (k(1-(-y)^{dm}))^{i/d}; shifted = true inserts
// the +1 of the [X+1] variant.
inline Series<MultiPoly> cycle_type_closed_form(int n, int k, bool shifted) {
    int prec = n + 1;
    Series<MultiPoly> arg(vars::x(), prec);
    for (int i = 1; i <= n; ++i) {
        for (int m = 1; i * m <= n; ++m) {
            MultiPoly inner;
            for (uint32_t d : divisors_of(static_cast<uint32_t>(i))) {
                int mu = mobius(d);
                if (mu == 0) continue;
                MultiPoly base = theta_rule(k, d * static_cast<uint32_t>(m));
                if (shifted) base += MultiPoly::constant(1);
                inner += base.pow(static_cast<uint32_t>(i) / d) * rat(mu);
            }
            MultiPoly coeff = MultiPoly::var(vars::zi(static_cast<unsigned>(i)),
                                             static_cast<uint32_t>(m)) *
                              inner * rat(1, i * m);
            arg.set_coeff(i * m, arg.coeff(i * m) + coeff);
        }
    }
    return arg.exp();
}

inline std::vector<VerifyReport> cycletype_suite(uint32_t n, int kmax,
                                                 const OracleConfig& cfg = {}) {
    std::vector<VerifyReport> reports;
    int ni = static_cast<int>(n);
    int prec = ni + 1;
    MultiPoly t = tp();
    FamilySpec all = FamilySpec::all();

    Series<SymFunc> P = cycle_type_series(prec);
    SymFunc Pn = P.coeff(ni);
    SymFunc Pn_shift = shift_X_plus_1(Pn);

    {
        Checker ck("eq:P-routes", ni);
        Series<SymFunc> prod = cycle_type_series_product(prec);
        for (int m = 0; m <= ni && ck.passing(); ++m)
            ck.require(P.coeff(m) == prod.coeff(m), "x^" + std::to_string(m));
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:pkdesct-a", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k)
            ck.require_equal(theta_raw(Pn, k), cycle_type_closed_form(ni, k, false).coeff(ni),
                             "k=" + std::to_string(k));
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:lpkdesct-a", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k)
            ck.require_equal(theta_raw(Pn_shift, k),
                             cycle_type_closed_form(ni, k, true).coeff(ni),
                             "k=" + std::to_string(k));
        reports.push_back(ck.finish());
    }

    {
        // y = 1: the nowhere-zero twisted necklace product.
        Checker ck("thm:pkdesct-b", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            std::vector<std::pair<MultiPoly, MultiPoly>> factors;
            for (int i = 1; i <= ni; ++i) {
                MultiPoly zi_xi = MultiPoly::var(vars::zi(static_cast<unsigned>(i))) *
                                  MultiPoly::var(vars::x(), static_cast<uint32_t>(i));
                MultiPoly g = MultiPoly::constant(necklace_g(static_cast<uint32_t>(i), k));
                factors.push_back({g, 1 + zi_xi});
                factors.push_back({-g, 1 - zi_xi});
            }
            ck.require_equal(theta_at_y(Pn, k, Rat(1)),
                             exp_log_product(prec, factors).coeff(ni),
                             "k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        // y = 0: the primitive necklace product.
        Checker ck("thm:pkdesct-c", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            std::vector<std::pair<MultiPoly, MultiPoly>> factors;
            for (int i = 1; i <= ni; ++i) {
                MultiPoly zi_xi = MultiPoly::var(vars::zi(static_cast<unsigned>(i))) *
                                  MultiPoly::var(vars::x(), static_cast<uint32_t>(i));
                factors.push_back(
                    {MultiPoly::constant(-necklace_f(static_cast<uint32_t>(i), k)), 1 - zi_xi});
            }
            ck.require_equal(theta_at_y(Pn, k, Rat(0)),
                             exp_log_product(prec, factors).coeff(ni),
                             "k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        // y = 1 of the shifted series: blinking necklaces with the z_1 marker.
        Checker ck("thm:lpkdesct-b", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            std::vector<std::pair<MultiPoly, MultiPoly>> factors;
            factors.push_back({MultiPoly::constant(-1),
                               1 - MultiPoly::var(vars::zi(1)) * MultiPoly::var(vars::x())});
            for (int i = 1; i <= ni; ++i) {
                MultiPoly zi_xi = MultiPoly::var(vars::zi(static_cast<unsigned>(i))) *
                                  MultiPoly::var(vars::x(), static_cast<uint32_t>(i));
                MultiPoly h = MultiPoly::constant(necklace_h(static_cast<uint32_t>(i), k));
                factors.push_back({h, 1 + zi_xi});
                factors.push_back({-h, 1 - zi_xi});
            }
            ck.require_equal(theta_at_y(Pn_shift, k, Rat(1)),
                             exp_log_product(prec, factors).coeff(ni),
                             "k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        // Necklace counts are integers with the expected small values, and the
        // power-of-two branch of h is the even-divisor Mobius correction.
        Checker ck("eq:necklace-fgh", ni, kmax);
        for (uint32_t i = 1; i <= 12; ++i) {
            for (int k = 0; k <= kmax; ++k) {
                Rat f = necklace_f(i, k), g = necklace_g(i, k), h = necklace_h(i, k);
                ck.require(f.get_den() == 1 && f >= 0, "f integrality");
                ck.require(g.get_den() == 1 && g >= 0, "g integrality");
                ck.require(h.get_den() == 1 && h >= 0, "h integrality");
                if (i == 1) {
                    ck.require(f == Rat(k) && g == Rat(k) && h == Rat(k), "i=1 values");
                }
                // Unified form of h via the even-divisor Mobius sum.
                Rat s = 0;
                for (uint32_t d : divisors_of(i))
                    if (d % 2) s += Rat(mobius(d)) * Rat(int_pow(Int(2 * k + 1), i / d));
                if (is_power_of_two(i)) s -= 1;
                ck.require(h == s / Rat(2 * i), "h branch consistency");
            }
        }
        ck.require(necklace_f(2, 2) == Rat(1), "f_{2,2}");
        reports.push_back(ck.finish());
    }

    {
        // Transformed-argument comparison against the oracle cycle-type
        // distribution polynomials.
        Checker ck("thm:cycletype-oracle", ni, kmax);
        std::string where;

        MultiPoly F_pkdes = oracle_dist(n, all, {StatProfile::PkDes, false, true}, cfg).poly;
        RatFunc lhs = compose_pkdes_lhs(F_pkdes, ni);
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq(Pn, kmax), kmax, &where),
                   "pkdes " + where);

        MultiPoly F_lpkdes = oracle_dist(n, all, {StatProfile::LpkDes, false, true}, cfg).poly;
        lhs = compose_lpkdes_lhs(F_lpkdes, ni);
        ck.require(
            matches_t_series(lhs.num(), lhs.den(), theta_seq(Pn_shift, kmax), kmax, &where),
            "lpkdes " + where);

        MultiPoly F_pk = oracle_dist(n, all, {StatProfile::Pk, false, true}, cfg).poly;
        lhs = compose_pk_lhs(F_pk, ni);
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq_at_y(Pn, kmax, Rat(1)), kmax,
                                    &where),
                   "pk " + where);

        MultiPoly F_lpk = oracle_dist(n, all, {StatProfile::Lpk, false, true}, cfg).poly;
        lhs = compose_lpk_lhs(F_lpk, ni);
        ck.require(matches_t_series(lhs.num(), lhs.den(),
                                    theta_seq_at_y(Pn_shift, kmax, Rat(1)), kmax, &where),
                   "lpk " + where);

        MultiPoly F_des = oracle_dist(n, all, {StatProfile::Des, false, true}, cfg).poly;
        lhs = compose_des_lhs(F_des, ni);
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq_at_y(Pn, kmax, Rat(0)), kmax,
                                    &where),
                   "des " + where);

        MultiPoly F_udr = oracle_dist(n, all, {StatProfile::Udr, false, true}, cfg).poly;
        lhs = compose_udr_lhs(F_udr, ni);
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq_udr(Pn, Pn_shift, kmax), kmax,
                                    &where),
                   "udr " + where);
        reports.push_back(ck.finish());
    }

    return reports;
}

}  // namespace permstat::verify
