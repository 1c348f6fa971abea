#pragma once

#include <vector>

#include "permstat/verify/general.hpp"

namespace permstat::verify {

// x^n slices of H(zx)/(H(x)(1 - p_1 x)) as an x-graded series of symmetric
// functions: the fixed-point-weighted generating function of S_n.
inline Series<SymFunc> qfix_all_series(int prec) {
    VarId xv = vars::x();
    Series<SymFunc> Hzx(xv, prec), Hx(xv, prec), lin(xv, prec);
    for (int j = 0; j < prec; ++j) {
        Hzx.set_coeff(j, h_in_p(static_cast<uint32_t>(j)) *
                              RatFunc(MultiPoly::var(vars::z(), static_cast<uint32_t>(j))));
        Hx.set_coeff(j, h_in_p(static_cast<uint32_t>(j)));
    }
    lin.set_coeff(0, SymFunc::one());
    lin.set_coeff(1, -SymFunc::p(1));
    return Hzx * (Hx * lin).inverse();
}

// Stembridge and Petersen forms, plus the flag-descent relation: the z = 1
// collapses of the fixed-point expansions.
inline VerifyReport classical_peak_identities(uint32_t n, const OracleConfig& cfg = {}) {
    Checker ck("eq:peak-classics", static_cast<int>(n));
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
    MultiPoly Ppk = oracle_dist(n, FamilySpec::all(), {StatProfile::Pk}, cfg).poly;
    MultiPoly Plpk = oracle_dist(n, FamilySpec::all(), {StatProfile::Lpk}, cfg).poly;
    MultiPoly Pudr = oracle_dist(n, FamilySpec::all(), {StatProfile::Udr}, cfg).poly;

    // A_n(t) = ((1+t)/2)^{n+1} P_n^{pk}(4t/(1+t)^2).
    RatFunc lhs_a = substitute_ratfunc(Ppk, {{vars::t(), arg_pk()}}) *
                    RatFunc((1 + t).pow(n + 1), MultiPoly::constant(rat(1L << (n + 1))));
    ck.require(lhs_a == RatFunc(eulerian_A(n)), "Eulerian from peaks");

    // B_n(t) = (1+t)^n P_n^{lpk}(4t/(1+t)^2).
    RatFunc lhs_b =
        substitute_ratfunc(Plpk, {{vars::t(), arg_pk()}}) * RatFunc((1 + t).pow(n));
    ck.require(lhs_b == RatFunc(eulerian_B(n)), "type B from left peaks");

    // 2^n A_n(t^2) + t B_n(t^2) = ((1+t)^2 (1+t^2)^n / 2) P_n^{udr}(2t/(1+t^2)).
    RatFunc lhs_u = substitute_ratfunc(Pudr, {{vars::t(), arg_udr()}}) *
                    RatFunc((1 + t) * (1 + t) * (1 + t2).pow(n), MultiPoly::constant(2));
    MultiPoly rhs_u = eulerian_A(n).substitute(to_t2) * rat(1L << n) +
                      t * eulerian_B(n).substitute(to_t2);
    ck.require(lhs_u == RatFunc(rhs_u), "flag-descent relation");
    return ck.finish();
}

inline std::vector<VerifyReport> fixpoint_suite(uint32_t n, int kmax,
                                                const OracleConfig& cfg = {}) {
    std::vector<VerifyReport> reports;
    int ni = static_cast<int>(n);
    int prec = ni + 1;
    MultiPoly t = tp(), y = yp(), z = zp(), x = xp();
    FamilySpec all = FamilySpec::all();

    SymFunc Qfix = qfix_all_series(prec).coeff(ni);
    SymFunc Qfix_shift = shift_X_plus_1(Qfix);
    SymFunc Qder;  // derangements: the z = 0 part
    for (const auto& [l, c] : Qfix.terms())
        Qder.add_term(l, RatFunc(c.num().eval_at(vars::z(), 0), c.den().eval_at(vars::z(), 0)));
    SymFunc Qder_shift = shift_X_plus_1(Qder);

    MultiPoly P_pkdesfix = oracle_dist(n, all, {StatProfile::PkDes, true}, cfg).poly;
    MultiPoly P_lpkdesfix = oracle_dist(n, all, {StatProfile::LpkDes, true}, cfg).poly;
    MultiPoly P_udrfix = oracle_dist(n, all, {StatProfile::Udr, true}, cfg).poly;
    MultiPoly P_pkfix = oracle_dist(n, all, {StatProfile::Pk, true}, cfg).poly;
    MultiPoly A_fix = oracle_dist(n, all, {StatProfile::Des, true}, cfg).poly;
    MultiPoly P_lpkfix = oracle_dist(n, all, {StatProfile::Lpk, true}, cfg).poly;

    {
        Checker ck("eq:Qfix-routes", ni);
        ck.require(Qfix == family_symfunc(n, all, FamilyWeight::FixZ),
                   "series inversion vs Lyndon sum");
        ck.require(Qder == family_symfunc(n, FamilySpec::derangements()),
                   "derangement slice vs Lyndon sum");
        reports.push_back(ck.finish());
    }

    {
        // Theta images of Q^fix(S_n) against the closed forms, all k; the
        // z = 0 rows are the derangement statements.
        Checker ck("thm:pkdesfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            MultiPoly kp = MultiPoly::constant(k);
            auto closed = xs(1 + z * x * y, prec).pow(static_cast<uint32_t>(k)) *
                          xs(1 - x, prec).pow(static_cast<uint32_t>(k)) *
                          xs(1 - z * x, prec).pow_int(-k) * xs(1 + x * y, prec).pow_int(-k) *
                          xs(1 - kp * (1 + y) * x, prec).inverse();
            MultiPoly th = theta_raw(Qfix, k);
            ck.require_equal(th, closed.coeff(ni), "k=" + std::to_string(k));
            ck.require_equal(theta_raw(Qder, k), closed.coeff(ni).eval_at(vars::z(), 0),
                             "derangements k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:pkdesfix-oracle", ni, kmax);
        RatFunc lhs = compose_pkdes_lhs(P_pkdesfix, ni);
        std::string where;
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq(Qfix, kmax), kmax, &where),
                   where);
        reports.push_back(ck.finish());
    }

    {
        // y = 1 and y = 0 specializations with and without fixed points.
        Checker ck("cor:pkfixdesfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            MultiPoly kp = MultiPoly::constant(k);
            auto peak = xs(1 + z * x, prec).pow(static_cast<uint32_t>(k)) *
                        xs(1 - x, prec).pow(static_cast<uint32_t>(k)) *
                        xs(1 - z * x, prec).pow_int(-k) * xs(1 + x, prec).pow_int(-k) *
                        xs(1 - 2 * kp * x, prec).inverse();
            ck.require_equal(theta_at_y(Qfix, k, Rat(1)), peak.coeff(ni),
                             "(a) k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qder, k, Rat(1)), peak.coeff(ni).eval_at(vars::z(), 0),
                             "(b) k=" + std::to_string(k));
            auto des = xs(1 - x, prec).pow(static_cast<uint32_t>(k)) *
                       xs(1 - z * x, prec).pow_int(-k) * xs(1 - kp * x, prec).inverse();
            ck.require_equal(theta_at_y(Qfix, k, Rat(0)), des.coeff(ni),
                             "(c) k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qder, k, Rat(0)), des.coeff(ni).eval_at(vars::z(), 0),
                             "(d) k=" + std::to_string(k));
        }
        // Oracle link for the derangement descent polynomial.
        RatFunc lhs = compose_des_lhs(A_fix.eval_at(vars::z(), 0), ni);
        std::string where;
        ck.require(
            matches_t_series(lhs.num(), lhs.den(), theta_seq_at_y(Qder, kmax, Rat(0)), kmax, &where),
            "derangement descents " + where);
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:lpkdesfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            MultiPoly kp = MultiPoly::constant(k);
            auto closed = xs(1 + z * x * y, prec).pow(static_cast<uint32_t>(k)) *
                          xs(1 - x, prec).pow(static_cast<uint32_t>(k + 1)) *
                          xs(1 - z * x, prec).pow_int(-(k + 1)) *
                          xs(1 + x * y, prec).pow_int(-k) *
                          xs(1 - (kp * (1 + y) + 1) * x, prec).inverse();
            ck.require_equal(theta_raw(Qfix_shift, k), closed.coeff(ni),
                             "k=" + std::to_string(k));
            ck.require_equal(theta_raw(Qder_shift, k), closed.coeff(ni).eval_at(vars::z(), 0),
                             "derangements k=" + std::to_string(k));
        }
        RatFunc lhs = compose_lpkdes_lhs(P_lpkdesfix, ni);
        std::string where;
        ck.require(
            matches_t_series(lhs.num(), lhs.den(), theta_seq(Qfix_shift, kmax), kmax, &where),
            where);
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:udrfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            MultiPoly kp = MultiPoly::constant(k);
            auto even = xs(1 + z * x, prec).pow(static_cast<uint32_t>(k)) *
                        xs(1 - x, prec).pow(static_cast<uint32_t>(k)) *
                        xs(1 - z * x, prec).pow_int(-k) * xs(1 + x, prec).pow_int(-k) *
                        xs(1 - 2 * kp * x, prec).inverse();
            auto odd = xs(1 + z * x, prec).pow(static_cast<uint32_t>(k)) *
                       xs(1 - x, prec).pow(static_cast<uint32_t>(k + 1)) *
                       xs(1 - z * x, prec).pow_int(-(k + 1)) * xs(1 + x, prec).pow_int(-k) *
                       xs(1 - (2 * kp + 1) * x, prec).inverse();
            ck.require_equal(theta_at_y(Qfix, k, Rat(1)), even.coeff(ni),
                             "even k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qfix_shift, k, Rat(1)), odd.coeff(ni),
                             "odd k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qder, k, Rat(1)), even.coeff(ni).eval_at(vars::z(), 0),
                             "derangements even k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qder_shift, k, Rat(1)),
                             odd.coeff(ni).eval_at(vars::z(), 0),
                             "derangements odd k=" + std::to_string(k));
        }
        RatFunc lhs = compose_udr_lhs(P_udrfix, ni);
        std::string where;
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq_udr(Qfix, Qfix_shift, kmax),
                                    kmax, &where),
                   where);
        reports.push_back(ck.finish());
    }

    // Eulerian-form coefficient series with the extra 1/(1-wx) marker.
    MultiPoly w = wp();
    MultiPoly w_half = w * rat(1, 2);
    auto a_series = exp_log_product(prec, {{-MultiPoly::constant(1), 1 - w * x},
                                           {w_half, 1 + z * x},
                                           {-w_half, 1 - z * x},
                                           {w_half, 1 - x},
                                           {-w_half, 1 + x}});
    auto b_series = exp_log_product(
        prec, {{-MultiPoly::constant(1), 1 - w * x}, {w, 1 - x}, {-w, 1 - z * x}});
    auto d_series = exp_log_product(prec, {{-MultiPoly::constant(1), 1 - w * x},
                                           {MultiPoly::constant(rat(1, 2)), 1 - x * x},
                                           {MultiPoly::constant(rat(-1, 2)), 1 - z * z * x * x},
                                           {w_half, 1 + z * x},
                                           {-w_half, 1 - z * x},
                                           {w_half, 1 - x},
                                           {-w_half, 1 + x}});
    MultiPoly a_wpoly = a_series.coeff(ni);
    MultiPoly b_wpoly = b_series.coeff(ni);
    MultiPoly d_wpoly = d_series.coeff(ni);

    {
        Checker ck("thm:pkdesfixA", ni);
        RatFunc lhs_a = compose_pk_lhs(P_pkfix, ni);
        MultiPoly rhs_a = eulerian_combination_num(
            a_wpoly, ni, [](unsigned k) { return eulerian_A(k); }, Rat(2), 1 - t);
        ck.require(lhs_a == RatFunc(rhs_a, (1 - t).pow(n + 1)), "peak side");

        RatFunc lhs_b = compose_des_lhs(A_fix, ni);
        MultiPoly rhs_b = eulerian_combination_num(
            b_wpoly, ni, [](unsigned k) { return eulerian_A(k); }, Rat(1), 1 - t);
        ck.require(lhs_b == RatFunc(rhs_b, (1 - t).pow(n + 1)), "descent side");

        ck.require_equal(A_fix.eval_at(vars::z(), 1), eulerian_A(n), "z=1 collapse");
        reports.push_back(ck.finish());
    }

    {
        Checker ck("cor:pkfixPpk", ni);
        for (int k = 0; k <= ni; ++k)
            if ((ni - k) % 2 == 1)
                ck.require(a_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k)).is_zero(),
                           "parity of a_{n,k}(z)");
        MultiPoly rhs;
        for (int k = 1; k <= ni; ++k) {
            MultiPoly ak = a_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k));
            if (ak.is_zero()) continue;
            MultiPoly Ppk =
                oracle_dist(static_cast<uint32_t>(k), all, {StatProfile::Pk}, cfg).poly;
            rhs += ak * (1 - t).pow(static_cast<uint32_t>(ni - k) / 2) * Ppk;
        }
        ck.require_equal(P_pkfix, rhs, "P^{(pk,fix)} from P^pk");
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:lpkfixB", ni);
        RatFunc lhs = compose_lpk_lhs(P_lpkfix, ni);
        MultiPoly rhs = eulerian_combination_num(
            d_wpoly, ni, [](unsigned k) { return eulerian_B(k); }, Rat(1), 1 - t);
        ck.require(lhs == RatFunc(rhs, (1 - t).pow(n + 1)), "left peak side");

        // P^{(lpk,fix)} from the whole-group left peak polynomials.
        for (int k = 0; k <= ni; ++k)
            if ((ni - k) % 2 == 1)
                ck.require(d_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k)).is_zero(),
                           "parity of d_{n,k}(z)");
        MultiPoly sum;
        for (int k = 0; k <= ni; ++k) {
            MultiPoly dk = d_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k));
            if (dk.is_zero()) continue;
            MultiPoly Plpk =
                k == 0 ? MultiPoly::constant(1)
                       : oracle_dist(static_cast<uint32_t>(k), all, {StatProfile::Lpk}, cfg).poly;
            sum += dk * (1 - t).pow(static_cast<uint32_t>(ni - k) / 2) * Plpk;
        }
        ck.require_equal(P_lpkfix, sum, "P^{(lpk,fix)} from P^lpk");
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:udrfixAB", ni);
        MultiPoly t2 = t * t;
        std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
        RatFunc lhs = compose_udr_lhs(P_udrfix, ni);
        MultiPoly num = eulerian_combination_num(
            a_wpoly, ni, [&](unsigned k) { return eulerian_A(k).substitute(to_t2); }, Rat(2),
            1 - t2);
        num += t * eulerian_combination_num(
                       d_wpoly, ni, [&](unsigned k) { return eulerian_B(k).substitute(to_t2); },
                       Rat(1), 1 - t2);
        ck.require(lhs == RatFunc(num, (1 - t2).pow(n + 1)), "rational identity");
        reports.push_back(ck.finish());
    }

    reports.push_back(classical_peak_identities(n, cfg));
    return reports;
}

}  // namespace permstat::verify
