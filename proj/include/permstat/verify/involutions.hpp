#pragma once

#include <vector>

#include "permstat/verify/general.hpp"

namespace permstat::verify {

// Fixed-point-weighted quasisymmetric generating function of involutions as
// the exponential form exp(sum_odd z^m p_m/m + sum_even (z^m-1) p_m/m +
// sum p_m^2/(2m)), degree-graded with x implicit.
inline SymFunc involution_qfix_expform(int N) {
    MultiPoly one = MultiPoly::constant(1);
    SymFunc arg;
    arg.set_trunc(N);
    for (int m = 1; m <= N; ++m) {
        MultiPoly weight = MultiPoly::var(vars::z(), static_cast<uint32_t>(m));
        if (m % 2 == 0) weight -= one;
        arg.add_term(Partition{static_cast<uint32_t>(m)}, RatFunc(weight * rat(1, m)));
        if (2 * m <= N) {
            std::vector<uint32_t> pair(2, static_cast<uint32_t>(m));
            arg.add_term(Partition(std::move(pair)), RatFunc(rat(1, 2 * m)));
        }
    }
    return sym_exp(arg, N);
}

// The same function by plethysm: H[zx e_1 + x^2 e_2].
inline SymFunc involution_qfix_plethystic(int N) {
    SymFunc g = e_in_p(1) * RatFunc(zp()) + e_in_p(2);
    return pleth_H(g, N, std::set<VarId>{vars::z()});
}

// Peak-descent symmetry of involutions in des -> n-1-des, and descent-set
// complementation of the involution descent table.
inline VerifyReport compsym2_check(uint32_t n, const OracleConfig& cfg = {}) {
    Checker ck("thm:compsym2", static_cast<int>(n));
    FamilySpec inv = FamilySpec::involutions();
    MultiPoly I_pkdes =
        oracle_dist(n, inv, {StatProfile::PkDes}, cfg).poly;
    std::map<std::pair<uint32_t, uint32_t>, Rat> joint;
    for (const auto& [m, c] : I_pkdes.terms())
        joint[{m.exp_of(vars::y()), m.exp_of(vars::t())}] += c;
    for (const auto& [key, cnt] : joint) {
        auto it = joint.find({key.first, n + 1 - key.second});
        Rat other = it == joint.end() ? Rat(0) : it->second;
        ck.require(cnt == other, "pk/des symmetry");
    }
    auto table = descent_table(n, inv, cfg);
    for (const auto& [comp, cnt] : table) {
        std::vector<uint32_t> d = descent_set_of(comp), dc;
        for (uint32_t i = 1; i < n; ++i)
            if (std::find(d.begin(), d.end(), i) == d.end()) dc.push_back(i);
        Composition cc = composition_from_descents(dc, n);
        Int other = table.count(cc) ? table.at(cc) : Int(0);
        ck.require(cnt == other, "table complementation");
    }
    return ck.finish();
}

inline std::vector<VerifyReport> involution_suite(uint32_t n, int kmax,
                                                  const OracleConfig& cfg = {}) {
    std::vector<VerifyReport> reports;
    int ni = static_cast<int>(n);
    int prec = ni + 1;
    MultiPoly t = tp(), y = yp(), z = zp(), x = xp();
    MultiPoly one = MultiPoly::constant(1);
    FamilySpec inv = FamilySpec::involutions();

    SymFunc Qfix = family_symfunc(n, inv, FamilyWeight::FixZ);
    SymFunc Qfix_shift = shift_X_plus_1(Qfix);

    MultiPoly I_pkdesfix = oracle_dist(n, inv, {StatProfile::PkDes, true}, cfg).poly;
    MultiPoly I_lpkdesfix = oracle_dist(n, inv, {StatProfile::LpkDes, true}, cfg).poly;
    MultiPoly I_udrfix = oracle_dist(n, inv, {StatProfile::Udr, true}, cfg).poly;
    MultiPoly I_pkfix = oracle_dist(n, inv, {StatProfile::Pk, true}, cfg).poly;
    MultiPoly I_desfix = oracle_dist(n, inv, {StatProfile::Des, true}, cfg).poly;
    MultiPoly I_lpkfix = oracle_dist(n, inv, {StatProfile::Lpk, true}, cfg).poly;
    MultiPoly I_pkdes = I_pkdesfix.eval_at(vars::z(), 1);
    MultiPoly I_pk = I_pkfix.eval_at(vars::z(), 1);
    MultiPoly I_lpk = I_lpkfix.eval_at(vars::z(), 1);
    MultiPoly I_udr = I_udrfix.eval_at(vars::z(), 1);

    {
        Checker ck("eq:QI-routes", ni);
        SymFunc expform = involution_qfix_expform(ni).slice(n);
        SymFunc pleth = involution_qfix_plethystic(ni).slice(n);
        ck.require(expform == pleth, "exp form vs plethysm");
        ck.require(expform == Qfix, "exp form vs Lyndon sum");
        reports.push_back(ck.finish());
    }

    {
        // Theta images against the closed product form, every k.
        Checker ck("thm:Ipkdesfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            auto closed = xs(1 + z * x * y, prec).pow(static_cast<uint32_t>(k)) *
                          xs(1 + x * x * y, prec).pow(static_cast<uint32_t>(k * k)) *
                          xs(1 - z * x, prec).pow_int(-k) *
                          xs(1 - x * x, prec).pow_int(-static_cast<int>(binomial(k, 2).get_si())) *
                          xs(1 - x * x * y * y, prec)
                              .pow_int(-static_cast<int>(binomial(k + 1, 2).get_si()));
            ck.require_equal(theta_raw(Qfix, k), closed.coeff(ni), "k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:Ipkdesfix-oracle", ni, kmax);
        RatFunc lhs = compose_pkdes_lhs(I_pkdesfix, ni);
        std::string where;
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq(Qfix, kmax), kmax, &where),
                   where);
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:Ilpkdesfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            auto closed =
                xs(1 + z * x * y, prec).pow(static_cast<uint32_t>(k)) *
                xs(1 + x * x * y, prec).pow(static_cast<uint32_t>(k * k + k)) *
                xs(1 - z * x, prec).pow_int(-(k + 1)) *
                xs(1 - x * x, prec).pow_int(-static_cast<int>(binomial(k + 1, 2).get_si())) *
                xs(1 - x * x * y * y, prec)
                    .pow_int(-static_cast<int>(binomial(k + 1, 2).get_si()));
            ck.require_equal(theta_raw(Qfix_shift, k), closed.coeff(ni), "k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:Ilpkdesfix-oracle", ni, kmax);
        RatFunc lhs = compose_lpkdes_lhs(I_lpkdesfix, ni);
        std::string where;
        ck.require(
            matches_t_series(lhs.num(), lhs.den(), theta_seq(Qfix_shift, kmax), kmax, &where),
            where);
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:Iudrfix", ni, kmax);
        for (int k = 0; k <= kmax && ck.passing(); ++k) {
            auto even = xs(1 + z * x, prec).pow(static_cast<uint32_t>(k)) *
                        xs(1 + x * x, prec).pow(static_cast<uint32_t>(k * k)) *
                        xs(1 - z * x, prec).pow_int(-k) *
                        xs(1 - x * x, prec).pow_int(-k * k);
            auto odd = even * xs(1 + x * x, prec).pow(static_cast<uint32_t>(k)) *
                       xs(1 - z * x, prec).pow_int(-1) * xs(1 - x * x, prec).pow_int(-k);
            ck.require_equal(theta_at_y(Qfix, k, Rat(1)), even.coeff(ni),
                             "even k=" + std::to_string(k));
            ck.require_equal(theta_at_y(Qfix_shift, k, Rat(1)), odd.coeff(ni),
                             "odd k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:Iudrfix-oracle", ni, kmax);
        RatFunc lhs = compose_udr_lhs(I_udrfix, ni);
        std::string where;
        ck.require(matches_t_series(lhs.num(), lhs.den(), theta_seq_udr(Qfix, Qfix_shift, kmax),
                                    kmax, &where),
                   where);
        reports.push_back(ck.finish());
    }

    // Eulerian-expansion coefficient series.
    MultiPoly w = wp();
    MultiPoly w_half = w * rat(1, 2), w2_quarter = w * w * rat(1, 4);
    auto a_series = exp_log_product(prec, {{w_half, 1 + z * x},
                                           {-w_half, 1 - z * x},
                                           {w2_quarter, 1 + x * x},
                                           {-w2_quarter, 1 - x * x}});
    auto b_series = exp_log_product(
        prec, {{-w, 1 - z * x}, {(w - w * w) * rat(1, 2), 1 - x * x}});
    auto d_series = exp_log_product(prec, {{MultiPoly::constant(rat(-1, 4)), 1 - x * x * x * x},
                                           {w2_quarter, 1 + x * x},
                                           {-w2_quarter, 1 - x * x},
                                           {w_half, 1 + z * x},
                                           {-w_half, 1 - z * x},
                                           {MultiPoly::constant(rat(1, 2)), 1 - x * x},
                                           {MultiPoly::constant(rat(-1, 2)),
                                            1 - z * z * x * x}});
    MultiPoly a_wpoly = a_series.coeff(ni);
    MultiPoly b_wpoly = b_series.coeff(ni);
    MultiPoly d_wpoly = d_series.coeff(ni);

    {
        Checker ck("thm:eul-inv", ni);
        RatFunc lhs_a = compose_pk_lhs(I_pkfix, ni);
        MultiPoly rhs_a = eulerian_combination_num(
            a_wpoly, ni, [](unsigned k) { return eulerian_A(k); }, Rat(2), 1 - t);
        ck.require(lhs_a == RatFunc(rhs_a, (1 - t).pow(n + 1)), "peak side");

        RatFunc lhs_b = compose_des_lhs(I_desfix, ni);
        MultiPoly rhs_b = eulerian_combination_num(
            b_wpoly, ni, [](unsigned k) { return eulerian_A(k); }, Rat(1), 1 - t);
        ck.require(lhs_b == RatFunc(rhs_b, (1 - t).pow(n + 1)), "descent side");
        reports.push_back(ck.finish());
    }

    {
        Checker ck("thm:lpk-fix-B", ni);
        RatFunc lhs = compose_lpk_lhs(I_lpkfix, ni);
        MultiPoly rhs = eulerian_combination_num(
            d_wpoly, ni, [](unsigned k) { return eulerian_B(k); }, Rat(1), 1 - t);
        ck.require(lhs == RatFunc(rhs, (1 - t).pow(n + 1)), "left peak side");
        reports.push_back(ck.finish());
    }

    MultiPoly a1_wpoly = a_wpoly.eval_at(vars::z(), 1);
    MultiPoly b1_wpoly = b_wpoly.eval_at(vars::z(), 1);
    MultiPoly d1_wpoly = d_wpoly.eval_at(vars::z(), 1);

    {
        Checker ck("thm:IudrA", ni);
        MultiPoly t2 = t * t;
        std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
        RatFunc lhs = compose_udr_lhs(I_udr, ni);
        MultiPoly num = eulerian_combination_num(
            a1_wpoly, ni, [&](unsigned k) { return eulerian_A(k).substitute(to_t2); }, Rat(2),
            1 - t2);
        num += t * eulerian_combination_num(
                       d1_wpoly, ni, [&](unsigned k) { return eulerian_B(k).substitute(to_t2); },
                       Rat(1), 1 - t2);
        ck.require(lhs == RatFunc(num, (1 - t2).pow(n + 1)), "rational identity");
        reports.push_back(ck.finish());
    }

    {
        // Q(I_n) = sum over lambda of p_{lambda^2}/z_lambda, and the resulting
        // Eulerian form of the joint peak-descent distribution.
        Checker ck("thm:IpkdesAx", ni);
        SymFunc direct;
        for (const auto& l : partitions_of(n))
            direct.add_term(cycle_type_square(l), RatFunc(rat(Int(1), z_of(l))));
        SymFunc QI_z1;
        for (const auto& [lam, c] : Qfix.terms())
            QI_z1.add_term(lam, RatFunc(c.num().eval_at(vars::z(), 1),
                                        c.den().eval_at(vars::z(), 1)));
        ck.require(QI_z1 == direct, "p_{lambda^2}/z_lambda form");

        RatFunc lhs = compose_pkdes_lhs(I_pkdes, ni);
        RatFunc rhs;
        for (const auto& l : partitions_of(n)) {
            Partition sq = cycle_type_square(l);
            MultiPoly term = eulerian_A(sq.len()) *
                             (1 - t).pow(n - sq.len());
            for (uint32_t part : sq.parts) term *= theta_rule(1, part);
            rhs += RatFunc(term) * RatFunc(Rat(Int(1)) / Rat(z_of(l)));
        }
        rhs = rhs * RatFunc(one, (1 - t).pow(n + 1));
        ck.require(lhs == rhs, "Eulerian form");
        reports.push_back(ck.finish());
    }

    if (ni <= 7) {
        // Combinatorial meaning of n! a_{n,k}(1), n! b_{n,k}(1), n! d_{n,k}(1).
        Checker ck("cor:IpkA-counts", ni);
        struct Counts {
            std::map<uint32_t, Int> no4_by_cycles, by_cycles, by_odd_cycles;
        };
        auto chunks = enumerate_chunks<Counts>(
            n, cfg, [](Counts& local, const uint8_t*, const StatRecord& s) {
                Partition sq = s.ctype_of_square();
                bool no4 = true;
                for (uint32_t i = 4; i <= s.n; i += 4)
                    if (s.nc[i]) no4 = false;
                if (no4) local.no4_by_cycles[sq.len()] += 1;
                local.by_cycles[sq.len()] += 1;
                local.by_odd_cycles[sq.odd_count()] += 1;
            });
        Counts total;
        for (auto& c : chunks) {
            for (auto& [k, v] : c.no4_by_cycles) total.no4_by_cycles[k] += v;
            for (auto& [k, v] : c.by_cycles) total.by_cycles[k] += v;
            for (auto& [k, v] : c.by_odd_cycles) total.by_odd_cycles[k] += v;
        }
        Rat nf = Rat(factorial(n));
        for (uint32_t k = 0; k <= n; ++k) {
            Rat a = a1_wpoly.coeff_of(vars::w(), k).constant_value() * nf;
            Rat b = b1_wpoly.coeff_of(vars::w(), k).constant_value() * nf;
            Rat d = d1_wpoly.coeff_of(vars::w(), k).constant_value() * nf;
            Int ea = total.no4_by_cycles.count(k) ? total.no4_by_cycles[k] : Int(0);
            Int eb = total.by_cycles.count(k) ? total.by_cycles[k] : Int(0);
            Int ed = total.by_odd_cycles.count(k) ? total.by_odd_cycles[k] : Int(0);
            ck.require(a == Rat(ea), "a_{n,k} count at k=" + std::to_string(k));
            ck.require(b == Rat(eb), "b_{n,k} count at k=" + std::to_string(k));
            ck.require(d == Rat(ed), "d_{n,k} count at k=" + std::to_string(k));
        }
        reports.push_back(ck.finish());
    }

    {
        // Peak polynomial of involutions from whole-group peak polynomials;
        // the parity vanishing makes every exponent integral.
        Checker ck("cor:IpkPpk", ni);
        for (int k = 0; k <= ni; ++k)
            if ((ni - k) % 2 == 1)
                ck.require(a1_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k)).is_zero(),
                           "parity of a_{n,k}");
        MultiPoly rhs;
        for (int k = 1; k <= ni; ++k) {
            MultiPoly ak = a1_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k));
            if (ak.is_zero()) continue;
            MultiPoly Ppk =
                oracle_dist(static_cast<uint32_t>(k), FamilySpec::all(), {StatProfile::Pk}, cfg)
                    .poly;
            rhs += ak * (1 - t).pow(static_cast<uint32_t>(ni - k) / 2) * Ppk;
        }
        ck.require_equal(I_pk, rhs, "I^pk from P^pk");
        reports.push_back(ck.finish());
    }

    {
        Checker ck("cor:IlpkPlpk", ni);
        for (int k = 0; k <= ni; ++k)
            if ((ni - k) % 2 == 1)
                ck.require(d1_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k)).is_zero(),
                           "parity of d_{n,k}");
        MultiPoly rhs;
        for (int k = 0; k <= ni; ++k) {
            MultiPoly dk = d1_wpoly.coeff_of(vars::w(), static_cast<uint32_t>(k));
            if (dk.is_zero()) continue;
            MultiPoly Plpk =
                k == 0 ? MultiPoly::constant(1)
                       : oracle_dist(static_cast<uint32_t>(k), FamilySpec::all(),
                                     {StatProfile::Lpk}, cfg)
                             .poly;
            rhs += dk * (1 - t).pow(static_cast<uint32_t>(ni - k) / 2) * Plpk;
        }
        ck.require_equal(I_lpk, rhs, "I^lpk from P^lpk");
        reports.push_back(ck.finish());
    }

    reports.push_back(compsym2_check(n, cfg));

    return reports;
}

}  // namespace permstat::verify
