#pragma once

#include <random>
#include <vector>

#include "permstat/perms.hpp"
#include "permstat/symfunc.hpp"
#include "permstat/verify/general.hpp"
#include "permstat/verify/report.hpp"
#include "permstat/verify/uv.hpp"

namespace permstat::verify {

// --- graded geometric inverse with cleared denominators ------------------------

// Slices of (1 - tau*G)^{-1}, cleared: slice_n = P_n / (1-tau)^{n+1} with
// polynomial P_n, via P_n = tau * sum_{j>=1} G_j P_{n-j} (1-tau)^{j-1}.
inline std::vector<SymFunc> cleared_geom_inverse(const std::vector<SymFunc>& G,
                                                 const MultiPoly& tau) {
    if (G.empty() || !(G[0] == SymFunc::one()))
        throw std::logic_error("geometric inverse requires G_0 = 1");
    MultiPoly one_minus_tau = MultiPoly::constant(1) - tau;
    std::vector<SymFunc> P(G.size());
    P[0] = SymFunc::one();
    for (size_t n = 1; n < G.size(); ++n) {
        SymFunc acc;
        MultiPoly pw = tau;  // tau * (1-tau)^{j-1}
        for (size_t j = 1; j <= n; ++j) {
            acc += G[j] * P[n - j] * RatFunc(pw);
            pw = pw * one_minus_tau;
        }
        P[n] = acc;
    }
    return P;
}

// Numerators of F(x) * (1 - tau*G)^{-1} over (1-tau)^{n+1}.
inline std::vector<SymFunc> front_multiplied(const std::vector<SymFunc>& F,
                                             const std::vector<SymFunc>& P,
                                             const MultiPoly& tau) {
    MultiPoly one_minus_tau = MultiPoly::constant(1) - tau;
    std::vector<SymFunc> num(P.size());
    for (size_t n = 0; n < P.size(); ++n) {
        SymFunc acc;
        MultiPoly pw = MultiPoly::constant(1);
        for (size_t j = 0; j <= n; ++j) {
            if (j < F.size()) acc += F[j] * P[n - j] * RatFunc(pw);
            pw = pw * one_minus_tau;
        }
        num[n] = acc;
    }
    return num;
}

// E(yx)H(x) slices: sum_j e_j y^j h_{n-j}.
inline std::vector<SymFunc> EyH_slices(int N, const MultiPoly& yweight) {
    std::vector<SymFunc> G(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        SymFunc s;
        for (int j = 0; j <= n; ++j)
            s += e_in_p(static_cast<uint32_t>(j)) * RatFunc(yweight.pow(static_cast<uint32_t>(j))) *
                 h_in_p(static_cast<uint32_t>(n - j));
        G[n] = s;
    }
    return G;
}

// --- ribbon expansions ----------------------------------------------------------

// 1/(1 - tE(yx)H(x)) expanded over ribbons with pk and des exponents.
inline VerifyReport lemma_ribexp_a(int N) {
    Checker ck("lem:ribexp-a", N);
    MultiPoly t = tp(), y = yp();
    auto P = cleared_geom_inverse(EyH_slices(N, y), t);
    for (int n = 1; n <= N && ck.passing(); ++n) {
        SymFunc lhs = P[n] * RatFunc((1 + y) * (y + t).pow(n + 1) * (1 + y * t).pow(n + 1));
        SymFunc rhs;
        for (const auto& L : compositions_of(static_cast<uint32_t>(n))) {
            StatRecord s = comp_stats(L);
            MultiPoly pref = (1 + y).pow(2 * s.pk + 2) * t.pow(s.pk + 1) *
                             (y + t).pow(n + 1 + s.des - s.pk) *
                             (1 + y * t).pow(2 * n - s.pk - s.des);
            rhs += ribbon_in_p(L) * RatFunc(pref);
        }
        ck.require(lhs == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// H(x)/(1 - tE(yx)H(x)) expanded over ribbons with lpk and des exponents.
inline VerifyReport lemma_ribexp_b(int N) {
    Checker ck("lem:ribexp-b", N);
    MultiPoly t = tp(), y = yp();
    auto P = cleared_geom_inverse(EyH_slices(N, y), t);
    std::vector<SymFunc> F(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) F[n] = h_in_p(static_cast<uint32_t>(n));
    auto num = front_multiplied(F, P, t);
    for (int n = 1; n <= N && ck.passing(); ++n) {
        SymFunc lhs = num[n] * RatFunc((y + t).pow(n) * (1 + y * t).pow(n));
        SymFunc rhs;
        for (const auto& L : compositions_of(static_cast<uint32_t>(n))) {
            StatRecord s = comp_stats(L);
            MultiPoly pref = (1 + y).pow(2 * s.lpk) * t.pow(s.lpk) *
                             (y + t).pow(n + s.des - s.lpk) *
                             (1 + y * t).pow(2 * n - s.lpk - s.des);
            rhs += ribbon_in_p(L) * RatFunc(pref);
        }
        ck.require(lhs == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// (1 + tH(x))/(1 - t^2 E(x)H(x)) expanded over ribbons with udr exponents.
inline VerifyReport lemma_ribexp_c(int N) {
    Checker ck("lem:ribexp-c", N);
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    auto P = cleared_geom_inverse(EyH_slices(N, MultiPoly::constant(1)), t2);
    std::vector<SymFunc> F(static_cast<size_t>(N) + 1);
    F[0] = SymFunc::scalar(RatFunc(1 + t));
    for (int n = 1; n <= N; ++n) F[n] = h_in_p(static_cast<uint32_t>(n)) * RatFunc(t);
    auto num = front_multiplied(F, P, t2);
    for (int n = 1; n <= N && ck.passing(); ++n) {
        SymFunc lhs = num[n] * Rat(2);
        SymFunc rhs;
        for (const auto& L : compositions_of(static_cast<uint32_t>(n))) {
            StatRecord s = comp_stats(L);
            MultiPoly pref = (1 + t2).pow(n - s.udr) * t.pow(s.udr) * (1 + t) * (1 + t) *
                             rat(1L << s.udr);
            rhs += ribbon_in_p(L) * RatFunc(pref);
        }
        ck.require(lhs == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// --- power sum expansions --------------------------------------------------------

inline VerifyReport lemma_psexp_a(int N) {
    Checker ck("lem:psexp-a", N);
    MultiPoly t = tp(), y = yp();
    auto P = cleared_geom_inverse(EyH_slices(N, y), t);
    for (int n = 0; n <= N && ck.passing(); ++n) {
        SymFunc rhs;
        for (const auto& l : partitions_of(static_cast<uint32_t>(n))) {
            MultiPoly c = eulerian_A(l.len()) *
                          (1 - t).pow(static_cast<uint32_t>(n) - l.len());
            for (uint32_t part : l.parts) c *= theta_rule(1, part);
            rhs.add_term(l, RatFunc(c) * RatFunc(Rat(Int(1)) / Rat(z_of(l))));
        }
        ck.require(P[n] == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

inline VerifyReport lemma_psexp_b(int N) {
    Checker ck("lem:psexp-b", N);
    MultiPoly t = tp();
    auto P = cleared_geom_inverse(EyH_slices(N, MultiPoly::constant(1)), t);
    std::vector<SymFunc> F(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) F[n] = h_in_p(static_cast<uint32_t>(n));
    auto num = front_multiplied(F, P, t);
    for (int n = 0; n <= N && ck.passing(); ++n) {
        SymFunc rhs;
        for (const auto& l : partitions_of(static_cast<uint32_t>(n))) {
            MultiPoly c = eulerian_B(l.odd_count()) *
                          (1 - t).pow(static_cast<uint32_t>(n) - l.odd_count());
            rhs.add_term(l, RatFunc(c) * RatFunc(Rat(Int(1)) / Rat(z_of(l))));
        }
        ck.require(num[n] == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

inline VerifyReport lemma_psexp_c(int N) {
    Checker ck("lem:psexp-c", N);
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
    auto P = cleared_geom_inverse(EyH_slices(N, MultiPoly::constant(1)), t2);
    std::vector<SymFunc> F(static_cast<size_t>(N) + 1);
    F[0] = SymFunc::scalar(RatFunc(1 + t));
    for (int n = 1; n <= N; ++n) F[n] = h_in_p(static_cast<uint32_t>(n)) * RatFunc(t);
    auto num = front_multiplied(F, P, t2);
    for (int n = 0; n <= N && ck.passing(); ++n) {
        SymFunc rhs;
        for (const auto& l : partitions_of(static_cast<uint32_t>(n))) {
            MultiPoly c;
            if (l.odd_count() == l.len())
                c += eulerian_A(l.len()).substitute(to_t2) *
                     (1 - t2).pow(static_cast<uint32_t>(n) - l.len()) * rat(1L << l.len());
            c += t * eulerian_B(l.odd_count()).substitute(to_t2) *
                 (1 - t2).pow(static_cast<uint32_t>(n) - l.odd_count());
            rhs.add_term(l, RatFunc(c) * RatFunc(Rat(Int(1)) / Rat(z_of(l))));
        }
        ck.require(num[n] == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// --- double descents and biruns ---------------------------------------------------

// H(tx)/(1 - t^2 E(x)H(tx)) over ribbons with ddes exponents.
inline VerifyReport eq_dd(int N) {
    Checker ck("eq:dd", N);
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    std::vector<SymFunc> G(static_cast<size_t>(N) + 1), F(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        SymFunc s;
        for (int j = 0; j <= n; ++j)
            s += e_in_p(static_cast<uint32_t>(j)) * h_in_p(static_cast<uint32_t>(n - j)) *
                 RatFunc(t.pow(static_cast<uint32_t>(n - j)));
        G[n] = s;
        F[n] = h_in_p(static_cast<uint32_t>(n)) * RatFunc(t.pow(static_cast<uint32_t>(n)));
    }
    auto num = front_multiplied(F, cleared_geom_inverse(G, t2), t2);
    MultiPoly core = t2 - t + 1;
    for (int n = 1; n <= N && ck.passing(); ++n) {
        SymFunc lhs = num[n] * RatFunc((1 - t).pow(n));
        SymFunc rhs;
        for (const auto& L : compositions_of(static_cast<uint32_t>(n))) {
            StatRecord s = comp_stats(L);
            rhs += ribbon_in_p(L) *
                   RatFunc(t.pow(static_cast<uint32_t>(n) - s.ddes) * core.pow(s.ddes) *
                           (1 - t2).pow(n));
        }
        ck.require(lhs == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// (2 + tH(x) + tE(x))/(1 - t^2 E(x)H(x)) over ribbons with birun exponents.
inline VerifyReport eq_biruns(int N) {
    Checker ck("eq:biruns", N);
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    std::vector<SymFunc> F(static_cast<size_t>(N) + 1);
    F[0] = SymFunc::scalar(RatFunc(2 + 2 * t));
    for (int n = 1; n <= N; ++n)
        F[n] = (h_in_p(static_cast<uint32_t>(n)) + e_in_p(static_cast<uint32_t>(n))) * RatFunc(t);
    auto num =
        front_multiplied(F, cleared_geom_inverse(EyH_slices(N, MultiPoly::constant(1)), t2), t2);

    // x^1 coefficient: 2t/(1-t)^2 h_1.
    ck.require(num[1] == h_in_p(1) * RatFunc(2 * t * (1 + t) * (1 + t)), "x^1");
    for (int n = 2; n <= N && ck.passing(); ++n) {
        SymFunc lhs = num[n] * Rat(2);
        SymFunc rhs;
        for (const auto& L : compositions_of(static_cast<uint32_t>(n))) {
            StatRecord s = comp_stats(L);
            rhs += ribbon_in_p(L) * RatFunc((1 + t).pow(4) * (1 + t2).pow(n - 1 - s.br) *
                                            t.pow(s.br) * rat(1L << s.br));
        }
        ck.require(lhs == rhs, "x^" + std::to_string(n));
    }
    return ck.finish();
}

// --- plethysm lemmas ----------------------------------------------------------------

namespace detail {

inline SymFunc random_positive_symfunc(std::mt19937& rng, int max_deg, bool with_vars) {
    std::uniform_int_distribution<int> coeff(-3, 3), deg(1, max_deg), nterms(1, 3), ve(0, 1);
    SymFunc f;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        auto parts = partitions_of(static_cast<uint32_t>(deg(rng)));
        std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
        int c = coeff(rng);
        if (c == 0) c = 2;
        MultiPoly weight = MultiPoly::constant(rat(c, 1 + (i % 2)));
        if (with_vars && ve(rng))
            weight *= MultiPoly::var(vars::t(), static_cast<uint32_t>(ve(rng)) + 1);
        f.add_term(parts[pick(rng)], RatFunc(weight));
    }
    return f;
}

}  // namespace detail

// H[f+g] = H[f]H[g]; H[mf] = H(m)[f]; H[kf] = H[f]^k.
inline VerifyReport lemma_Hps(int N) {
    Checker ck("lem:Hps", N);
    std::mt19937 rng(1109);
    MultiPoly z = zp();
    for (int trial = 0; trial < 6 && ck.passing(); ++trial) {
        SymFunc f = detail::random_positive_symfunc(rng, 3, true);
        SymFunc g = detail::random_positive_symfunc(rng, 3, true);
        ck.require(pleth_H(f + g, N) == pleth_H(f, N) * pleth_H(g, N), "H[f+g]");

        // H[mf] = H(m)[f] with the monic term m = z.
        SymFunc lhs = pleth_H(f * RatFunc(z), N);
        SymFunc rhs;
        rhs.set_trunc(N);
        for (int j = 0; j * std::max(1, f.min_degree()) <= N; ++j)
            rhs += plethysm(h_in_p(static_cast<uint32_t>(j)), f) *
                   RatFunc(z.pow(static_cast<uint32_t>(j)));
        ck.require(lhs == rhs, "H[zf] = H(z)[f]");

        SymFunc Hf = pleth_H(f, N);
        for (int k = -2; k <= 3 && ck.passing(); ++k) {
            SymFunc kf = f * RatFunc(Rat(k));
            ck.require(pleth_H(kf, N) == sym_pow_int(Hf, k, N),
                       "H[kf] = H[f]^k at k=" + std::to_string(k));
        }
    }
    return ck.finish();
}

// H[mX] = H(m); H[-mX] = E(-m); H[m] = 1/(1-m); H(m)[k(1-a)] = (1-ma)^k/(1-m)^k.
inline VerifyReport lemma_HE(int N) {
    Checker ck("lem:HE", N);
    MultiPoly z = zp(), alpha = MultiPoly::var(vars::alpha());

    SymFunc HzX = pleth_H(SymFunc::p(1) * RatFunc(z), N);
    SymFunc HmzX = pleth_H(SymFunc::p(1) * RatFunc(-z), N);
    for (uint32_t n = 0; n <= static_cast<uint32_t>(N); ++n) {
        ck.require(HzX.slice(n) == h_in_p(n) * RatFunc(z.pow(n)), "H[zX] slice");
        MultiPoly mzn = z.pow(n) * rat((n % 2) ? -1 : 1);
        ck.require(HmzX.slice(n) == e_in_p(n) * RatFunc(mzn), "H[-zX] slice");
    }

    // h_n[m] = m^n, so H[m] telescopes to the geometric series 1/(1-m).
    for (uint32_t n = 0; n <= static_cast<uint32_t>(N); ++n) {
        MultiPoly got = p_substitute(h_in_p(n), [&](uint32_t j) { return z.pow(j); });
        ck.require(got == z.pow(n), "h_n[m] = m^n");
    }

    // H(m)[k(1-alpha)] = (1-m alpha)^k / (1-m)^k for m in {z, t^2}, |k| <= 3.
    struct MonicCase {
        VarId var;
        uint32_t exp;
    };
    for (MonicCase mc : {MonicCase{vars::z(), 1}, MonicCase{vars::t(), 2}}) {
        int prec = N * static_cast<int>(mc.exp) + 1;
        MultiPoly m = MultiPoly::var(mc.var, mc.exp);
        for (int k = -3; k <= 3 && ck.passing(); ++k) {
            Series<MultiPoly> rhs =
                series_from_poly(MultiPoly::constant(1) - m * alpha, mc.var, prec).pow_int(k) *
                series_from_poly(MultiPoly::constant(1) - m, mc.var, prec).pow_int(-k);
            for (uint32_t n = 0; mc.exp * n < static_cast<uint32_t>(prec); ++n) {
                MultiPoly lhs = theta_alpha(h_in_p(n), k);
                MultiPoly rhs_n = rhs.coeff(static_cast<int>(mc.exp * n));
                // rhs coefficient is in the substituted variable power m^n.
                ck.require(lhs == rhs_n, "H(m)[k(1-a)] coeff, k=" + std::to_string(k));
            }
            if (mc.exp == 2) {
                for (int j = 1; j < prec && ck.passing(); j += 2)
                    ck.require(rhs.coeff(j).is_zero(), "odd coefficient");
            }
        }
    }
    return ck.finish();
}

// f[g] = <f[X], H[gX]> for g free of the underlying alphabet.
inline VerifyReport lemma_plethHsp(int N) {
    Checker ck("lem:plethHsp", N);
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
    for (int trial = 0; trial < 10 && ck.passing(); ++trial) {
        SymFunc f = detail::random_positive_symfunc(rng, std::min(N, 5), false);
        MultiPoly g;
        for (int i = 0; i < 3; ++i) {
            Monomial m;
            uint32_t et = static_cast<uint32_t>(expo(rng)), ey = static_cast<uint32_t>(expo(rng));
            if (et) m.e.emplace_back(vars::t(), et);
            if (ey) m.e.emplace_back(vars::y(), ey);
            if (m.empty()) continue;  // keep the constant term zero
            g.add_term(m, rat(coeff(rng)));
        }
        SymFunc lhs = plethysm(f, SymFunc::scalar(RatFunc(g)));
        SymFunc HgX = pleth_H(SymFunc::p(1) * RatFunc(g), f.degree());
        RatFunc rhs = scalar_product(f, HgX);
        ck.require(lhs.is_scalar() && lhs.scalar_value() == rhs, "trial " + std::to_string(trial));
    }
    return ck.finish();
}

// <f[X+m], g> = <f, H[mX] g> for monic m.
inline VerifyReport lemma_spconst(int N) {
    Checker ck("lem:spconst", N);
    std::mt19937 rng(31415);
    std::vector<MultiPoly> monics = {MultiPoly::constant(1), zp(), tp().pow(2)};
    for (int trial = 0; trial < 8 && ck.passing(); ++trial) {
        SymFunc f = detail::random_positive_symfunc(rng, 4, false);
        SymFunc g = detail::random_positive_symfunc(rng, 4, false);
        for (const auto& m : monics) {
            SymFunc HmX = pleth_H(SymFunc::p(1) * RatFunc(m), std::max(f.degree(), g.degree()));
            ck.require(scalar_product(shift_X_plus(f, m), g) == scalar_product(f, HmX * g),
                       "monic " + m.str());
        }
    }
    return ck.finish();
}

// f[k(1-alpha)] = <f, H^k E(-alpha)^k>.
inline VerifyReport lemma_scalprodh(int N) {
    Checker ck("lem:scalprodh", N);
    std::mt19937 rng(1618);
    MultiPoly malpha = -MultiPoly::var(vars::alpha());
    for (int k = 0; k <= 3; ++k) {
        SymFunc HkEk = H_trunc(N).pow(static_cast<uint32_t>(k)) *
                       e_weighted(N, malpha).pow(static_cast<uint32_t>(k));
        for (int trial = 0; trial < 6 && ck.passing(); ++trial) {
            SymFunc f = detail::random_positive_symfunc(rng, std::min(N, 5), false);
            ck.require(RatFunc(theta_alpha(f, k)) == scalar_product(f, HkEk),
                       "k=" + std::to_string(k));
        }
    }
    return ck.finish();
}

// exp(sum a_k x^k / k) = sum_lambda x^|lambda| / z_lambda * prod a_{lambda_k}.
inline VerifyReport lemma_expsum(int N) {
    Checker ck("lem:expsum", N);
    VarId xv = vars::x();
    auto run_instance = [&](auto avals, const std::string& label) {
        Series<MultiPoly> arg(xv, N + 1);
        for (int k = 1; k <= N; ++k) arg.set_coeff(k, avals(k) * rat(1, k));
        Series<MultiPoly> lhs = arg.exp();
        for (int n = 0; n <= N && ck.passing(); ++n) {
            MultiPoly rhs;
            for (const auto& l : partitions_of(static_cast<uint32_t>(n))) {
                MultiPoly prod = MultiPoly::constant(rat(Int(1), z_of(l)));
                for (uint32_t part : l.parts) prod *= avals(static_cast<int>(part));
                rhs += prod;
            }
            ck.require_equal(lhs.coeff(n), rhs, label + " x^" + std::to_string(n));
        }
    };
    run_instance([](int k) { return theta_rule(1, static_cast<uint32_t>(k)); }, "a_k=1-(-y)^k");
    run_instance([](int k) { return MultiPoly::constant(k + 1); }, "a_k=k+1");
    return ck.finish();
}

// H(m)[X+1] = H(m)/(1-m) and E(m)[X+1] = (1+m)E(m), slice by slice.
inline VerifyReport lemma_HEXplus1(int N) {
    Checker ck("lem:HEXplus1", N);
    for (uint32_t n = 0; n <= static_cast<uint32_t>(N); ++n) {
        SymFunc hsum;
        for (uint32_t j = 0; j <= n; ++j) hsum += h_in_p(j);
        ck.require(shift_X_plus_1(h_in_p(n)) == hsum, "h slice " + std::to_string(n));
        SymFunc esum = e_in_p(n);
        if (n >= 1) esum += e_in_p(n - 1);
        ck.require(shift_X_plus_1(e_in_p(n)) == esum, "e slice " + std::to_string(n));
    }
    return ck.finish();
}

// f[m_1 + m_2 + m_3] = f(m_1, m_2, m_3) for monic terms, f = h_n and e_n.
inline VerifyReport theorem_monic(int N) {
    Checker ck("thm:monic", N);
    MultiPoly z = zp(), t = tp(), y = yp();
    std::vector<MultiPoly> monics = {z, t.pow(2), y * t};
    MultiPoly gsum = monics[0] + monics[1] + monics[2];
    SymFunc g = SymFunc::scalar(RatFunc(gsum));
    VarId uv = vars::u();
    int prec = N + 1;
    Series<MultiPoly> hgen = Series<MultiPoly>::constant(uv, prec, MultiPoly::constant(1));
    Series<MultiPoly> egen = hgen;
    for (const auto& m : monics) {
        hgen = hgen * series_from_poly(MultiPoly::constant(1) - m * MultiPoly::var(uv), uv, prec)
                          .inverse();
        egen = egen * series_from_poly(MultiPoly::constant(1) + m * MultiPoly::var(uv), uv, prec);
    }
    for (uint32_t n = 0; n <= static_cast<uint32_t>(N) && ck.passing(); ++n) {
        SymFunc hn = plethysm(h_in_p(n), g);
        ck.require(hn.is_scalar() && RatFunc(hgen.coeff(static_cast<int>(n))) == hn.scalar_value(),
                   "h_" + std::to_string(n));
        SymFunc en = plethysm(e_in_p(n), g);
        ck.require(en.is_scalar() && RatFunc(egen.coeff(static_cast<int>(n))) == en.scalar_value(),
                   "e_" + std::to_string(n));
    }
    return ck.finish();
}

// sum over even divisors of mu(d): -1 at powers of two, else 0.
inline VerifyReport lemma_mu(uint32_t limit) {
    Checker ck("lem:mu", static_cast<int>(limit));
    for (uint32_t n = 1; n <= limit && ck.passing(); ++n) {
        int s = 0;
        for (uint32_t d : divisors_of(n))
            if (d % 2 == 0) s += mobius(d);
        int expect = (is_power_of_two(n) && n > 1) ? -1 : 0;
        ck.require(s == expect, "n=" + std::to_string(n));
    }
    return ck.finish();
}

// <L_lambda, r_M> counts permutations with cycle type lambda and descent
// composition M, against full enumeration.
inline VerifyReport lyndon_ribbon_counts(uint32_t n_max, const OracleConfig& cfg = {}) {
    Checker ck("cor:QrL-counts", static_cast<int>(n_max));
    for (uint32_t n = 1; n <= n_max && ck.passing(); ++n) {
        auto chunks = enumerate_chunks<std::map<Composition, std::map<Partition, Int, PartitionLess>>>(
            n, cfg, [](auto& local, const uint8_t*, const StatRecord& s) {
                local[s.comp()][s.ctype()] += 1;
            });
        std::map<Composition, std::map<Partition, Int, PartitionLess>> table;
        for (auto& chunk : chunks)
            for (auto& [comp, per] : chunk)
                for (auto& [l, c] : per) table[comp][l] += c;

        std::vector<SymFunc> ribbons;
        auto comps = compositions_of(n);
        for (const auto& M : comps) ribbons.push_back(ribbon_in_p(M));
        for (const auto& l : partitions_of(n)) {
            SymFunc L = lyndon_of(l);
            for (size_t mi = 0; mi < comps.size() && ck.passing(); ++mi) {
                Int expect = 0;
                auto it = table.find(comps[mi]);
                if (it != table.end()) {
                    auto jt = it->second.find(l);
                    if (jt != it->second.end()) expect = jt->second;
                }
                ck.require(scalar_product(L, ribbons[mi]) == RatFunc(Rat(expect)),
                           "n=" + std::to_string(n));
            }
        }
    }
    return ck.finish();
}

}  // namespace permstat::verify
