#pragma once

#include <vector>

#include "permstat/eulerian.hpp"
#include "permstat/perms.hpp"
#include "permstat/symfunc.hpp"
#include "permstat/verify/report.hpp"

namespace permstat::verify {

inline MultiPoly tp() { return MultiPoly::var(vars::t()); }
inline MultiPoly yp() { return MultiPoly::var(vars::y()); }
inline MultiPoly xp() { return MultiPoly::var(vars::x()); }
inline MultiPoly zp() { return MultiPoly::var(vars::z()); }
inline MultiPoly wp() { return MultiPoly::var(vars::w()); }

// The substitution arguments appearing on the left sides of the expansion
// theorems: y -> (1+y)^2 t / ((y+t)(1+yt)), t -> (y+t)/(1+yt).
inline RatFunc arg_Y() {
    MultiPoly t = tp(), y = yp();
    return RatFunc((1 + y) * (1 + y) * t, (y + t) * (1 + y * t));
}
inline RatFunc arg_T() {
    MultiPoly t = tp(), y = yp();
    return RatFunc(y + t, 1 + y * t);
}
// y=1 collapses: t -> 4t/(1+t)^2; the udr argument is t -> 2t/(1+t^2).
inline RatFunc arg_pk() {
    MultiPoly t = tp();
    return RatFunc(4 * t, (1 + t) * (1 + t));
}
inline RatFunc arg_udr() {
    MultiPoly t = tp();
    return RatFunc(2 * t, 1 + t * t);
}

// (1/(1+y)) ((1+yt)/(1-t))^{n+1} * oracle(Y, T), oracle holding y^{pk+1} t^{des+1}.
inline RatFunc compose_pkdes_lhs(const MultiPoly& oracle, int n) {
    MultiPoly t = tp(), y = yp();
    RatFunc composed = substitute_ratfunc(oracle, {{vars::y(), arg_Y()}, {vars::t(), arg_T()}});
    return RatFunc(1 + y * t, 1 - t).pow(n + 1) * RatFunc(MultiPoly::constant(1), 1 + y) *
           composed;
}

// (1+yt)^n/(1-t)^{n+1} * oracle(Y, T), oracle holding y^{lpk} t^{des}.
inline RatFunc compose_lpkdes_lhs(const MultiPoly& oracle, int n) {
    MultiPoly t = tp(), y = yp();
    RatFunc composed = substitute_ratfunc(oracle, {{vars::y(), arg_Y()}, {vars::t(), arg_T()}});
    return RatFunc((1 + y * t).pow(n), (1 - t).pow(n + 1)) * composed;
}

// (1/2) ((1+t)/(1-t))^{n+1} * oracle(4t/(1+t)^2), oracle holding t^{pk+1}.
inline RatFunc compose_pk_lhs(const MultiPoly& oracle, int n) {
    MultiPoly t = tp();
    RatFunc composed = substitute_ratfunc(oracle, {{vars::t(), arg_pk()}});
    return RatFunc((1 + t).pow(n + 1), 2 * (1 - t).pow(n + 1)) * composed;
}

// (1+t)^n/(1-t)^{n+1} * oracle(4t/(1+t)^2), oracle holding t^{lpk}.
inline RatFunc compose_lpk_lhs(const MultiPoly& oracle, int n) {
    MultiPoly t = tp();
    RatFunc composed = substitute_ratfunc(oracle, {{vars::t(), arg_pk()}});
    return RatFunc((1 + t).pow(n), (1 - t).pow(n + 1)) * composed;
}

// oracle(t)/(1-t)^{n+1}, oracle holding t^{des+1}.
inline RatFunc compose_des_lhs(const MultiPoly& oracle, int n) {
    return RatFunc(oracle, (1 - tp()).pow(n + 1));
}

// (1+t^2)^n / (2(1-t)^2 (1-t^2)^{n-1}) * oracle(2t/(1+t^2)), oracle holding t^{udr}.
inline RatFunc compose_udr_lhs(const MultiPoly& oracle, int n) {
    MultiPoly t = tp();
    RatFunc composed = substitute_ratfunc(oracle, {{vars::t(), arg_udr()}});
    return RatFunc((1 + t * t).pow(n), 2 * (1 - t) * (1 - t) * (1 - t * t).pow(n - 1)) * composed;
}

// --- theta sequences ---------------------------------------------------------

inline MultiPoly theta_at_y(const SymFunc& f, int k, const Rat& yval) {
    return p_substitute(f, [k, &yval](uint32_t m) {
        Rat ym = 1;
        for (uint32_t i = 0; i < m; ++i) ym *= -yval;
        return MultiPoly::constant(Rat(k) * (Rat(1) - ym));
    });
}

inline std::vector<MultiPoly> theta_seq(const SymFunc& Q, int kmax) {
    std::vector<MultiPoly> s;
    for (int k = 0; k <= kmax; ++k) s.push_back(theta_raw(Q, k));
    return s;
}

inline std::vector<MultiPoly> theta_seq_at_y(const SymFunc& Q, int kmax, const Rat& yval) {
    std::vector<MultiPoly> s;
    for (int k = 0; k <= kmax; ++k) s.push_back(theta_at_y(Q, k, yval));
    return s;
}

// t^{2k} <- Theta_{1,k}(Q), t^{2k+1} <- Theta_{1,k}(Q[X+1]).
inline std::vector<MultiPoly> theta_seq_udr(const SymFunc& Q, const SymFunc& Qshift, int kmax) {
    std::vector<MultiPoly> s;
    for (int k = 0; static_cast<int>(s.size()) <= kmax; ++k) {
        s.push_back(theta_at_y(Q, k, Rat(1)));
        s.push_back(theta_at_y(Qshift, k, Rat(1)));
    }
    s.resize(static_cast<size_t>(kmax) + 1);
    return s;
}

// --- Eulerian right-hand sides -----------------------------------------------

// sum_lambda c_lambda A_{l(lambda)}(t) (1-t)^{n-l} prod_j (1-(-y)^{lambda_j}),
// the numerator over (1-t)^{n+1}.
inline MultiPoly pkdes_rhs_num(const SymFunc& Q, int n) {
    MultiPoly t = tp();
    RatFunc acc;
    for (const auto& [l, c] : Q.terms()) {
        MultiPoly term =
            eulerian_A(l.len()) * (1 - t).pow(static_cast<uint32_t>(n - static_cast<int>(l.len())));
        for (uint32_t part : l.parts) term *= theta_rule(1, part);
        acc += c * RatFunc(term);
    }
    return acc.as_poly();
}

// sum_lambda c_lambda B_{o(lambda)}(t) (1-t)^{n-o}, numerator over (1-t)^{n+1}.
inline MultiPoly lpk_rhs_num(const SymFunc& Q, int n) {
    MultiPoly t = tp();
    RatFunc acc;
    for (const auto& [l, c] : Q.terms())
        acc += c * RatFunc(eulerian_B(l.odd_count()) *
                           (1 - t).pow(static_cast<uint32_t>(n - static_cast<int>(l.odd_count()))));
    return acc.as_poly();
}

// Odd-partition and type-B halves of the up-down-run expansion; numerator over
// (1-t^2)^{n+1}.
inline MultiPoly udr_rhs_num(const SymFunc& Q, int n) {
    MultiPoly t = tp();
    MultiPoly t2 = t * t;
    std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
    RatFunc acc;
    for (const auto& [l, c] : Q.terms()) {
        if (l.odd_count() == l.len()) {
            MultiPoly a2 = eulerian_A(l.len()).substitute(to_t2);
            acc += c * RatFunc(a2 *
                               (1 - t2).pow(static_cast<uint32_t>(n - static_cast<int>(l.len()))) *
                               rat(1L << l.len()));
        }
        MultiPoly b2 = eulerian_B(l.odd_count()).substitute(to_t2);
        acc += c * RatFunc(
                       t * b2 *
                       (1 - t2).pow(static_cast<uint32_t>(n - static_cast<int>(l.odd_count()))));
    }
    return acc.as_poly();
}

// Coefficient extractions q(w,0,w,0,...), q(w,w,...), q(w,1,w,1,...).
inline MultiPoly a_poly_of(const SymFunc& Q) {
    return p_substitute(Q, [](uint32_t m) { return m % 2 ? wp() : MultiPoly(); });
}
inline MultiPoly b_poly_of(const SymFunc& Q) {
    return p_substitute(Q, [](uint32_t) { return wp(); });
}
inline MultiPoly d_poly_of(const SymFunc& Q) {
    return p_substitute(Q, [](uint32_t m) { return m % 2 ? wp() : MultiPoly::constant(1); });
}

// The general peak-descent expansion machinery for one symmetric Q of degree
// n: the theta sequence, the closed Eulerian right-hand side, and the a/b/d
// coefficient polynomials, with the internal consistency assertions.
struct GeneralExpansion {
    int n = 0;
    std::vector<MultiPoly> theta;        // Theta_{y,k}(Q), y symbolic
    MultiPoly rhs_num;                   // over (1-t)^{n+1}
    MultiPoly a_poly, b_poly, d_poly;    // in w
};

inline GeneralExpansion general_pkdes(const SymFunc& Q, int n, int kmax);

// sum_k [w^k](wpoly) * scale_base^k * ek(k) * one_minus^{n-k}: the numerator of
// the a/b/d-form right-hand sides over one_minus^{n+1}.
template <class EulerFn>
MultiPoly eulerian_combination_num(const MultiPoly& wpoly, int n, EulerFn ek,
                                   const Rat& scale_base, const MultiPoly& one_minus);

inline GeneralExpansion general_pkdes(const SymFunc& Q, int n, int kmax) {
    GeneralExpansion g;
    g.n = n;
    g.theta = theta_seq(Q, kmax);
    g.rhs_num = pkdes_rhs_num(Q, n);
    g.a_poly = a_poly_of(Q);
    g.b_poly = b_poly_of(Q);
    g.d_poly = d_poly_of(Q);
    std::string where;
    if (!matches_t_series(g.rhs_num, (1 - tp()).pow(n + 1), g.theta, kmax, &where))
        throw std::logic_error("theta sequence disagrees with its Eulerian expansion at " + where);

    // The coefficient-extraction forms: at y = 1 only odd partitions survive
    // with weight 2^{l(lambda)} (grouped by length into a_k), at y = 0 every
    // partition contributes (grouped into b_k); the shifted expansion groups
    // by odd-part count into d_k with type B polynomials; interleaving the
    // two gives the up-down-run form.
    MultiPoly a_form = eulerian_combination_num(
        g.a_poly, n, [](unsigned k) { return eulerian_A(k); }, Rat(2),
        MultiPoly::constant(1) - tp());
    if (g.rhs_num.eval_at(vars::y(), 1) != a_form)
        throw std::logic_error("a_k form disagrees with the y=1 expansion");
    MultiPoly b_form = eulerian_combination_num(
        g.b_poly, n, [](unsigned k) { return eulerian_A(k); }, Rat(1),
        MultiPoly::constant(1) - tp());
    if (g.rhs_num.eval_at(vars::y(), 0) != b_form)
        throw std::logic_error("b_k form disagrees with the y=0 expansion");
    MultiPoly d_form = eulerian_combination_num(
        g.d_poly, n, [](unsigned k) { return eulerian_B(k); }, Rat(1),
        MultiPoly::constant(1) - tp());
    if (lpk_rhs_num(Q, n) != d_form)
        throw std::logic_error("d_k form disagrees with the type B expansion");

    MultiPoly t2 = tp() * tp();
    std::map<VarId, MultiPoly> to_t2{{vars::t(), t2}};
    MultiPoly udr_form =
        eulerian_combination_num(
            g.a_poly, n, [&](unsigned k) { return eulerian_A(k).substitute(to_t2); }, Rat(2),
            MultiPoly::constant(1) - t2) +
        tp() * eulerian_combination_num(
                   g.d_poly, n, [&](unsigned k) { return eulerian_B(k).substitute(to_t2); },
                   Rat(1), MultiPoly::constant(1) - t2);
    if (udr_rhs_num(Q, n) != udr_form)
        throw std::logic_error("a_k/d_k form disagrees with the up-down-run expansion");
    return g;
}

// --- x-series helpers -----------------------------------------------------------

inline Series<MultiPoly> xs(const MultiPoly& p, int prec) {
    return series_from_poly(p, vars::x(), prec);
}

// exp(sum_i exponent_i * log(base_i)) as an x-series. Bases must have constant
// term one; exponents are x-free polynomials (fractional powers in the closed
// forms enter through rational exponent coefficients).
inline Series<MultiPoly> exp_log_product(
    int prec, const std::vector<std::pair<MultiPoly, MultiPoly>>& factors) {
    VarId xv = vars::x();
    Series<MultiPoly> acc(xv, prec);
    for (const auto& [expo, base] : factors) {
        Series<MultiPoly> lg = series_from_poly(base, xv, prec).log();
        acc += lg * expo;
    }
    return acc.exp();
}

// sum_k [w^k](wpoly) * scale_base^k * ek(k) * one_minus^{n-k}: the numerator of
// the a/b/d-form right-hand sides over one_minus^{n+1}.
template <class EulerFn>
MultiPoly eulerian_combination_num(const MultiPoly& wpoly, int n, EulerFn ek,
                                   const Rat& scale_base, const MultiPoly& one_minus) {
    MultiPoly acc;
    auto coeffs = wpoly.coeffs_in(vars::w());
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
        if (coeffs[k].is_zero()) continue;
        Rat scale = 1;
        for (int i = 0; i < k; ++i) scale *= scale_base;
        acc += coeffs[k] * ek(static_cast<unsigned>(k)) *
               one_minus.pow(static_cast<uint32_t>(n - k)) * scale;
    }
    return acc;
}

}  // namespace permstat::verify
