#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permstat/partitions.hpp"
#include "permstat/ratfunc.hpp"
#include "permstat/series.hpp"

namespace permstat {

// Symmetric function in the power-sum basis: a map from partitions lambda to
// the coefficient of p_lambda. The grading variable x is implicit throughout:
// the degree-n slice is the coefficient of x^n.
//
// trunc == kExact means the stored terms are the whole function; a finite
// trunc marks a degree-truncated view of an unbounded function (H, E, H[g]).
// Operations return the minimum truncation of their operands.
class SymFunc {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    using TermMap = std::map<Partition, RatFunc, PartitionLess>;

    SymFunc() : trunc_(kExact) {}

    static SymFunc zero() { return SymFunc(); }

    static SymFunc scalar(const RatFunc& c) {
        SymFunc f;
        f.add_term(Partition{}, c);
        return f;
    }
    static SymFunc one() { return scalar(RatFunc(1)); }

    static SymFunc p(uint32_t m) {
        if (m == 0) throw std::invalid_argument("p_0 is not defined");
        SymFunc f;
        f.add_term(Partition{m}, RatFunc(1));
        return f;
    }

    static SymFunc p_of(const Partition& lambda, const RatFunc& c = RatFunc(1)) {
        SymFunc f;
        f.add_term(lambda, c);
        return f;
    }

    int trunc() const { return trunc_; }
    bool truncated() const { return trunc_ != kExact; }
    void set_trunc(int t) {
        trunc_ = t;
        drop_beyond_trunc_();
    }

    const TermMap& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool is_scalar() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first.empty());
    }
    RatFunc scalar_value() const {
        if (c_.empty()) return RatFunc();
        if (!is_scalar()) throw std::logic_error("symmetric function is not scalar");
        return c_.begin()->second;
    }

    RatFunc coeff(const Partition& lambda) const {
        auto it = c_.find(lambda);
        return it == c_.end() ? RatFunc() : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [l, c] : c_) d = std::max<int>(d, l.sum());
        return d;
    }
    int min_degree() const {
        int d = std::numeric_limits<int>::max();
        for (const auto& [l, c] : c_) d = std::min<int>(d, l.sum());
        return d;
    }

    void add_term(const Partition& lambda, const RatFunc& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(lambda.sum()) > trunc_) return;
        auto [it, inserted] = c_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    SymFunc slice(uint32_t d) const {
        SymFunc r;
        for (const auto& [l, c] : c_)
            if (l.sum() == d) r.add_term(l, c);
        return r;
    }

    SymFunc truncated_to(int t) const {
        SymFunc r = *this;
        r.set_trunc(std::min(trunc_, t));
        return r;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        for (const auto& [l, c] : a.c_) r.add_term(l, c);
        for (const auto& [l, c] : b.c_) r.add_term(l, c);
        return r;
    }
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        for (const auto& [l, c] : a.c_) r.add_term(l, c);
        for (const auto& [l, c] : b.c_) r.add_term(l, -c);
        return r;
    }
    SymFunc operator-() const {
        SymFunc r = *this;
        for (auto& [l, c] : r.c_) c = -c;
        return r;
    }

    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        for (const auto& [la, ca] : a.c_) {
            uint32_t da = la.sum();
            for (const auto& [lb, cb] : b.c_) {
                if (r.trunc_ != kExact && static_cast<int>(da + lb.sum()) > r.trunc_) continue;
                r.add_term(la.merged_with(lb), ca * cb);
            }
        }
        return r;
    }

    friend SymFunc operator*(const SymFunc& a, const RatFunc& s) {
        if (s.is_zero()) {
            SymFunc r;
            r.trunc_ = a.trunc_;
            return r;
        }
        SymFunc r = a;
        for (auto& [l, c] : r.c_) c *= s;
        return r;
    }
    friend SymFunc operator*(const RatFunc& s, const SymFunc& a) { return a * s; }
    friend SymFunc operator*(const SymFunc& a, const Rat& s) { return a * RatFunc(s); }
    friend SymFunc operator*(const Rat& s, const SymFunc& a) { return a * RatFunc(s); }

    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    SymFunc pow(uint32_t k) const {
        SymFunc r = one();
        r.trunc_ = trunc_;
        SymFunc base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        int t = std::min(a.trunc_, b.trunc_);
        for (const auto& [l, c] : a.c_) {
            if (static_cast<int>(l.sum()) > t) continue;
            if (!(c == b.coeff(l))) return false;
        }
        for (const auto& [l, c] : b.c_) {
            if (static_cast<int>(l.sum()) > t) continue;
            if (a.c_.find(l) == a.c_.end() && !c.is_zero()) return false;
        }
        return true;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, c] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*p[";
            for (size_t i = 0; i < l.parts.size(); ++i)
                os << (i ? "," : "") << l.parts[i];
            os << "]";
        }
        return os.str();
    }

private:
    void drop_beyond_trunc_() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (static_cast<int>(it->first.sum()) > trunc_)
                it = c_.erase(it);
            else
                ++it;
        }
    }

    int trunc_;
    TermMap c_;
};

// Series<SymFunc> coefficient hooks.
inline bool coeff_is_zero(const SymFunc& c) { return c.is_zero(); }
inline bool coeff_is_one(const SymFunc& c) {
    return c.is_scalar() && !c.is_zero() && c.scalar_value() == RatFunc(1);
}
inline SymFunc coeff_one(const SymFunc*) { return SymFunc::one(); }
inline SymFunc coeff_from_poly(const SymFunc*, const MultiPoly& p) {
    return SymFunc::scalar(RatFunc(p));
}
inline SymFunc coeff_unit_inverse(const SymFunc& c) {
    if (!c.is_scalar() || c.is_zero()) throw std::invalid_argument("non-unit series");
    return SymFunc::scalar(c.scalar_value().inverse());
}

// --- complete homogeneous and elementary symmetric functions ---------------

// h_n = sum_{lambda |- n} p_lambda / z_lambda.
inline SymFunc h_in_p(uint32_t n) {
    SymFunc f;
    for (const auto& l : partitions_of(n)) f.add_term(l, RatFunc(rat(Int(1), z_of(l))));
    return f;
}

// e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda.
inline SymFunc e_in_p(uint32_t n) {
    SymFunc f;
    for (const auto& l : partitions_of(n)) {
        Rat c = rat(Int(1), z_of(l));
        if ((n - l.len()) % 2) c = -c;
        f.add_term(l, RatFunc(c));
    }
    return f;
}

// H = sum_n h_n, truncated at degree N.
inline SymFunc H_trunc(int N) {
    SymFunc f;
    for (int n = 0; n <= N; ++n) f += h_in_p(static_cast<uint32_t>(n));
    f.set_trunc(N);
    return f;
}

// E = sum_n e_n, truncated at degree N.
inline SymFunc E_trunc(int N) {
    SymFunc f;
    for (int n = 0; n <= N; ++n) f += e_in_p(static_cast<uint32_t>(n));
    f.set_trunc(N);
    return f;
}

// sum_{n<=N} h_n m^n as a bounded symmetric function (H(m) cut at degree N).
inline SymFunc h_weighted(int N, const MultiPoly& m) {
    SymFunc f;
    MultiPoly mk = MultiPoly::constant(1);
    for (int n = 0; n <= N; ++n) {
        f += h_in_p(static_cast<uint32_t>(n)) * RatFunc(mk);
        mk = mk * m;
    }
    return f;
}

inline SymFunc e_weighted(int N, const MultiPoly& m) {
    SymFunc f;
    MultiPoly mk = MultiPoly::constant(1);
    for (int n = 0; n <= N; ++n) {
        f += e_in_p(static_cast<uint32_t>(n)) * RatFunc(mk);
        mk = mk * m;
    }
    return f;
}

// --- scalar product ---------------------------------------------------------

// <p_lambda, p_tau> = z_lambda [lambda == tau], extended bilinearly. Both
// arguments truncated means the untruncated value may diverge; callers must
// bound one side.
inline RatFunc scalar_product(const SymFunc& f, const SymFunc& g) {
    if (f.truncated() && g.truncated())
        throw std::invalid_argument("undefined scalar product");
    RatFunc r;
    const SymFunc& small = f.terms().size() <= g.terms().size() ? f : g;
    const SymFunc& large = f.terms().size() <= g.terms().size() ? g : f;
    for (const auto& [l, c] : small.terms()) {
        RatFunc other = large.coeff(l);
        if (other.is_zero()) continue;
        r += c * other * RatFunc(Rat(z_of(l)));
    }
    return r;
}

// --- ribbons and Lyndon symmetric functions ---------------------------------

// Ribbon r_L as a signed sum of complete homogeneous products over the
// coarsenings of L (merging adjacent parts), converted to the p basis.
inline SymFunc ribbon_in_p(const Composition& L) {
    if (L.empty()) throw std::invalid_argument("ribbon of empty composition");
    size_t b = L.size() - 1;  // internal boundaries
    SymFunc r;
    for (uint32_t mask = 0; mask < (1u << b); ++mask) {
        // bit i set: keep the boundary between parts i and i+1.
        Composition M;
        uint32_t run = L[0];
        for (size_t i = 0; i < b; ++i) {
            if (mask & (1u << i)) {
                M.push_back(run);
                run = L[i + 1];
            } else {
                run += L[i + 1];
            }
        }
        M.push_back(run);
        SymFunc term = SymFunc::one();
        for (uint32_t part : M) term *= h_in_p(part);
        if ((L.size() - M.size()) % 2)
            r -= term;
        else
            r += term;
    }
    return r;
}

// L_n = (1/n) sum_{d|n} mu(d) p_d^{n/d}.
inline SymFunc lyndon(uint32_t n) {
    if (n == 0) throw std::invalid_argument("lyndon requires n >= 1");
    SymFunc f;
    for (uint32_t d : divisors_of(n)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        std::vector<uint32_t> parts(n / d, d);
        f.add_term(Partition(std::move(parts)), RatFunc(rat(mu, static_cast<long>(n))));
    }
    return f;
}

// --- plethysm ----------------------------------------------------------------

inline std::set<VarId> vars_of(const SymFunc& g) {
    std::set<VarId> s;
    for (const auto& [l, c] : g.terms()) {
        for (VarId v : c.num().vars_used()) s.insert(v);
        for (VarId v : c.den().vars_used()) s.insert(v);
    }
    return s;
}

inline MultiPoly adams_poly(const MultiPoly& p, uint32_t i, const std::set<VarId>& pleth) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        for (auto& [v, e] : m2.e)
            if (pleth.count(v)) e *= i;
        r.add_term(m2, c);
    }
    return r;
}

// Adams operation psi_i: every variable declared plethystic is raised to the
// i-th power, and p_lambda -> p_{i*lambda}.
inline SymFunc adams(const SymFunc& g, uint32_t i, const std::set<VarId>& pleth) {
    SymFunc r;
    if (g.truncated()) r.set_trunc(static_cast<int>(i) * (g.trunc() + 1) - 1);
    for (const auto& [l, c] : g.terms()) {
        Partition il = l;
        for (auto& part : il.parts) part *= i;
        RatFunc c2(adams_poly(c.num(), i, pleth), adams_poly(c.den(), i, pleth));
        r.add_term(il, c2);
    }
    return r;
}

// Plethysm f[g] for f of bounded degree: p_i[g] = psi_i(g), extended to f as
// an algebra homomorphism; f's own coefficients sit outside the bracket.
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g,
                        std::optional<std::set<VarId>> pleth_vars = std::nullopt) {
    std::set<VarId> pv = pleth_vars ? *pleth_vars : vars_of(g);
    std::map<uint32_t, SymFunc> cache;
    auto psi = [&](uint32_t i) -> const SymFunc& {
        auto it = cache.find(i);
        if (it == cache.end()) it = cache.emplace(i, adams(g, i, pv)).first;
        return it->second;
    };
    SymFunc r;
    for (const auto& [l, c] : f.terms()) {
        SymFunc term = SymFunc::one();
        for (uint32_t part : l.parts) term *= psi(part);
        r += term * c;
    }
    if (f.truncated()) {
        int mind = g.is_zero() ? 1 : std::max(1, g.min_degree());
        r.set_trunc(std::min(r.trunc(), (f.trunc() + 1) * mind - 1));
    }
    return r;
}

// Plethysm into a bare polynomial expression (no power sums): the result is
// again a scalar, returned as a polynomial.
inline MultiPoly plethysm(const SymFunc& f, const MultiPoly& g,
                          std::optional<std::set<VarId>> pleth_vars = std::nullopt) {
    SymFunc r = plethysm(f, SymFunc::scalar(RatFunc(g)), std::move(pleth_vars));
    if (!r.is_scalar()) throw std::logic_error("plethysm into a polynomial is scalar");
    return r.scalar_value().as_poly();
}

// exp of a symmetric function with zero scalar term, truncated at degree N.
inline SymFunc sym_exp(const SymFunc& s, int N) {
    if (!s.coeff(Partition{}).is_zero())
        throw std::invalid_argument("sym_exp requires zero scalar term");
    SymFunc st = s.truncated_to(N);
    SymFunc r = SymFunc::one();
    r.set_trunc(N);
    SymFunc term = r;
    for (int j = 1; j <= N; ++j) {
        term = term * st * RatFunc(rat(1, j));
        if (term.is_zero()) break;
        r += term;
    }
    return r;
}

// H[g] = exp(sum_k psi_k(g)/k), truncated at degree N. Defined only when g
// has no degree-0 part.
inline SymFunc pleth_H(const SymFunc& g, int N,
                       std::optional<std::set<VarId>> pleth_vars = std::nullopt) {
    if (!g.coeff(Partition{}).is_zero()) throw std::invalid_argument("divergent plethysm");
    std::set<VarId> pv = pleth_vars ? *pleth_vars : vars_of(g);
    int mind = g.is_zero() ? 1 : std::max(1, g.min_degree());
    SymFunc s;
    s.set_trunc(N);
    for (int k = 1; k * mind <= N; ++k)
        s += adams(g, static_cast<uint32_t>(k), pv) * RatFunc(rat(1, k));
    return sym_exp(s, N);
}

// E[g] = exp(sum_k (-1)^{k-1} psi_k(g)/k), truncated at degree N.
inline SymFunc pleth_E(const SymFunc& g, int N,
                       std::optional<std::set<VarId>> pleth_vars = std::nullopt) {
    if (!g.coeff(Partition{}).is_zero()) throw std::invalid_argument("divergent plethysm");
    std::set<VarId> pv = pleth_vars ? *pleth_vars : vars_of(g);
    int mind = g.is_zero() ? 1 : std::max(1, g.min_degree());
    SymFunc s;
    s.set_trunc(N);
    for (int k = 1; k * mind <= N; ++k)
        s += adams(g, static_cast<uint32_t>(k), pv) * RatFunc(rat((k % 2) ? 1 : -1, k));
    return sym_exp(s, N);
}

// L_lambda = prod_i h_{m_i}[L_i]: the symmetric quasisymmetric generating
// function of the conjugacy class with cycle type lambda.
inline SymFunc lyndon_of(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("lyndon_of requires a nonempty partition");
    std::map<uint32_t, uint32_t> mult;
    for (uint32_t p : lambda.parts) mult[p]++;
    SymFunc r = SymFunc::one();
    for (auto [i, m] : mult) r *= plethysm(h_in_p(m), lyndon(i));
    return r;
}

// --- substitution maps on the p basis ----------------------------------------

// Replaces each p_m by rule(m); used to extract the a_k/b_k/d_k coefficient
// polynomials of the expansion theorems.
inline MultiPoly p_substitute(const SymFunc& f, const std::function<MultiPoly(uint32_t)>& rule) {
    RatFunc r;
    std::map<uint32_t, MultiPoly> cache;
    for (const auto& [l, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(1);
        for (uint32_t part : l.parts) {
            auto it = cache.find(part);
            if (it == cache.end()) it = cache.emplace(part, rule(part)).first;
            term *= it->second;
        }
        r += c * RatFunc(term);
    }
    return r.as_poly();
}

// Degree-graded inverse of a symmetric function with invertible scalar term,
// truncated at degree N.
inline SymFunc sym_inverse(const SymFunc& a, int N) {
    RatFunc a0 = a.coeff(Partition{});
    if (a0.is_zero()) throw std::invalid_argument("symmetric function inverse needs a unit term");
    RatFunc inv0 = a0.inverse();
    std::vector<SymFunc> slices(static_cast<size_t>(N) + 1);
    std::vector<SymFunc> b(static_cast<size_t>(N) + 1);
    for (int d = 0; d <= N; ++d) slices[d] = a.slice(static_cast<uint32_t>(d));
    b[0] = SymFunc::scalar(inv0);
    for (int n = 1; n <= N; ++n) {
        SymFunc acc;
        for (int j = 1; j <= n; ++j) acc += slices[j] * b[n - j];
        b[n] = -(acc * inv0);
    }
    SymFunc r;
    for (int n = 0; n <= N; ++n) r += b[n];
    if (a.truncated()) r.set_trunc(std::min(N, a.trunc()));
    return r;
}

// Integer powers with graded inversion for negative exponents.
inline SymFunc sym_pow_int(const SymFunc& f, int k, int N) {
    if (k >= 0) return f.pow(static_cast<uint32_t>(k)).truncated_to(N);
    return sym_inverse(f, N).pow(static_cast<uint32_t>(-k)).truncated_to(N);
}

// f[X+m] for a monomial m: p_i -> p_i + m^i, extended multiplicatively.
inline SymFunc shift_X_plus(const SymFunc& f, const MultiPoly& m) {
    SymFunc r;
    r.set_trunc(f.trunc());
    for (const auto& [l, c] : f.terms()) {
        std::map<uint32_t, uint32_t> mult;
        for (uint32_t p : l.parts) mult[p]++;
        SymFunc term = SymFunc::one();
        for (auto [i, cnt] : mult) {
            SymFunc factor;  // (p_i + m^i)^{cnt}
            for (uint32_t j = 0; j <= cnt; ++j) {
                std::vector<uint32_t> parts(j, i);
                factor.add_term(Partition(std::move(parts)),
                                RatFunc(m.pow(i).pow(cnt - j) * Rat(binomial(cnt, j))));
            }
            term *= factor;
        }
        r += term * c;
    }
    return r;
}

// f[X+1]: p_m -> p_m + 1, extended multiplicatively.
inline SymFunc shift_X_plus_1(const SymFunc& f) {
    SymFunc r;
    r.set_trunc(f.trunc());
    for (const auto& [l, c] : f.terms()) {
        std::map<uint32_t, uint32_t> mult;
        for (uint32_t p : l.parts) mult[p]++;
        SymFunc term = SymFunc::one();
        for (auto [i, m] : mult) {
            SymFunc factor;  // (p_i + 1)^m
            for (uint32_t j = 0; j <= m; ++j) {
                std::vector<uint32_t> parts(j, i);
                factor.add_term(Partition(std::move(parts)), RatFunc(Rat(binomial(m, j))));
            }
            term *= factor;
        }
        r += term * c;
    }
    return r;
}

// Theta_{y,k}: p_m -> k(1 - (-y)^m), applied with f's coefficients held inert;
// the degree-n slice carries x^n.
inline MultiPoly theta_rule(int k, uint32_t m) {
    MultiPoly ym = MultiPoly::var(vars::y(), m);
    MultiPoly inner = (m % 2) ? MultiPoly::constant(1) + ym : MultiPoly::constant(1) - ym;
    return inner * rat(k);
}

inline MultiPoly theta_raw(const SymFunc& f, int k) {
    return p_substitute(f, [k](uint32_t m) { return theta_rule(k, m); });
}

inline MultiPoly theta(const SymFunc& f, int k) {
    RatFunc r;
    for (const auto& [l, c] : f.terms()) {
        MultiPoly term = MultiPoly::var(vars::x(), l.sum());
        for (uint32_t part : l.parts) term *= theta_rule(k, part);
        r += c * RatFunc(term);
    }
    return r.as_poly();
}

// p_m -> k(1 - alpha^m), alpha symbolic.
inline MultiPoly theta_alpha(const SymFunc& f, int k) {
    return p_substitute(f, [k](uint32_t m) {
        return (MultiPoly::constant(1) - MultiPoly::var(vars::alpha(), m)) * rat(k);
    });
}

// Principal specialization phi_k: p_m -> 1 + q^m + ... + q^{(k-1)m}.
inline MultiPoly principal_spec(const SymFunc& f, int k) {
    if (k < 1) throw std::invalid_argument("principal specialization requires k >= 1");
    return p_substitute(f, [k](uint32_t m) {
        MultiPoly s;
        for (int j = 0; j < k; ++j) s += MultiPoly::var(vars::q(), static_cast<uint32_t>(j) * m);
        return s;
    });
}

// Theta applied to an x-graded series of symmetric functions; the x power is
// the series index.
inline MultiPoly theta_series(const Series<SymFunc>& s, int k) {
    MultiPoly r;
    for (int n = 0; n < s.prec(); ++n)
        r += theta_raw(s.coeff(n), k) * MultiPoly::var(vars::x(), static_cast<uint32_t>(n));
    return r;
}

inline Series<SymFunc> shift_X_plus_1(const Series<SymFunc>& s) {
    Series<SymFunc> r(s.var(), s.prec());
    for (int n = 0; n < s.prec(); ++n) r.set_coeff(n, shift_X_plus_1(s.coeff(n)));
    return r;
}

}  // namespace permstat
