#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/vars.hpp"

namespace permstat {

// A monomial is a sparse exponent vector, sorted by variable, zero exponents
// never stored. Comparison is lexicographic over the dense exponent tuple in
// registry order, which keeps term order (and every serialization) stable.
struct Monomial {
    std::vector<std::pair<VarId, uint32_t>> e;

    bool empty() const { return e.empty(); }

    uint32_t exp_of(VarId v) const {
        for (const auto& [var, k] : e)
            if (var == v) return k;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.e.reserve(e.size() + o.e.size());
        size_t i = 0, j = 0;
        while (i < e.size() || j < o.e.size()) {
            if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
                r.e.push_back(e[i++]);
            } else if (i == e.size() || o.e[j].first < e[i].first) {
                r.e.push_back(o.e[j++]);
            } else {
                r.e.emplace_back(e[i].first, e[i].second + o.e[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    Monomial pow(uint32_t k) const {
        Monomial r = *this;
        for (auto& [var, ex] : r.e) ex *= k;
        return r;
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [var, ex] : e) d += ex;
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            uint32_t va = i < a.e.size() ? a.e[i].first.idx : UINT32_MAX;
            uint32_t vb = j < b.e.size() ? b.e[j].first.idx : UINT32_MAX;
            if (va < vb) return false;  // a has positive exponent where b has 0
            if (vb < va) return true;
            if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
            ++i, ++j;
        }
        return false;
    }
};

// Sparse multivariate polynomial over Q. Exact arithmetic only; no zero
// coefficients are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }

    static MultiPoly constant(const Rat& c) {
        MultiPoly p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }
    static MultiPoly constant(long c) { return constant(rat(c)); }

    static MultiPoly var(VarId v, uint32_t e = 1) {
        if (e == 0) return constant(1);
        MultiPoly p;
        p.terms_[Monomial{{{v, e}}}] = 1;
        return p;
    }

    static MultiPoly monomial(const Monomial& m, const Rat& c) {
        MultiPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }
    Rat constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const MultiPoly& a, const Rat& s) {
        if (s == 0) return MultiPoly();
        MultiPoly r = a;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& a) { return a * s; }
    MultiPoly& operator*=(const Rat& s) { return *this = *this * s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(uint32_t k) const {
        MultiPoly r = constant(1);
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    int degree_in(VarId v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp_of(v)));
        return d;  // -1 for the zero polynomial
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Coefficient of v^e, with v removed from the result.
    MultiPoly coeff_of(VarId v, uint32_t e) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.exp_of(v) != e) continue;
            Monomial rm;
            for (const auto& p : m.e)
                if (p.first != v) rm.e.push_back(p);
            r.add_term(rm, c);
        }
        return r;
    }

    // All coefficients with respect to v, indexed by exponent.
    std::vector<MultiPoly> coeffs_in(VarId v) const {
        std::vector<MultiPoly> out(static_cast<size_t>(std::max(0, degree_in(v))) + 1);
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exp_of(v);
            Monomial rm;
            for (const auto& p : m.e)
                if (p.first != v) rm.e.push_back(p);
            out[e].add_term(rm, c);
        }
        return out;
    }

    std::set<VarId> vars_used() const {
        std::set<VarId> s;
        for (const auto& [m, c] : terms_)
            for (const auto& p : m.e) s.insert(p.first);
        return s;
    }

    MultiPoly substitute(const std::map<VarId, MultiPoly>& sub) const {
        std::map<VarId, std::vector<MultiPoly>> pow_cache;
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            MultiPoly term = constant(c);
            for (const auto& [v, e] : m.e) {
                auto it = sub.find(v);
                if (it == sub.end()) {
                    term *= var(v, e);
                } else {
                    auto& cache = pow_cache[v];
                    if (cache.empty()) cache.push_back(constant(1));
                    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
                    term *= cache[e];
                }
            }
            r += term;
        }
        return r;
    }

    MultiPoly eval_at(VarId v, const Rat& value) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exp_of(v);
            Rat coeff = c;
            for (uint32_t i = 0; i < e; ++i) coeff *= value;
            if (coeff == 0) continue;
            Monomial rm;
            for (const auto& p : m.e)
                if (p.first != v) rm.e.push_back(p);
            r.add_term(rm, coeff);
        }
        return r;
    }

    // Greatest common rational content: gcd of numerators / gcd applied so the
    // quotient has coprime integer coefficients. Zero polynomial has content 0.
    Rat content() const {
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        if (num_gcd == 0) return Rat(0);
        return rat(num_gcd, den_lcm);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (m.empty() || c != 1) {
                if (c.get_den() == 1)
                    os << c.get_num().get_str();
                else
                    os << "(" << rat_str(c) << ")";
                if (!m.empty()) os << "*";
            }
            bool fv = true;
            for (const auto& [v, e] : m.e) {
                if (!fv) os << "*";
                fv = false;
                os << VarRegistry::name(v);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline MultiPoly operator*(const MultiPoly& a, long s) { return a * rat(s); }
inline MultiPoly operator*(long s, const MultiPoly& a) { return a * rat(s); }
inline MultiPoly operator+(const MultiPoly& a, long s) { return a + MultiPoly::constant(s); }
inline MultiPoly operator+(long s, const MultiPoly& a) { return a + MultiPoly::constant(s); }
inline MultiPoly operator-(const MultiPoly& a, long s) { return a - MultiPoly::constant(s); }
inline MultiPoly operator-(long s, const MultiPoly& a) { return MultiPoly::constant(s) - a; }

}  // namespace permstat
