#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/ratfunc.hpp"

namespace permstat {

// Coefficient-ring hooks used by Series<C>; further coefficient types (e.g.
// symmetric functions) provide their own overloads.
inline bool coeff_is_zero(const MultiPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }

inline bool coeff_is_one(const MultiPoly& c) {
    return c.is_constant() && c.constant_value() == 1;
}
inline bool coeff_is_one(const RatFunc& c) { return c == RatFunc(1); }

inline MultiPoly coeff_one(const MultiPoly*) { return MultiPoly::constant(1); }
inline RatFunc coeff_one(const RatFunc*) { return RatFunc(1); }

inline MultiPoly coeff_from_poly(const MultiPoly*, const MultiPoly& p) { return p; }
inline RatFunc coeff_from_poly(const RatFunc*, const MultiPoly& p) { return RatFunc(p); }

// Inverse of a unit constant coefficient; the model for MultiPoly is that only
// nonzero rationals are units.
inline MultiPoly coeff_unit_inverse(const MultiPoly& c) {
    if (!c.is_constant() || c.is_zero()) throw std::invalid_argument("non-unit series");
    return MultiPoly::constant(Rat(1) / c.constant_value());
}
inline RatFunc coeff_unit_inverse(const RatFunc& c) {
    if (c.is_zero()) throw std::invalid_argument("non-unit series");
    return c.inverse();
}

// Truncated formal power series in one distinguished variable; coefficients
// beyond prec are undefined, never silently zero. Operations on series of
// different precision return the minimum precision.
template <class C>
class Series {
public:
    Series(VarId var, int prec) : var_(var), prec_(prec), c_(static_cast<size_t>(prec)) {
        if (prec <= 0) throw std::invalid_argument("series precision must be positive");
    }

    static Series zero(VarId var, int prec) { return Series(var, prec); }

    static Series constant(VarId var, int prec, const C& c0) {
        Series s(var, prec);
        s.c_[0] = c0;
        return s;
    }

    VarId var() const { return var_; }
    int prec() const { return prec_; }

    const C& coeff(int i) const {
        if (i < 0 || i >= prec_) throw std::out_of_range("series coefficient beyond precision");
        return c_[static_cast<size_t>(i)];
    }
    void set_coeff(int i, const C& v) {
        if (i < 0 || i >= prec_) throw std::out_of_range("series coefficient beyond precision");
        c_[static_cast<size_t>(i)] = v;
    }

    Series truncate(int new_prec) const {
        Series r(var_, std::min(new_prec, prec_));
        for (int i = 0; i < r.prec_; ++i) r.c_[i] = c_[i];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(a.var_, a.check_compatible_(b));
        for (int i = 0; i < r.prec_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(a.var_, a.check_compatible_(b));
        for (int i = 0; i < r.prec_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = C() - c;
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.var_, a.check_compatible_(b));
        for (int i = 0; i < r.prec_; ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < r.prec_; ++j) {
                if (coeff_is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator*(const Series& a, const C& s) {
        Series r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    friend Series operator*(const C& s, const Series& a) { return a * s; }

    Series scale(const Rat& s) const {
        Series r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.prec_ != b.prec_ || a.var_ != b.var_) return false;
        for (int i = 0; i < a.prec_; ++i)
            if (!coeff_is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }

    Series pow(uint32_t k) const {
        Series r = constant(var_, prec_, unit_());
        Series base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    Series pow_int(int k) const { return k < 0 ? inverse().pow(static_cast<uint32_t>(-k)) : pow(static_cast<uint32_t>(k)); }

    // s * result == 1 + O(var^prec); requires an invertible constant term.
    Series inverse() const {
        C inv0 = coeff_unit_inverse(c_[0]);
        Series r(var_, prec_);
        r.c_[0] = inv0;
        for (int n = 1; n < prec_; ++n) {
            C acc{};
            for (int j = 1; j <= n; ++j) acc = acc + c_[j] * r.c_[n - j];
            r.c_[n] = C() - inv0 * acc;
        }
        return r;
    }

    // exp requires zero constant term.
    Series exp() const {
        if (!coeff_is_zero(c_[0]))
            throw std::invalid_argument("series exp requires zero constant term");
        Series r = constant(var_, prec_, unit_());
        Series term = constant(var_, prec_, unit_());
        for (int j = 1; j < prec_; ++j) {
            term = (term * *this).scale(rat(1, j));
            r += term;
        }
        return r;
    }

    // log requires constant term one.
    Series log() const {
        if (!coeff_is_one(c_[0]))
            throw std::invalid_argument("series log requires constant term one");
        Series u = *this;
        u.c_[0] = C();
        Series r(var_, prec_);
        Series term = constant(var_, prec_, unit_());
        for (int j = 1; j < prec_; ++j) {
            term = term * u;
            r += term.scale(rat((j % 2) ? 1 : -1, j));
        }
        return r;
    }

    // Square root with constant term one, by the coefficient recurrence from
    // squaring: c_n = (s_n - sum_{0<j<n} c_j c_{n-j}) / 2.
    Series sqrt() const {
        if (!coeff_is_one(c_[0]))
            throw std::invalid_argument("series sqrt requires constant term one");
        Series r(var_, prec_);
        r.c_[0] = unit_();
        for (int n = 1; n < prec_; ++n) {
            C acc = c_[n];
            for (int j = 1; j < n; ++j) acc = acc - r.c_[j] * r.c_[n - j];
            r.c_[n] = acc * rat(1, 2);
        }
        return r;
    }

private:
    int check_compatible_(const Series& o) const {
        if (var_ != o.var_) throw std::invalid_argument("series variable mismatch");
        return std::min(prec_, o.prec_);
    }
    static C unit_() { return coeff_one(static_cast<const C*>(nullptr)); }

    VarId var_;
    int prec_;
    std::vector<C> c_;
};

// Splits a polynomial along one variable into a series.
inline Series<MultiPoly> series_from_poly(const MultiPoly& p, VarId var, int prec) {
    Series<MultiPoly> s(var, prec);
    auto cs = p.coeffs_in(var);
    for (size_t i = 0; i < cs.size() && static_cast<int>(i) < prec; ++i)
        s.set_coeff(static_cast<int>(i), cs[i]);
    return s;
}

// Evaluates a polynomial in pvar at a series argument; coefficients of pvar
// may involve other (inert) variables.
template <class C>
Series<C> eval_poly_at_series(const MultiPoly& p, VarId pvar, const Series<C>& s) {
    Series<C> r(s.var(), s.prec());
    auto cs = p.coeffs_in(pvar);
    Series<C> power = Series<C>::constant(s.var(), s.prec(), coeff_one(static_cast<const C*>(nullptr)));
    for (size_t j = 0; j < cs.size(); ++j) {
        if (j > 0) power = power * s;
        if (!cs[j].is_zero()) r += power * coeff_from_poly(static_cast<const C*>(nullptr), cs[j]);
    }
    return r;
}

}  // namespace permstat
