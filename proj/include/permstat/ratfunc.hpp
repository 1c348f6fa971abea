#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "permstat/multipoly.hpp"

namespace permstat {

// Quotient of two polynomials. The representation is reduced by rational
// content only (never by polynomial gcd); equality is decided by
// cross-multiplication, so non-canonical representatives are fine.
class RatFunc {
public:
    RatFunc() : num_(MultiPoly::zero()), den_(MultiPoly::constant(1)) {}
    RatFunc(const Rat& r) : num_(MultiPoly::constant(r)), den_(MultiPoly::constant(1)) {}
    RatFunc(long n) : num_(MultiPoly::constant(n)), den_(MultiPoly::constant(1)) {}
    RatFunc(MultiPoly p) : num_(std::move(p)), den_(MultiPoly::constant(1)) {}
    RatFunc(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        reduce_();
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    MultiPoly as_poly() const {
        if (!is_polynomial()) throw std::logic_error("rational function is not polynomial");
        return num_ * (Rat(1) / den_.constant_value());
    }

    Rat as_rat() const {
        if (num_.is_zero()) return Rat(0);
        if (!num_.is_constant() || !den_.is_constant())
            throw std::logic_error("rational function is not constant");
        return num_.constant_value() / den_.constant_value();
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::invalid_argument("inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        return RatFunc(num_.pow(static_cast<uint32_t>(k)), den_.pow(static_cast<uint32_t>(k)));
    }

    // p/q == r/s  iff  p*s == r*q.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return as_poly().str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void reduce_() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(1);
            return;
        }
        Rat cn = num_.content(), cd = den_.content();
        Rat g = rat(gcd(cn.get_num(), cd.get_num()), lcm(cn.get_den(), cd.get_den()));
        // Normalize the sign of the leading denominator coefficient.
        if (den_.terms().begin()->second < 0) g = -g;
        Rat ig = 1 / g;
        num_ = num_ * ig;
        den_ = den_ * ig;
    }

    MultiPoly num_, den_;
};

inline bool ratfunc_equal(const RatFunc& a, const RatFunc& b) { return a == b; }

// Substitutes rational functions for variables, producing a single quotient.
inline RatFunc substitute_ratfunc(const MultiPoly& p, const std::map<VarId, RatFunc>& sub) {
    std::map<VarId, uint32_t> maxdeg;
    for (const auto& [v, r] : sub) {
        int d = p.degree_in(v);
        maxdeg[v] = d < 0 ? 0 : static_cast<uint32_t>(d);
    }
    MultiPoly num;
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(c);
        for (const auto& [v, e] : m.e) {
            auto it = sub.find(v);
            if (it == sub.end())
                term *= MultiPoly::var(v, e);
            else
                term *= it->second.num().pow(e) * it->second.den().pow(maxdeg[v] - e);
        }
        for (const auto& [v, d] : maxdeg)
            if (m.exp_of(v) == 0 && sub.count(v)) term *= sub.at(v).den().pow(d);
        num += term;
    }
    MultiPoly den = MultiPoly::constant(1);
    for (const auto& [v, d] : maxdeg) den *= sub.at(v).den().pow(d);
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace permstat
