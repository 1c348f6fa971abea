#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permstat {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "num/den" in lowest terms, denominator always written ("17/1").
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int int_pow(const Int& b, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Binomial coefficient with the falling-factorial convention: defined for any
// integer upper index, zero for k < 0.
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= Int(n - i);
    Int den = factorial(static_cast<unsigned>(k));
    Rat q = rat(num, den);
    if (q.get_den() != 1) throw std::logic_error("binomial not integral");
    return q.get_num();
}

}  // namespace permstat
