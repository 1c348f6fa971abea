#pragma once

#include <map>
#include <mutex>

#include "permstat/multipoly.hpp"

namespace permstat {

namespace detail {

// (1-t)^{n+1} * sum_{k=0}^{n+1} f(k) t^k, truncated at degree n+1, recovers a
// polynomial of degree <= n+1 whose coefficients below t^{n+2} are exact.
template <class F>
MultiPoly series_numerator(unsigned n, F f) {
    MultiPoly one_minus_t = MultiPoly::constant(1) - MultiPoly::var(vars::t());
    MultiPoly sum;
    for (unsigned k = 0; k <= n + 1; ++k) sum += MultiPoly::var(vars::t(), k) * Rat(f(k));
    MultiPoly prod = one_minus_t.pow(n + 1) * sum;
    MultiPoly trimmed;
    for (const auto& [m, c] : prod.terms())
        if (m.exp_of(vars::t()) <= n + 1) trimmed.add_term(m, c);
    return trimmed;
}

}  // namespace detail

// A_n(t) = (1-t)^{n+1} sum_k k^n t^k; encodes descents over S_n with the
// t^{des+1} convention, A_0 = 1.
inline MultiPoly eulerian_A(unsigned n) {
    static std::map<unsigned, MultiPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MultiPoly a = detail::series_numerator(n, [n](unsigned k) { return int_pow(Int(k), n); });
    cache.emplace(n, a);
    return a;
}

// B_n(t) = (1-t)^{n+1} sum_k (2k+1)^n t^k: the type B Eulerian polynomial.
inline MultiPoly eulerian_B(unsigned n) {
    static std::map<unsigned, MultiPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MultiPoly b =
        detail::series_numerator(n, [n](unsigned k) { return int_pow(Int(2 * k + 1), n); });
    cache.emplace(n, b);
    return b;
}

}  // namespace permstat
