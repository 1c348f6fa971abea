#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<uint32_t> parts;

    Partition() = default;
    Partition(std::initializer_list<uint32_t> l) : parts(l) { normalize(); }
    explicit Partition(std::vector<uint32_t> p) : parts(std::move(p)) { normalize(); }

    void normalize() {
        std::sort(parts.begin(), parts.end(), std::greater<uint32_t>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    uint32_t sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
    uint32_t len() const { return static_cast<uint32_t>(parts.size()); }
    bool empty() const { return parts.empty(); }

    uint32_t odd_count() const {
        uint32_t c = 0;
        for (uint32_t p : parts) c += p & 1;
        return c;
    }

    uint32_t mult_of(uint32_t i) const {
        uint32_t c = 0;
        for (uint32_t p : parts) c += (p == i);
        return c;
    }

    // Multiset union of parts.
    Partition merged_with(const Partition& o) const {
        Partition r;
        r.parts.reserve(parts.size() + o.parts.size());
        r.parts.insert(r.parts.end(), parts.begin(), parts.end());
        r.parts.insert(r.parts.end(), o.parts.begin(), o.parts.end());
        r.normalize();
        return r;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

// Degree-major order; within a degree, partitions with larger leading parts
// come first: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        uint32_t sa = a.sum(), sb = b.sum();
        if (sa != sb) return sa < sb;
        return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                            a.parts.end());
    }
};

inline std::vector<Partition> partitions_of(uint32_t n) {
    std::vector<Partition> out;
    std::vector<uint32_t> cur;
    std::function<void(uint32_t, uint32_t)> gen = [&](uint32_t remaining, uint32_t maxpart) {
        if (remaining == 0) {
            out.emplace_back();
            out.back().parts = cur;
            return;
        }
        for (uint32_t p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, n == 0 ? 1 : n);
    return out;
}

using Composition = std::vector<uint32_t>;

inline std::vector<Composition> compositions_of(uint32_t n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // One composition per subset of {1,..,n-1} viewed as internal boundaries.
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Composition c;
        uint32_t run = 1;
        for (uint32_t i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<uint32_t> descent_set_of(const Composition& c) {
    std::vector<uint32_t> d;
    uint32_t s = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        s += c[i];
        d.push_back(s);
    }
    return d;
}

inline Composition composition_from_descents(const std::vector<uint32_t>& d, uint32_t n) {
    Composition c;
    uint32_t prev = 0;
    for (uint32_t pos : d) {
        c.push_back(pos - prev);
        prev = pos;
    }
    c.push_back(n - prev);
    return c;
}

// z_lambda = prod_i i^{m_i} m_i!; n!/z_lambda counts permutations of cycle
// type lambda.
inline Int z_of(const Partition& lambda) {
    std::map<uint32_t, uint32_t> mult;
    for (uint32_t p : lambda.parts) mult[p]++;
    Int z = 1;
    for (auto [i, m] : mult) z *= int_pow(Int(i), m) * factorial(m);
    return z;
}

inline int mobius(uint32_t d) {
    if (d == 0) throw std::invalid_argument("mobius requires d >= 1");
    int result = 1;
    for (uint32_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            result = -result;
        }
    }
    if (d > 1) result = -result;
    return result;
}

inline std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> d;
    for (uint32_t i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

inline bool is_power_of_two(uint32_t n) { return n > 0 && (n & (n - 1)) == 0; }

// Cycle type of pi^2 given the cycle type of pi: odd cycles persist, an even
// cycle of length m splits into two cycles of length m/2.
inline Partition cycle_type_square(const Partition& lambda) {
    std::vector<uint32_t> parts;
    for (uint32_t m : lambda.parts) {
        if (m % 2 == 1) {
            parts.push_back(m);
        } else {
            parts.push_back(m / 2);
            parts.push_back(m / 2);
        }
    }
    return Partition(std::move(parts));
}

}  // namespace permstat
