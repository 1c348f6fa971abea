#include <random>

#include "doctest.h"
#include "permstat/symfunc.hpp"

using namespace permstat;

namespace {

SymFunc random_symfunc(std::mt19937& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> coeff(-3, 3), deg(1, max_deg), nterms(1, 3);
    SymFunc f;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        auto parts = partitions_of(static_cast<uint32_t>(deg(rng)));
        std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
        int c = coeff(rng);
        if (c == 0) c = 1;
        f.add_term(parts[pick(rng)], RatFunc(rat(c, 1 + (i % 2))));
    }
    return f;
}

// The ribbon's defining sum: sequences weakly increasing inside each block of
// L and strictly decreasing across block boundaries, evaluated at 6 values.
Rat ribbon_defining_sum(const Composition& L, const std::vector<Rat>& xs) {
    uint32_t n = 0;
    for (uint32_t p : L) n += p;
    std::vector<uint32_t> desc = descent_set_of(L);
    auto is_boundary = [&](uint32_t pos) {
        for (uint32_t d : desc)
            if (d == pos) return true;
        return false;
    };
    // dp[v] = sum of products of sequences so far ending at index v.
    std::vector<Rat> dp(xs.size());
    for (size_t v = 0; v < xs.size(); ++v) dp[v] = xs[v];
    for (uint32_t pos = 1; pos < n; ++pos) {
        std::vector<Rat> next(xs.size(), Rat(0));
        bool strict_desc = is_boundary(pos);
        for (size_t v = 0; v < xs.size(); ++v) {
            if (dp[v] == 0) continue;
            for (size_t w = 0; w < xs.size(); ++w) {
                bool ok = strict_desc ? (w < v) : (w >= v);
                if (ok) next[w] += dp[v] * xs[w];
            }
        }
        dp = next;
    }
    Rat total = 0;
    for (const auto& r : dp) total += r;
    return total;
}

Rat eval_symfunc_at(const SymFunc& f, const std::vector<Rat>& xs) {
    Rat total = 0;
    for (const auto& [l, c] : f.terms()) {
        Rat term = c.as_rat();
        for (uint32_t part : l.parts) {
            Rat power_sum = 0;
            for (const auto& v : xs) {
                Rat p = 1;
                for (uint32_t e = 0; e < part; ++e) p *= v;
                power_sum += p;
            }
            term *= power_sum;
        }
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("partition enumeration order and counts") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Partition{2});
    CHECK(p2[1] == Partition{1, 1});

    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("z_lambda") {
    CHECK(z_of(Partition{1, 1}) == 2);
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(z_of(Partition{3, 3, 2, 1, 1}) == 3 * 3 * 2 * 2 * 1 * 1 * 2);
}

TEST_CASE("mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    // sum over even divisors is -1 exactly at powers of two (small range here;
    // the full range runs in the acceptance suite).
    for (uint32_t n = 1; n <= 512; ++n) {
        int s = 0;
        for (uint32_t d : divisors_of(n))
            if (d % 2 == 0) s += mobius(d);
        int expect = (is_power_of_two(n) && n > 1) ? -1 : 0;
        CHECK(s == expect);
    }
}

TEST_CASE("h and e in the power sum basis") {
    CHECK(h_in_p(1) == SymFunc::p(1));
    SymFunc e2;
    e2.add_term(Partition{1, 1}, RatFunc(rat(1, 2)));
    e2.add_term(Partition{2}, RatFunc(rat(-1, 2)));
    CHECK(e_in_p(2) == e2);

    // H(z) E(-z) = 1 up to degree 8: every positive-degree slice vanishes.
    SymFunc HE = h_weighted(8, MultiPoly::constant(1)) * e_weighted(8, MultiPoly::constant(-1));
    CHECK(HE.coeff(Partition{}) == RatFunc(1));
    for (uint32_t n = 1; n <= 8; ++n) CHECK(HE.slice(n).is_zero());
}

TEST_CASE("h and e match their exponential generating definitions") {
    SymFunc H = pleth_H(SymFunc::p(1), 6);
    SymFunc E = pleth_E(SymFunc::p(1), 6);
    for (uint32_t n = 0; n <= 6; ++n) {
        CHECK(H.slice(n) == h_in_p(n));
        CHECK(E.slice(n) == e_in_p(n));
    }
}

TEST_CASE("plethysm basics") {
    CHECK(plethysm(SymFunc::p(2), SymFunc::p(3)) == SymFunc::p(6));

    // H[mX] = H(m) with a monic term m = z: the degree-n slice is h_n z^n.
    MultiPoly z = MultiPoly::var(vars::z());
    SymFunc arg = SymFunc::p(1) * RatFunc(z);
    SymFunc HmX = pleth_H(arg, 6);
    for (uint32_t n = 0; n <= 6; ++n)
        CHECK(HmX.slice(n) == h_in_p(n) * RatFunc(MultiPoly::var(vars::z(), n)));

    SymFunc h2L1 = plethysm(h_in_p(2), lyndon(1));
    SymFunc expect;
    expect.add_term(Partition{1, 1}, RatFunc(rat(1, 2)));
    expect.add_term(Partition{2}, RatFunc(rat(1, 2)));
    CHECK(h2L1 == expect);

    CHECK_THROWS_WITH_AS(pleth_H(SymFunc::one(), 4), "divergent plethysm",
                         std::invalid_argument);

    // Plethysm into a polynomial expression: p_i raises every variable of the
    // argument to the i-th power.
    MultiPoly t = MultiPoly::var(vars::t()), q = MultiPoly::var(vars::q());
    MultiPoly g = q * t.pow(2);
    CHECK(plethysm(SymFunc::p(3), g) == q.pow(3) * t.pow(6));
    CHECK(plethysm(h_in_p(2), t) == t.pow(2));
    CHECK(plethysm(e_in_p(2), t).is_zero());
}

TEST_CASE("plethysm is an algebra homomorphism in its left argument") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        SymFunc f = random_symfunc(rng), g = random_symfunc(rng), a = random_symfunc(rng, 3);
        CHECK(plethysm(f + g, a) == plethysm(f, a) + plethysm(g, a));
        CHECK(plethysm(f * g, a) == plethysm(f, a) * plethysm(g, a));
        CHECK(plethysm(SymFunc::p(1), a) == a);
    }
}

TEST_CASE("scalar product") {
    CHECK(scalar_product(SymFunc::p(2), SymFunc::p(2)) == RatFunc(2));
    CHECK(scalar_product(SymFunc::p(2), SymFunc::p_of(Partition{1, 1})).is_zero());

    SymFunc Hz = h_weighted(8, MultiPoly::var(vars::z()));
    SymFunc H = H_trunc(8);
    RatFunc got = scalar_product(Hz, H);
    MultiPoly expect;
    for (uint32_t n = 0; n <= 8; ++n) expect += MultiPoly::var(vars::z(), n);
    CHECK(got == RatFunc(expect));

    CHECK_THROWS_WITH_AS(scalar_product(H_trunc(6), H_trunc(6)), "undefined scalar product",
                         std::invalid_argument);
}

TEST_CASE("ribbons") {
    for (uint32_t n = 1; n <= 6; ++n) CHECK(ribbon_in_p({n}) == h_in_p(n));
    CHECK(ribbon_in_p({1, 1}) == e_in_p(2));
    CHECK_THROWS_AS(ribbon_in_p({}), std::invalid_argument);

    // Defining iterated-inequality sum in 6 concrete values, all L |= n <= 5.
    std::vector<std::vector<Rat>> points = {
        {rat(1), rat(2), rat(3), rat(5), rat(7), rat(11)},
        {rat(1, 2), rat(2, 3), rat(3), rat(1, 5), rat(4), rat(9, 7)},
    };
    for (uint32_t n = 1; n <= 5; ++n) {
        for (const auto& L : compositions_of(n)) {
            SymFunc r = ribbon_in_p(L);
            for (const auto& xs : points)
                CHECK(eval_symfunc_at(r, xs) == ribbon_defining_sum(L, xs));
        }
    }
}

TEST_CASE("Lyndon symmetric functions") {
    CHECK(lyndon(1) == SymFunc::p(1));
    SymFunc L2;
    L2.add_term(Partition{1, 1}, RatFunc(rat(1, 2)));
    L2.add_term(Partition{2}, RatFunc(rat(-1, 2)));
    CHECK(lyndon(2) == L2);

    // sum over lambda |- n of L_lambda is p_1^n.
    for (uint32_t n = 1; n <= 6; ++n) {
        SymFunc total;
        for (const auto& l : partitions_of(n)) total += lyndon_of(l);
        CHECK(total == SymFunc::p(1).pow(n));
    }

    // <L_3, r_{(2,1)}> = 1: exactly one 3-cycle has descent composition (2,1).
    CHECK(scalar_product(lyndon(3), ribbon_in_p({2, 1})) == RatFunc(1));
    CHECK(scalar_product(lyndon(3), ribbon_in_p({1, 2})) == RatFunc(1));
    CHECK(scalar_product(lyndon(3), ribbon_in_p({3})).is_zero());
}

TEST_CASE("X+1 shift") {
    SymFunc p1_shift = shift_X_plus_1(SymFunc::p(1));
    SymFunc expect = SymFunc::p(1) + SymFunc::one();
    CHECK(p1_shift == expect);

    // The degree-n slice of H shifts to h_0 + ... + h_n.
    SymFunc H = H_trunc(8);
    for (uint32_t n = 0; n <= 8; ++n) {
        SymFunc shifted = shift_X_plus_1(H.slice(n));
        SymFunc sum;
        for (uint32_t j = 0; j <= n; ++j) sum += h_in_p(j);
        CHECK(shifted == sum);
    }

    // <f[X+1], g> = <f, H g> (the m = 1 case of the constant-shift lemma).
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_symfunc(rng), g = random_symfunc(rng);
        CHECK(scalar_product(shift_X_plus_1(f), g) == scalar_product(f, H_trunc(10) * g));
    }
}

TEST_CASE("theta map") {
    MultiPoly x = MultiPoly::var(vars::x()), y = MultiPoly::var(vars::y());
    CHECK(theta(SymFunc::p(1), 2) == 2 * (1 + y) * x);

    // Theta_{0,k}(f) = f[k] = f(1,...,1) with k ones.
    for (int k = 1; k <= 4; ++k) {
        for (uint32_t n = 1; n <= 5; ++n) {
            MultiPoly th =
                theta(h_in_p(n), k).eval_at(vars::y(), Rat(0)).eval_at(vars::x(), Rat(1));
            CHECK(th == MultiPoly::constant(
                            Rat(binomial(static_cast<long>(n) + k - 1, static_cast<long>(n)))));
        }
    }

    // Theta_{y,k}(f) = <f, H^k E(y)^k> for random f.
    std::mt19937 rng(808);
    for (int k = 0; k <= 3; ++k) {
        SymFunc HkEyk = H_trunc(10).pow(static_cast<uint32_t>(k)) *
                        e_weighted(10, MultiPoly::var(vars::y())).pow(static_cast<uint32_t>(k));
        for (int trial = 0; trial < 8; ++trial) {
            SymFunc f = random_symfunc(rng);
            RatFunc sp = scalar_product(f, HkEyk);
            CHECK(RatFunc(theta_raw(f, k)) == sp);
        }
    }
}

TEST_CASE("p substitution rules") {
    MultiPoly w = MultiPoly::var(vars::w());
    auto all_w = [&](uint32_t) { return MultiPoly::var(vars::w()); };
    auto odd_w_even_zero = [&](uint32_t m) {
        return m % 2 ? MultiPoly::var(vars::w()) : MultiPoly();
    };
    auto odd_w_even_one = [&](uint32_t m) {
        return m % 2 ? MultiPoly::var(vars::w()) : MultiPoly::constant(1);
    };

    for (uint32_t n = 1; n <= 5; ++n)
        CHECK(p_substitute(SymFunc::p(1).pow(n), all_w) == w.pow(n));

    CHECK(p_substitute(lyndon(3), odd_w_even_zero) == (w.pow(3) - w) * rat(1, 3));
    CHECK(p_substitute(lyndon(2), odd_w_even_one) == (w.pow(2) - 1) * rat(1, 2));
}

TEST_CASE("principal specialization") {
    MultiPoly q = MultiPoly::var(vars::q());
    CHECK(principal_spec(SymFunc::p(2), 2) == 1 + q.pow(2));

    std::mt19937 rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_symfunc(rng);
        // phi_1(f) = f[1] = f with every p_m set to 1.
        MultiPoly phi1 = principal_spec(f, 1);
        MultiPoly f_at_one = p_substitute(f, [](uint32_t) { return MultiPoly::constant(1); });
        CHECK(phi1 == f_at_one);
    }
}

TEST_CASE("graded series respect the x-exponent contract") {
    // For an x-graded series, theta attaches x^n by slice index, so shifted
    // slices keep the x power of the slice they came from.
    Series<SymFunc> H(vars::x(), 5);
    for (int j = 0; j < 5; ++j) H.set_coeff(j, h_in_p(static_cast<uint32_t>(j)));
    MultiPoly via_series = theta_series(H, 2);
    MultiPoly via_slices;
    for (int j = 0; j < 5; ++j)
        via_slices += theta(h_in_p(static_cast<uint32_t>(j)), 2);
    CHECK(via_series == via_slices);

    Series<SymFunc> shifted = shift_X_plus_1(H);
    for (uint32_t j = 0; j < 5; ++j) {
        SymFunc sum;
        for (uint32_t i = 0; i <= j; ++i) sum += h_in_p(i);
        CHECK(shifted.coeff(static_cast<int>(j)) == sum);
    }

    for (uint32_t n = 0; n <= 6; ++n) CHECK(E_trunc(6).slice(n) == e_in_p(n));
}

TEST_CASE("cycle type of the square") {
    CHECK(cycle_type_square(Partition{3}) == Partition{3});
    CHECK(cycle_type_square(Partition{2}) == Partition{1, 1});
    CHECK(cycle_type_square(Partition{4, 3}) == Partition{3, 2, 2});
}
