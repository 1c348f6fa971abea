#include "doctest.h"
#include "permstat/eulerian.hpp"
#include "permstat/perms.hpp"
#include "permstat/verify/report.hpp"

using namespace permstat;

TEST_CASE("statistics of the worked examples") {
    StatRecord s = stats_of(Perm::from_digits("71462853"));
    CHECK(s.pk == 2);
    CHECK(s.lpk == 3);
    CHECK(s.udr == 6);
    CHECK(s.des == 4);
    CHECK(s.maj == 18);
    CHECK(s.fix == 0);
    CHECK(s.comp() == Composition{1, 3, 2, 1, 1});

    StatRecord r = stats_of(Perm::from_digits("85712643"));
    CHECK(r.comp() == Composition{1, 2, 3, 1, 1});

    StatRecord one = stats_of(Perm::from_digits("1"));
    CHECK(one.des == 0);
    CHECK(one.pk == 0);
    CHECK(one.lpk == 0);
    CHECK(one.udr == 1);
    CHECK(one.br == 1);
}

TEST_CASE("composition statistics") {
    for (uint32_t n = 1; n <= 6; ++n) {
        StatRecord s = comp_stats({n});
        CHECK(s.des == 0);
        CHECK(s.pk == 0);
        CHECK(s.lpk == 0);
        CHECK(s.udr == 1);
        CHECK(s.br == 1);
    }
    StatRecord s = comp_stats({1, 3, 2, 1, 1});
    CHECK(s.pk == 2);
    CHECK(s.lpk == 3);
    CHECK(s.udr == 6);

    CHECK_THROWS_AS(comp_stats({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("composition statistics agree with permutation statistics") {
    for (uint32_t n = 1; n <= 8; ++n) {
        enumerate_chunks<int>(n, {}, [](int&, const uint8_t*, const StatRecord& s) {
            StatRecord c = comp_stats(s.comp());
            REQUIRE(c.des == s.des);
            REQUIRE(c.maj == s.maj);
            REQUIRE(c.pk == s.pk);
            REQUIRE(c.lpk == s.lpk);
            REQUIRE(c.val == s.val);
            REQUIRE(c.udr == s.udr);
            REQUIRE(c.ddes == s.ddes);
            REQUIRE(c.br == s.br);
        });
    }
}

TEST_CASE("statistic relations") {
    for (uint32_t n = 1; n <= 7; ++n) {
        enumerate_chunks<int>(n, {}, [](int&, const uint8_t*, const StatRecord& s) {
            REQUIRE(s.ddes == s.des - s.lpk);
            REQUIRE(s.lpk - s.pk <= 1);
            REQUIRE(s.udr == s.lpk + s.val + 1);
            REQUIRE(s.br == s.udr - (s.n >= 2 && s.descent_at(1) ? 1 : 0));
            REQUIRE(s.lpk == s.udr / 2);
            REQUIRE(s.val + 1 == (s.udr + 1) / 2);
        });
    }
}

TEST_CASE("oracle distribution examples") {
    MultiPoly t = MultiPoly::var(vars::t()), y = MultiPoly::var(vars::y()),
              z = MultiPoly::var(vars::z());

    DistPoly d1 = oracle_dist(1, FamilySpec::all(), DistProfile{StatProfile::PkDes});
    CHECK(d1.poly == y * t);
    CHECK(d1.profile == "pkdes");

    DistPoly d2 = oracle_dist(3, FamilySpec::cyclic(), DistProfile{StatProfile::Des});
    CHECK(d2.poly == 2 * t.pow(2));

    // Involutions of length 3 are 123, 132, 213, 321, with descent numbers
    // 0, 1, 1, 2 and fixed-point counts 3, 1, 1, 1.
    DistPoly d3 = oracle_dist(3, FamilySpec::involutions(), DistProfile{StatProfile::Des, true});
    CHECK(d3.poly == t * z.pow(3) + 2 * t.pow(2) * z + t.pow(3) * z);
    CHECK(d3.profile == "des,fix");

    CHECK_THROWS_AS(oracle_dist(10, FamilySpec::all(), DistProfile{}), std::invalid_argument);
    OracleConfig unsafe;
    unsafe.cap = kMaxEnumN;
    CHECK_THROWS_AS(oracle_dist(11, FamilySpec::all(), DistProfile{}, unsafe),
                    std::invalid_argument);
}

TEST_CASE("descent tables") {
    auto cyc3 = descent_table(3, FamilySpec::cyclic());
    REQUIRE(cyc3.size() == 2);
    CHECK(cyc3.at({2, 1}) == 1);
    CHECK(cyc3.at({1, 2}) == 1);

    auto inv2 = descent_table(2, FamilySpec::involutions());
    REQUIRE(inv2.size() == 2);
    CHECK(inv2.at({2}) == 1);
    CHECK(inv2.at({1, 1}) == 1);
}

TEST_CASE("family sizes") {
    Int fact = 1;
    for (uint32_t n = 2; n <= 8; ++n) fact *= (n - 1);
    CHECK(family_size(8, FamilySpec::cyclic()) == fact);

    std::vector<long> involution_sizes = {1, 2, 4, 10, 26, 76, 232, 764};
    for (uint32_t n = 1; n <= 8; ++n)
        CHECK(family_size(n, FamilySpec::involutions()) == involution_sizes[n - 1]);

    // Derangement recurrence D_n = (n-1)(D_{n-1} + D_{n-2}).
    std::vector<Int> D = {1, 0};
    for (uint32_t n = 2; n <= 9; ++n) D.push_back((n - 1) * (D[n - 1] + D[n - 2]));
    for (uint32_t n = 1; n <= 9; ++n)
        CHECK(family_size(n, FamilySpec::derangements()) == D[n]);

    // n!/z_lambda counts the permutations of cycle type lambda.
    for (uint32_t n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            CHECK(family_size(n, FamilySpec::cycle_type(l)) == factorial(n) / z_of(l));
}

TEST_CASE("squaring a permutation matches the cycle type rule") {
    for (uint32_t n = 1; n <= 6; ++n) {
        enumerate_chunks<int>(n, {}, [n](int&, const uint8_t* p, const StatRecord& s) {
            std::vector<uint32_t> sq(n);
            for (uint32_t i = 0; i < n; ++i) sq[i] = p[p[i] - 1];
            StatRecord s2 = stats_of(Perm(sq));
            REQUIRE(s2.ctype() == s.ctype_of_square());
        });
    }
}

TEST_CASE("reverse-complement conjugation preserves des and cycle type, swaps pk and val") {
    for (uint32_t n = 1; n <= 7; ++n) {
        enumerate_chunks<int>(n, {}, [n](int&, const uint8_t* p, const StatRecord& s) {
            // Conjugation by the decreasing permutation w0: i -> n+1 - p[n+1-i].
            std::vector<uint32_t> rc(n);
            for (uint32_t i = 0; i < n; ++i) rc[i] = n + 1 - p[n - 1 - i];
            StatRecord r = stats_of(Perm(rc));
            REQUIRE(r.des == s.des);
            REQUIRE(r.ctype() == s.ctype());
            REQUIRE(r.pk == s.val);
            REQUIRE(r.val == s.pk);
        });
    }
}

TEST_CASE("fixed-point-count families") {
    // Exactly one fixed point in S_4: choose the fixed point, derange the rest.
    CHECK(family_size(4, FamilySpec::fix_count(1)) == 8);
    CHECK(family_size(5, FamilySpec::fix_count(5)) == 1);
    CHECK(family_size(5, FamilySpec::fix_count(4)) == 0);
    SymFunc direct;
    for (const auto& l : partitions_of(4))
        if (l.mult_of(1) == 1) direct += lyndon_of(l);
    CHECK(family_symfunc(4, FamilySpec::fix_count(1)) == direct);
}

TEST_CASE("family symmetric functions") {
    for (uint32_t n = 1; n <= 6; ++n) {
        CHECK(family_symfunc(n, FamilySpec::cyclic()) == lyndon(n));
        CHECK(family_symfunc(n, FamilySpec::all()) == SymFunc::p(1).pow(n));
    }
    // Fixed-point-weighted involutions, checked against the exponential form
    // exp(sum_{odd} z^n p_n/n + sum_{even} (z^n - 1) x^n p_n/n + sum p_n^2/(2n)).
    int N = 6;
    MultiPoly z = MultiPoly::var(vars::z());
    SymFunc arg;
    arg.set_trunc(N);
    for (int m = 1; m <= N; ++m) {
        MultiPoly weight = (m % 2) ? MultiPoly::var(vars::z(), m)
                                   : MultiPoly::var(vars::z(), m) - MultiPoly::constant(1);
        arg.add_term(Partition{static_cast<uint32_t>(m)}, RatFunc(weight * rat(1, m)));
        if (2 * m <= N) {
            std::vector<uint32_t> pair(2, static_cast<uint32_t>(m));
            arg.add_term(Partition(std::move(pair)), RatFunc(rat(1, 2 * m)));
        }
    }
    SymFunc QI = sym_exp(arg, N);
    for (uint32_t n = 1; n <= static_cast<uint32_t>(N); ++n)
        CHECK(family_symfunc(n, FamilySpec::involutions(), FamilyWeight::FixZ) == QI.slice(n));
}

TEST_CASE("cycle-type descent counts via the scalar product, small n") {
    for (uint32_t n = 1; n <= 5; ++n) {
        for (const auto& l : partitions_of(n)) {
            SymFunc L = lyndon_of(l);
            auto table = descent_table(n, FamilySpec::cycle_type(l));
            for (const auto& M : compositions_of(n)) {
                Int expect = table.count(M) ? table.at(M) : Int(0);
                CHECK(scalar_product(L, ribbon_in_p(M)) == RatFunc(Rat(expect)));
            }
        }
    }
}

TEST_CASE("involutions are symmetric in peaks against reversed descents") {
    // Number of involutions with j peaks and k descents equals the number
    // with j peaks and n-1-k descents.
    for (uint32_t n = 1; n <= 7; ++n) {
        DistPoly d = oracle_dist(n, FamilySpec::involutions(), DistProfile{StatProfile::PkDes});
        MultiPoly flipped;
        for (const auto& [m, c] : d.poly.terms()) {
            uint32_t et = m.exp_of(vars::t()), ey = m.exp_of(vars::y());
            Monomial m2;
            m2.e.emplace_back(vars::t(), n + 1 - et);
            m2.e.emplace_back(vars::y(), ey);
            flipped.add_term(m2, c);
        }
        CHECK(d.poly == flipped);
    }
}

TEST_CASE("descent-major joint distribution satisfies the q-Eulerian identity") {
    // A_n(q,t) / prod_{i=0..n} (1 - t q^i) = sum_k phi_k(p_1^n) t^k, checked
    // termwise to t^6 for small n.
    for (uint32_t n = 1; n <= 4; ++n) {
        DistPoly d = oracle_dist(n, FamilySpec::all(), DistProfile{StatProfile::DesMaj});
        MultiPoly den = MultiPoly::constant(1);
        for (uint32_t i = 0; i <= n; ++i)
            den *= MultiPoly::constant(1) - MultiPoly::var(vars::t()) * MultiPoly::var(vars::q(), i);
        std::vector<MultiPoly> phis;
        for (int k = 0; k <= 6; ++k)
            phis.push_back(k == 0 ? MultiPoly()
                                  : principal_spec(SymFunc::p(1).pow(n), k));
        std::string where;
        CHECK(verify::matches_t_series(d.poly, den, phis, 6, &where));
    }
}
