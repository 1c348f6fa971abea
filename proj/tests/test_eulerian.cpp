#include "doctest.h"
#include "permstat/eulerian.hpp"
#include "permstat/perms.hpp"

using namespace permstat;

namespace {
MultiPoly tv() { return MultiPoly::var(vars::t()); }
}

TEST_CASE("classical Eulerian polynomials") {
    MultiPoly t = tv();
    CHECK(eulerian_A(0) == MultiPoly::constant(1));
    CHECK(eulerian_A(1) == t);
    CHECK(eulerian_A(2) == t + t.pow(2));
    CHECK(eulerian_A(3) == t + 4 * t.pow(2) + t.pow(3));
    CHECK(eulerian_A(7) == t + 120 * t.pow(2) + 1191 * t.pow(3) + 2416 * t.pow(4) +
                               1191 * t.pow(5) + 120 * t.pow(6) + t.pow(7));
}

TEST_CASE("type B Eulerian polynomials") {
    MultiPoly t = tv();
    CHECK(eulerian_B(0) == MultiPoly::constant(1));
    CHECK(eulerian_B(1) == 1 + t);
    CHECK(eulerian_B(2) == 1 + 6 * t + t.pow(2));

    // (1-t)^{n+1} sum_{k<=K} (2k+1)^n t^k agrees with B_n to order K - n.
    for (unsigned n = 0; n <= 6; ++n) {
        unsigned K = n + 10;
        MultiPoly sum;
        for (unsigned k = 0; k <= K; ++k)
            sum += MultiPoly::var(vars::t(), k) * Rat(int_pow(Int(2 * k + 1), n));
        MultiPoly prod = (MultiPoly::constant(1) - t).pow(n + 1) * sum;
        for (unsigned j = 0; j <= K - n; ++j)
            CHECK(prod.coeff_of(vars::t(), j) == eulerian_B(n).coeff_of(vars::t(), j));
    }
}

TEST_CASE("degrees and palindromy") {
    for (unsigned n = 1; n <= 9; ++n) {
        MultiPoly A = eulerian_A(n);
        CHECK(A.degree_in(vars::t()) == static_cast<int>(n));
        for (unsigned j = 1; j <= n; ++j)
            CHECK(A.coeff_of(vars::t(), j) == A.coeff_of(vars::t(), n + 1 - j));
        CHECK(eulerian_B(n).degree_in(vars::t()) == static_cast<int>(n));
    }
}

TEST_CASE("Eulerian polynomials match brute-force descent counts") {
    for (uint32_t n = 1; n <= 8; ++n) {
        DistPoly d = oracle_dist(n, FamilySpec::all(), DistProfile{StatProfile::Des});
        CHECK(d.poly == eulerian_A(n));
    }
}
