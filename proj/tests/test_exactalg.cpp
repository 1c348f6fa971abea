#include <random>

#include "doctest.h"
#include "permstat/multipoly.hpp"
#include "permstat/ratfunc.hpp"
#include "permstat/series.hpp"

using namespace permstat;

namespace {

MultiPoly tpoly() { return MultiPoly::var(vars::t()); }
MultiPoly ypoly() { return MultiPoly::var(vars::y()); }

MultiPoly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, max_exp), nterms(1, max_terms);
    MultiPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        uint32_t et = static_cast<uint32_t>(expo(rng));
        uint32_t ey = static_cast<uint32_t>(expo(rng));
        if (et) m.e.emplace_back(vars::t(), et);
        if (ey) m.e.emplace_back(vars::y(), ey);
        p.add_term(m, rat(coeff(rng), 1 + (i % 3)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    MultiPoly t = tpoly(), y = ypoly();
    CHECK((1 + t) * (1 - t) == 1 - t * t);

    MultiPoly p = 1 + t;
    std::map<VarId, MultiPoly> sub{{vars::t(), t * t}};
    CHECK(p.substitute(sub) == 1 + t * t);

    MultiPoly cube = (1 + y * t).pow(3);
    MultiPoly expect = 1 + 3 * y * t + 3 * y.pow(2) * t.pow(2) + y.pow(3) * t.pow(3);
    CHECK(cube == expect);

    CHECK(MultiPoly::constant(0).is_zero());
    CHECK((t - t).is_zero());
    CHECK(t.pow(0) == MultiPoly::constant(1));
}

TEST_CASE("ring axioms hold exactly on random triples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational function equality by cross-multiplication") {
    MultiPoly t = tpoly();
    RatFunc lhs(1 - t * t, 1 - t);
    RatFunc rhs(1 + t);
    CHECK(lhs == rhs);

    CHECK(RatFunc(t, 1 - t) != RatFunc(t, 1 + t));

    // t/(1-t)^2 agrees with sum k t^k to order 10.
    RatFunc f(t, (1 - t) * (1 - t));
    Series<MultiPoly> expansion =
        series_from_poly(f.num(), vars::t(), 10) * series_from_poly(f.den(), vars::t(), 10).inverse();
    for (int k = 0; k < 10; ++k) CHECK(expansion.coeff(k) == MultiPoly::constant(k));
}

TEST_CASE("ratfunc_equal is an equivalence relation on a random sample") {
    std::mt19937 rng(777);
    std::vector<RatFunc> sample;
    for (int i = 0; i < 12; ++i) {
        MultiPoly num = random_poly(rng);
        MultiPoly den = random_poly(rng);
        if (den.is_zero()) den = 1 + tpoly();
        sample.emplace_back(num, den);
        // A scaled representative of the same class.
        sample.emplace_back(num * rat(3, 2), den * rat(3, 2));
    }
    for (const auto& a : sample) CHECK(ratfunc_equal(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            CHECK(ratfunc_equal(a, b) == ratfunc_equal(b, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (ratfunc_equal(a, b) && ratfunc_equal(b, c)) CHECK(ratfunc_equal(a, c));
}

TEST_CASE("series inverse") {
    VarId tv = vars::t();
    auto geom = series_from_poly(1 - tpoly(), tv, 8).inverse();
    for (int k = 0; k < 8; ++k) CHECK(geom.coeff(k) == MultiPoly::constant(1));

    auto s = series_from_poly(2 + (2 - 2 * ypoly()) * tpoly() + tpoly().pow(2), tv, 8);
    auto inv = s.inverse();
    auto prod = s * inv;
    CHECK(prod.coeff(0) == MultiPoly::constant(1));
    for (int k = 1; k < 8; ++k) CHECK(prod.coeff(k).is_zero());

    CHECK_THROWS_AS(series_from_poly(tpoly(), tv, 4).inverse(), std::invalid_argument);
}

TEST_CASE("series inverse is an involution") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly p = random_poly(rng);
        MultiPoly c0 = p.coeff_of(vars::t(), 0);
        // force an invertible rational constant term
        MultiPoly fixed = p - c0 + MultiPoly::constant(rat(2 + trial % 3));
        auto s = series_from_poly(fixed, vars::t(), 6);
        CHECK(s.inverse().inverse() == s.truncate(6));
    }
}

TEST_CASE("series exp and log") {
    VarId tv = vars::t();
    auto log_geom = series_from_poly(1 - tpoly(), tv, 8).inverse().log();
    for (int k = 1; k < 8; ++k) CHECK(log_geom.coeff(k) == MultiPoly::constant(rat(1, k)));
    CHECK(log_geom.coeff(0).is_zero());

    Series<MultiPoly> sum(tv, 5);
    for (int k = 1; k <= 4; ++k) sum.set_coeff(k, MultiPoly::constant(rat(1, k)));
    auto e = sum.exp();
    for (int k = 0; k < 5; ++k) CHECK(e.coeff(k) == MultiPoly::constant(1));

    CHECK(Series<MultiPoly>(tv, 6).exp() ==
          Series<MultiPoly>::constant(tv, 6, MultiPoly::constant(1)));

    CHECK_THROWS_AS(series_from_poly(1 + tpoly(), tv, 4).exp(), std::invalid_argument);
    CHECK_THROWS_AS(series_from_poly(2 + tpoly(), tv, 4).log(), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = random_poly(rng);
        MultiPoly noconst = p - p.coeff_of(vars::t(), 0);
        auto s = series_from_poly(noconst * tpoly(), vars::t(), 6);
        CHECK(s.exp().log() == s);
        auto u = s + Series<MultiPoly>::constant(vars::t(), 6, MultiPoly::constant(1));
        CHECK(u.log().exp() == u);
    }
}

TEST_CASE("series sqrt") {
    VarId tv = vars::t();
    auto sq = series_from_poly((1 + tpoly()).pow(2), tv, 6).sqrt();
    CHECK(sq == series_from_poly(1 + tpoly(), tv, 6));

    MultiPoly y = ypoly(), t = tpoly();
    auto s = series_from_poly(1 + (2 - 4 * y) * t + t * t, tv, 3).sqrt();
    CHECK(s.coeff(0) == MultiPoly::constant(1));
    CHECK(s.coeff(1) == 1 - 2 * y);
    CHECK(s.coeff(2) == 2 * y * (1 - y));

    CHECK(series_from_poly(MultiPoly::constant(1), tv, 5).sqrt() ==
          Series<MultiPoly>::constant(tv, 5, MultiPoly::constant(1)));
    CHECK_THROWS_AS(series_from_poly(2 + t, tv, 4).sqrt(), std::invalid_argument);
}

TEST_CASE("sqrt squares back on random small-coefficient inputs") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        MultiPoly p = random_poly(rng, 3, 2);
        MultiPoly body = (p - p.coeff_of(vars::t(), 0)) * tpoly();
        auto s = series_from_poly(1 + body, vars::t(), 5);
        auto r = s.sqrt();
        CHECK(r * r == s);
    }
}

TEST_CASE("mixed precision returns the minimum") {
    auto a = series_from_poly(1 + tpoly(), vars::t(), 9);
    auto b = series_from_poly(1 - tpoly(), vars::t(), 5);
    CHECK((a * b).prec() == 5);
    CHECK((a + b).prec() == 5);
}

TEST_CASE("substitute with rational functions") {
    MultiPoly t = tpoly(), y = ypoly();
    // p(t) = 1 + t^2 at t -> u/(1-u) with u named y here.
    RatFunc arg(y, 1 - y);
    RatFunc out = substitute_ratfunc(1 + t * t, {{vars::t(), arg}});
    RatFunc expect(((1 - y) * (1 - y)) + y * y, (1 - y) * (1 - y));
    CHECK(out == expect);
}
