#include "doctest.h"
#include "permstat/jsonio.hpp"

using namespace permstat;

TEST_CASE("polynomial JSON encoding is the documented golden format") {
    MultiPoly t = MultiPoly::var(vars::t()), y = MultiPoly::var(vars::y());
    MultiPoly p = 17 * t.pow(2) * y.pow(2);
    CHECK(to_json(p) == R"({"vars":["t","y"],"terms":[{"c":"17/1","e":[2,2]}]})");

    CHECK(to_json(MultiPoly::zero()) == R"({"vars":[],"terms":[]})");
    CHECK(to_json(MultiPoly::constant(rat(-3, 6))) ==
          R"({"vars":[],"terms":[{"c":"-1/2","e":[]}]})");

    // Terms sort lexicographically by exponent tuple.
    MultiPoly q = t + y + t * y;
    CHECK(to_json(q) ==
          R"({"vars":["t","y"],"terms":[{"c":"1/1","e":[0,1]},{"c":"1/1","e":[1,0]},{"c":"1/1","e":[1,1]}]})");
}

TEST_CASE("rational function JSON encoding") {
    MultiPoly t = MultiPoly::var(vars::t());
    RatFunc r(t, 1 - t);
    CHECK(to_json(r) ==
          R"({"num":{"vars":["t"],"terms":[{"c":"1/1","e":[1]}]},"den":{"vars":["t"],"terms":[{"c":"1/1","e":[0]},{"c":"-1/1","e":[1]}]}})");
}

TEST_CASE("symmetric function JSON encoding") {
    SymFunc f;
    f.set_trunc(8);
    f.add_term(Partition{2, 1}, RatFunc(rat(1, 2)));
    f.add_term(Partition{1, 1}, RatFunc(rat(3)));
    // Degrees ascending, then reverse-lex within a degree.
    CHECK(to_json(f) ==
          R"({"maxDegree":8,"terms":[{"partition":[1,1],"coeff":{"num":{"vars":[],"terms":[{"c":"3/1","e":[]}]},"den":{"vars":[],"terms":[{"c":"1/1","e":[]}]}}},{"partition":[2,1],"coeff":{"num":{"vars":[],"terms":[{"c":"1/2","e":[]}]},"den":{"vars":[],"terms":[{"c":"1/1","e":[]}]}}}]})");
}

TEST_CASE("distribution polynomial JSON carries its profile") {
    DistPoly d = oracle_dist(1, FamilySpec::all(), DistProfile{StatProfile::PkDes});
    CHECK(to_json(d) == R"({"profile":"pkdes","vars":["t","y"],"terms":[{"c":"1/1","e":[1,1]}]})");
}

TEST_CASE("verify report JSON") {
    verify::VerifyReport r;
    r.id = "thm:example";
    r.n = 4;
    r.k_max = 5;
    r.pass = true;
    r.ms = 12;
    CHECK(to_json(r) ==
          R"({"id":"thm:example","n":4,"k_max":5,"status":"pass","witness":null,"ms":12})");
    r.pass = false;
    r.witness = "t^3";
    CHECK(to_json(r) ==
          R"({"id":"thm:example","n":4,"k_max":5,"status":"fail","witness":"t^3","ms":12})");
}

TEST_CASE("CSV tables") {
    auto table = descent_table(3, FamilySpec::cyclic());
    CHECK(to_csv(table) == "composition,count\n1-2,1\n2-1,1\n");

    MultiPoly t = MultiPoly::var(vars::t());
    CHECK(to_csv(2 * t.pow(2)) == "t,coeff\n2,2/1\n");
}

TEST_CASE("profile parsing round-trips") {
    for (const char* name : {"pkdes", "pk", "des", "lpkdes", "lpk", "udr", "desmaj", "des,fix",
                             "pkdes,ctype", "udr,fix"}) {
        CHECK(DistProfile::parse(name).name() == name);
    }
    CHECK_THROWS_AS(DistProfile::parse("bogus"), std::invalid_argument);
}

TEST_CASE("serialization is deterministic") {
    DistPoly a = oracle_dist(5, FamilySpec::cyclic(), DistProfile{StatProfile::PkDes});
    DistPoly b = oracle_dist(5, FamilySpec::cyclic(), DistProfile{StatProfile::PkDes});
    CHECK(to_json(a) == to_json(b));
}
