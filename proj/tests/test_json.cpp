#include <catch2/catch_amalgamated.hpp>

#include "hn/json_io.hpp"

using namespace hn;

TEST_CASE("integer and rational serialization") {
    REQUIRE(to_json(Int(42)) == json(42));
    Int big("123456789012345678901234567890");
    json jb = to_json(big);
    REQUIRE(jb.is_string());
    REQUIRE(int_from_json(jb) == big);
    REQUIRE(int_from_json(json(-7)) == Int(-7));
    REQUIRE_THROWS_AS(int_from_json(json(1.5)), precondition_error);

    REQUIRE(rat_to_string(Rat(3, 2)) == "3/2");
    REQUIRE(rat_to_string(Rat(4)) == "4");
    REQUIRE(rat_from_string("-5/3") == Rat(-5, 3));
    REQUIRE(qvec_from_json(json::parse(R"(["1/2",3,"-2"])")) ==
            QVec{Rat(1, 2), Rat(3), Rat(-2)});
}

TEST_CASE("vector round trips") {
    IVec v{3, -1, 0};
    REQUIRE(ivec_from_json(to_json(v)) == v);
    std::vector<size_t> s{0, 2};
    REQUIRE(subset_from_json(to_json(s)) == s);
    REQUIRE_THROWS_AS(subset_from_json(json::parse("[-1]")), precondition_error);
}

TEST_CASE("root datum round trip") {
    RootDatum gl3 = build_gl(3);
    RootDatum back = rootdatum_from_json(to_json(gl3));
    REQUIRE(back.simple_roots == gl3.simple_roots);
    REQUIRE(back.simple_coroots == gl3.simple_coroots);

    RootDatum named = rootdatum_from_json(json::parse(R"({"named":{"type":"PGL","n":2}})"));
    REQUIRE(named.simple_coroots[0] == IVec{2});
    REQUIRE_THROWS_AS(rootdatum_from_json(json::parse(
                          R"({"rank":1,"simple_roots":[[1]],"simple_coroots":[[1]]})")),
                      precondition_error);
}

TEST_CASE("quotient class and slope round trips") {
    RootDatum pgl2 = build_named("PGL", 2);
    QuotientLattice full = quotient_lattice(pgl2, {0});
    QuotientClass c = project(full, IVec{1});
    REQUIRE(class_from_json(to_json(c)) == c);
    json jc = to_json(c);
    REQUIRE(jc.contains("free"));
    REQUIRE(jc.contains("torsion"));

    SlopeVector s{QVec{Rat(3), Rat(0), Rat(0)}, {1}};
    SlopeVector back = slope_from_json(to_json(s));
    REQUIRE(back.coords == s.coords);
    REQUIRE(back.levi == s.levi);
    REQUIRE(to_json(s)["coords"] == json::parse(R"(["3","0","0"])"));
}

TEST_CASE("weight multiset round trip") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset v = weyl_weights(gl3, IVec{2, 1, 0});
    REQUIRE(multiset_from_json(to_json(v)) == v);
    REQUIRE_THROWS_AS(
        multiset_from_json(json::parse(R"({"highest":[0],"weights":[{"w":[0],"m":0}]})")),
        precondition_error);
}

TEST_CASE("stratum and report serialization") {
    RootDatum gl2 = build_gl(2);
    QuotientLattice borel = quotient_lattice(gl2, {});
    Stratum st = make_stratum(gl2, {}, project(borel, IVec{2, -1}));
    json j = to_json(st);
    REQUIRE(j["I_M"] == json::array());
    REQUIRE(j["slope"] == json::parse(R"(["2","-1"])"));
    REQUIRE(j.contains("degree"));
    REQUIRE(j.contains("lambda_G"));

    PosetReport rep = strata_poset(2, Int(1), Int(2));
    json jr = to_json(rep);
    REQUIRE(jr["nodes"].size() == rep.nodes.size());
    REQUIRE(jr["edges"].size() == rep.edges.size());
    std::string dot = poset_dot(rep);
    REQUIRE(dot.find("digraph") != std::string::npos);
    REQUIRE(dot.find("n0 -> n1") != std::string::npos);
}
