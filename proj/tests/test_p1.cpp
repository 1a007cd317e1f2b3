#include <catch2/catch_amalgamated.hpp>

#include "hn/p1.hpp"

using namespace hn;

TEST_CASE("splitting types") {
    REQUIRE(make_splitting_type(IVec{3, 1, 1, 0}).total_degree() == 5);
    REQUIRE(sorted_splitting_type(IVec{0, 1, 3, 1}) == make_splitting_type(IVec{3, 1, 1, 0}));
    REQUIRE_THROWS_AS(make_splitting_type(IVec{0, 1}), precondition_error);
    REQUIRE_THROWS_AS(make_splitting_type(IVec{}), precondition_error);
}

TEST_CASE("canonical reduction") {
    CanonicalReduction cr = canonical_reduction(make_splitting_type(IVec{3, 1, 1, 0}));
    REQUIRE(cr.hn.block_ranks == std::vector<size_t>{1, 2, 1});
    REQUIRE(cr.hn.block_degrees == IVec{3, 2, 0});
    REQUIRE(cr.hn.block_slopes == QVec{Rat(3), Rat(1), Rat(0)});
    REQUIRE(cr.stratum.levi == std::vector<size_t>{1});
    REQUIRE(cr.stratum.slope.coords == QVec{Rat(3), Rat(1), Rat(1), Rat(0)});

    CanonicalReduction semi = canonical_reduction(make_splitting_type(IVec{2, 2}));
    REQUIRE(semi.hn.block_ranks == std::vector<size_t>{2});
    REQUIRE(semi.stratum.slope.coords == QVec{Rat(2), Rat(2)});

    CanonicalReduction flag = canonical_reduction(make_splitting_type(IVec{2, 1, 0}));
    REQUIRE(flag.hn.block_ranks.size() == 3);
    REQUIRE(flag.stratum.levi.empty());
}

TEST_CASE("specialization order") {
    auto st = [](std::initializer_list<int> v) {
        IVec d;
        for (int x : v) d.push_back(Int(x));
        return make_splitting_type(std::move(d));
    };
    REQUIRE(specializes_to(st({1, 0}), st({2, -1})));
    REQUIRE_FALSE(specializes_to(st({2, -1}), st({1, 0})));
    REQUIRE(specializes_to(st({1, 1}), st({2, 0})));
    REQUIRE_FALSE(specializes_to(st({1, 0}), st({1, 1})));  /* different degree */
    REQUIRE(specializes_to(st({2, 1, 0}), st({3, 1, -1})));
    REQUIRE_FALSE(specializes_to(st({3, 0, 0}), st({2, 2, -1})));
    REQUIRE_THROWS_AS(specializes_to(st({1, 0}), st({1, 0, 0})), precondition_error);
}

TEST_CASE("specialization agrees with the permutation oracle") {
    for (size_t n = 2; n <= 4; ++n)
        for (int d = -2; d <= 2; ++d) {
            auto nodes = splitting_types_in_box(n, Int(d), Int(3));
            for (const auto& a : nodes)
                for (const auto& b : nodes)
                    REQUIRE(specializes_to(a, b) == specializes_to_oracle(a, b));
        }
}

TEST_CASE("hom dimensions") {
    REQUIRE(hom_dim(make_splitting_type(IVec{1}), make_splitting_type(IVec{0})) == 0);
    REQUIRE(hom_dim(make_splitting_type(IVec{0}), make_splitting_type(IVec{2})) == 3);
    REQUIRE(hom_dim(make_splitting_type(IVec{1, 0}), make_splitting_type(IVec{1, 0})) == 4);
}

TEST_CASE("maximal destabilizing block admits no maps onward") {
    REQUIRE(mds_hom_vanishing(make_splitting_type(IVec{3, 1, 1, 0})));
    REQUIRE(mds_hom_vanishing(make_splitting_type(IVec{2, 2})));
    for (size_t n = 2; n <= 4; ++n)
        for (int d = -3; d <= 3; ++d)
            for (const auto& st : splitting_types_in_box(n, Int(d), Int(3)))
                REQUIRE(mds_hom_vanishing(st));
}

TEST_CASE("flag strata of permutations") {
    auto flags = flag_strata_of_permutations(make_splitting_type(IVec{2, 1, 1}));
    REQUIRE(flags.size() == 3);
    REQUIRE(std::find(flags.begin(), flags.end(), IVec{1, 1, 2}) != flags.end());
    REQUIRE(std::find(flags.begin(), flags.end(), IVec{2, 1, 1}) != flags.end());
}

TEST_CASE("strata poset in rank two") {
    PosetReport rep = strata_poset(2, Int(1), Int(3));
    REQUIRE(rep.nodes.size() == 3);
    REQUIRE(rep.nodes[0].degrees == IVec{1, 0});
    REQUIRE(rep.nodes[1].degrees == IVec{2, -1});
    REQUIRE(rep.nodes[2].degrees == IVec{3, -2});
    REQUIRE(rep.edges == std::vector<std::pair<size_t, size_t>>{{0, 1}, {1, 2}});
    REQUIRE(rep.slope_monotone);
    REQUIRE(rep.gl2_closure_ok);

    PosetReport small = strata_poset(2, Int(0), Int(1));
    REQUIRE(small.nodes.size() == 2);
    REQUIRE(small.edges == std::vector<std::pair<size_t, size_t>>{{0, 1}});

    REQUIRE_THROWS_AS(strata_poset(2, Int(0), Int(-1)), precondition_error);
}

TEST_CASE("poset edges are the covering relations of the oracle order") {
    PosetReport rep = strata_poset(3, Int(3), Int(3));
    REQUIRE(rep.slope_monotone);
    size_t count = rep.nodes.size();
    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b)
            leq[a][b] = specializes_to_oracle(rep.nodes[a], rep.nodes[b]);
    std::vector<std::pair<size_t, size_t>> expected;
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool covering = true;
            for (size_t c = 0; c < count && covering; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b]) covering = false;
            if (covering) expected.push_back({a, b});
        }
    REQUIRE(rep.edges == expected);
}
