#include <catch2/catch_amalgamated.hpp>

#include "hn/reps.hpp"

using namespace hn;

TEST_CASE("Weyl module weights") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset std3 = weyl_weights(gl3, IVec{1, 0, 0});
    REQUIRE(std3.dimension() == 3);
    REQUIRE(std3.weights ==
            std::map<IVec, Int>{{IVec{1, 0, 0}, 1}, {IVec{0, 1, 0}, 1}, {IVec{0, 0, 1}, 1}});

    WeightMultiset wedge2 = weyl_weights(gl3, IVec{1, 1, 0});
    REQUIRE(wedge2.dimension() == 3);
    REQUIRE(wedge2.weights.count(IVec{1, 0, 1}) == 1);

    RootDatum sl3 = build_named("SL", 3);
    WeightMultiset adj = weyl_weights(sl3, IVec{1, 1});
    REQUIRE(adj.dimension() == 8);
    REQUIRE(adj.weights.at(IVec{0, 0}) == 2);
    /* Six roots, each with multiplicity one. */
    for (const auto& p : all_roots(sl3)) REQUIRE(adj.weights.at(p.root) == 1);

    REQUIRE_THROWS_AS(weyl_weights(gl3, IVec{0, 1, 0}), precondition_error);
}

TEST_CASE("Weyl dimension formula") {
    RootDatum gl3 = build_gl(3);
    REQUIRE(weyl_dimension(gl3, IVec{2, 1, 0}) == 8);
    REQUIRE(weyl_dimension(gl3, IVec{2, 0, 0}) == 6);
    RootDatum b2 = build_simply_connected('B', 2);
    REQUIRE(weyl_dimension(b2, IVec{1, 0}) == 4);  /* spinor */
    REQUIRE(weyl_dimension(b2, IVec{0, 1}) == 5);  /* vector */
    RootDatum g2 = build_simply_connected('G', 2);
    REQUIRE(weyl_dimension(g2, IVec{1, 0}) == 7);
    REQUIRE(weyl_dimension(g2, IVec{0, 1}) == 14);  /* adjoint */
}

TEST_CASE("all weights lie below the highest weight") {
    for (const auto& [rd, lam] :
         std::vector<std::pair<RootDatum, IVec>>{{build_gl(3), IVec{2, 1, 0}},
                                                 {build_simply_connected('B', 2), IVec{1, 1}},
                                                 {build_named("SL", 3), IVec{2, 1}}}) {
        WeightMultiset v = weyl_weights(rd, lam);
        for (const auto& [nu, mult] : v.weights) {
            REQUIRE(mult > 0);
            QVec c = root_coefficients(rd, vec_sub(lam, nu));
            for (const auto& x : c) {
                REQUIRE(denominator(x) == 1);
                REQUIRE(x >= 0);
            }
        }
        /* Weights are Weyl invariant as a multiset. */
        for (const auto& w : weyl_elements(rd))
            for (const auto& [nu, mult] : v.weights)
                REQUIRE(v.weights.at(act(w, nu, Side::weight)) == mult);
    }
}

TEST_CASE("coset subspace of a weight multiset") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset std3 = weyl_weights(gl3, IVec{1, 0, 0});
    WeightMultiset s0 = subspace_mod_RM(gl3, std3, {0});
    REQUIRE(s0.dimension() == 2);
    REQUIRE(s0.weights.count(IVec{1, 0, 0}) == 1);
    REQUIRE(s0.weights.count(IVec{0, 1, 0}) == 1);
    REQUIRE(subspace_mod_RM(gl3, std3, {1}).dimension() == 1);
    REQUIRE(subspace_mod_RM(gl3, std3, {}).dimension() == 1);
    REQUIRE(subspace_mod_RM(gl3, std3, {0, 1}).dimension() == 3);
}

TEST_CASE("subspaces attached to a minimal representative") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset std3 = weyl_weights(gl3, IVec{1, 0, 0});
    CosetSetup setup = make_setup(gl3, {0}, {1});
    auto reps = min_reps(setup);

    LeviPair lp = deeper_levi_sets(setup, reps[1]);  /* w = s_2 s_1 */
    BruhatSubspaces bs = bruhat_subspaces(gl3, std3, lp);
    REQUIRE(bs.coset_l2.dimension() == 1);
    REQUIRE(bs.coset_l2.weights.count(IVec{1, 0, 0}) == 1);
    REQUIRE(bs.w_coset.dimension() == 1);
    REQUIRE(bs.w_coset.weights.count(IVec{0, 0, 1}) == 1);
    REQUIRE(bs.geq_w_coset.dimension() == 3);

    LeviPair lp_e = deeper_levi_sets(setup, reps[0]);
    BruhatSubspaces bs_e = bruhat_subspaces(gl3, std3, lp_e);
    REQUIRE(bs_e.coset_l2.dimension() == bs_e.w_coset.dimension());
}

TEST_CASE("coset and translated coset subspaces match in dimension") {
    for (const auto& [rd, lam] :
         std::vector<std::pair<RootDatum, IVec>>{{build_gl(3), IVec{2, 1, 0}},
                                                 {build_named("SL", 3), IVec{1, 1}}}) {
        WeightMultiset v = weyl_weights(rd, lam);
        for (size_t m1 = 0; m1 < (size_t(1) << rd.size()); ++m1)
            for (size_t m2 = 0; m2 < (size_t(1) << rd.size()); ++m2) {
                std::vector<size_t> l1, l2;
                for (size_t i = 0; i < rd.size(); ++i) {
                    if (m1 & (size_t(1) << i)) l1.push_back(i);
                    if (m2 & (size_t(1) << i)) l2.push_back(i);
                }
                CosetSetup setup = make_setup(rd, l1, l2);
                for (const auto& w : min_reps(setup)) {
                    LeviPair lp = deeper_levi_sets(setup, w);
                    BruhatSubspaces bs = bruhat_subspaces(rd, v, lp);
                    /* w carries V[lambda + ZR_L2] onto V[w lambda + ZR_L1]. */
                    REQUIRE(bs.coset_l2.dimension() == bs.w_coset.dimension());
                    Int geq = bs.geq_w_coset.dimension();
                    REQUIRE(geq >= bs.w_coset.dimension());
                }
            }
    }
}

TEST_CASE("slope filtration of a weight multiset") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset std3 = weyl_weights(gl3, IVec{1, 0, 0});

    SlopeVector s{QVec{Rat(3), Rat(0), Rat(0)}, {1}};
    auto levels = filtration_levels(gl3, std3, s);
    REQUIRE(levels.size() == 2);
    REQUIRE(levels[0].q == Rat(3));
    REQUIRE(levels[0].dim() == 1);
    REQUIRE(levels[1].q == Rat(0));
    REQUIRE(levels[1].dim() == 2);

    SlopeVector borel{QVec{Rat(2), Rat(1), Rat(0)}, {}};
    auto fine = filtration_levels(gl3, std3, borel);
    REQUIRE(fine.size() == 3);
    for (const auto& lvl : fine) REQUIRE(lvl.dim() == 1);

    RootDatum gl2 = build_gl(2);
    WeightMultiset std2 = weyl_weights(gl2, IVec{1, 0});
    SlopeVector central{QVec{Rat(3, 2), Rat(3, 2)}, {0}};
    auto one = filtration_levels(gl2, std2, central);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].q == Rat(3, 2));
    REQUIRE(one[0].dim() == 2);

    SlopeVector bad{QVec{Rat(0), Rat(1), Rat(0)}, {}};
    REQUIRE_THROWS_AS(filtration_levels(gl3, std3, bad), precondition_error);
}

TEST_CASE("filtration partitions the weights") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset v = weyl_weights(gl3, IVec{2, 1, 0});
    SlopeVector s{QVec{Rat(5, 2), Rat(1), Rat(-1, 2)}, {}};
    auto levels = filtration_levels(gl3, v, s);
    Int total = 0;
    Rat prev;
    std::map<IVec, Int> merged;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i > 0) REQUIRE(levels[i].q < prev);
        prev = levels[i].q;
        total += levels[i].dim();
        for (const auto& [nu, m] : levels[i].weights) {
            REQUIRE(dot(nu, s.coords) == levels[i].q);
            merged[nu] += m;
        }
    }
    REQUIRE(total == v.dimension());
    REQUIRE(merged == v.weights);
    /* Degree of the graded pieces adds up to the degree of the whole. */
    Rat graded = 0;
    for (const auto& lvl : levels) graded += levels.empty() ? Rat(0) : lvl.q * Rat(lvl.dim());
    REQUIRE(graded == assoc_degree(v, s));
}

TEST_CASE("associated degrees") {
    RootDatum gl3 = build_gl(3);
    WeightMultiset std3 = weyl_weights(gl3, IVec{1, 0, 0});
    SlopeVector s{QVec{Rat(3), Rat(0), Rat(0)}, {1}};
    REQUIRE(assoc_degree(std3, s) == Rat(3));
    REQUIRE(assoc_slope_top(std3, s) == Rat(3));
    WeightMultiset top = subspace_mod_RM(gl3, std3, {1});
    REQUIRE(assoc_degree(top, s) == Rat(3));
}
