#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hn/slope.hpp"
#include "hn/strata.hpp"

using namespace hn;

namespace {

/* phi extended to rational coweights by clearing denominators. */
QVec phi_rational(const RootDatum& rd, const std::vector<size_t>& levi, const QVec& v) {
    Int den = 1;
    for (const auto& x : v) den = den * denominator(x) / gcd(den, denominator(x));
    IVec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) scaled[i] = numerator(v[i] * Rat(den));
    QVec out = phi_of_lift(rd, levi, scaled);
    for (auto& x : out) x /= Rat(den);
    return out;
}

}  // namespace

TEST_CASE("slope map examples") {
    RootDatum gl2 = build_gl(2);
    QuotientLattice g2 = quotient_lattice(gl2, {0});
    for (int d = -3; d <= 3; ++d) {
        SlopeVector s = phi(g2, project(g2, IVec{Int(d), 0}));
        REQUIRE(s.coords == QVec{Rat(d, 2), Rat(d, 2)});
    }
    RootDatum gl3 = build_gl(3);
    QuotientLattice qp = quotient_lattice(gl3, {1});
    REQUIRE(phi(qp, project(qp, IVec{3, 1, -1})).coords == QVec{Rat(3), Rat(0), Rat(0)});
    REQUIRE(is_zero(phi(qp, class_zero(qp)).coords));
}

TEST_CASE("slope is lift independent and satisfies the pairing identity") {
    std::mt19937 rng(17);
    for (const auto& rd : {build_gl(3), build_simply_connected('B', 3),
                           build_named("PGL", 4)}) {
        for (size_t mask = 0; mask < (size_t(1) << rd.size()); ++mask) {
            std::vector<size_t> levi;
            for (size_t i = 0; i < rd.size(); ++i)
                if (mask & (size_t(1) << i)) levi.push_back(i);
            QuotientLattice ql = quotient_lattice(rd, levi);
            IVec v(rd.rank);
            for (auto& x : v) x = Int(int(rng() % 9) - 4);
            QVec expected = phi(ql, project(ql, v)).coords;
            for (int t = 0; t < 20; ++t) {
                IVec shifted = v;
                for (size_t i : levi) {
                    Int c = Int(int(rng() % 7) - 3);
                    for (size_t x = 0; x < rd.rank; ++x)
                        shifted[x] += c * rd.simple_coroots[i][x];
                }
                REQUIRE(phi_of_lift(rd, levi, shifted) == expected);
            }
            /* <lift, lambda> = <phi, lambda> for lambda orthogonal to the
               Levi coroots: spot-check on differences of fundamental data. */
            for (int t = 0; t < 10; ++t) {
                IVec lam(rd.rank);
                for (auto& x : lam) x = Int(int(rng() % 7) - 3);
                if (!in_weight_sublattice(rd, levi, lam)) continue;
                REQUIRE(Rat(dot(v, lam)) == dot(lam, expected));
            }
        }
    }
}

TEST_CASE("dominant P-regularity") {
    RootDatum gl3 = build_gl(3);
    REQUIRE(is_dominant_P_regular(gl3, {QVec{Rat(3), Rat(0), Rat(0)}, {1}}));
    RootDatum gl2 = build_gl(2);
    REQUIRE_FALSE(is_dominant_P_regular(gl2, {QVec{Rat(1), Rat(1)}, {}}));
    REQUIRE(is_dominant_P_regular(gl2, {QVec{Rat(1), Rat(1)}, {0}}));
}

TEST_CASE("phi of simple coroots") {
    RootDatum gl3 = build_gl(3);
    QuotientLattice qp = quotient_lattice(gl3, {1});
    SlopeVector s = phi_of_simple_coroot(qp, 0);
    REQUIRE(s.coords == QVec{Rat(1), Rat(-1, 2), Rat(-1, 2)});
    RootDatum gl2 = build_gl(2);
    QuotientLattice qb = quotient_lattice(gl2, {});
    REQUIRE(phi_of_simple_coroot(qb, 0).coords == QVec{Rat(1), Rat(-1)});
    REQUIRE_THROWS_AS(phi_of_simple_coroot(qp, 1), precondition_error);
}

TEST_CASE("projection away from the center") {
    RootDatum gl3 = build_gl(3);
    QuotientLattice qp = quotient_lattice(gl3, {1});
    ProjPResult r = proj_P(qp, project(qp, IVec{3, 1, -1}));
    REQUIRE(r.support == std::vector<size_t>{0});
    REQUIRE(r.coefficients == QVec{Rat(2)});

    /* Central class: phi_P = phi_G. */
    ProjPResult z = proj_P(qp, project(qp, IVec{1, 1, 1}));
    REQUIRE(is_zero(z.rep));

    RootDatum gl2 = build_gl(2);
    QuotientLattice qb = quotient_lattice(gl2, {});
    ProjPResult r2 = proj_P(qb, project(qb, IVec{2, -2}));
    REQUIRE(r2.coefficients == QVec{Rat(2)});
}

TEST_CASE("slope comparison") {
    RootDatum gl3 = build_gl(3);
    auto sv = [](std::initializer_list<int> v) {
        QVec q;
        for (int x : v) q.push_back(Rat(x));
        return SlopeVector{q, {}};
    };
    REQUIRE(slope_geq(gl3, sv({3, 0, 0}), sv({2, 1, 0})));
    REQUIRE_FALSE(slope_geq(gl3, sv({1, 1, 1}), sv({2, 1, 0})));
    REQUIRE(slope_geq(gl3, sv({2, 1, 0}), sv({2, 1, 0})));
}

TEST_CASE("nested slope maps are compatible") {
    /* For nested parabolic subsets, applying the smaller phi to the larger
       phi's value returns it unchanged, and the difference of the two slopes
       is supported on the larger Levi's coroots. */
    std::mt19937 rng(23);
    for (const auto& rd : {build_gl(3), build_simply_connected('B', 3)}) {
        auto subsets = [&] {
            std::vector<std::vector<size_t>> out;
            for (size_t mask = 0; mask < (size_t(1) << rd.size()); ++mask) {
                std::vector<size_t> s;
                for (size_t i = 0; i < rd.size(); ++i)
                    if (mask & (size_t(1) << i)) s.push_back(i);
                out.push_back(s);
            }
            return out;
        }();
        for (const auto& small : subsets)
            for (const auto& large : subsets) {
                bool nested = std::includes(large.begin(), large.end(), small.begin(),
                                            small.end());
                if (!nested) continue;
                for (int t = 0; t < 10; ++t) {
                    IVec v(rd.rank);
                    for (auto& x : v) x = Int(int(rng() % 9) - 4);
                    QVec phi_large = phi_of_lift(rd, large, v);
                    REQUIRE(phi_rational(rd, small, phi_large) == phi_large);
                    QVec phi_small = phi_of_lift(rd, small, v);
                    auto c = solve_in_span(rd.simple_coroots, vec_sub(phi_small, phi_large));
                    REQUIRE(c.has_value());
                    std::vector<bool> in_large(rd.size(), false);
                    for (size_t i : large) in_large[i] = true;
                    for (size_t i = 0; i < c->size(); ++i)
                        if (!in_large[i]) REQUIRE((*c)[i] == 0);
                }
            }
    }
}

TEST_CASE("destabilization examples") {
    RootDatum gl3 = build_gl(3);
    QuotientLattice qp = quotient_lattice(gl3, {1});
    QuotientLattice full3 = quotient_lattice(gl3, {0, 1});
    REQUIRE(is_destabilizing(qp, project(qp, IVec{3, 1, -1}), project(full3, IVec{3, 0, 0})));

    RootDatum gl2 = build_gl(2);
    QuotientLattice qb = quotient_lattice(gl2, {});
    QuotientLattice full2 = quotient_lattice(gl2, {0});
    REQUIRE_FALSE(
        is_destabilizing(qb, project(qb, IVec{0, 0}), project(full2, IVec{0, 0})));
    REQUIRE_FALSE(
        is_destabilizing(qb, project(qb, IVec{0, 1}), project(full2, IVec{1, 0})));
    REQUIRE_THROWS_AS(
        is_destabilizing(qb, project(qb, IVec{0, 1}), project(full2, IVec{5, 0})),
        precondition_error);
}

TEST_CASE("dominant decomposition") {
    RootDatum gl3 = build_gl(3);
    auto d1 = decompose_dominant(gl3, {1}, QVec{Rat(1), Rat(1), Rat(0)});
    REQUIRE(d1.mu == QVec{Rat(1), Rat(1, 2), Rat(1, 2)});
    REQUIRE(d1.tau == QVec{Rat(0), Rat(1, 2), Rat(-1, 2)});

    auto d2 = decompose_dominant(gl3, {0}, QVec{Rat(2), Rat(2), Rat(0)});
    REQUIRE(d2.tau_coefficients == QVec{Rat(0)});
    REQUIRE(d2.mu == QVec{Rat(2), Rat(2), Rat(0)});

    auto d3 = decompose_dominant(gl3, {0, 1}, QVec{Rat(2), Rat(1), Rat(0)});
    REQUIRE(d3.mu == QVec{Rat(1), Rat(1), Rat(1)});
    REQUIRE(d3.tau_coefficients == QVec{Rat(1), Rat(1)});

    REQUIRE_THROWS_AS(decompose_dominant(gl3, {0}, QVec{Rat(0), Rat(1), Rat(0)}),
                      precondition_error);
}
