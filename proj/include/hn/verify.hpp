#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "hn/p1.hpp"

namespace hn {

/* Exhaustive and randomized property sweeps over small ranks. Each returns
   true on success and appends a diagnostic on failure. */

inline std::vector<RootDatum> sweep_types(size_t max_rank) {
    std::vector<RootDatum> out;
    for (size_t n = 1; n <= max_rank; ++n) out.push_back(build_gl(n));
    struct Entry {
        char type;
        size_t min_rank;
    };
    for (Entry e : {Entry{'A', 1}, Entry{'B', 2}, Entry{'C', 3}, Entry{'D', 4},
                    Entry{'G', 2}, Entry{'F', 4}}) {
        for (size_t r = e.min_rank; r <= max_rank; ++r) {
            if (e.type == 'G' && r != 2) continue;
            if (e.type == 'F' && r != 4) continue;
            out.push_back(build_simply_connected(e.type, r));
            out.push_back(build_adjoint(e.type, r));
        }
    }
    return out;
}

inline std::vector<std::vector<size_t>> all_subsets(size_t m) {
    std::vector<std::vector<size_t>> out;
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<size_t> s;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t(1) << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

/* Random complete-to-partial flags in GL(n): phi against the repeated
   block-slope formula. */
inline bool sweep_gl_slope_formula(std::string& diag, size_t trials = 20, size_t max_n = 5,
                                   unsigned seed = 20240811) {
    std::mt19937 rng(seed);
    for (size_t t = 0; t < trials; ++t) {
        size_t n = 1 + rng() % max_n;
        RootDatum rd = build_gl(n);
        /* Random block structure and degrees. */
        std::vector<size_t> ranks;
        size_t left = n;
        while (left > 0) {
            size_t r = 1 + rng() % left;
            ranks.push_back(r);
            left -= r;
        }
        IVec degrees;
        for (size_t b = 0; b < ranks.size(); ++b) degrees.push_back(Int(int(rng() % 11) - 5));
        std::vector<size_t> levi;
        IVec v;
        {
            size_t pos = 0;
            for (size_t b = 0; b < ranks.size(); ++b) {
                /* Random integers inside the block summing to the block degree. */
                Int rem = degrees[b];
                for (size_t i = 0; i + 1 < ranks[b]; ++i) {
                    Int x = Int(int(rng() % 7) - 3);
                    v.push_back(x);
                    rem -= x;
                    levi.push_back(pos + i);
                }
                v.push_back(rem);
                pos += ranks[b];
            }
        }
        QVec expect;
        for (size_t b = 0; b < ranks.size(); ++b)
            for (size_t i = 0; i < ranks[b]; ++i) expect.push_back(Rat(degrees[b], Int(ranks[b])));
        QVec got = phi_of_lift(rd, levi, v);
        if (got != expect) {
            diag += "GL slope formula mismatch at trial " + std::to_string(t) + "\n";
            return false;
        }
    }
    return true;
}

/* phi of each simple coroot off the Levi stays in the nonnegative coroot
   cone and pairs positively with its own root (asserted inside the call). */
inline bool sweep_phi_simple_coroot(std::string& diag, size_t max_rank = 4) {
    for (const auto& rd : sweep_types(max_rank))
        for (const auto& levi : all_subsets(rd.size())) {
            QuotientLattice ql = quotient_lattice(rd, levi);
            std::vector<bool> in_levi(rd.size(), false);
            for (size_t i : levi) in_levi[i] = true;
            for (size_t j = 0; j < rd.size(); ++j) {
                if (in_levi[j]) continue;
                try {
                    phi_of_simple_coroot(ql, j);
                } catch (const error& e) {
                    diag += rd.name + " levi size " + std::to_string(levi.size()) + " j=" +
                            std::to_string(j) + ": " + e.what() + "\n";
                    return false;
                }
            }
        }
    return true;
}

/* Double cosets: minimal representatives against the brute-force partition,
   plus the root-level identity battery. */
inline bool sweep_bruhat(std::string& diag, size_t max_rank = 3) {
    for (const auto& rd : sweep_types(max_rank)) {
        auto subsets = all_subsets(rd.size());
        auto all = weyl_elements(rd);
        for (const auto& l1 : subsets)
            for (const auto& l2 : subsets) {
                CosetSetup setup = make_setup(rd, l1, l2);
                auto reps = min_reps(setup);
                auto cosets = double_cosets(setup);
                if (reps.size() != cosets.size()) {
                    diag += rd.name + ": rep count " + std::to_string(reps.size()) +
                            " vs coset count " + std::to_string(cosets.size()) + "\n";
                    return false;
                }
                for (const auto& coset : cosets) {
                    size_t best = 0, best_count = 0;
                    for (size_t i = 1; i < coset.size(); ++i)
                        if (coset[i].length() < coset[best].length()) best = i;
                    for (const auto& w : coset)
                        if (w.length() == coset[best].length()) ++best_count;
                    if (best_count != 1) {
                        diag += rd.name + ": shortest coset element not unique\n";
                        return false;
                    }
                    bool found = false;
                    for (const auto& r : reps)
                        if (r == coset[best]) found = true;
                    if (!found) {
                        diag += rd.name + ": shortest element missing from min_reps\n";
                        return false;
                    }
                }
                for (const auto& w : reps) {
                    RootIdentityReport rep = verify_root_identities(setup, w);
                    if (!rep.all_pass()) {
                        diag += rd.name + ": root identity failure\n";
                        return false;
                    }
                }
            }
    }
    return true;
}

namespace detail {

/* An integral weight with the prescribed coroot pairings, when one exists. */
inline std::optional<IVec> weight_with_pairings(const RootDatum& rd, const IVec& t);

/* A random dominant weight with coroot pairings bounded by max_pairing:
   draw the pairing pattern and solve for an integral weight realizing it. */
inline std::optional<IVec> random_dominant(const RootDatum& rd, std::mt19937& rng,
                                           long max_pairing, size_t attempts = 2000) {
    for (size_t a = 0; a < attempts; ++a) {
        IVec t(rd.size());
        for (size_t i = 0; i < rd.size(); ++i) t[i] = Int(long(rng() % (max_pairing + 1)));
        if (auto v = weight_with_pairings(rd, t)) return v;
    }
    return std::nullopt;
}

inline std::optional<IVec> weight_with_pairings(const RootDatum& rd, const IVec& t) {
    size_t m = rd.size(), n = rd.rank;
    IMat r(m, IVec(n));
    for (size_t i = 0; i < m; ++i) r[i] = rd.simple_coroots[i];
    SmithForm s = smith_form(r);
    IVec ut = mat_vec(s.U, t);
    IVec z(n, Int(0));
    for (size_t k = 0; k < m; ++k) {
        Int d = k < s.divisors.size() ? s.divisors[k] : Int(0);
        if (d == 0) {
            if (ut[k] != 0) return std::nullopt;
        } else {
            if (ut[k] % d != 0) return std::nullopt;
            z[k] = ut[k] / d;
        }
    }
    return mat_vec(s.V, z);
}

}  // namespace detail

/* Freudenthal dimensions against the Weyl dimension formula, plus the
   adjoint zero-weight multiplicity of SL(3). */
inline bool sweep_freudenthal(std::string& diag, size_t max_rank = 3, size_t trials = 50,
                              long max_pairing = 3, unsigned seed = 20240812) {
    std::mt19937 rng(seed);
    for (const auto& rd : sweep_types(max_rank)) {
        for (size_t t = 0; t < trials; ++t) {
            auto lambda = detail::random_dominant(rd, rng, max_pairing);
            if (!lambda) {
                diag += rd.name + ": no dominant weight found in the sample box\n";
                return false;
            }
            try {
                weyl_weights(rd, *lambda);  /* asserts dimension internally */
            } catch (const error& e) {
                diag += rd.name + ": " + e.what() + "\n";
                return false;
            }
        }
    }
    RootDatum sl3 = build_named("SL", 3);
    IVec adj{1, 1};  /* highest root of SL(3) in fundamental-weight coords */
    WeightMultiset v = weyl_weights(sl3, adj);
    IVec zero{0, 0};
    if (v.dimension() != 8 || !v.weights.count(zero) || v.weights.at(zero) != 2) {
        diag += "SL(3) adjoint module has wrong zero-weight multiplicity\n";
        return false;
    }
    return true;
}

/* One-dimensionality of the Levi coset subspace exactly on the weight
   sublattice, exhaustively over pairing patterns. */
inline bool sweep_one_dimensionality(std::string& diag, size_t max_rank = 3,
                                     long max_pairing = 3) {
    for (const auto& rd : sweep_types(max_rank)) {
        size_t m = rd.size();
        std::vector<long> t(m, 0);
        for (;;) {
            IVec ti(m);
            for (size_t i = 0; i < m; ++i) ti[i] = t[i];
            auto lambda = detail::weight_with_pairings(rd, ti);
            if (lambda) {
                WeightMultiset v = weyl_weights(rd, *lambda);
                for (const auto& levi : all_subsets(m)) {
                    bool one_dim = subspace_mod_RM(rd, v, levi).dimension() == 1;
                    bool in_sub = in_weight_sublattice(rd, levi, *lambda);
                    if (one_dim != in_sub) {
                        diag += rd.name + ": one-dimensionality mismatch\n";
                        return false;
                    }
                }
            }
            size_t i = 0;
            while (i < m && t[i] == max_pairing) t[i++] = 0;
            if (i == m) break;
            ++t[i];
        }
    }
    return true;
}

/* The two destabilization criteria agree (asserted inside
   is_destabilizing) over all small lifts. */
inline bool sweep_destabilization(std::string& diag, size_t max_rank = 3, long max_coeff = 3) {
    for (const auto& rd : sweep_types(max_rank)) {
        QuotientLattice full = quotient_lattice(rd, full_subset(rd));
        for (const auto& levi : all_subsets(rd.size())) {
            QuotientLattice ql = quotient_lattice(rd, levi);
            std::vector<long> k(rd.rank, -max_coeff);
            for (;;) {
                IVec v(rd.rank);
                for (size_t i = 0; i < rd.rank; ++i) v[i] = k[i];
                try {
                    is_destabilizing(ql, project(ql, v), project(full, v));
                } catch (const error& e) {
                    diag += rd.name + ": " + e.what() + "\n";
                    return false;
                }
                size_t i = 0;
                while (i < rd.rank && k[i] == max_coeff) k[i++] = -max_coeff;
                if (i == rd.rank) break;
                ++k[i];
            }
        }
    }
    return true;
}

/* Dominant regular slopes dominate their pullbacks along every minimal
   representative, with vector equality only at the identity. */
inline bool sweep_w1_lemma(std::string& diag, size_t max_rank = 3, size_t samples = 5,
                           unsigned seed = 20240813) {
    std::mt19937 rng(seed);
    for (const auto& rd : sweep_types(max_rank)) {
        auto fw = fundamental_coweights(rd);
        auto subsets = all_subsets(rd.size());
        for (const auto& l1 : subsets) {
            std::vector<bool> in_l1(rd.size(), false);
            for (size_t i : l1) in_l1[i] = true;
            std::vector<QVec> slopes;
            for (size_t s = 0; s < samples; ++s) {
                QVec v(rd.rank, Rat(0));
                for (size_t j = 0; j < rd.size(); ++j) {
                    if (in_l1[j]) continue;
                    Rat c(1 + rng() % 5, 1 + rng() % 3);
                    for (size_t x = 0; x < rd.rank; ++x) v[x] += c * fw[j][x];
                }
                slopes.push_back(std::move(v));
            }
            for (const auto& l2 : subsets) {
                CosetSetup setup = make_setup(rd, l1, l2);
                for (const auto& w : min_reps(setup)) {
                    WeylElement winv = inverse(rd, w);
                    for (const auto& s : slopes) {
                        QVec pulled = act(winv, s, Side::coweight);
                        bool geq = dominance_leq(rd, {pulled, Side::coweight},
                                                 {s, Side::coweight});
                        bool eq = pulled == s;
                        if (!geq) {
                            diag += rd.name + ": slope does not dominate its pullback\n";
                            return false;
                        }
                        if (eq != (w.word.empty())) {
                            diag += rd.name + ": slope equality off the identity\n";
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

/* Both specialization tests agree on all pairs; rank-2 closures are the
   expected half-chains. */
inline bool sweep_p1_specialization(std::string& diag, size_t max_n = 4, long box = 3) {
    for (size_t n = 1; n <= max_n; ++n) {
        std::vector<SplittingType> all;
        for (long total = -box * long(n); total <= box * long(n); ++total) {
            auto part = splitting_types_in_box(n, Int(total), Int(box));
            all.insert(all.end(), part.begin(), part.end());
        }
        for (const auto& a : all)
            for (const auto& b : all)
                if (specializes_to(a, b) != specializes_to_oracle(a, b)) {
                    diag += "specialization tests disagree at rank " + std::to_string(n) + "\n";
                    return false;
                }
    }
    for (long d = 0; d <= 3; ++d) {
        PosetReport rep = strata_poset(2, Int(d), Int(6));
        if (!rep.gl2_closure_ok) {
            diag += "rank-2 closure chain mismatch at degree " + std::to_string(d) + "\n";
            return false;
        }
    }
    return true;
}

/* Canonical slope dominates every permutation flag, equality only at the
   canonical ordering; slope rises along specialization. */
inline bool sweep_p1_comparison(std::string& diag, size_t max_n = 4, long box = 3) {
    for (size_t n = 1; n <= max_n; ++n) {
        std::vector<SplittingType> all;
        for (long total = -box * long(n); total <= box * long(n); ++total) {
            auto part = splitting_types_in_box(n, Int(total), Int(box));
            all.insert(all.end(), part.begin(), part.end());
        }
        RootDatum rd = build_gl(n);
        for (const auto& st : all) {
            CanonicalReduction cr = canonical_reduction(st);
            for (const auto& perm : flag_strata_of_permutations(st)) {
                QVec flag = to_rational(perm);
                if (!dominance_leq(rd, {flag, Side::coweight},
                                   {cr.stratum.slope.coords, Side::coweight})) {
                    diag += "canonical slope fails to dominate a flag at rank " +
                            std::to_string(n) + "\n";
                    return false;
                }
                if ((flag == cr.stratum.slope.coords) != (perm == st.degrees)) {
                    diag += "flag slope equality off the canonical ordering\n";
                    return false;
                }
            }
        }
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!specializes_to(a, b)) continue;
                CanonicalReduction ca = canonical_reduction(a), cb = canonical_reduction(b);
                if (!slope_geq(rd, cb.stratum.slope, ca.stratum.slope)) {
                    diag += "canonical slope fell along a specialization\n";
                    return false;
                }
            }
    }
    return true;
}

/* The slope filtration of the standard module reproduces the block data. */
inline bool sweep_p1_filtration(std::string& diag, size_t max_n = 4, long box = 3) {
    for (size_t n = 1; n <= max_n; ++n) {
        RootDatum rd = build_gl(n);
        IVec e1(n, Int(0));
        e1[0] = 1;
        WeightMultiset v = weyl_weights(rd, e1);
        for (long total = -box * long(n); total <= box * long(n); ++total)
            for (const auto& st : splitting_types_in_box(n, Int(total), Int(box))) {
                CanonicalReduction cr = canonical_reduction(st);
                auto levels = filtration_levels(rd, v, cr.stratum.slope);
                if (levels.size() != cr.hn.block_ranks.size()) {
                    diag += "filtration level count differs from block count\n";
                    return false;
                }
                for (size_t b = 0; b < levels.size(); ++b) {
                    if (levels[b].q != cr.hn.block_slopes[b] ||
                        levels[b].dim() != Int(cr.hn.block_ranks[b]) ||
                        levels[b].q * Rat(levels[b].dim()) != Rat(cr.hn.block_degrees[b]) ||
                        assoc_degree(levels[b].weights, cr.stratum.slope.coords) !=
                            Rat(cr.hn.block_degrees[b])) {
                        diag += "filtration block data mismatch\n";
                        return false;
                    }
                }
            }
    }
    return true;
}

inline bool sweep_p1_hom_vanishing(std::string& diag, size_t max_n = 4, long box = 3) {
    for (size_t n = 1; n <= max_n; ++n)
        for (long total = -box * long(n); total <= box * long(n); ++total)
            for (const auto& st : splitting_types_in_box(n, Int(total), Int(box)))
                if (!mds_hom_vanishing(st)) {
                    diag += "maximal destabilizing block admits maps to the quotient\n";
                    return false;
                }
    return true;
}

inline bool sweep_pgl_torsion(std::string& diag, size_t max_n = 4) {
    for (size_t n = 2; n <= max_n; ++n) {
        RootDatum rd = build_named("PGL", n);
        QuotientLattice ql = quotient_lattice(rd, full_subset(rd));
        Int order = 1;
        for (const auto& d : ql.torsion_orders) order *= d;
        if (ql.free_rank() != 0 || order != Int(n)) {
            diag += "PGL(" + std::to_string(n) + ") torsion order is not " +
                    std::to_string(n) + "\n";
            return false;
        }
    }
    return true;
}

/* The rank-3 closure skeleton: the complete-flag stratum's closure meets
   the subminimal parabolic stratum, and cross-parabolic containment is
   rejected as a precondition violation. */
inline bool sweep_gl3_skeleton(std::string& diag) {
    RootDatum rd = build_gl(3);
    QuotientLattice qb = quotient_lattice(rd, {});
    QuotientLattice qp = quotient_lattice(rd, {1});
    Stratum a = make_stratum(rd, {}, project(qb, IVec{2, 1, 0}));
    Stratum b = make_stratum(rd, {1}, project(qp, IVec{3, 0, 0}));
    if (!closure_meets_necessary(rd, a, b)) {
        diag += "closure of the complete-flag stratum misses the expected stratum\n";
        return false;
    }
    bool threw = false;
    try {
        closure_same_parabolic_contains(rd, a, b);
    } catch (const precondition_error&) {
        threw = true;
    }
    if (!threw) {
        diag += "cross-parabolic containment was not rejected\n";
        return false;
    }
    return true;
}

struct SweepResult {
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

inline std::vector<SweepResult> run_all_sweeps(size_t rank_bound = 3, size_t p1_rank = 4,
                                               long p1_box = 3) {
    using Fn = std::function<bool(std::string&)>;
    std::vector<std::pair<std::string, Fn>> sweeps = {
        {"gl-slope-formula", [&](std::string& d) { return sweep_gl_slope_formula(d); }},
        {"phi-simple-coroot",
         [&](std::string& d) { return sweep_phi_simple_coroot(d, std::max<size_t>(rank_bound, 4)); }},
        {"bruhat-double-cosets", [&](std::string& d) { return sweep_bruhat(d, rank_bound); }},
        {"freudenthal-dimensions", [&](std::string& d) { return sweep_freudenthal(d, rank_bound); }},
        {"coset-one-dimensionality",
         [&](std::string& d) { return sweep_one_dimensionality(d, rank_bound); }},
        {"destabilization-equivalence",
         [&](std::string& d) { return sweep_destabilization(d, rank_bound); }},
        {"slope-pullback-domination", [&](std::string& d) { return sweep_w1_lemma(d, rank_bound); }},
        {"p1-specialization", [&](std::string& d) { return sweep_p1_specialization(d, p1_rank, p1_box); }},
        {"p1-comparison", [&](std::string& d) { return sweep_p1_comparison(d, p1_rank, p1_box); }},
        {"p1-filtration", [&](std::string& d) { return sweep_p1_filtration(d, p1_rank, p1_box); }},
        {"p1-hom-vanishing", [&](std::string& d) { return sweep_p1_hom_vanishing(d, p1_rank, p1_box); }},
        {"pgl-torsion", [&](std::string& d) { return sweep_pgl_torsion(d); }},
        {"gl3-closure-skeleton", [&](std::string& d) { return sweep_gl3_skeleton(d); }},
    };
    std::vector<SweepResult> results;
    for (auto& [name, fn] : sweeps) {
        SweepResult r;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail += std::string("exception: ") + e.what() + "\n";
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace hn
