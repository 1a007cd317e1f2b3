#pragma once

#include <map>
#include <set>

#include "hn/rootdata.hpp"

namespace hn {

struct CosetSetup {
    RootDatum rd;
    std::vector<size_t> levi1;  // I_M1
    std::vector<size_t> levi2;  // I_M2
};

inline CosetSetup make_setup(const RootDatum& rd, std::vector<size_t> l1, std::vector<size_t> l2) {
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    for (size_t i : l1)
        if (i >= rd.size()) throw precondition_error("I_M1 index out of range");
    for (size_t i : l2)
        if (i >= rd.size()) throw precondition_error("I_M2 index out of range");
    return {rd, std::move(l1), std::move(l2)};
}

/* Roots supported on a subset of the simple indices. */
inline std::set<IVec> levi_roots(const RootDatum& rd, const std::vector<size_t>& levi) {
    std::set<IVec> out;
    std::vector<bool> in_levi(rd.size(), false);
    for (size_t i : levi) in_levi[i] = true;
    for (const auto& p : all_roots(rd)) {
        QVec c = root_coefficients(rd, p.root);
        bool ok = true;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0 && !in_levi[i]) ok = false;
        if (ok) out.insert(p.root);
    }
    return out;
}

inline std::set<IVec> positive_root_set(const RootDatum& rd) {
    std::set<IVec> out;
    for (const auto& p : positive_roots(rd)) out.insert(p.root);
    return out;
}

inline std::set<IVec> act_on_set(const WeylElement& w, const std::set<IVec>& roots) {
    std::set<IVec> out;
    for (const auto& r : roots) out.insert(act(w, r, Side::weight));
    return out;
}

/* Minimality via the positivity criterion on both Levi's simple roots. */
inline bool is_min_rep(const CosetSetup& setup, const WeylElement& w) {
    const RootDatum& rd = setup.rd;
    WeylElement winv = inverse(rd, w);
    for (size_t i : setup.levi1)
        if (!is_positive_root(rd, act(winv, rd.simple_roots[i], Side::weight))) return false;
    for (size_t i : setup.levi2)
        if (!is_positive_root(rd, act(w, rd.simple_roots[i], Side::weight))) return false;
    return true;
}

inline std::vector<WeylElement> min_reps(const CosetSetup& setup, size_t cap = 0) {
    std::vector<WeylElement> out;
    for (const auto& w : weyl_elements(setup.rd, cap))
        if (is_min_rep(setup, w)) out.push_back(w);
    return out;
}

/* Brute-force double-coset partition; each coset keyed by its sorted member
   matrices. Used as the oracle for min_reps. */
inline std::vector<std::vector<WeylElement>> double_cosets(const CosetSetup& setup,
                                                           size_t cap = 0) {
    const RootDatum& rd = setup.rd;
    auto all = weyl_elements(rd, cap);
    std::map<IMat, size_t> index_of;
    for (size_t i = 0; i < all.size(); ++i) index_of[all[i].wt_mat] = i;
    std::vector<WeylElement> gens1, gens2;
    for (size_t i : setup.levi1) gens1.push_back(simple_reflection(rd, i));
    for (size_t i : setup.levi2) gens2.push_back(simple_reflection(rd, i));

    std::vector<int> coset(all.size(), -1);
    std::vector<std::vector<WeylElement>> cosets;
    for (size_t start = 0; start < all.size(); ++start) {
        if (coset[start] >= 0) continue;
        int id = int(cosets.size());
        cosets.emplace_back();
        std::vector<size_t> queue{start};
        coset[start] = id;
        while (!queue.empty()) {
            size_t cur = queue.back();
            queue.pop_back();
            cosets[id].push_back(all[cur]);
            for (const auto& g : gens1) {
                size_t next = index_of.at(mul(rd, g, all[cur]).wt_mat);
                if (coset[next] < 0) {
                    coset[next] = id;
                    queue.push_back(next);
                }
            }
            for (const auto& g : gens2) {
                size_t next = index_of.at(mul(rd, all[cur], g).wt_mat);
                if (coset[next] < 0) {
                    coset[next] = id;
                    queue.push_back(next);
                }
            }
        }
    }
    return cosets;
}

/* Deeper Levi subsets: the simple indices matched up by w across the setup. */
struct LeviPair {
    WeylElement w;
    std::vector<size_t> levi1;  // I_L1 inside I_M1
    std::vector<size_t> levi2;  // I_L2 inside I_M2
};

inline LeviPair deeper_levi_sets(const CosetSetup& setup, const WeylElement& w) {
    if (!is_min_rep(setup, w))
        throw precondition_error("deeper Levi sets need a minimal representative");
    const RootDatum& rd = setup.rd;
    LeviPair lp;
    lp.w = w;
    for (size_t j : setup.levi2) {
        IVec image = act(w, rd.simple_roots[j], Side::weight);
        for (size_t i : setup.levi1)
            if (image == rd.simple_roots[i]) {
                lp.levi1.push_back(i);
                lp.levi2.push_back(j);
            }
    }
    std::sort(lp.levi1.begin(), lp.levi1.end());
    /* levi2 is already sorted since levi2 of the setup is; levi1 re-sorted
       because w need not preserve the index order. */
    return lp;
}

struct RootIdentityReport {
    bool levi_intersection1 = false;  // R_L1 = R_M1 meet w(R_M2)
    bool levi_intersection2 = false;  // R_L2 = w^{-1}(R_M1) meet R_M2
    bool union_bound1 = false;        // (R_M1 u R_+) meet w(R_M2 u R_+) inside R_+ u R_L1
    bool union_bound2 = false;        // mirror under w^{-1}
    bool complement_stability = false;  // w^{-1}(R_+ minus R_L1) meet (R_+ u R_L2) inside R_+ minus R_L2
    bool simple_image = false;        // w^{-1} of matched simple roots stays simple inside R_M2
    bool levi_lattice_match = false;  // w(Z R_L2) = Z R_L1

    bool all_pass() const {
        return levi_intersection1 && levi_intersection2 && union_bound1 && union_bound2 &&
               complement_stability && simple_image && levi_lattice_match;
    }
};

inline RootIdentityReport verify_root_identities(const CosetSetup& setup, const WeylElement& w) {
    if (!is_min_rep(setup, w))
        throw precondition_error("root identities need a minimal representative");
    const RootDatum& rd = setup.rd;
    LeviPair lp = deeper_levi_sets(setup, w);
    WeylElement winv = inverse(rd, w);

    std::set<IVec> rm1 = levi_roots(rd, setup.levi1);
    std::set<IVec> rm2 = levi_roots(rd, setup.levi2);
    std::set<IVec> rl1 = levi_roots(rd, lp.levi1);
    std::set<IVec> rl2 = levi_roots(rd, lp.levi2);
    std::set<IVec> rp = positive_root_set(rd);
    std::set<IVec> w_rm2 = act_on_set(w, rm2);
    std::set<IVec> winv_rm1 = act_on_set(winv, rm1);

    auto set_union = [](const std::set<IVec>& a, const std::set<IVec>& b) {
        std::set<IVec> r = a;
        r.insert(b.begin(), b.end());
        return r;
    };
    auto set_inter = [](const std::set<IVec>& a, const std::set<IVec>& b) {
        std::set<IVec> r;
        for (const auto& x : a)
            if (b.count(x)) r.insert(x);
        return r;
    };
    auto subset_of = [](const std::set<IVec>& a, const std::set<IVec>& b) {
        for (const auto& x : a)
            if (!b.count(x)) return false;
        return true;
    };

    RootIdentityReport rep;
    rep.levi_intersection1 = rl1 == set_inter(rm1, w_rm2);
    rep.levi_intersection2 = rl2 == set_inter(winv_rm1, rm2);
    rep.union_bound1 =
        subset_of(set_inter(set_union(rm1, rp), act_on_set(w, set_union(rm2, rp))),
                  set_union(rp, rl1));
    rep.union_bound2 =
        subset_of(set_inter(act_on_set(winv, set_union(rm1, rp)), set_union(rm2, rp)),
                  set_union(rp, rl2));
    {
        std::set<IVec> lhs;
        for (const auto& r : rp)
            if (!rl1.count(r)) lhs.insert(act(winv, r, Side::weight));
        std::set<IVec> mid = set_inter(lhs, set_union(rp, rl2));
        std::set<IVec> rhs;
        for (const auto& r : rp)
            if (!rl2.count(r)) rhs.insert(r);
        rep.complement_stability = subset_of(mid, rhs);
    }
    {
        rep.simple_image = true;
        std::set<IVec> simple2;
        for (size_t j = 0; j < rd.size(); ++j) simple2.insert(rd.simple_roots[j]);
        for (size_t i : setup.levi1) {
            IVec image = act(winv, rd.simple_roots[i], Side::weight);
            if (rm2.count(image) && !simple2.count(image)) rep.simple_image = false;
        }
    }
    {
        /* w(Z R_L2) = Z R_L1: generators map into each other's span integrally. */
        std::vector<IVec> basis1, basis2;
        for (size_t i : lp.levi1) basis1.push_back(rd.simple_roots[i]);
        for (size_t j : lp.levi2) basis2.push_back(rd.simple_roots[j]);
        auto integral_member = [](const std::vector<IVec>& basis, const IVec& v) {
            auto c = solve_in_span(basis, v);
            if (!c) return false;
            for (const auto& x : *c)
                if (denominator(x) != 1) return false;
            return true;
        };
        rep.levi_lattice_match = true;
        for (const auto& b : basis2)
            if (!integral_member(basis1, act(w, b, Side::weight))) rep.levi_lattice_match = false;
        for (const auto& b : basis1)
            if (!integral_member(basis2, act(winv, b, Side::weight))) rep.levi_lattice_match = false;
    }
    return rep;
}

}  // namespace hn
