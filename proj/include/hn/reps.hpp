#pragma once

#include <map>

#include "hn/bruhat.hpp"
#include "hn/slope.hpp"

namespace hn {

struct WeightMultiset {
    IVec highest;
    std::map<IVec, Int> weights;  // weight -> multiplicity (> 0)

    Int dimension() const {
        Int d = 0;
        for (const auto& [w, m] : weights) d += m;
        return d;
    }

    bool operator==(const WeightMultiset& o) const {
        return highest == o.highest && weights == o.weights;
    }
};

/* Weyl dimension formula via coroot pairings with lambda + rho (doubled to
   stay integral). Independent of the multiplicity recursion. */
inline Int weyl_dimension(const RootDatum& rd, const IVec& lambda) {
    if (!is_dominant_weight(rd, lambda))
        throw precondition_error("highest weight must be dominant");
    auto pos = positive_roots(rd);
    IVec two_rho(rd.rank, Int(0));
    for (const auto& p : pos) two_rho = vec_add(two_rho, p.root);
    Rat dim = 1;
    for (const auto& p : pos) {
        Int den = dot(p.coroot, two_rho);
        Int num = den + 2 * dot(p.coroot, lambda);
        dim *= Rat(num, den);
    }
    if (denominator(dim) != 1) throw error("Weyl dimension formula gave a non-integer");
    return numerator(dim);
}

namespace detail {

/* W-invariant form on doubled weight vectors via positive coroots. */
inline Int invariant_form(const std::vector<RootPair>& pos, const IVec& x, const IVec& y) {
    Int s = 0;
    for (const auto& p : pos) s += dot(p.coroot, x) * dot(p.coroot, y);
    return s;
}

/* Conjugate a weight into the dominant chamber by simple reflections. */
inline IVec dominant_conjugate(const RootDatum& rd, IVec v) {
    for (;;) {
        bool moved = false;
        for (size_t i = 0; i < rd.size(); ++i) {
            Int p = dot(rd.simple_coroots[i], v);
            if (p < 0) {
                for (size_t k = 0; k < rd.rank; ++k) v[k] -= p * rd.simple_roots[i][k];
                moved = true;
            }
        }
        if (!moved) return v;
    }
}

}  // namespace detail

/* Full weight multiset of the Weyl module of highest weight lambda,
   multiplicities by the Freudenthal recursion on dominant weights followed
   by Weyl-orbit expansion; the dimension is checked against the Weyl
   dimension formula. */
inline WeightMultiset weyl_weights(const RootDatum& rd, const IVec& lambda) {
    if (!is_dominant_weight(rd, lambda))
        throw precondition_error("highest weight must be dominant");
    WeightMultiset out;
    out.highest = lambda;
    if (rd.size() == 0) {
        out.weights[lambda] = 1;
        return out;
    }
    auto pos = positive_roots(rd);
    IVec two_rho(rd.rank, Int(0));
    for (const auto& p : pos) two_rho = vec_add(two_rho, p.root);

    /* Bounding box: coefficients of lambda - (lowest weight) in the simple
       root basis bound the coefficient vector of lambda - mu componentwise. */
    IVec lowest = lambda;
    for (;;) {
        bool moved = false;
        for (size_t i = 0; i < rd.size(); ++i) {
            Int p = dot(rd.simple_coroots[i], lowest);
            if (p > 0) {
                for (size_t k = 0; k < rd.rank; ++k) lowest[k] -= p * rd.simple_roots[i][k];
                moved = true;
            }
        }
        if (!moved) break;
    }
    QVec kq = root_coefficients(rd, vec_sub(lambda, lowest));
    size_t m = rd.size();
    std::vector<long> box(m);
    for (size_t i = 0; i < m; ++i) {
        if (denominator(kq[i]) != 1 || kq[i] < 0)
            throw error("weight box bound is not a nonnegative integer");
        box[i] = static_cast<long>(numerator(kq[i]));
    }
    std::vector<QVec> pos_coeff(pos.size());
    for (size_t a = 0; a < pos.size(); ++a) pos_coeff[a] = root_coefficients(rd, pos[a].root);

    /* Enumerate dominant candidates mu = lambda - sum k_i alpha_i. */
    struct Candidate {
        IVec mu;
        long height;
    };
    std::vector<Candidate> cands;
    std::vector<long> k(m, 0);
    for (;;) {
        IVec mu = lambda;
        long h = 0;
        for (size_t i = 0; i < m; ++i) {
            h += k[i];
            for (size_t t = 0; t < rd.rank; ++t) mu[t] -= Int(k[i]) * rd.simple_roots[i][t];
        }
        if (is_dominant_weight(rd, mu)) cands.push_back({std::move(mu), h});
        size_t i = 0;
        while (i < m && k[i] == box[i]) k[i++] = 0;
        if (i == m) break;
        ++k[i];
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.height < b.height; });

    auto doubled = [&](const IVec& v) {
        IVec d(v.size());
        for (size_t i = 0; i < v.size(); ++i) d[i] = 2 * v[i];
        return vec_add(d, two_rho);
    };
    Int top_norm = detail::invariant_form(pos, doubled(lambda), doubled(lambda));

    std::map<IVec, Int> dominant_mult;
    for (const auto& cand : cands) {
        if (cand.height == 0) {
            dominant_mult[cand.mu] = 1;
            continue;
        }
        Int num = 0;
        for (size_t a = 0; a < pos.size(); ++a) {
            IVec nu = cand.mu;
            for (long step = 1;; ++step) {
                nu = vec_add(nu, pos[a].root);
                /* Stop once lambda - nu leaves the nonnegative box. */
                bool inside = true;
                QVec c = root_coefficients(rd, vec_sub(lambda, nu));
                for (size_t i = 0; i < m && inside; ++i)
                    if (c[i] < 0) inside = false;
                if (!inside) break;
                auto it = dominant_mult.find(detail::dominant_conjugate(rd, nu));
                if (it == dominant_mult.end() || it->second == 0) continue;
                IVec nu2(rd.rank);
                for (size_t t = 0; t < rd.rank; ++t) nu2[t] = 2 * nu[t];
                IVec alpha2(rd.rank);
                for (size_t t = 0; t < rd.rank; ++t) alpha2[t] = 2 * pos[a].root[t];
                num += it->second * detail::invariant_form(pos, nu2, alpha2);
            }
        }
        num *= 2;
        Int denom = top_norm - detail::invariant_form(pos, doubled(cand.mu), doubled(cand.mu));
        if (denom <= 0) throw error("Freudenthal denominator must be positive");
        if (num % denom != 0) throw error("Freudenthal recursion gave a non-integer");
        dominant_mult[cand.mu] = num / denom;
    }

    /* Orbit expansion. */
    for (const auto& [mu, mult] : dominant_mult) {
        if (mult == 0) continue;
        std::set<IVec> orbit{mu};
        std::vector<IVec> queue{mu};
        while (!queue.empty()) {
            IVec v = queue.back();
            queue.pop_back();
            for (size_t i = 0; i < rd.size(); ++i) {
                Int p = dot(rd.simple_coroots[i], v);
                IVec u = v;
                for (size_t t = 0; t < rd.rank; ++t) u[t] -= p * rd.simple_roots[i][t];
                if (orbit.insert(u).second) queue.push_back(u);
            }
        }
        for (const auto& v : orbit) out.weights[v] = mult;
    }

    if (out.dimension() != weyl_dimension(rd, lambda))
        throw error("Freudenthal dimension disagrees with the Weyl dimension formula");
    return out;
}

namespace detail {

/* Coefficients of nu - base in the simple root basis, or nullopt. */
inline std::optional<QVec> coset_coefficients(const RootDatum& rd, const IVec& base,
                                              const IVec& nu) {
    return solve_in_span(rd.simple_roots, vec_sub(nu, base));
}

}  // namespace detail

/* Restriction of V to weights congruent to the highest weight modulo the
   root lattice of the Levi. */
inline WeightMultiset subspace_mod_RM(const RootDatum& rd, const WeightMultiset& v,
                                      const std::vector<size_t>& levi) {
    std::vector<bool> in_levi(rd.size(), false);
    for (size_t i : levi) in_levi[i] = true;
    WeightMultiset out;
    out.highest = v.highest;
    for (const auto& [nu, m] : v.weights) {
        auto c = detail::coset_coefficients(rd, v.highest, nu);
        if (!c) continue;
        bool ok = true;
        for (size_t i = 0; i < c->size(); ++i) {
            if (denominator((*c)[i]) != 1) ok = false;
            if ((*c)[i] != 0 && !in_levi[i]) ok = false;
        }
        if (ok) out.weights[nu] = m;
    }
    return out;
}

/* The three subspaces attached to a minimal double-coset representative:
   V[lambda + ZR_L2], V[>= (w lambda + ZR_L1)], and the graded coset piece
   V[w lambda + ZR_L1]. */
struct BruhatSubspaces {
    WeightMultiset coset_l2;    // V[lambda + ZR_L2]
    WeightMultiset geq_w_coset; // V[>= (w lambda + ZR_L1)]
    WeightMultiset w_coset;     // V[w lambda + ZR_L1]
};

inline BruhatSubspaces bruhat_subspaces(const RootDatum& rd, const WeightMultiset& v,
                                        const LeviPair& lp) {
    BruhatSubspaces out;
    out.coset_l2 = subspace_mod_RM(rd, v, lp.levi2);
    IVec wl = act(lp.w, v.highest, Side::weight);
    out.geq_w_coset.highest = v.highest;
    out.w_coset.highest = v.highest;
    std::vector<bool> in_l1(rd.size(), false);
    for (size_t i : lp.levi1) in_l1[i] = true;
    for (const auto& [nu, m] : v.weights) {
        auto c = detail::coset_coefficients(rd, wl, nu);
        if (!c) continue;
        bool geq = true, in_coset = true;
        for (size_t i = 0; i < c->size(); ++i) {
            if (denominator((*c)[i]) != 1) geq = in_coset = false;
            if (!in_l1[i]) {
                if ((*c)[i] < 0) geq = false;
                if ((*c)[i] != 0) in_coset = false;
            }
        }
        if (geq) out.geq_w_coset.weights[nu] = m;
        if (geq && in_coset) out.w_coset.weights[nu] = m;
    }
    return out;
}

struct FiltrationLevel {
    Rat q;
    std::map<IVec, Int> weights;

    Int dim() const {
        Int d = 0;
        for (const auto& [w, m] : weights) d += m;
        return d;
    }
};

/* Degree of the associated multiset against a slope vector. */
inline Rat assoc_degree(const std::map<IVec, Int>& weights, const QVec& s) {
    Rat d = 0;
    for (const auto& [nu, m] : weights) d += Rat(m) * dot(nu, s);
    return d;
}

inline Rat assoc_degree(const WeightMultiset& v, const SlopeVector& s) {
    return assoc_degree(v.weights, s.coords);
}

inline Rat assoc_slope_top(const WeightMultiset& v, const SlopeVector& s) {
    return dot(v.highest, s.coords);
}

/* Filtration of V by the pairing with a dominant P-regular slope vector;
   levels in strictly decreasing order of the jump value q. */
inline std::vector<FiltrationLevel> filtration_levels(const RootDatum& rd,
                                                      const WeightMultiset& v,
                                                      const SlopeVector& s) {
    if (!is_dominant_P_regular(rd, s))
        throw precondition_error("filtration needs a dominant P-regular slope vector");
    std::map<Rat, std::map<IVec, Int>, std::greater<Rat>> by_q;
    for (const auto& [nu, m] : v.weights) by_q[dot(nu, s.coords)][nu] = m;
    std::vector<FiltrationLevel> out;
    for (auto& [q, ws] : by_q) out.push_back({q, std::move(ws)});
    if (!out.empty()) {
        WeightMultiset top = subspace_mod_RM(rd, v, s.levi);
        if (out[0].weights != top.weights)
            throw error("top filtration level differs from the Levi coset subspace");
    }
    return out;
}

}  // namespace hn
