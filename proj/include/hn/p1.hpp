#pragma once

#include "hn/reps.hpp"
#include "hn/strata.hpp"

namespace hn {

/* A direct sum of line bundles on the projective line, recorded by its
   weakly decreasing degree tuple. */
struct SplittingType {
    IVec degrees;

    size_t rank() const { return degrees.size(); }
    Int total_degree() const {
        Int d = 0;
        for (const auto& x : degrees) d += x;
        return d;
    }
    bool operator==(const SplittingType& o) const { return degrees == o.degrees; }
    bool operator<(const SplittingType& o) const { return degrees < o.degrees; }
};

inline SplittingType make_splitting_type(IVec degrees) {
    if (degrees.empty()) throw precondition_error("splitting type needs rank >= 1");
    for (size_t i = 0; i + 1 < degrees.size(); ++i)
        if (degrees[i] < degrees[i + 1])
            throw precondition_error("splitting type degrees must be weakly decreasing");
    return {std::move(degrees)};
}

inline SplittingType sorted_splitting_type(IVec degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<Int>());
    return make_splitting_type(std::move(degrees));
}

struct HNData {
    std::vector<size_t> block_ranks;
    IVec block_degrees;
    QVec block_slopes;  // strictly decreasing
};

struct CanonicalReduction {
    HNData hn;
    RootDatum rd;  // GL(n)
    Stratum stratum;
};

/* Group equal degrees into blocks; the resulting parabolic stratum is the
   canonical reduction of the split bundle. */
inline CanonicalReduction canonical_reduction(const SplittingType& st) {
    size_t n = st.rank();
    CanonicalReduction cr;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        Int deg = 0;
        while (j < n && st.degrees[j] == st.degrees[i]) deg += st.degrees[j], ++j;
        cr.hn.block_ranks.push_back(j - i);
        cr.hn.block_degrees.push_back(deg);
        cr.hn.block_slopes.push_back(Rat(deg, Int(j - i)));
        i = j;
    }
    cr.rd = build_gl(n);
    std::vector<size_t> levi;
    for (size_t t = 0; t + 1 < n; ++t)
        if (st.degrees[t] == st.degrees[t + 1]) levi.push_back(t);
    QuotientLattice ql = quotient_lattice(cr.rd, levi);
    cr.stratum = make_stratum(cr.rd, levi, project(ql, st.degrees));
    /* The stratum slope repeats each block slope block-rank many times. */
    QVec expected;
    for (size_t b = 0; b < cr.hn.block_ranks.size(); ++b)
        for (size_t t = 0; t < cr.hn.block_ranks[b]; ++t)
            expected.push_back(cr.hn.block_slopes[b]);
    if (cr.stratum.slope.coords != expected)
        throw error("canonical stratum slope differs from the block slopes");
    return cr;
}

/* Specialization order: sorted-dominance test (equal totals and prefix sums
   of the target dominate). */
inline bool specializes_to(const SplittingType& d, const SplittingType& dp) {
    if (d.rank() != dp.rank()) throw precondition_error("specialization needs equal rank");
    if (d.total_degree() != dp.total_degree()) return false;
    Int a = 0, b = 0;
    for (size_t k = 0; k + 1 < d.rank(); ++k) {
        a += d.degrees[k];
        b += dp.degrees[k];
        if (b < a) return false;
    }
    return true;
}

/* Oracle form: some permutation of dp equals d plus a nonnegative integer
   combination of the vectors e_i - e_{i+1}. */
inline bool specializes_to_oracle(const SplittingType& d, const SplittingType& dp) {
    if (d.rank() != dp.rank()) throw precondition_error("specialization needs equal rank");
    IVec perm = dp.degrees;
    std::sort(perm.begin(), perm.end());
    do {
        IVec diff = vec_sub(perm, d.degrees);
        Int prefix = 0;
        bool ok = true;
        for (size_t k = 0; k < diff.size(); ++k) {
            prefix += diff[k];
            if (k + 1 < diff.size() ? prefix < 0 : prefix != 0) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Int hom_dim(const SplittingType& a, const SplittingType& b) {
    Int total = 0;
    for (const auto& ai : a.degrees)
        for (const auto& bj : b.degrees)
            if (bj - ai + 1 > 0) total += bj - ai + 1;
    return total;
}

/* No maps from the maximal destabilizing block to the rest of the bundle. */
inline bool mds_hom_vanishing(const SplittingType& st) {
    CanonicalReduction cr = canonical_reduction(st);
    size_t top = cr.hn.block_ranks[0];
    if (top == st.rank()) return true;
    SplittingType d{IVec(st.degrees.begin(), st.degrees.begin() + top)};
    SplittingType rest{IVec(st.degrees.begin() + top, st.degrees.end())};
    return hom_dim(d, rest) == 0;
}

/* Degree tuples of the complete flags induced by reordering the summands. */
inline std::vector<IVec> flag_strata_of_permutations(const SplittingType& st) {
    IVec perm = st.degrees;
    std::sort(perm.begin(), perm.end());
    std::vector<IVec> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct PosetReport {
    size_t n = 0;
    Int total_degree;
    Int box_bound;
    std::vector<SplittingType> nodes;               // lex sorted
    std::vector<std::pair<size_t, size_t>> edges;   // covering relations
    bool slope_monotone = false;   // canonical slope rises along every edge
    bool gl2_closure_ok = false;   // rank-2 closures are the expected chains
};

inline std::vector<SplittingType> splitting_types_in_box(size_t n, const Int& total,
                                                         const Int& box) {
    std::vector<SplittingType> out;
    IVec cur;
    auto rec = [&](auto&& self, Int remaining, Int upper) -> void {
        if (cur.size() == n) {
            if (remaining == 0) out.push_back({cur});
            return;
        }
        for (Int v = std::min(upper, box); v >= -box; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, total, box);
    std::sort(out.begin(), out.end());
    return out;
}

inline PosetReport strata_poset(size_t n, const Int& total, const Int& box) {
    if (box < 0) throw precondition_error("box bound must be nonnegative");
    PosetReport rep;
    rep.n = n;
    rep.total_degree = total;
    rep.box_bound = box;
    rep.nodes = splitting_types_in_box(n, total, box);
    size_t count = rep.nodes.size();

    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b)
            leq[a][b] = specializes_to(rep.nodes[a], rep.nodes[b]);
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool covering = true;
            for (size_t c = 0; c < count && covering; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b]) covering = false;
            if (covering) rep.edges.push_back({a, b});
        }

    rep.slope_monotone = true;
    std::vector<CanonicalReduction> crs;
    for (const auto& node : rep.nodes) crs.push_back(canonical_reduction(node));
    for (const auto& [a, b] : rep.edges)
        if (!slope_geq(crs[a].rd, crs[b].stratum.slope, crs[a].stratum.slope))
            rep.slope_monotone = false;

    rep.gl2_closure_ok = true;
    if (n == 2) {
        for (size_t a = 0; a < count; ++a)
            for (size_t b = 0; b < count; ++b) {
                bool expected = rep.nodes[b].degrees[0] >= rep.nodes[a].degrees[0];
                if (leq[a][b] != expected) rep.gl2_closure_ok = false;
            }
    }
    return rep;
}

}  // namespace hn
