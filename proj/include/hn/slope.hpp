#pragma once

#include "hn/lattice.hpp"

namespace hn {

/* Exact rational coweight phi_P(c), orthogonal to the Levi's simple roots. */
struct SlopeVector {
    QVec coords;
    std::vector<size_t> levi;  // provenance I_M
};

/* phi on an arbitrary integral coweight representative. */
inline QVec phi_of_lift(const RootDatum& rd, const std::vector<size_t>& levi, const IVec& v) {
    size_t m = levi.size();
    QVec result = to_rational(v);
    if (m == 0) return result;
    QMat a(m, QVec(m));
    QVec rhs(m);
    for (size_t j = 0; j < m; ++j) {
        for (size_t i = 0; i < m; ++i)
            a[j][i] = Rat(rd.cartan(levi[i], levi[j]));  /* <coroot_i, root_j> */
        rhs[j] = Rat(dot(v, rd.simple_roots[levi[j]]));
    }
    auto x = solve_square(a, rhs);
    if (!x) throw error("Levi Cartan submatrix unexpectedly singular");
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < rd.rank; ++k)
            result[k] -= (*x)[i] * Rat(rd.simple_coroots[levi[i]][k]);
    return result;
}

inline SlopeVector phi(const QuotientLattice& ql, const QuotientClass& c) {
    return {phi_of_lift(ql.rd, ql.levi, lift(ql, c)), ql.levi};
}

inline bool is_dominant_P_regular(const RootDatum& rd, const SlopeVector& s) {
    std::vector<bool> in_levi(rd.size(), false);
    for (size_t i : s.levi) in_levi[i] = true;
    for (size_t j = 0; j < rd.size(); ++j)
        if (!in_levi[j] && dot(rd.simple_roots[j], s.coords) <= 0) return false;
    return true;
}

/* First simple root outside I_M where regularity fails, or SIZE_MAX. */
inline size_t regularity_failure(const RootDatum& rd, const SlopeVector& s) {
    std::vector<bool> in_levi(rd.size(), false);
    for (size_t i : s.levi) in_levi[i] = true;
    for (size_t j = 0; j < rd.size(); ++j)
        if (!in_levi[j] && dot(rd.simple_roots[j], s.coords) <= 0) return j;
    return SIZE_MAX;
}

inline SlopeVector phi_of_simple_coroot(const QuotientLattice& ql, size_t j) {
    for (size_t i : ql.levi)
        if (i == j) throw precondition_error("index must lie outside the parabolic subset");
    if (j >= ql.rd.size()) throw precondition_error("simple coroot index out of range");
    SlopeVector s{phi_of_lift(ql.rd, ql.levi, ql.rd.simple_coroots[j]), ql.levi};
    auto c = solve_in_span(ql.rd.simple_coroots, s.coords);
    if (!c) throw error("phi of a simple coroot left the coroot span");
    for (const auto& x : *c)
        if (x < 0) throw error("phi of a simple coroot left the nonnegative coroot cone");
    if (dot(ql.rd.simple_roots[j], s.coords) <= 0)
        throw error("phi of a simple coroot pairs nonpositively with its root");
    return s;
}

/* a >= b in the coweight dominance order. */
inline bool slope_geq(const RootDatum& rd, const SlopeVector& a, const SlopeVector& b) {
    return dominance_leq(rd, {b.coords, Side::coweight}, {a.coords, Side::coweight});
}

/* Decomposition of phi_P(c) - phi_G(lambda_G) in the basis
   { phi_P(class of coroot_i) : i outside I_M }; the coefficients represent
   the projection of the class away from the central directions. */
struct ProjPResult {
    std::vector<size_t> support;  // indices i outside I_M, sorted
    QVec coefficients;            // same length
    QVec rep;                     // sum c_i phi_P(coroot_i), a rational coweight
};

inline ProjPResult proj_P(const QuotientLattice& ql, const QuotientClass& c) {
    const RootDatum& rd = ql.rd;
    std::vector<bool> in_levi(rd.size(), false);
    for (size_t i : ql.levi) in_levi[i] = true;
    ProjPResult r;
    for (size_t i = 0; i < rd.size(); ++i)
        if (!in_levi[i]) r.support.push_back(i);

    IVec v = lift(ql, c);
    QVec phi_c = phi_of_lift(rd, ql.levi, v);
    QuotientLattice full = quotient_lattice(rd, [&] {
        std::vector<size_t> all(rd.size());
        for (size_t i = 0; i < rd.size(); ++i) all[i] = i;
        return all;
    }());
    QVec phi_g = phi_of_lift(rd, full.levi, v);
    QVec diff = vec_sub(phi_c, phi_g);

    /* diff lies in span{ phi_P(coroot_i) : i in support }; solve the square
       system of pairings with the roots of the support. */
    size_t k = r.support.size();
    r.coefficients.assign(k, Rat(0));
    r.rep.assign(rd.rank, Rat(0));
    if (k == 0) {
        if (!is_zero(diff)) throw error("projection residue in the degenerate case");
        return r;
    }
    std::vector<QVec> images(k);
    for (size_t t = 0; t < k; ++t)
        images[t] = phi_of_lift(rd, ql.levi, rd.simple_coroots[r.support[t]]);
    QMat a(k, QVec(k));
    QVec rhs(k);
    for (size_t row = 0; row < k; ++row) {
        for (size_t col = 0; col < k; ++col)
            a[row][col] = dot(rd.simple_roots[r.support[row]], images[col]);
        rhs[row] = dot(rd.simple_roots[r.support[row]], diff);
    }
    auto x = solve_square(a, rhs);
    if (!x) throw error("projection pairing matrix unexpectedly singular");
    r.coefficients = *x;
    for (size_t t = 0; t < k; ++t)
        for (size_t j = 0; j < rd.rank; ++j) r.rep[j] += r.coefficients[t] * images[t][j];
    if (r.rep != diff) throw error("projection identity failed: phi_P(proj) != phi_P - phi_G");
    return r;
}

/* Destabilization test, computed along two independent routes which are
   asserted to agree: the slope inequality and the sign pattern of proj_P. */
inline bool is_destabilizing(const QuotientLattice& ql, const QuotientClass& c,
                             const QuotientClass& lambda_G) {
    const RootDatum& rd = ql.rd;
    std::vector<size_t> all(rd.size());
    for (size_t i = 0; i < rd.size(); ++i) all[i] = i;
    QuotientLattice full = quotient_lattice(rd, all);
    if (!(project(full, lift(ql, c)) == lambda_G))
        throw precondition_error("degree class does not project to lambda_G");

    SlopeVector sp = phi(ql, c);
    SlopeVector sg = phi(full, lambda_G);
    bool via_slope = !slope_geq(rd, sg, sp);

    ProjPResult pr = proj_P(ql, c);
    bool in_negative_cone = true;
    for (const auto& x : pr.coefficients)
        if (x > 0) in_negative_cone = false;
    bool via_proj = !in_negative_cone;

    if (via_slope != via_proj) throw error("destabilization criteria disagree");
    return via_slope;
}

/* Split a dominant rational weight as mu + tau with mu dominant and
   orthogonal to the Levi coroots and tau a nonnegative combination of the
   Levi's simple roots. */
struct DominantDecomposition {
    QVec mu;
    QVec tau;
    QVec tau_coefficients;  // indexed by position in I_M2
};

inline DominantDecomposition decompose_dominant(const RootDatum& rd,
                                                const std::vector<size_t>& levi,
                                                const QVec& lambda) {
    for (size_t i = 0; i < rd.size(); ++i)
        if (dot(rd.simple_coroots[i], lambda) < 0)
            throw precondition_error("weight is not dominant");
    size_t m = levi.size();
    DominantDecomposition d;
    d.mu = lambda;
    d.tau.assign(rd.rank, Rat(0));
    d.tau_coefficients.assign(m, Rat(0));
    if (m == 0) return d;
    /* Choose tau in span{root_i : i in levi} with <coroot_j, lambda - tau> = 0
       for j in levi. */
    QMat a(m, QVec(m));
    QVec rhs(m);
    for (size_t j = 0; j < m; ++j) {
        for (size_t i = 0; i < m; ++i) a[j][i] = Rat(rd.cartan(levi[j], levi[i]));
        rhs[j] = dot(rd.simple_coroots[levi[j]], lambda);
    }
    auto x = solve_square(a, rhs);
    if (!x) throw error("Levi Cartan submatrix unexpectedly singular");
    d.tau_coefficients = *x;
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < rd.rank; ++k)
            d.tau[k] += (*x)[i] * Rat(rd.simple_roots[levi[i]][k]);
    d.mu = vec_sub(lambda, d.tau);
    for (const auto& t : d.tau_coefficients)
        if (t < 0) throw error("dominant decomposition produced a negative coefficient");
    for (size_t i = 0; i < rd.size(); ++i)
        if (dot(rd.simple_coroots[i], d.mu) < 0)
            throw error("dominant decomposition produced a non-dominant part");
    return d;
}

}  // namespace hn
