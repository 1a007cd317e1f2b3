#pragma once

#include "hn/slope.hpp"

namespace hn {

struct Stratum {
    std::vector<size_t> levi;  // I_M
    QuotientClass degree;
    SlopeVector slope;
    QuotientClass lambda_G;  // class of the degree in the full quotient
};

inline std::vector<size_t> full_subset(const RootDatum& rd) {
    std::vector<size_t> all(rd.size());
    for (size_t i = 0; i < rd.size(); ++i) all[i] = i;
    return all;
}

inline Stratum make_stratum(const RootDatum& rd, const std::vector<size_t>& levi,
                            const QuotientClass& degree) {
    QuotientLattice ql = quotient_lattice(rd, levi);
    Stratum st;
    st.levi = ql.levi;
    st.degree = degree;
    st.slope = phi(ql, degree);
    size_t bad = regularity_failure(rd, st.slope);
    if (bad != SIZE_MAX)
        throw precondition_error("slope is not dominant P-regular: simple root " +
                                 std::to_string(bad) + " pairs nonpositively");
    QuotientLattice full = quotient_lattice(rd, full_subset(rd));
    st.lambda_G = project(full, lift(ql, degree));
    return st;
}

struct ComparisonResult {
    bool geq = false;
    bool equal = false;
    bool parabolic_included = false;  // I_M' subset of I_M, reported when equal
};

inline ComparisonResult comparison_geq(const RootDatum& rd, const Stratum& canonical,
                                       const std::vector<size_t>& other_levi,
                                       const QuotientClass& other_degree) {
    QuotientLattice ql = quotient_lattice(rd, other_levi);
    QuotientLattice full = quotient_lattice(rd, full_subset(rd));
    QuotientClass other_lambda = project(full, lift(ql, other_degree));
    if (!(other_lambda == canonical.lambda_G))
        throw precondition_error("strata lie in different connected components");
    SlopeVector other_slope = phi(ql, other_degree);
    ComparisonResult r;
    r.geq = slope_geq(rd, canonical.slope, other_slope);
    r.equal = canonical.slope.coords == other_slope.coords;
    if (r.equal) {
        r.parabolic_included = true;
        for (size_t i : ql.levi)
            if (std::find(canonical.levi.begin(), canonical.levi.end(), i) ==
                canonical.levi.end())
                r.parabolic_included = false;
    }
    return r;
}

/* All strata with the given component class whose slope offsets
   phi_P - phi_G = sum c_i omega_i satisfy 0 < c_i <= bound off the Levi.
   Order: parabolic size ascending (complement descending), then slope lex. */
inline std::vector<Stratum> enumerate_strata(const RootDatum& rd, const QuotientClass& lambda_G,
                                             const Rat& bound) {
    if (bound < 0) throw precondition_error("enumeration bound must be nonnegative");
    QuotientLattice full = quotient_lattice(rd, full_subset(rd));
    IVec base = lift(full, lambda_G);
    size_t m = rd.size();
    std::vector<Stratum> out;

    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<size_t> levi, comp;
        for (size_t i = 0; i < m; ++i)
            (mask & (size_t(1) << i) ? levi : comp).push_back(i);
        size_t k = comp.size();
        if (k == 0) {
            out.push_back(make_stratum(rd, levi, lambda_G));
            continue;
        }
        QuotientLattice ql = quotient_lattice(rd, levi);
        /* c_j(n) = b_j + (M n)_j where n shifts the lift by coroots off the
           Levi; M is invertible, so the (0, bound] box pulls back to a
           bounded region of integer points. */
        QVec phi0 = phi_of_lift(rd, ql.levi, base);
        std::vector<QVec> images(k);
        for (size_t t = 0; t < k; ++t)
            images[t] = phi_of_lift(rd, ql.levi, rd.simple_coroots[comp[t]]);
        QVec b(k);
        QMat mat(k, QVec(k));
        for (size_t j = 0; j < k; ++j) {
            b[j] = dot(rd.simple_roots[comp[j]], phi0);
            for (size_t t = 0; t < k; ++t)
                mat[j][t] = dot(rd.simple_roots[comp[j]], images[t]);
        }
        /* Bounding box of M^{-1}(corner - b) over the 2^k corners. */
        std::vector<Int> lo(k), hi(k);
        bool first = true;
        for (size_t corner = 0; corner < (size_t(1) << k); ++corner) {
            QVec c(k);
            for (size_t j = 0; j < k; ++j)
                c[j] = (corner & (size_t(1) << j)) ? bound : Rat(0);
            auto n = solve_square(mat, vec_sub(c, b));
            if (!n) throw error("slope coefficient matrix unexpectedly singular");
            for (size_t j = 0; j < k; ++j) {
                Int fl = rat_floor((*n)[j]);
                Int ce = rat_ceil((*n)[j]);
                if (first) {
                    lo[j] = fl;
                    hi[j] = ce;
                } else {
                    lo[j] = std::min(lo[j], fl);
                    hi[j] = std::max(hi[j], ce);
                }
            }
            first = false;
        }
        std::vector<Int> n(k);
        for (size_t j = 0; j < k; ++j) n[j] = lo[j];
        for (;;) {
            QVec c(k);
            bool ok = true;
            for (size_t j = 0; j < k && ok; ++j) {
                c[j] = b[j];
                for (size_t t = 0; t < k; ++t) c[j] += mat[j][t] * Rat(n[t]);
                if (c[j] <= 0 || c[j] > bound) ok = false;
            }
            if (ok) {
                IVec v = base;
                for (size_t t = 0; t < k; ++t)
                    for (size_t x = 0; x < rd.rank; ++x)
                        v[x] += n[t] * rd.simple_coroots[comp[t]][x];
                out.push_back(make_stratum(rd, levi, project(ql, v)));
            }
            size_t j = 0;
            while (j < k && n[j] == hi[j]) n[j] = lo[j], ++j;
            if (j == k) break;
            ++n[j];
        }
    }

    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.levi.size() != b.levi.size()) return a.levi.size() < b.levi.size();
        if (a.slope.coords != b.slope.coords) return a.slope.coords < b.slope.coords;
        return a.levi < b.levi;
    });
    return out;
}

inline bool closure_same_parabolic_contains(const RootDatum& rd, const Stratum& a,
                                            const Stratum& b) {
    if (a.levi != b.levi)
        throw precondition_error("closure containment is only decided within one parabolic");
    QuotientLattice ql = quotient_lattice(rd, a.levi);
    return positive_class(ql, class_sub(ql, b.degree, a.degree));
}

/* Necessary condition for closure(a) to meet b; not sufficient in general. */
inline bool closure_meets_necessary(const RootDatum& rd, const Stratum& a, const Stratum& b) {
    return a.lambda_G == b.lambda_G && slope_geq(rd, b.slope, a.slope);
}

}  // namespace hn
