#pragma once

#include <algorithm>

#include "hn/rootdata.hpp"

namespace hn {

/* The quotient of the coweight lattice by the span of the Levi's simple
   coroots, in Smith normal form coordinates. */
struct QuotientLattice {
    RootDatum rd;
    std::vector<size_t> levi;  // I_M, sorted
    SmithForm snf;             // of the rank x |I_M| coroot matrix
    std::vector<size_t> torsion_rows;  // SNF rows with divisor > 1
    std::vector<size_t> free_rows;     // SNF rows outside the image
    IVec torsion_orders;

    size_t free_rank() const { return free_rows.size(); }
};

struct QuotientClass {
    IVec free_part;
    IVec torsion_part;

    bool operator==(const QuotientClass& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
    bool operator<(const QuotientClass& o) const {
        if (free_part != o.free_part) return free_part < o.free_part;
        return torsion_part < o.torsion_part;
    }
};

inline QuotientLattice quotient_lattice(const RootDatum& rd, std::vector<size_t> levi) {
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
    for (size_t i : levi)
        if (i >= rd.size()) throw precondition_error("parabolic subset index out of range");
    size_t n = rd.rank, m = levi.size();
    IMat c(n, IVec(m, Int(0)));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) c[i][j] = rd.simple_coroots[levi[j]][i];
    QuotientLattice ql;
    ql.rd = rd;
    ql.levi = std::move(levi);
    ql.snf = smith_form(std::move(c));
    for (size_t k = 0; k < n; ++k) {
        Int d = k < ql.snf.divisors.size() ? ql.snf.divisors[k] : Int(0);
        if (d == 0) {
            ql.free_rows.push_back(k);
        } else if (d > 1) {
            ql.torsion_rows.push_back(k);
            ql.torsion_orders.push_back(d);
        }
    }
    if (ql.free_rank() != n - m) throw error("coroot matrix rank deficient");
    return ql;
}

inline QuotientClass project(const QuotientLattice& ql, const IVec& v) {
    if (v.size() != ql.rd.rank) throw precondition_error("projection rank mismatch");
    IVec y = mat_vec(ql.snf.U, v);
    QuotientClass c;
    for (size_t k : ql.free_rows) c.free_part.push_back(y[k]);
    for (size_t t = 0; t < ql.torsion_rows.size(); ++t) {
        Int r = y[ql.torsion_rows[t]] % ql.torsion_orders[t];
        if (r < 0) r += ql.torsion_orders[t];
        c.torsion_part.push_back(r);
    }
    return c;
}

inline IVec lift(const QuotientLattice& ql, const QuotientClass& c) {
    if (c.free_part.size() != ql.free_rank() || c.torsion_part.size() != ql.torsion_rows.size())
        throw precondition_error("class shape does not match the lattice");
    IVec y(ql.rd.rank, Int(0));
    for (size_t t = 0; t < ql.free_rows.size(); ++t) y[ql.free_rows[t]] = c.free_part[t];
    for (size_t t = 0; t < ql.torsion_rows.size(); ++t) y[ql.torsion_rows[t]] = c.torsion_part[t];
    return mat_vec(ql.snf.Uinv, y);
}

inline QuotientClass class_zero(const QuotientLattice& ql) {
    QuotientClass c;
    c.free_part.assign(ql.free_rank(), Int(0));
    c.torsion_part.assign(ql.torsion_rows.size(), Int(0));
    return c;
}

inline QuotientClass class_add(const QuotientLattice& ql, const QuotientClass& a,
                               const QuotientClass& b) {
    QuotientClass c;
    c.free_part = vec_add(a.free_part, b.free_part);
    for (size_t t = 0; t < ql.torsion_orders.size(); ++t)
        c.torsion_part.push_back((a.torsion_part[t] + b.torsion_part[t]) % ql.torsion_orders[t]);
    return c;
}

inline QuotientClass class_sub(const QuotientLattice& ql, const QuotientClass& a,
                               const QuotientClass& b) {
    QuotientClass c;
    c.free_part = vec_sub(a.free_part, b.free_part);
    for (size_t t = 0; t < ql.torsion_orders.size(); ++t) {
        Int r = (a.torsion_part[t] - b.torsion_part[t]) % ql.torsion_orders[t];
        if (r < 0) r += ql.torsion_orders[t];
        c.torsion_part.push_back(r);
    }
    return c;
}

/* Membership of a class in the image of the nonnegative coroot cone.
   Write the canonical lift as sum q_i coroot_i; the I_M coefficients can be
   shifted by arbitrary integers, the rest are fixed, so the class is
   positive iff all q_i are integers and q_i >= 0 off the Levi. */
inline bool positive_class(const QuotientLattice& ql, const QuotientClass& c) {
    auto q = solve_in_span(ql.rd.simple_coroots, lift(ql, c));
    if (!q) return false;
    std::vector<bool> in_levi(ql.rd.size(), false);
    for (size_t i : ql.levi) in_levi[i] = true;
    for (size_t i = 0; i < q->size(); ++i) {
        if (denominator((*q)[i]) != 1) return false;
        if (!in_levi[i] && (*q)[i] < 0) return false;
    }
    return true;
}

/* lambda lies in the weight sublattice orthogonal to the Levi coroots. */
inline bool in_weight_sublattice(const RootDatum& rd, const std::vector<size_t>& levi,
                                 const IVec& lambda) {
    for (size_t i : levi)
        if (dot(rd.simple_coroots[i], lambda) != 0) return false;
    return true;
}

}  // namespace hn
