#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "hn/linalg.hpp"
#include "hn/rational.hpp"

namespace hn {

enum class Side { weight, coweight };

/* A rational vector tagged with the lattice side it lives on. */
struct RationalVector {
    QVec coords;
    Side side = Side::coweight;

    bool operator==(const RationalVector& o) const {
        return side == o.side && coords == o.coords;
    }
};

struct RootDatum {
    size_t rank = 0;
    std::vector<IVec> simple_roots;    // weight coordinates
    std::vector<IVec> simple_coroots;  // coweight coordinates
    std::string name;

    size_t size() const { return simple_roots.size(); }

    Int cartan(size_t i, size_t j) const {
        return dot(simple_coroots[i], simple_roots[j]);
    }

    IMat cartan_matrix() const {
        size_t m = size();
        IMat a(m, IVec(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) a[i][j] = cartan(i, j);
        return a;
    }
};

namespace detail {

inline Rat det(QMat m) {
    size_t n = m.size();
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return d;
}

}  // namespace detail

inline void validate(const RootDatum& rd) {
    size_t m = rd.size();
    if (rd.simple_coroots.size() != m)
        throw precondition_error("simple roots and coroots must be paired");
    if (m > rd.rank) throw precondition_error("more simple roots than the rank allows");
    for (size_t i = 0; i < m; ++i)
        if (rd.simple_roots[i].size() != rd.rank || rd.simple_coroots[i].size() != rd.rank)
            throw precondition_error("root coordinate length must equal the rank");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Int a = rd.cartan(i, j);
            if (i == j && a != 2) throw precondition_error("Cartan diagonal must be 2");
            if (i != j && a > 0) throw precondition_error("Cartan off-diagonal must be <= 0");
            if (i != j && (a == 0) != (rd.cartan(j, i) == 0))
                throw precondition_error("Cartan zero pattern must be symmetric");
        }
    /* Finite type: every principal minor of the Cartan matrix is positive. */
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t(1) << i)) idx.push_back(i);
        QMat sub(idx.size(), QVec(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = Rat(rd.cartan(idx[i], idx[j]));
        if (detail::det(sub) <= 0) throw precondition_error("Cartan matrix is not of finite type");
    }
    /* Linear independence of roots and of coroots. */
    for (int side = 0; side < 2; ++side) {
        const auto& vecs = side == 0 ? rd.simple_roots : rd.simple_coroots;
        QMat gram(m, QVec(m, Rat(0)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) gram[i][j] = Rat(dot(vecs[i], vecs[j]));
        if (m > 0 && detail::det(gram) == 0)
            throw precondition_error(side == 0 ? "simple roots are linearly dependent"
                                               : "simple coroots are linearly dependent");
    }
}

/* Named constructors. GL(n) is the standard lattice with roots e_i - e_{i+1};
   SimplyConnected uses the coroots as the coweight basis, Adjoint the roots
   as the weight basis, with the Cartan matrix supplying the dual side. */

namespace detail {

inline IMat cartan_of_type(char type, size_t r) {
    auto bad = [&] {
        throw precondition_error(std::string("unsupported type ") + type + std::to_string(r));
    };
    IMat a(r, IVec(r, Int(0)));
    for (size_t i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&](size_t i, size_t j, int down = -1, int up = -1) {
        a[i][j] = down;
        a[j][i] = up;
    };
    switch (type) {
        case 'A':
            if (r < 1) bad();
            for (size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'B': /* B_r, r >= 2: alpha_{r-1} short. */
            if (r < 2) bad();
            for (size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 2, r - 1, -2, -1);
            break;
        case 'C': /* C_r, r >= 2: alpha_{r-1} long. */
            if (r < 2) bad();
            for (size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 2, r - 1, -1, -2);
            break;
        case 'D':
            if (r < 3) bad();
            for (size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case 'E':
            if (r < 6 || r > 8) bad();
            /* Bourbaki: chain 2-3-4-...-(r-1) with 0 attached to 2, 1 to 3. */
            link(0, 2);
            link(1, 3);
            for (size_t i = 2; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'F':
            if (r != 4) bad();
            link(0, 1);
            link(1, 2, -2, -1);
            link(2, 3);
            break;
        case 'G':
            if (r != 2) bad();
            link(0, 1, -3, -1);
            break;
        default:
            bad();
    }
    return a;
}

}  // namespace detail

inline RootDatum build_gl(size_t n) {
    if (n < 1) throw precondition_error("GL rank must be >= 1");
    RootDatum rd;
    rd.rank = n;
    rd.name = "GL(" + std::to_string(n) + ")";
    for (size_t i = 0; i + 1 < n; ++i) {
        IVec a(n, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        rd.simple_roots.push_back(a);
        rd.simple_coroots.push_back(a);
    }
    validate(rd);
    return rd;
}

inline RootDatum build_simply_connected(char type, size_t r) {
    IMat a = detail::cartan_of_type(type, r);
    RootDatum rd;
    rd.rank = r;
    rd.name = std::string("SimplyConnected(") + type + std::to_string(r) + ")";
    /* Coweight basis = simple coroots, so coroot i = e_i and root j = column j of A. */
    for (size_t i = 0; i < r; ++i) {
        IVec co(r, Int(0));
        co[i] = 1;
        rd.simple_coroots.push_back(co);
        IVec rt(r);
        for (size_t k = 0; k < r; ++k) rt[k] = a[k][i];
        rd.simple_roots.push_back(rt);
    }
    validate(rd);
    return rd;
}

inline RootDatum build_adjoint(char type, size_t r) {
    IMat a = detail::cartan_of_type(type, r);
    RootDatum rd;
    rd.rank = r;
    rd.name = std::string("Adjoint(") + type + std::to_string(r) + ")";
    /* Weight basis = simple roots, so root j = e_j and coroot i = row i of A. */
    for (size_t i = 0; i < r; ++i) {
        IVec rt(r, Int(0));
        rt[i] = 1;
        rd.simple_roots.push_back(rt);
        IVec co(r);
        for (size_t k = 0; k < r; ++k) co[k] = a[i][k];
        rd.simple_coroots.push_back(co);
    }
    validate(rd);
    return rd;
}

inline RootDatum build_named(const std::string& type, size_t n) {
    if (type == "GL") return build_gl(n);
    if (type == "SL") {
        if (n < 1) throw precondition_error("SL rank must be >= 1");
        if (n == 1) {
            RootDatum rd;
            rd.rank = 1;
            rd.name = "SL(1)";
            /* Trivial group modeled as a rank-1 torus datum with no roots. */
            validate(rd);
            return rd;
        }
        RootDatum rd = build_simply_connected('A', n - 1);
        rd.name = "SL(" + std::to_string(n) + ")";
        return rd;
    }
    if (type == "PGL") {
        if (n < 2) throw precondition_error("PGL rank must be >= 2");
        RootDatum rd = build_adjoint('A', n - 1);
        rd.name = "PGL(" + std::to_string(n) + ")";
        return rd;
    }
    if (type.size() == 1 && type[0] >= 'A' && type[0] <= 'G')
        throw precondition_error("use SimplyConnected or Adjoint for Dynkin types");
    throw precondition_error("unknown group descriptor: " + type);
}

/* Weyl group elements: dual matrix pair plus a reduced word. */
struct WeylElement {
    IMat wt_mat;    // action on weight coordinates
    IMat cowt_mat;  // action on coweight coordinates
    std::vector<int> word;

    size_t length() const { return word.size(); }
    bool operator==(const WeylElement& o) const { return wt_mat == o.wt_mat; }
};

inline WeylElement weyl_identity(const RootDatum& rd) {
    WeylElement e;
    size_t n = rd.rank;
    e.wt_mat.assign(n, IVec(n, Int(0)));
    e.cowt_mat.assign(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) e.wt_mat[i][i] = e.cowt_mat[i][i] = 1;
    return e;
}

inline WeylElement simple_reflection(const RootDatum& rd, size_t i) {
    if (i >= rd.size()) throw precondition_error("simple reflection index out of range");
    WeylElement s = weyl_identity(rd);
    size_t n = rd.rank;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            s.wt_mat[r][c] -= rd.simple_roots[i][r] * rd.simple_coroots[i][c];
            s.cowt_mat[r][c] -= rd.simple_coroots[i][r] * rd.simple_roots[i][c];
        }
    s.word = {int(i)};
    return s;
}

/* w * s_i (right multiplication). */
inline WeylElement mul_simple(const RootDatum& rd, const WeylElement& w, size_t i) {
    WeylElement s = simple_reflection(rd, i);
    WeylElement r;
    r.wt_mat = mat_mul(w.wt_mat, s.wt_mat);
    r.cowt_mat = mat_mul(w.cowt_mat, s.cowt_mat);
    r.word = w.word;
    r.word.push_back(int(i));
    return r;
}

inline WeylElement mul(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    r.wt_mat = mat_mul(a.wt_mat, b.wt_mat);
    r.cowt_mat = mat_mul(a.cowt_mat, b.cowt_mat);
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    (void)rd;
    return r;
}

inline WeylElement inverse(const RootDatum& rd, const WeylElement& w) {
    WeylElement r;
    size_t n = rd.rank;
    /* The coweight matrix is the inverse transpose of the weight matrix. */
    r.wt_mat.assign(n, IVec(n));
    r.cowt_mat.assign(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            r.wt_mat[i][j] = w.cowt_mat[j][i];
            r.cowt_mat[i][j] = w.wt_mat[j][i];
        }
    r.word.assign(w.word.rbegin(), w.word.rend());
    return r;
}

inline size_t weyl_cap() {
    if (const char* env = std::getenv("HN_CAP")) {
        long v = std::atol(env);
        if (v > 0) return size_t(v);
    }
    return 1000000;
}

inline std::vector<WeylElement> weyl_elements(const RootDatum& rd, size_t cap = 0) {
    if (cap == 0) cap = weyl_cap();
    std::vector<WeylElement> out;
    std::set<IMat> seen;
    out.push_back(weyl_identity(rd));
    seen.insert(out[0].wt_mat);
    for (size_t head = 0; head < out.size(); ++head) {
        WeylElement w = out[head];
        for (size_t i = 0; i < rd.size(); ++i) {
            WeylElement next = mul_simple(rd, w, i);
            if (seen.insert(next.wt_mat).second) {
                out.push_back(std::move(next));
                if (out.size() > cap) throw cap_exceeded("Weyl group order exceeds cap");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word < b.word;
    });
    return out;
}

inline IVec act(const WeylElement& w, const IVec& v, Side side) {
    const IMat& m = side == Side::weight ? w.wt_mat : w.cowt_mat;
    if (v.size() != m.size()) throw precondition_error("dimension mismatch in Weyl action");
    return mat_vec(m, v);
}

inline QVec act(const WeylElement& w, const QVec& v, Side side) {
    const IMat& m = side == Side::weight ? w.wt_mat : w.cowt_mat;
    if (v.size() != m.size()) throw precondition_error("dimension mismatch in Weyl action");
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += Rat(m[i][j]) * v[j];
    return r;
}

inline RationalVector act(const WeylElement& w, const RationalVector& v) {
    return {act(w, v.coords, v.side), v.side};
}

/* A root together with its coroot. */
struct RootPair {
    IVec root;    // weight coordinates
    IVec coroot;  // coweight coordinates

    bool operator<(const RootPair& o) const { return root < o.root; }
    bool operator==(const RootPair& o) const { return root == o.root; }
};

inline std::vector<RootPair> all_roots(const RootDatum& rd) {
    std::set<RootPair> seen;
    std::vector<RootPair> queue;
    for (size_t i = 0; i < rd.size(); ++i) {
        RootPair p{rd.simple_roots[i], rd.simple_coroots[i]};
        if (seen.insert(p).second) queue.push_back(p);
    }
    std::vector<WeylElement> gens;
    for (size_t i = 0; i < rd.size(); ++i) gens.push_back(simple_reflection(rd, i));
    for (size_t head = 0; head < queue.size(); ++head) {
        RootPair p = queue[head];
        for (const auto& s : gens) {
            RootPair q{act(s, p.root, Side::weight), act(s, p.coroot, Side::coweight)};
            if (seen.insert(q).second) queue.push_back(q);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

/* Coefficients of a root in the simple-root basis (exact, always solvable). */
inline QVec root_coefficients(const RootDatum& rd, const IVec& root) {
    auto c = solve_in_span(rd.simple_roots, root);
    if (!c) throw error("vector outside the root span");
    return *c;
}

inline bool is_positive_root(const RootDatum& rd, const IVec& root) {
    auto c = solve_in_span(rd.simple_roots, root);
    if (!c) return false;
    for (const auto& x : *c)
        if (x < 0) return false;
    return true;
}

inline std::vector<RootPair> positive_roots(const RootDatum& rd) {
    std::vector<RootPair> out;
    for (const auto& p : all_roots(rd))
        if (is_positive_root(rd, p.root)) out.push_back(p);
    return out;
}

/* b - a lies in the rational nonnegative span of the simple (co)roots. */
inline bool dominance_leq(const RootDatum& rd, const RationalVector& a, const RationalVector& b) {
    if (a.side != b.side) throw precondition_error("dominance comparison across sides");
    if (a.coords.size() != b.coords.size() || a.coords.size() != rd.rank)
        throw precondition_error("dominance comparison rank mismatch");
    const auto& basis = a.side == Side::weight ? rd.simple_roots : rd.simple_coroots;
    auto c = solve_in_span(basis, vec_sub(b.coords, a.coords));
    if (!c) return false;
    for (const auto& x : *c)
        if (x < 0) return false;
    return true;
}

inline bool dominance_leq(const RootDatum& rd, const IVec& a, const IVec& b, Side side) {
    return dominance_leq(rd, {to_rational(a), side}, {to_rational(b), side});
}

/* omega_i duals: coweights in the coroot span with <w_i, alpha_j> = delta_ij. */
inline std::vector<QVec> fundamental_coweights(const RootDatum& rd) {
    size_t m = rd.size();
    std::vector<QVec> out;
    QMat a(m, QVec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a[i][j] = Rat(rd.cartan(j, i));  /* <coroot_j, root_i> */
    for (size_t i = 0; i < m; ++i) {
        QVec rhs(m, Rat(0));
        rhs[i] = 1;
        auto x = solve_square(a, rhs);
        if (!x) throw error("Cartan matrix unexpectedly singular");
        QVec w(rd.rank, Rat(0));
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < rd.rank; ++k) w[k] += (*x)[j] * Rat(rd.simple_coroots[j][k]);
        out.push_back(std::move(w));
    }
    return out;
}

inline std::vector<QVec> fundamental_weights(const RootDatum& rd) {
    size_t m = rd.size();
    std::vector<QVec> out;
    QMat a(m, QVec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a[i][j] = Rat(rd.cartan(i, j));
    for (size_t i = 0; i < m; ++i) {
        QVec rhs(m, Rat(0));
        rhs[i] = 1;
        auto x = solve_square(a, rhs);
        if (!x) throw error("Cartan matrix unexpectedly singular");
        QVec w(rd.rank, Rat(0));
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < rd.rank; ++k) w[k] += (*x)[j] * Rat(rd.simple_roots[j][k]);
        out.push_back(std::move(w));
    }
    return out;
}

inline bool is_dominant_weight(const RootDatum& rd, const IVec& lambda) {
    for (size_t i = 0; i < rd.size(); ++i)
        if (dot(rd.simple_coroots[i], lambda) < 0) return false;
    return true;
}

}  // namespace hn
