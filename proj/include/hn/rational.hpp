#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace hn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

/* Error hierarchy shared by the whole library. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : error {
    using error::error;
};
struct cap_exceeded : error {
    using error::error;
};

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw precondition_error("zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw precondition_error("malformed rational: " + s);
    }
}

inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (Rat(q) > r) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (Rat(q) < r) ++q;
    return q;
}

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline IVec vec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IVec vec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline IVec vec_neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline QVec vec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline QVec vec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}
inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}
inline bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace hn
