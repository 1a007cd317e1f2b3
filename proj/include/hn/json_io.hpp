#pragma once

#include <json.hpp>

#include "hn/p1.hpp"
#include "hn/strata.hpp"

namespace hn {

using json = nlohmann::json;

inline json to_json(const Int& x) {
    if (x >= std::numeric_limits<int64_t>::min() && x <= std::numeric_limits<int64_t>::max())
        return json(static_cast<int64_t>(x));
    return json(x.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw precondition_error("expected an integer");
}

inline json to_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline IVec ivec_from_json(const json& j) {
    if (!j.is_array()) throw precondition_error("expected an integer array");
    IVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

inline json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

inline QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw precondition_error("expected a rational array");
    QVec v;
    for (const auto& x : j) {
        if (x.is_string())
            v.push_back(rat_from_string(x.get<std::string>()));
        else if (x.is_number_integer())
            v.push_back(Rat(x.get<int64_t>()));
        else
            throw precondition_error("expected a rational entry");
    }
    return v;
}

inline json to_json(const std::vector<size_t>& v) {
    json a = json::array();
    for (size_t x : v) a.push_back(x);
    return a;
}

inline std::vector<size_t> subset_from_json(const json& j) {
    if (!j.is_array()) throw precondition_error("expected an index array");
    std::vector<size_t> v;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int64_t>() < 0)
            throw precondition_error("expected nonnegative indices");
        v.push_back(x.get<size_t>());
    }
    return v;
}

inline json to_json(const RootDatum& rd) {
    json roots = json::array(), coroots = json::array();
    for (const auto& r : rd.simple_roots) roots.push_back(to_json(r));
    for (const auto& r : rd.simple_coroots) coroots.push_back(to_json(r));
    return {{"rank", rd.rank},
            {"simple_roots", roots},
            {"simple_coroots", coroots},
            {"name", rd.name}};
}

inline RootDatum rootdatum_from_json(const json& j) {
    if (j.contains("named")) {
        const json& n = j.at("named");
        return build_named(n.at("type").get<std::string>(), n.at("n").get<size_t>());
    }
    if (j.contains("type") && j.contains("n"))
        return build_named(j.at("type").get<std::string>(), j.at("n").get<size_t>());
    RootDatum rd;
    rd.rank = j.at("rank").get<size_t>();
    for (const auto& r : j.at("simple_roots")) rd.simple_roots.push_back(ivec_from_json(r));
    for (const auto& r : j.at("simple_coroots")) rd.simple_coroots.push_back(ivec_from_json(r));
    if (j.contains("name")) rd.name = j.at("name").get<std::string>();
    validate(rd);
    return rd;
}

inline json to_json(const QuotientClass& c) {
    return {{"free", to_json(c.free_part)}, {"torsion", to_json(c.torsion_part)}};
}

inline QuotientClass class_from_json(const json& j) {
    QuotientClass c;
    c.free_part = ivec_from_json(j.at("free"));
    c.torsion_part = ivec_from_json(j.at("torsion"));
    return c;
}

inline json to_json(const SlopeVector& s) {
    return {{"coords", to_json(s.coords)}, {"I_M", to_json(s.levi)}};
}

inline SlopeVector slope_from_json(const json& j) {
    return {qvec_from_json(j.at("coords")), subset_from_json(j.at("I_M"))};
}

inline json to_json(const WeightMultiset& v) {
    json weights = json::array();
    for (const auto& [w, m] : v.weights)
        weights.push_back({{"w", to_json(w)}, {"m", to_json(m)}});
    return {{"highest", to_json(v.highest)}, {"weights", weights}};
}

inline WeightMultiset multiset_from_json(const json& j) {
    WeightMultiset v;
    v.highest = ivec_from_json(j.at("highest"));
    for (const auto& e : j.at("weights")) {
        Int m = int_from_json(e.at("m"));
        if (m <= 0) throw precondition_error("multiplicities must be positive");
        v.weights[ivec_from_json(e.at("w"))] = m;
    }
    return v;
}

inline json to_json(const Stratum& st) {
    return {{"I_M", to_json(st.levi)},
            {"degree", to_json(st.degree)},
            {"slope", to_json(st.slope.coords)},
            {"lambda_G", to_json(st.lambda_G)}};
}

inline json to_json(const RootIdentityReport& r) {
    return {{"levi_intersection_1", r.levi_intersection1},
            {"levi_intersection_2", r.levi_intersection2},
            {"union_bound_1", r.union_bound1},
            {"union_bound_2", r.union_bound2},
            {"complement_stability", r.complement_stability},
            {"simple_image", r.simple_image},
            {"levi_lattice_match", r.levi_lattice_match}};
}

inline json to_json(const SplittingType& st) { return to_json(st.degrees); }

inline json to_json(const PosetReport& rep) {
    json nodes = json::array();
    for (const auto& n : rep.nodes) nodes.push_back(to_json(n.degrees));
    json edges = json::array();
    for (const auto& [a, b] : rep.edges) edges.push_back({a, b});
    return {{"rank", rep.n},
            {"total_degree", to_json(rep.total_degree)},
            {"box_bound", to_json(rep.box_bound)},
            {"nodes", nodes},
            {"edges", edges},
            {"slope_monotone", rep.slope_monotone},
            {"gl2_closure_ok", rep.gl2_closure_ok}};
}

inline std::string poset_dot(const PosetReport& rep) {
    std::string out = "digraph specialization {\n";
    for (size_t i = 0; i < rep.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"(";
        const IVec& d = rep.nodes[i].degrees;
        for (size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + d[k].str();
        out += ")\"];\n";
    }
    for (const auto& [a, b] : rep.edges)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace hn
