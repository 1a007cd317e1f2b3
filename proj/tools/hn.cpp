#include <CLI11.hpp>
#include <iostream>

#include "hn/json_io.hpp"
#include "hn/verify.hpp"

namespace {

using namespace hn;

std::vector<size_t> parse_subset(const std::string& s) {
    std::vector<size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

IVec parse_ivec(const std::string& s) {
    IVec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(Int(tok));
        } catch (const std::runtime_error&) {
            throw precondition_error("malformed integer list: " + s);
        }
    }
    return out;
}

RootDatum datum_from_flags(const std::string& named, const std::string& datum_json) {
    if (!named.empty()) {
        auto colon = named.find(':');
        if (colon == std::string::npos)
            throw precondition_error("--named expects TYPE:N, e.g. GL:3");
        return build_named(named.substr(0, colon), std::stoul(named.substr(colon + 1)));
    }
    if (!datum_json.empty()) return rootdatum_from_json(json::parse(datum_json));
    throw precondition_error("a root datum is required (--named or --datum)");
}

/* For a GL datum, turn per-block degrees into a coweight lift: each block of
   the flag determined by I_M receives its degree on its first coordinate. */
IVec lift_from_block_degrees(const RootDatum& rd, const std::vector<size_t>& levi,
                             const IVec& degrees) {
    if (rd.name.rfind("GL(", 0) != 0)
        throw precondition_error("--degree (block degrees) is only defined for GL; use --lift");
    size_t n = rd.rank;
    std::vector<bool> in_levi(n > 0 ? n - 1 : 0, false);
    for (size_t i : levi) in_levi[i] = true;
    std::vector<size_t> block_starts{0};
    for (size_t i = 0; i + 1 < n; ++i)
        if (!in_levi[i]) block_starts.push_back(i + 1);
    if (degrees.size() != block_starts.size())
        throw precondition_error("expected " + std::to_string(block_starts.size()) +
                                 " block degrees for this parabolic");
    IVec v(n, Int(0));
    for (size_t b = 0; b < block_starts.size(); ++b) v[block_starts[b]] = degrees[b];
    return v;
}

IVec degree_lift(const RootDatum& rd, const std::vector<size_t>& levi,
                 const std::string& degree, const std::string& lift_coords) {
    if (!lift_coords.empty()) {
        IVec v = parse_ivec(lift_coords);
        if (v.size() != rd.rank) throw precondition_error("--lift length must equal the rank");
        return v;
    }
    if (!degree.empty()) return lift_from_block_degrees(rd, levi, parse_ivec(degree));
    throw precondition_error("a degree is required (--degree or --lift)");
}

int cmd_datum(const RootDatum& rd, bool as_json) {
    auto pos = positive_roots(rd);
    auto w = weyl_elements(rd);
    if (as_json) {
        json j = to_json(rd);
        j["positive_roots"] = pos.size();
        j["weyl_order"] = w.size();
        json word = json::array();
        for (int i : w.back().word) word.push_back(i);
        j["longest_word"] = word;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << rd.name << "\nrank " << rd.rank << ", " << rd.size() << " simple roots, "
              << pos.size() << " positive roots, Weyl order " << w.size() << "\n";
    std::cout << "Cartan matrix:\n";
    for (size_t i = 0; i < rd.size(); ++i) {
        for (size_t j = 0; j < rd.size(); ++j) std::cout << " " << rd.cartan(i, j);
        std::cout << "\n";
    }
    return 0;
}

int cmd_slope(const RootDatum& rd, const std::vector<size_t>& levi, const IVec& v,
              bool as_json) {
    QuotientLattice ql = quotient_lattice(rd, levi);
    SlopeVector s = phi(ql, project(ql, v));
    bool regular = is_dominant_P_regular(rd, s);
    if (as_json) {
        json j{{"phi", to_json(s.coords)}, {"dominant_P_regular", regular}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "phi =";
    for (const auto& c : s.coords) std::cout << " " << rat_to_string(c);
    std::cout << "\ndominant P-regular: " << (regular ? "true" : "false") << "\n";
    return 0;
}

int cmd_bruhat(const RootDatum& rd, const std::vector<size_t>& l1,
               const std::vector<size_t>& l2, bool as_json) {
    CosetSetup setup = make_setup(rd, l1, l2);
    auto reps = min_reps(setup);
    json out = json::array();
    for (const auto& w : reps) {
        LeviPair lp = deeper_levi_sets(setup, w);
        RootIdentityReport rep = verify_root_identities(setup, w);
        json word = json::array();
        for (int i : w.word) word.push_back(i);
        out.push_back({{"word", word},
                       {"length", w.length()},
                       {"I_L1", to_json(lp.levi1)},
                       {"I_L2", to_json(lp.levi2)},
                       {"identities", to_json(rep)}});
    }
    if (as_json) {
        std::cout << json{{"count", reps.size()}, {"representatives", out}}.dump(2) << "\n";
        return 0;
    }
    std::cout << reps.size() << " double cosets\n";
    for (size_t k = 0; k < out.size(); ++k) {
        const json& e = out[k];
        std::cout << "w = [";
        for (size_t i = 0; i < e["word"].size(); ++i)
            std::cout << (i ? " " : "") << e["word"][i].get<int>();
        std::cout << "]  I_L1 = " << e["I_L1"].dump() << "  I_L2 = " << e["I_L2"].dump()
                  << "  identities "
                  << (verify_root_identities(setup, reps[k]).all_pass() ? "pass" : "FAIL")
                  << "\n";
    }
    return 0;
}

int cmd_weights(const RootDatum& rd, const IVec& highest, const std::string& im,
                const std::string& filtration_lift, bool as_json) {
    WeightMultiset v = weyl_weights(rd, highest);
    json j = to_json(v);
    j["dimension"] = to_json(v.dimension());
    if (!im.empty()) {
        std::vector<size_t> levi = parse_subset(im);
        WeightMultiset sub = subspace_mod_RM(rd, v, levi);
        j["subspace_mod_RM"] = to_json(sub);
        j["subspace_dimension"] = to_json(sub.dimension());
        if (!filtration_lift.empty()) {
            QuotientLattice ql = quotient_lattice(rd, levi);
            IVec lift_v = parse_ivec(filtration_lift);
            SlopeVector s = phi(ql, project(ql, lift_v));
            json levels = json::array();
            for (const auto& lvl : filtration_levels(rd, v, s)) {
                json ws = json::array();
                for (const auto& [w, m] : lvl.weights)
                    ws.push_back({{"w", to_json(w)}, {"m", to_json(m)}});
                levels.push_back({{"q", rat_to_string(lvl.q)},
                                  {"dim", to_json(lvl.dim())},
                                  {"weights", ws}});
            }
            j["filtration"] = levels;
            j["slope"] = to_json(s);
        }
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "dim " << v.dimension().str() << ", " << v.weights.size()
              << " distinct weights\n";
    if (j.contains("subspace_dimension"))
        std::cout << "Levi coset subspace dim " << j["subspace_dimension"] << "\n";
    if (j.contains("filtration"))
        for (const auto& lvl : j["filtration"])
            std::cout << "level q=" << lvl["q"].get<std::string>() << " dim " << lvl["dim"]
                      << "\n";
    return 0;
}

json stratum_json(const Stratum& st) { return to_json(st); }

int cmd_strata(int argc, char** argv);
int cmd_p1(int argc, char** argv);

int cmd_verify(size_t rank, size_t p1_rank, long box, bool as_json) {
    auto results = run_all_sweeps(rank, p1_rank, box);
    bool all = true;
    json j = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (as_json)
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}});
        else
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n"
                      << (r.pass ? "" : r.detail);
    }
    if (as_json) std::cout << json{{"pass", all}, {"sweeps", j}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int run(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: hn <datum|slope|bruhat|weights|strata|p1|verify> [flags]\n";
        return 64;
    }
    std::string cmd = argv[1];
    CLI::App app{"Harder-Narasimhan stratification toolkit"};
    std::string named, datum_json, im, im2, degree, degree2, lift_coords, lift2, highest,
        filtration_lift, lambda_g, bound, from, to, type;
    bool as_json = false, dotfmt = false;
    size_t rank = 3, p1_rank = 4, n = 2;
    long box = 3;
    Int total = 0;

    auto add_datum_flags = [&](CLI::App* a) {
        a->add_option("--named", named, "named datum TYPE:N (GL, SL, PGL, or Dynkin via JSON)");
        a->add_option("--datum", datum_json, "inline root-datum JSON");
        a->add_flag("--json", as_json, "emit JSON");
    };

    if (cmd == "datum") {
        add_datum_flags(&app);
        CLI11_PARSE(app, argc - 1, argv + 1);
        return cmd_datum(datum_from_flags(named, datum_json), as_json);
    }
    if (cmd == "slope") {
        add_datum_flags(&app);
        app.add_option("--IM", im, "parabolic subset, comma separated");
        app.add_option("--degree", degree, "block degrees (GL only)");
        app.add_option("--lift", lift_coords, "integral coweight lift");
        CLI11_PARSE(app, argc - 1, argv + 1);
        RootDatum rd = datum_from_flags(named, datum_json);
        std::vector<size_t> levi = parse_subset(im);
        return cmd_slope(rd, levi, degree_lift(rd, levi, degree, lift_coords), as_json);
    }
    if (cmd == "bruhat") {
        add_datum_flags(&app);
        app.add_option("--IM1", im, "first parabolic subset");
        app.add_option("--IM2", im2, "second parabolic subset");
        CLI11_PARSE(app, argc - 1, argv + 1);
        RootDatum rd = datum_from_flags(named, datum_json);
        return cmd_bruhat(rd, parse_subset(im), parse_subset(im2), as_json);
    }
    if (cmd == "weights") {
        add_datum_flags(&app);
        app.add_option("--highest", highest, "highest weight coordinates")->required();
        app.add_option("--IM", im, "parabolic subset for the coset subspace");
        app.add_option("--filtration-lift", filtration_lift,
                       "degree lift whose slope filters the module (needs --IM)");
        CLI11_PARSE(app, argc - 1, argv + 1);
        RootDatum rd = datum_from_flags(named, datum_json);
        return cmd_weights(rd, parse_ivec(highest), im, filtration_lift, as_json);
    }
    if (cmd == "strata") {
        if (argc < 3) {
            std::cerr << "usage: hn strata <enumerate|compare|closure-contains|closure-meets>\n";
            return 64;
        }
        std::string sub = argv[2];
        add_datum_flags(&app);
        if (sub == "enumerate") {
            app.add_option("--lambda-g", lambda_g, "component class as a coweight lift")
                ->required();
            app.add_option("--bound", bound, "slope coefficient cap (rational)")->required();
            CLI11_PARSE(app, argc - 2, argv + 2);
            RootDatum rd = datum_from_flags(named, datum_json);
            QuotientLattice full = quotient_lattice(rd, full_subset(rd));
            auto strata = enumerate_strata(rd, project(full, parse_ivec(lambda_g)),
                                           rat_from_string(bound));
            if (as_json) {
                json arr = json::array();
                for (const auto& st : strata) arr.push_back(stratum_json(st));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& st : strata) {
                    std::cout << "I_M = {";
                    for (size_t i = 0; i < st.levi.size(); ++i)
                        std::cout << (i ? "," : "") << st.levi[i];
                    std::cout << "}  slope =";
                    for (const auto& c : st.slope.coords) std::cout << " " << rat_to_string(c);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        app.add_option("--IM1", im, "parabolic of the first stratum");
        app.add_option("--lift1", lift_coords, "degree lift of the first stratum")->required();
        app.add_option("--IM2", im2, "parabolic of the second stratum");
        app.add_option("--lift2", lift2, "degree lift of the second stratum")->required();
        CLI11_PARSE(app, argc - 2, argv + 2);
        RootDatum rd = datum_from_flags(named, datum_json);
        auto build = [&](const std::string& imx, const std::string& liftx) {
            std::vector<size_t> levi = parse_subset(imx);
            QuotientLattice ql = quotient_lattice(rd, levi);
            return make_stratum(rd, levi, project(ql, parse_ivec(liftx)));
        };
        Stratum a = build(im, lift_coords);
        Stratum b = build(im2, lift2);
        if (sub == "compare") {
            ComparisonResult r = comparison_geq(rd, a, b.levi, b.degree);
            json j{{"geq", r.geq}, {"equal", r.equal}};
            if (r.equal) j["parabolic_included"] = r.parabolic_included;
            std::cout << (as_json ? j.dump() : std::string(r.geq ? "true" : "false")) << "\n";
            return 0;
        }
        if (sub == "closure-contains") {
            bool r = closure_same_parabolic_contains(rd, a, b);
            std::cout << (r ? "true" : "false") << "\n";
            return 0;
        }
        if (sub == "closure-meets") {
            bool r = closure_meets_necessary(rd, a, b);
            if (as_json)
                std::cout << json{{"meets_necessary", r}, {"note", "necessary-only"}}.dump()
                          << "\n";
            else
                std::cout << (r ? "true" : "false") << " (necessary condition only)\n";
            return 0;
        }
        std::cerr << "unknown strata subcommand: " << sub << "\n";
        return 64;
    }
    if (cmd == "p1") {
        if (argc < 3) {
            std::cerr << "usage: hn p1 <hn|specialize|poset|gl3-report>\n";
            return 64;
        }
        std::string sub = argv[2];
        app.add_flag("--json", as_json, "emit JSON");
        if (sub == "hn") {
            app.add_option("--type", type, "splitting type, weakly decreasing")->required();
            CLI11_PARSE(app, argc - 2, argv + 2);
            CanonicalReduction cr = canonical_reduction(make_splitting_type(parse_ivec(type)));
            json j{{"block_ranks", cr.hn.block_ranks},
                   {"block_degrees", to_json(cr.hn.block_degrees)},
                   {"block_slopes", to_json(cr.hn.block_slopes)},
                   {"stratum", stratum_json(cr.stratum)}};
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "blocks:";
                for (size_t b = 0; b < cr.hn.block_ranks.size(); ++b)
                    std::cout << " rank " << cr.hn.block_ranks[b] << " degree "
                              << cr.hn.block_degrees[b].str() << " slope "
                              << rat_to_string(cr.hn.block_slopes[b])
                              << (b + 1 < cr.hn.block_ranks.size() ? "," : "\n");
            }
            return 0;
        }
        if (sub == "specialize") {
            app.add_option("--from", from, "source splitting type")->required();
            app.add_option("--to", to, "target splitting type")->required();
            CLI11_PARSE(app, argc - 2, argv + 2);
            bool r = specializes_to(sorted_splitting_type(parse_ivec(from)),
                                    sorted_splitting_type(parse_ivec(to)));
            std::cout << (r ? "true" : "false") << "\n";
            return 0;
        }
        if (sub == "poset") {
            std::string total_s = "0";
            app.add_option("--n", n, "rank")->required();
            app.add_option("--degree", total_s, "total degree");
            app.add_option("--box", box, "max |d_i|");
            app.add_flag("--dot", dotfmt, "emit DOT");
            CLI11_PARSE(app, argc - 2, argv + 2);
            PosetReport rep = strata_poset(n, Int(total_s), Int(box));
            if (dotfmt)
                std::cout << poset_dot(rep);
            else
                std::cout << to_json(rep).dump(2) << "\n";
            return 0;
        }
        if (sub == "gl3-report") {
            CLI11_PARSE(app, argc - 2, argv + 2);
            RootDatum rd = build_gl(3);
            QuotientLattice qb = quotient_lattice(rd, {});
            QuotientLattice qp = quotient_lattice(rd, {1});
            Stratum a = make_stratum(rd, {}, project(qb, IVec{2, 1, 0}));
            Stratum b = make_stratum(rd, {1}, project(qp, IVec{3, 0, 0}));
            bool meets = closure_meets_necessary(rd, a, b);
            json j{{"complete_flag_stratum", stratum_json(a)},
                   {"subminimal_stratum", stratum_json(b)},
                   {"meets", meets ? "yes (necessary condition)" : "no"},
                   {"containment", "refuted in paper, not decidable here"}};
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "closure of the complete-flag stratum (2,1,0) vs the (3,0) "
                             "stratum of GL(3):\n"
                          << "  meets: " << j["meets"].get<std::string>() << "\n"
                          << "  containment: " << j["containment"].get<std::string>() << "\n";
            }
            return 0;
        }
        std::cerr << "unknown p1 subcommand: " << sub << "\n";
        return 64;
    }
    if (cmd == "verify") {
        app.add_flag("--json", as_json, "emit JSON");
        app.add_option("--rank", rank, "sweep rank bound");
        app.add_option("--p1-rank", p1_rank, "projective-line rank bound");
        app.add_option("--box", box, "projective-line degree box");
        CLI11_PARSE(app, argc - 1, argv + 1);
        return cmd_verify(rank, p1_rank, box, as_json);
    }
    std::cerr << "unknown subcommand: " << cmd << "\n";
    return 64;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hn::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 69;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 65;
    } catch (const hn::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
