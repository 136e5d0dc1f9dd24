#include "convextri/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "convextri/configurations.hpp"
#include "convextri/dihedral.hpp"
#include "convextri/io.hpp"
#include "convextri/packing.hpp"
#include "convextri/skewness.hpp"
#include "convextri/svg.hpp"
#include "convextri/triangulate.hpp"
#include "convextri/verify.hpp"

namespace convextri {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kVerifyFailure = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    f << content;
}

json chords_json(const std::vector<Chord>& cs) {
    json arr = json::array();
    for (const Chord& c : cs) arr.push_back({c.a, c.b});
    return arr;
}

json instance_json(const ConvexInstance& inst) {
    json doc;
    doc["n"] = inst.n();
    doc["forbidden"] = chords_json(inst.forbidden());
    doc["canonical_key"] = chords_json(canonical_key(inst));
    return doc;
}

std::string chords_text(const std::vector<Chord>& cs) {
    std::string s;
    for (const Chord& c : cs) {
        if (!s.empty()) s += " ";
        s += to_string(c);
    }
    return s;
}

std::string ints_text(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (int x : v) {
        if (!s.empty()) s += sep;
        s += std::to_string(x);
    }
    return s;
}

void maybe_write_svg(const std::string& path, const ConvexInstance& inst,
                     const std::optional<Triangulation>& tri) {
    if (!path.empty()) write_file(path, render_svg(inst, tri));
}

struct InstanceArgs {
    std::string input;
    bool as_json = false;
    std::string svg_out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "instance file (JSON or line form); stdin when absent");
        cmd->add_flag("--json", as_json, "emit a JSON document");
        cmd->add_option("--svg", svg_out, "also write an SVG drawing to this path");
    }

    ConvexInstance load() const { return parse_instance(read_input(input)); }
};

int cmd_decide(const InstanceArgs& a) {
    ConvexInstance inst = a.load();
    bool ok = decide(inst);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["triangulable"] = ok;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "triangulable: " << (ok ? "true" : "false") << "\n";
    }
    maybe_write_svg(a.svg_out, inst, std::nullopt);
    return ok ? kOk : kNegative;
}

int cmd_triangulate(const InstanceArgs& a) {
    ConvexInstance inst = a.load();
    std::optional<Triangulation> t = extract(inst);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["triangulable"] = t.has_value();
        doc["diagonals"] = t ? chords_json(t->diagonals) : json(nullptr);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "triangulable: " << (t ? "true" : "false") << "\n";
        if (t) std::cout << "diagonals: " << chords_text(t->diagonals) << "\n";
    }
    maybe_write_svg(a.svg_out, inst, t);
    return t ? kOk : kNegative;
}

int cmd_count(const InstanceArgs& a) {
    ConvexInstance inst = a.load();
    BigInt c = count_triangulations(inst);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["count"] = c.str();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "count: " << c.str() << "\n";
    }
    maybe_write_svg(a.svg_out, inst, std::nullopt);
    return c == 0 ? kNegative : kOk;
}

json witness_json(const ConfigClass& cc) {
    json w;
    if (cc.fstar) {
        w["form"] = cc.fstar->star ? "star" : "arc";
        if (!cc.fstar->star) w["k"] = cc.fstar->arc_len;
        w["map"] = {{"rotation", cc.fstar->map.rotation}, {"reflected", cc.fstar->map.reflected}};
    } else if (cc.jstar) {
        w["type"] = cc.jstar->type1 ? 1 : 2;
        if (cc.jstar->removed_edge)
            w["e"] = {cc.jstar->removed_edge->a, cc.jstar->removed_edge->b};
        w["j1"] = cc.jstar->j1;
        w["j2"] = cc.jstar->j2;
    }
    return w;
}

std::string classification_name(ConfigClass::Kind k) {
    switch (k) {
    case ConfigClass::Kind::Triangulable: return "triangulable";
    case ConfigClass::Kind::BlockedFStar: return "blocked-fstar";
    case ConfigClass::Kind::BlockedJStar: return "blocked-jstar";
    case ConfigClass::Kind::BoundaryEdgeInF: return "boundary-edge-in-forbidden";
    case ConfigClass::Kind::OutOfCharacterization: return "out-of-characterization";
    }
    return "?";
}

std::string reason_name(ConfigClass::Reason r) {
    switch (r) {
    case ConfigClass::Reason::BelowBound: return "below-bound";
    case ConfigClass::Reason::NotFStar: return "not-fstar";
    case ConfigClass::Reason::NotJStar: return "not-jstar";
    case ConfigClass::Reason::None: break;
    }
    return "";
}

int cmd_classify(const InstanceArgs& a) {
    ConvexInstance inst = a.load();
    ConfigClass cc = classify(inst);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["classification"] = classification_name(cc.kind);
        std::string reason = reason_name(cc.reason);
        if (!reason.empty()) doc["reason"] = reason;
        if (cc.fstar || cc.jstar) doc["witness"] = witness_json(cc);
        doc["triangulable"] = cc.triangulable();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "classification: " << classification_name(cc.kind) << "\n";
        std::string reason = reason_name(cc.reason);
        if (!reason.empty()) std::cout << "reason: " << reason << "\n";
        if (cc.fstar) {
            std::cout << "witness: " << (cc.fstar->star ? "star" : "arc k=" + std::to_string(cc.fstar->arc_len))
                      << " rotation=" << cc.fstar->map.rotation
                      << " reflected=" << (cc.fstar->map.reflected ? "true" : "false") << "\n";
        }
        if (cc.jstar) {
            std::cout << "witness: type-" << (cc.jstar->type1 ? 1 : 2);
            if (cc.jstar->removed_edge) std::cout << " e=" << to_string(*cc.jstar->removed_edge);
            std::cout << " j1=" << ints_text(cc.jstar->j1) << " j2=" << ints_text(cc.jstar->j2)
                      << "\n";
        }
        std::cout << "triangulable: " << (cc.triangulable() ? "true" : "false") << "\n";
    }
    maybe_write_svg(a.svg_out, inst, std::nullopt);
    return cc.triangulable() ? kOk : kNegative;
}

int cmd_skewness(const InstanceArgs& a) {
    ConvexInstance inst = a.load();
    SkewnessReport r = skewness(inst);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["edges_total"] = r.edges_total;
        doc["max_plane"] = r.max_plane;
        doc["sk_c"] = r.sk_c;
        doc["formula_value"] = r.formula_value;
        doc["formula_applicable"] = r.formula_applicable;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "edges_total: " << r.edges_total << "\n"
                  << "max_plane: " << r.max_plane << "\n"
                  << "sk_c: " << r.sk_c << "\n"
                  << "formula_value: " << r.formula_value << "\n"
                  << "formula_applicable: " << (r.formula_applicable ? "true" : "false") << "\n";
    }
    maybe_write_svg(a.svg_out, inst, std::nullopt);
    return kOk;
}

int emit_placement(const Placement& p, bool as_json, const std::string& svg_out) {
    if (as_json) {
        json doc;
        doc["packable"] = true;
        doc["n"] = p.n;
        doc["positions"] = p.positions;
        doc["forbidden"] = chords_json(p.induced.forbidden());
        doc["canonical_key"] = chords_json(canonical_key(p.induced));
        doc["certificate"] = p.certificate ? chords_json(*p.certificate) : json(nullptr);
        doc["fallback"] = p.used_fallback;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "packable: true\n"
                  << "n: " << p.n << "\n"
                  << "positions: " << ints_text(p.positions, ' ') << "\n"
                  << "forbidden: " << chords_text(p.induced.forbidden()) << "\n";
        if (p.certificate) std::cout << "certificate: " << chords_text(*p.certificate) << "\n";
        if (p.used_fallback) std::cout << "fallback: true\n";
    }
    std::optional<Triangulation> tri;
    if (p.certificate) tri = Triangulation{*p.certificate};
    if (!svg_out.empty()) write_file(svg_out, render_svg(p.induced, tri));
    return kOk;
}

int emit_not_packable(bool as_json, const std::string& reason) {
    if (as_json) {
        json doc;
        doc["packable"] = false;
        doc["reason"] = reason;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "packable: false\n";
    }
    return kNegative;
}

std::vector<int> parse_lengths(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            if (used != cur.size()) throw std::invalid_argument(cur);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidParams("bad cycle length '" + cur + "'");
        }
    }
    if (out.empty()) throw InvalidParams("empty cycle length list");
    return out;
}

int cmd_verify(const std::string& id, int n, std::uint64_t samples, std::uint64_t seed, int jobs,
               bool as_json) {
    VerifyReport rep = (id == "t4" || id == "t5") ? verify_potential(id, n)
                                                  : verify_theorem(id, n, samples, seed, jobs);
    if (as_json) {
        json doc;
        doc["theorem"] = rep.theorem;
        doc["n"] = rep.n;
        doc["instances_checked"] = rep.instances_checked;
        doc["canonical_classes_checked"] = rep.canonical_classes_checked;
        doc["samples"] = rep.samples;
        doc["seed"] = rep.seed;
        json ms = json::array();
        for (const auto& m : rep.mismatches)
            ms.push_back({{"item", m.item}, {"oracle", m.oracle_verdict}, {"subject", m.subject_verdict}});
        doc["mismatches"] = ms;
        doc["wall_ms"] = rep.wall_ms;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "theorem: " << rep.theorem << "\n"
                  << "n: " << rep.n << "\n"
                  << "instances_checked: " << rep.instances_checked << "\n"
                  << "canonical_classes_checked: " << rep.canonical_classes_checked << "\n"
                  << "samples: " << rep.samples << "\n"
                  << "seed: " << rep.seed << "\n"
                  << "mismatches: " << rep.mismatches.size() << "\n";
        for (const auto& m : rep.mismatches)
            std::cout << "mismatch: " << m.item << " oracle=" << (m.oracle_verdict ? "true" : "false")
                      << " subject=" << (m.subject_verdict ? "true" : "false") << "\n";
        std::cout << "wall_ms: " << rep.wall_ms << "\n";
    }
    return rep.mismatches.empty() ? kOk : kVerifyFailure;
}

int cmd_render(const InstanceArgs& a, bool with_triangulation) {
    ConvexInstance inst = a.load();
    std::optional<Triangulation> tri;
    bool missing = false;
    if (with_triangulation) {
        tri = extract(inst);
        missing = !tri.has_value();
    }
    std::string svg = render_svg(inst, tri);
    if (!a.svg_out.empty()) write_file(a.svg_out, svg);
    if (a.as_json) {
        json doc = instance_json(inst);
        doc["diagonals"] = tri ? chords_json(tri->diagonals) : json(nullptr);
        doc["svg"] = svg;
        std::cout << doc.dump() << "\n";
    } else if (a.svg_out.empty()) {
        std::cout << svg;
    }
    return missing ? kNegative : kOk;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"triangulations of convex complete graphs with forbidden chords"};
    app.require_subcommand(1);

    InstanceArgs decide_a, tri_a, count_a, classify_a, skew_a, render_a;
    auto* c_decide = app.add_subcommand("decide", "does K_n - F admit a triangulation?");
    decide_a.attach(c_decide);
    auto* c_tri = app.add_subcommand("triangulate", "extract a witness triangulation");
    tri_a.attach(c_tri);
    auto* c_count = app.add_subcommand("count", "count triangulations of K_n - F");
    count_a.attach(c_count);
    auto* c_classify = app.add_subcommand("classify", "run the forbidden-configuration decision tree");
    classify_a.attach(c_classify);
    auto* c_skew = app.add_subcommand("skewness", "convex skewness report");
    skew_a.attach(c_skew);

    auto* c_render = app.add_subcommand("render", "draw the instance as SVG");
    render_a.attach(c_render);
    bool render_tri = false;
    c_render->add_flag("--triangulation", render_tri, "overlay an extracted triangulation");

    auto* c_pack = app.add_subcommand("pack", "constructive placements");
    c_pack->require_subcommand(1);
    bool pack_json = false;
    std::string pack_svg;
    int pack_cycle_n = 0;
    std::string two_regular_lengths;
    int petersen_n = 0, petersen_k = 0;
    auto* c_pack_cycle = c_pack->add_subcommand("cycle", "place the n-cycle on K_n");
    c_pack_cycle->add_option("n", pack_cycle_n, "cycle length")->required();
    auto* c_pack_two = c_pack->add_subcommand("two-regular", "place a disjoint cycle union");
    c_pack_two->add_option("lengths", two_regular_lengths, "comma-separated cycle lengths")
        ->required();
    auto* c_pack_pet = c_pack->add_subcommand("petersen", "place P(n,k) on K_{2n}");
    c_pack_pet->add_option("n", petersen_n, "outer cycle length")->required();
    c_pack_pet->add_option("k", petersen_k, "inner step")->required();
    for (auto* sc : {c_pack_cycle, c_pack_two, c_pack_pet}) {
        sc->add_flag("--json", pack_json, "emit a JSON document");
        sc->add_option("--svg", pack_svg, "also write an SVG drawing to this path");
    }

    auto* c_verify = app.add_subcommand("verify", "cross-validate a theorem at desk scale");
    std::string verify_id;
    int verify_n = 0;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    int verify_jobs = 1;
    bool verify_json = false;
    c_verify->add_option("theorem", verify_id, "one of t1 t2 t3 t4 t5")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5"}));
    c_verify->add_option("--n", verify_n, "polygon size (t1-t3) or max total (t4-t5)")->required();
    c_verify->add_option("--samples", verify_samples, "sampled instead of exhaustive (t1-t3)");
    c_verify->add_option("--seed", verify_seed, "sampling seed");
    c_verify->add_option("--jobs", verify_jobs, "worker threads");
    c_verify->add_flag("--json", verify_json, "emit a JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help itself for -h; map usage errors to exit 2
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    if (c_decide->parsed()) return cmd_decide(decide_a);
    if (c_tri->parsed()) return cmd_triangulate(tri_a);
    if (c_count->parsed()) return cmd_count(count_a);
    if (c_classify->parsed()) return cmd_classify(classify_a);
    if (c_skew->parsed()) return cmd_skewness(skew_a);
    if (c_render->parsed()) return cmd_render(render_a, render_tri);
    if (c_pack->parsed()) {
        try {
            if (c_pack_cycle->parsed()) return emit_placement(pack_cycle(pack_cycle_n), pack_json, pack_svg);
            if (c_pack_two->parsed())
                return emit_placement(pack_two_regular(parse_lengths(two_regular_lengths)),
                                      pack_json, pack_svg);
            if (c_pack_pet->parsed())
                return emit_placement(pack_petersen(petersen_n, petersen_k), pack_json, pack_svg);
        } catch (const NotPackable& e) {
            return emit_not_packable(pack_json, e.what());
        }
    }
    if (c_verify->parsed())
        return cmd_verify(verify_id, verify_n, verify_samples, verify_seed, verify_jobs,
                          verify_json);
    return kInputError;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidChord& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const SearchRefused& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConstructionFault& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kVerifyFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailure;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.push_back("convextri");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace convextri
