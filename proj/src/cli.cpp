// CLI wiring: subcommand definitions, file plumbing, and report assembly on
// top of the library modules.  Commands that print an edge list use stdout
// for the list and stderr for the report, so shell pipelines compose; with
// -o the list goes to the file and the report to stdout.

#include "latloc/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latloc/cayley.hpp"
#include "latloc/covering.hpp"
#include "latloc/families.hpp"
#include "latloc/graph.hpp"
#include "latloc/lattice_group.hpp"
#include "latloc/local_probe.hpp"
#include "latloc/report.hpp"
#include "latloc/util.hpp"
#include "latloc/wheel.hpp"

namespace latloc {

namespace {

using nlohmann::json;

struct Ctx {
    bool json_form = false;
    int threads = 1;
    std::ostream& out;
    std::ostream& err;
};

int exit_code(ReportStatus s) {
    switch (s) {
        case ReportStatus::Ok: return 0;
        case ReportStatus::Obstructed: return 1;
        case ReportStatus::Error: return 2;
    }
    return 2;
}

Graph load_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("BAD_PARAMS", "cannot open graph file '" + path + "'");
    return parse_edge_list(in);
}

std::vector<LatticeAut> load_group(const std::string& path, int& d) {
    std::ifstream in(path);
    if (!in) throw Error("BAD_PARAMS", "cannot open group file '" + path + "'");
    return parse_group_file(in, d);
}

// Writes the edge list to `path`, or to ctx.out when no path was given.
// Returns the stream the report should use so it never mixes with the list.
std::ostream& emit_graph(const Graph& g, const std::string& path, Ctx& ctx) {
    if (path.empty()) {
        write_edge_list(g, ctx.out);
        return ctx.err;
    }
    std::ofstream f(path);
    if (!f) throw Error("BAD_PARAMS", "cannot write edge list to '" + path + "'");
    write_edge_list(g, f);
    return ctx.out;
}

// One generator in the group-file line format, e.g. "perm 2 -1 trans 0 3".
std::string aut_text(const LatticeAut& a) {
    std::string s = "perm";
    for (int v : a.sigma.images) s += ' ' + std::to_string(v);
    s += " trans";
    for (long long t : a.trans) s += ' ' + std::to_string(t);
    return s;
}

json obstruction_json(const CoverObstruction& ob) {
    return json{{"reason", ob.reason},       {"at", ob.at},
                {"support_a", ob.support_a}, {"support_b", ob.support_b},
                {"value_a", ob.value_a},     {"value_b", ob.value_b},
                {"detail", ob.detail}};
}

json local_check_json(const LocalCheck& c) {
    return json{{"holds", c.holds}, {"failing_vertex", c.failing_vertex}};
}

json verification_json(const CounterexampleReport& v) {
    json res{{"bipartite", v.bipartite},
             {"degree", v.degree},
             {"two_locally", local_check_json(v.two_locally)},
             {"weakly_three", local_check_json(v.weakly_three)},
             {"covered", v.covered}};
    if (v.obstruction) res["obstruction"] = obstruction_json(*v.obstruction);
    return res;
}

long long to_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw Error("BAD_PARAMS", "expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw Error("BAD_PARAMS", "expected an integer, got '" + s + "'");
    return v;
}

void need_params(const std::string& family, const std::vector<std::string>& params,
                 std::size_t n) {
    if (params.size() != n)
        throw Error("BAD_PARAMS", "family '" + family + "' takes " + std::to_string(n) +
                                      " parameter(s), got " + std::to_string(params.size()));
}

json build_results(const Graph& g, bool loops, bool multi) {
    int degree = g.n > 0 && g.is_regular(g.degree(0)) ? g.degree(0) : -1;
    return json{{"vertices", g.n},         {"edges", g.edge_count()},
                {"regular", degree >= 0},  {"regular_degree", degree},
                {"loops_found", loops},    {"multi_edges_found", multi}};
}

int cmd_build(const std::string& family, const std::vector<std::string>& params,
              const std::string& output, Ctx& ctx) {
    Graph g;
    bool loops = false;
    bool multi = false;
    if (family == "torus") {
        need_params(family, params, 3);
        g = build_torus(static_cast<int>(to_int(params[0])), static_cast<int>(to_int(params[1])),
                        static_cast<int>(to_int(params[2])));
    } else if (family == "klein") {
        need_params(family, params, 3);
        g = build_klein(static_cast<int>(to_int(params[0])), static_cast<int>(to_int(params[1])),
                        static_cast<int>(to_int(params[2])));
    } else if (family == "strange") {
        need_params(family, params, 2);
        g = build_strange(static_cast<int>(to_int(params[0])),
                          static_cast<int>(to_int(params[1])));
    } else if (family == "grid") {
        need_params(family, params, 2);
        g = build_grid(static_cast<int>(to_int(params[0])), static_cast<int>(to_int(params[1])));
    } else if (family == "gentorus") {
        need_params(family, params, 4);
        Vec v1 = {to_int(params[0]), to_int(params[1])};
        Vec v2 = {to_int(params[2]), to_int(params[3])};
        QuotientGraph q = build_quotient(gen_torus_group(v1, v2));
        g = q.graph;
        loops = q.loops_found;
        multi = q.multi_edges_found;
    } else if (family == "group") {
        need_params(family, params, 1);
        int d = 0;
        std::vector<LatticeAut> gens = load_group(params[0], d);
        QuotientGraph q = build_quotient(make_subgroup(d, gens));
        g = q.graph;
        loops = q.loops_found;
        multi = q.multi_edges_found;
    } else if (family == "example3") {
        need_params(family, params, 0);
        g = build_example_group().graph;
    } else if (family == "exampled") {
        need_params(family, params, 1);
        g = build_product_extension(static_cast<int>(to_int(params[0]))).graph;
    } else {
        throw Error("BAD_PARAMS", "unknown family '" + family + "'");
    }

    std::ostream& rs = emit_graph(g, output, ctx);
    Report rep;
    rep.command = "build";
    rep.inputs = json{{"family", family}, {"params", params}};
    rep.results = build_results(g, loops, multi);
    rs << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

int cmd_check(const std::string& file, int d, int r, const std::string& strength, Ctx& ctx) {
    Graph g = load_graph(file);
    LocalCheck res = strength == "weak" ? is_weakly_r_locally(g, d, r, ctx.threads)
                                        : is_r_locally(g, d, r, ctx.threads);
    Report rep;
    rep.command = "check";
    rep.inputs = json{{"file", file}, {"d", d}, {"r", r}, {"strength", strength}};
    rep.results = json{{"holds", res.holds}, {"failing_vertex", res.failing_vertex}};
    rep.status = res.holds ? ReportStatus::Ok : ReportStatus::Obstructed;
    ctx.out << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

int cmd_cover(const std::string& file, int d, int radius, int root, const std::string& dump,
              Ctx& ctx) {
    Graph g = load_graph(file);
    CoverPipelineResult pipe = run_cover_pipeline(g, d, root, radius, ctx.threads);
    if (!dump.empty()) {
        std::ofstream f(dump);
        if (!f) throw Error("BAD_PARAMS", "cannot write cover dump to '" + dump + "'");
        write_cover(f, pipe.cover);
    }

    Report rep;
    rep.command = "cover";
    rep.inputs = json{{"file", file}, {"d", d}, {"radius", radius}, {"root", root}};
    json res{{"valid", pipe.cover.valid},
             {"radius_used", pipe.radius_used},
             {"assigned", pipe.cover.assigned}};
    if (pipe.cover.valid && pipe.deck) {
        const DeckGroup& dg = *pipe.deck;
        json gens = json::array();
        for (const LatticeAut& a : dg.generators) gens.push_back(aut_text(a));
        json deck{{"generators", gens},
                  {"fiber_size", dg.fiber_size},
                  {"transitive_on_fiber", dg.transitive_on_fiber},
                  {"normality_certified", dg.normality_certified},
                  {"point_group_size", dg.group.point_group.size()},
                  {"translation_rank", dg.group.translation_lattice.rank()}};
        if (dg.group.translation_lattice.rank() == dg.d)
            deck["translation_index"] = dg.group.translation_lattice.index();
        res["deck"] = deck;
        if (pipe.surface)
            res["classification"] = *pipe.surface == Surface2::Torus ? "TORUS" : "KLEIN_BOTTLE";
        if (pipe.quotient_kind) {
            res["classification"] = pipe.quotient_kind->kind == QuotientKind::ManifoldQuotient
                                        ? "MANIFOLD_QUOTIENT"
                                        : "ORBIFOLD_QUOTIENT";
            if (!pipe.quotient_kind->torsion.torsion_free) {
                res["torsion_witness"] = aut_text(*pipe.quotient_kind->torsion.witness);
                res["torsion_witness_order"] = pipe.quotient_kind->torsion.witness_order;
            }
        }
        rep.status = ReportStatus::Ok;
    } else {
        if (pipe.cover.obstruction) res["obstruction"] = obstruction_json(*pipe.cover.obstruction);
        rep.status = ReportStatus::Obstructed;
    }
    rep.results = res;
    ctx.out << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

int cmd_group(const std::string& file, const std::string& action, const std::string& output,
              Ctx& ctx) {
    int d = 0;
    std::vector<LatticeAut> gens = load_group(file, d);
    SubgroupSpec spec = make_subgroup(d, gens);

    Report rep;
    rep.command = "group";
    rep.inputs = json{{"file", file}, {"action", action}};
    if (action == "displacement") {
        Displacement disp = min_displacement(spec);
        rep.results = json{{"finite", disp.finite}};
        if (disp.finite) {
            rep.results["value"] = disp.value;
            rep.results["witness"] = aut_text(*disp.witness);
            rep.results["at_point"] = disp.at_point;
        }
    } else if (action == "rank") {
        int rank = spec.translation_lattice.rank();
        rep.results = json{{"d", d}, {"rank", rank}};
        if (rank == d) rep.results["translation_index"] = spec.translation_lattice.index();
    } else if (action == "torsion") {
        TorsionResult t = is_torsion_free(spec);
        rep.results = json{{"torsion_free", t.torsion_free}};
        if (!t.torsion_free) {
            rep.results["witness"] = aut_text(*t.witness);
            rep.results["witness_order"] = t.witness_order;
        }
    } else if (action == "quotient") {
        QuotientGraph q = build_quotient(spec);
        std::ostream& rs = emit_graph(q.graph, output, ctx);
        rep.results = build_results(q.graph, q.loops_found, q.multi_edges_found);
        rs << render_report(rep, ctx.json_form);
        return exit_code(rep.status);
    } else {
        throw Error("BAD_PARAMS", "unknown action '" + action + "'");
    }
    ctx.out << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

int cmd_wheel(const std::string& file, long long budget, Ctx& ctx) {
    Graph g = load_graph(file);
    auto cert = find_wheel_family(g, budget);

    Report rep;
    rep.command = "wheel";
    rep.inputs = json{{"file", file}, {"budget", budget}};
    if (!cert) {
        rep.results = json{{"wheel_family_found", false},
                           {"classification", "NOT_A_WHEEL_GRAPH"}};
        rep.status = ReportStatus::Obstructed;
    } else {
        SurfaceReport surf = glue_surface(*cert);
        rep.results = json{{"wheel_family_found", true},
                           {"family_size", cert->family.size()},
                           {"v", surf.v},
                           {"e", surf.e},
                           {"f", surf.f},
                           {"euler", surf.euler},
                           {"orientable", surf.orientable},
                           {"classification", to_string(surf.classification)},
                           {"rotation_check", vertex_rotation_check(*cert, g)}};
        rep.status = ReportStatus::Ok;
    }
    ctx.out << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

int cmd_example(const std::string& command, int d, int cap, const std::string& output, Ctx& ctx) {
    FiniteCayleyGraph cg = command == "example3" ? build_example_group()
                                                 : build_product_extension(d, cap);
    CounterexampleReport verification = verify_counterexample(cg, ctx.threads);

    std::ostream& rs = emit_graph(cg.graph, output, ctx);
    Report rep;
    rep.command = command;
    rep.inputs = command == "example3" ? json::object() : json{{"d", d}, {"cap", cap}};
    rep.results = json{{"order", cg.elements.size()},
                       {"generators", cg.generator_set.size()},
                       {"verification", verification_json(verification)}};
    rs << render_report(rep, ctx.json_form);
    return exit_code(rep.status);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite lattice quotients: local checks, covering maps, surface classification"};
    app.name("latloc");
    app.require_subcommand(1);

    bool json_form = false;
    int threads = 1;
    app.add_flag("--json", json_form, "emit reports as JSON instead of text");
    app.add_option("--threads", threads, "worker threads for parallel checks")
        ->envname("LL_THREADS");

    std::string b_family, b_output;
    std::vector<std::string> b_params;
    CLI::App* build = app.add_subcommand(
        "build", "construct a graph; edge list to stdout (report to stderr) or to -o");
    build->add_option("family", b_family,
                      "torus|klein|strange|grid|gentorus|group|example3|exampled")
        ->required();
    build->add_option("params", b_params, "family parameters");
    build->add_option("-o,--output", b_output, "write the edge list to this file");
    build->fallthrough();

    std::string c_file, c_strength = "strong";
    int c_d = 0, c_r = 0;
    CLI::App* check = app.add_subcommand("check", "test whether a graph is (weakly) r-locally lattice-like");
    check->add_option("file", c_file, "edge-list file, or - for stdin")->required();
    check->add_option("--d", c_d, "lattice dimension")->required();
    check->add_option("--r", c_r, "radius")->required();
    check->add_option("--strength", c_strength, "strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    check->fallthrough();

    std::string v_file, v_dump;
    int v_d = 0, v_radius = -1, v_root = 0;
    CLI::App* cover = app.add_subcommand("cover", "extend a covering map and classify the quotient");
    cover->add_option("file", v_file, "edge-list file, or - for stdin")->required();
    cover->add_option("--d", v_d, "lattice dimension")->required();
    cover->add_option("--radius", v_radius, "window radius (default 4*diameter+4)");
    cover->add_option("--root", v_root, "root vertex");
    cover->add_option("--dump", v_dump, "write the assigned window to this file");
    cover->fallthrough();

    std::string g_file, g_action, g_output;
    CLI::App* group = app.add_subcommand("group", "analyse a lattice automorphism subgroup");
    group->add_option("file", g_file, "group file")->required();
    group->add_option("--action", g_action, "displacement|rank|torsion|quotient")->required();
    group->add_option("-o,--output", g_output, "write the quotient edge list to this file");
    group->fallthrough();

    std::string w_file;
    long long w_budget = 1'000'000;
    CLI::App* wheel = app.add_subcommand("wheel", "detect the 4-cycle wheel property and classify the glued surface");
    wheel->add_option("file", w_file, "edge-list file, or - for stdin")->required();
    wheel->add_option("--budget", w_budget, "family search node budget");
    wheel->fallthrough();

    std::string e3_output;
    CLI::App* example3 = app.add_subcommand("example3", "emit the 112-vertex counterexample and its verification");
    example3->add_option("-o,--output", e3_output, "write the edge list to this file");
    example3->fallthrough();

    std::string ed_output;
    int ed_d = 0, ed_cap = 5;
    CLI::App* exampled = app.add_subcommand("exampled", "emit the d-dimensional counterexample extension");
    exampled->add_option("d", ed_d, "dimension (at least 4)")->required();
    exampled->add_option("--cap", ed_cap, "largest dimension to allow");
    exampled->add_option("-o,--output", ed_output, "write the edge list to this file");
    exampled->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("latloc");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string active = app.get_subcommands().front()->get_name();
    Ctx ctx{json_form, threads, out, err};
    try {
        if (build->parsed()) return cmd_build(b_family, b_params, b_output, ctx);
        if (check->parsed()) return cmd_check(c_file, c_d, c_r, c_strength, ctx);
        if (cover->parsed()) return cmd_cover(v_file, v_d, v_radius, v_root, v_dump, ctx);
        if (group->parsed()) return cmd_group(g_file, g_action, g_output, ctx);
        if (wheel->parsed()) return cmd_wheel(w_file, w_budget, ctx);
        if (example3->parsed()) return cmd_example("example3", 3, 5, e3_output, ctx);
        if (exampled->parsed()) return cmd_example("exampled", ed_d, ed_cap, ed_output, ctx);
        throw Error("INTERNAL", "no subcommand dispatched");
    } catch (const Error& e) {
        Report rep;
        rep.command = active;
        rep.status = ReportStatus::Error;
        rep.results = json{{"error", e.code}, {"message", e.what()}};
        err << render_report(rep, json_form);
        return 2;
    } catch (const std::exception& e) {
        Report rep;
        rep.command = active;
        rep.status = ReportStatus::Error;
        rep.results = json{{"error", "INTERNAL"}, {"message", e.what()}};
        err << render_report(rep, json_form);
        return 2;
    }
}

}  // namespace latloc
