#include "barviz/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "barviz/errors.hpp"
#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"
#include "barviz/intervals.hpp"
#include "barviz/io.hpp"
#include "barviz/recognize.hpp"
#include "barviz/reduction.hpp"
#include "barviz/svg.hpp"
#include "barviz/tournaments.hpp"

namespace barviz {

namespace {

const char* reason_name(Reason r) {
    return r == Reason::NonPlanar ? "NonPlanar" : "ConsistentCycle";
}

void out_or_stdout(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

Graph named_graph(const std::string& name) {
    for (const NamedGraph& ng : cubic_triangle_free_corpus())
        if (ng.name == name) return ng.g;
    if (name == "g1") return counterexample_graph(CounterexampleKind::G1);
    if (name == "ghat") return counterexample_graph(CounterexampleKind::Ghat);
    fail(Errc::InvalidInput, "unknown graph name '" + name + "'");
}

Digraph directed_cycle(int n) {
    if (n < 2) fail(Errc::BadSize, "directed cycle needs at least 2 vertices");
    Digraph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
    g.normalize();
    return g;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
    CLI::App app{"bar visibility representations of digraphs: construct, verify, recognize, bound"};
    app.name("barviz");
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved for future randomized commands");

    // gen
    auto* gen = app.add_subcommand("gen", "write a named graph or generated digraph");
    std::string gen_name, gen_out;
    int gen_tn = -1, gen_dicycle = -1;
    gen->add_option("--name", gen_name,
                    "k33|cube|petersen|franklin|heawood|mobius-kantor|g1|ghat (graph output)");
    gen->add_option("--tn", gen_tn, "transitive tournament on n vertices (digraph output)");
    gen->add_option("--dicycle", gen_dicycle, "directed cycle on n vertices (digraph output)");
    gen->add_option("-o,--output", gen_out, "output file (stdout if omitted)");

    // recognize
    auto* rec = app.add_subcommand("recognize", "decide single-bar representability of a digraph");
    std::string rec_digraph;
    rec->add_option("--digraph", rec_digraph, "digraph file")->required();

    // construct
    auto* con = app.add_subcommand("construct", "build a layout");
    bool con_one_bar = false, con_two_bar = false;
    int con_quarter = -1;
    std::string con_digraph, con_roles, con_cycle, con_out;
    con->add_flag("--one-bar", con_one_bar, "single-bar layout of --digraph");
    con->add_option("--quarter", con_quarter,
                    "quarter-budget layout of the transitive tournament on n vertices");
    con->add_flag("--two-bar", con_two_bar,
                  "two-bar layout of a reduction instance (--digraph, --roles, --cycle)");
    con->add_option("--digraph", con_digraph, "digraph file");
    con->add_option("--roles", con_roles, "role-map sidecar file");
    con->add_option("--cycle", con_cycle, "hamiltonian cycle file for the source graph");
    con->add_option("-o,--output", con_out, "output layout file (stdout if omitted)");

    // verify
    auto* ver = app.add_subcommand("verify", "check a layout against a digraph");
    std::string ver_layout, ver_digraph;
    ver->add_option("--layout", ver_layout, "layout file")->required();
    ver->add_option("--digraph", ver_digraph, "digraph file")->required();

    // bounds
    auto* bnd = app.add_subcommand("bounds", "bar-budget bounds for transitive tournaments");
    int bnd_tn = -1;
    bnd->add_option("--tn", bnd_tn, "tournament size n")->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "path decomposition of a complete graph");
    int dec_m = -1;
    std::string dec_out;
    dec->add_option("--paths", dec_m, "half the path count m (complete graph on 2m vertices)")
        ->required();
    dec->add_option("-o,--output", dec_out, "output file (stdout if omitted)");

    // reduce
    auto* red = app.add_subcommand("reduce", "build the hamiltonicity test digraph of a graph");
    std::string red_graph, red_out;
    int red_z = 0;
    red->add_option("--graph", red_graph, "cubic triangle-free graph file")->required();
    red->add_option("--z", red_z, "distinguished vertex (default 0)");
    red->add_option("-o,--output", red_out, "output digraph file; role map goes to <output>.roles")
        ->required();

    // render
    auto* ren = app.add_subcommand("render", "render a layout as SVG");
    std::string ren_layout, ren_out, ren_xs, ren_ys, ren_thick;
    bool ren_strips = false, ren_no_labels = false;
    ren->add_option("--layout", ren_layout, "layout file")->required();
    ren->add_option("-o,--output", ren_out, "output SVG file (stdout if omitted)");
    ren->add_flag("--strips", ren_strips, "overlay dashed visibility strips");
    ren->add_flag("--no-labels", ren_no_labels, "omit vertex labels");
    ren->add_option("--x-scale", ren_xs, "rational horizontal scale");
    ren->add_option("--y-scale", ren_ys, "rational vertical scale");
    ren->add_option("--thickness", ren_thick, "rational bar thickness");

    try {
        std::vector<std::string> storage;
        storage.reserve(args.size() + 1);
        storage.emplace_back("barviz");
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        argv.reserve(storage.size());
        for (const std::string& s : storage) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help requested: print it, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) {
            int modes = (!gen_name.empty()) + (gen_tn >= 0) + (gen_dicycle >= 0);
            if (modes != 1) {
                std::cerr << "gen: choose exactly one of --name, --tn, --dicycle\n" << gen->help();
                return 2;
            }
            if (!gen_name.empty())
                out_or_stdout(gen_out, serialize_graph(named_graph(gen_name)));
            else if (gen_tn >= 0)
                out_or_stdout(gen_out, serialize_digraph(transitive_tournament(gen_tn)));
            else
                out_or_stdout(gen_out, serialize_digraph(directed_cycle(gen_dicycle)));
            return 0;
        }
        if (rec->parsed()) {
            Digraph g = parse_digraph(read_file(rec_digraph));
            Recognition r = is_bar_visibility_digraph(g);
            if (r.ok) {
                std::cout << "YES\n";
                return 0;
            }
            std::cout << "NO " << reason_name(r.reason) << "\n";
            return 1;
        }
        if (con->parsed()) {
            int modes = con_one_bar + (con_quarter >= 0) + con_two_bar;
            if (modes != 1) {
                std::cerr << "construct: choose exactly one of --one-bar, --quarter, --two-bar\n"
                          << con->help();
                return 2;
            }
            Layout l;
            if (con_one_bar) {
                if (con_digraph.empty()) {
                    std::cerr << "construct --one-bar needs --digraph\n" << con->help();
                    return 2;
                }
                Digraph g = parse_digraph(read_file(con_digraph));
                Recognition r = is_bar_visibility_digraph(g);
                if (!r.ok) {
                    std::cout << "NO " << reason_name(r.reason) << "\n";
                    return 1;
                }
                l = construct_1bar(g);
            } else if (con_quarter >= 0) {
                l = quarter_layout(con_quarter);
            } else {
                if (con_digraph.empty() || con_roles.empty() || con_cycle.empty()) {
                    std::cerr << "construct --two-bar needs --digraph, --roles and --cycle\n"
                              << con->help();
                    return 2;
                }
                TestDigraph t =
                    reassemble_test_digraph(parse_digraph(read_file(con_digraph)),
                                            read_file(con_roles));
                HamCycle c = parse_cycle(read_file(con_cycle));
                l = two_bar_layout(t, c);
            }
            out_or_stdout(con_out, serialize_layout(l));
            return 0;
        }
        if (ver->parsed()) {
            Layout l = parse_layout(read_file(ver_layout));
            Digraph g = parse_digraph(read_file(ver_digraph));
            Diff d = verify_layout(l, g);
            if (d.empty()) {
                std::cout << "OK\n";
                return 0;
            }
            for (auto [u, v] : d.missing) std::cout << "missing a " << u << " " << v << "\n";
            for (auto [u, v] : d.extra) std::cout << "extra a " << u << " " << v << "\n";
            return 1;
        }
        if (bnd->parsed()) {
            BoundsReport r = bounds_Tn(bnd_tn);
            std::cout << r.n << " " << r.lower << " " << r.upper << " " << r.lower_source << " "
                      << r.upper_source << "\n";
            return 0;
        }
        if (dec->parsed()) {
            out_or_stdout(dec_out, serialize_path_decomposition(path_decomposition(dec_m)));
            return 0;
        }
        if (red->parsed()) {
            Graph h = parse_graph(read_file(red_graph));
            TestDigraph t = build_test_digraph(h, red_z, default_orientation(h));
            write_file(red_out, serialize_digraph(t.g));
            write_file(red_out + ".roles", serialize_roles(t));
            return 0;
        }
        if (ren->parsed()) {
            Layout l = parse_layout(read_file(ren_layout));
            RenderSpec spec;
            if (!ren_xs.empty()) spec.x_scale = parse_rational(ren_xs);
            if (!ren_ys.empty()) spec.y_scale = parse_rational(ren_ys);
            if (!ren_thick.empty()) spec.thickness = parse_rational(ren_thick);
            if (spec.x_scale <= 0 || spec.y_scale <= 0 || spec.thickness <= 0)
                fail(Errc::InvalidInput, "render scales must be positive");
            spec.strips = ren_strips;
            spec.labels = !ren_no_labels;
            out_or_stdout(ren_out, render_svg(l, spec));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help();
    return 2;
}

}  // namespace barviz
