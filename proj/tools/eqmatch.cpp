// Command-line front end: graph analysis, family generation, embedding
// operations, and surface size bounds. Exit codes: 0 success, 1 operational
// error, 2 analyze --theorem found a non-conforming remainder.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "eqmatch/genus.hpp"
#include "eqmatch/reports.hpp"

namespace {

using namespace eqmatch;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string dart_text(int d) {
    return std::to_string(dart_edge(d)) + ((d & 1) ? "-" : "+");
}

// ---------------------------------------------------------------------------

int run_analyze(const std::string& path, bool theorem, bool json_out) {
    Graph g = parse_graph(read_file(path));
    AnalysisReport report = analyze_graph(g, theorem);
    if (json_out) {
        std::cout << analysis_report_json(report).dump(2) << "\n";
    } else {
        std::cout << "vertices:            " << report.vertices << "\n"
                  << "edges:               " << report.edges << "\n"
                  << "shape:               " << to_string(report.shape) << "\n"
                  << "connected:           " << (report.basic.connected ? "yes" : "no") << "\n"
                  << "biconnected:         " << (report.basic.biconnected ? "yes" : "no") << "\n"
                  << "bipartite:           " << (report.basic.bipartition ? "yes" : "no") << "\n"
                  << "min degree:          " << report.basic.min_degree << "\n"
                  << "nu:                  " << report.nu << "\n"
                  << "perfect matching:    " << (report.perfect_matching ? "yes" : "no") << "\n"
                  << "equimatchable:       "
                  << (report.equimatchable.equimatchable ? "yes" : "no") << "\n";
        if (report.equimatchable.witness) {
            std::cout << "  deficient maximal matching:";
            for (auto [u, v] : report.equimatchable.witness->edges)
                std::cout << " (" << u << "," << v << ")";
            std::cout << "\n";
        }
        std::cout << "factor-critical:     " << (report.factor_critical ? "yes" : "no") << "\n"
                  << "randomly matchable:  " << (report.randomly_matchable ? "yes" : "no")
                  << "\n";
        if (report.theorem_checked) {
            std::cout << "isolating matchings checked: " << report.pairs_checked << "\n"
                      << "remainder violations:        " << report.violations.size() << "\n";
            for (const auto& v : report.violations) {
                std::cout << "  vertex " << v.vertex << ", matching";
                for (auto [a, b] : v.matching.matching.edges)
                    std::cout << " (" << a << "," << b << ")";
                std::cout << " -> " << v.components.size() << " components:";
                for (const auto& s : v.components) std::cout << " " << to_string(s);
                std::cout << "\n";
            }
        }
    }
    return (theorem && !report.violations.empty()) ? 2 : 0;
}

int run_generate(const std::string& kind, const ConstructionResult& res,
                 const std::string& out_path) {
    write_file(out_path, serialize_graph(res.graph));
    write_file(out_path + ".manifest.json",
               construction_manifest_json(kind, res, out_path).dump(2) + "\n");
    std::cout << kind << ": " << res.graph.vertex_count() << " vertices, "
              << res.graph.edge_count() << " edges -> " << out_path << "\n";
    return 0;
}

void print_trace(const FaceTrace& t, bool json_out) {
    if (json_out) {
        std::cout << embedding_stats_json(t).dump(2) << "\n";
        return;
    }
    std::cout << "p=" << t.stats.p << " q=" << t.stats.q << " r=" << t.stats.r
              << " genus=" << t.stats.genus << "\n";
    for (std::size_t i = 0; i < t.faces.size(); ++i) {
        std::cout << "face " << i << " (length " << t.faces[i].size() << "):";
        for (int d : t.faces[i]) std::cout << " " << dart_text(d);
        std::cout << "\n";
    }
}

int run_bounds(bool orientable, long long genus, bool json_out) {
    BoundsReport report = size_bounds(make_surface(orientable, genus));
    if (json_out) {
        std::cout << bounds_report_json(report).dump(2) << "\n";
        return 0;
    }
    std::cout << (orientable ? "orientable genus " : "nonorientable genus ") << genus
              << " (chi = " << report.surface.chi() << ")\n"
              << "randomly-matchable component bound: " << report.rm_bound << "\n";
    if (report.d_star)
        std::cout << "d_star: " << *report.d_star << "\nc_star: " << *report.c_star << "\n";
    std::cout << "size lower bound: " << report.lower << "\n"
              << "size upper bound: " << report.upper << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equimatchable graph analysis and rotation-system embeddings"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_path;
    bool analyze_theorem = false, analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "classify a graph file");
    analyze->add_option("file", analyze_path, "graph file")->required();
    analyze->add_flag("--theorem", analyze_theorem,
                      "check every minimal isolating matching's remainder");
    analyze->add_flag("--json", analyze_json, "emit a JSON report");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a constructed graph + manifest");
    generate->require_subcommand(1);
    std::string gen_out;
    long long gen_genus = -1, gen_nonor = -1;
    int gen_triangles = 1, gen_n = 0, gen_m = 0, gen_l = 0, gen_k = 0;
    std::string gen_base;

    auto add_out = [&gen_out](CLI::App* cmd) {
        cmd->add_option("--out", gen_out, "output graph file")->required();
    };
    auto* gen_amalgam = generate->add_subcommand("amalgam", "odd complete graph plus triangles");
    gen_amalgam->add_option("--genus", gen_genus, "orientable genus");
    gen_amalgam->add_option("--nonorientable", gen_nonor, "nonorientable genus");
    gen_amalgam->add_option("--triangles", gen_triangles, "number of glued triangles");
    add_out(gen_amalgam);
    auto* gen_union = generate->add_subcommand("union", "linked K_{n,n} and K_{m+1,m}");
    gen_union->add_option("--n", gen_n)->required();
    gen_union->add_option("--m", gen_m)->required();
    add_out(gen_union);
    auto* gen_lower = generate->add_subcommand("lowerbound", "largest union for a genus");
    gen_lower->add_option("--genus", gen_genus, "orientable genus");
    gen_lower->add_option("--nonorientable", gen_nonor, "nonorientable genus");
    add_out(gen_lower);
    auto* gen_multi = generate->add_subcommand("multisub", "multiply and subdivide edges");
    gen_multi->add_option("--base", gen_base, "2-connected base graph file")->required();
    gen_multi->add_option("--l", gen_l, "edge multiplicity (>= 2)")->required();
    add_out(gen_multi);
    auto* gen_kk2 = generate->add_subcommand("kk2", "complete bipartite K_{k,2}");
    gen_kk2->add_option("--k", gen_k)->required();
    add_out(gen_kk2);

    // embed
    auto* embed = app.add_subcommand("embed", "rotation-system operations");
    embed->require_subcommand(1);
    std::string rot_path, rot_path2, embed_out;
    bool embed_json = false;
    std::string search_mode;
    std::uint64_t search_seed = 0, search_budget = 0, search_limit = 500000000ull;
    int join_u = 0, join_v = 0, join_x = 0, join_y = 0, embed_l = 0;

    auto* etrace = embed->add_subcommand("trace", "face-trace a rotation file");
    etrace->add_option("file", rot_path, "rotation file")->required();
    etrace->add_flag("--json", embed_json);
    auto* esearch = embed->add_subcommand("search", "minimum-genus search for a graph file");
    esearch->add_option("file", rot_path, "graph file")->required();
    esearch->add_option("--mode", search_mode, "exhaustive | anneal")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "anneal"}));
    auto* seed_opt = esearch->add_option("--seed", search_seed, "anneal seed");
    auto* budget_opt = esearch->add_option("--budget", search_budget, "anneal move budget");
    esearch->add_option("--limit", search_limit, "exhaustive rotation-count cap");
    esearch->add_option("--out", embed_out, "write the best rotation here");
    auto* ejoin = embed->add_subcommand("join", "splice two embeddings with edges u-x and v-y");
    ejoin->add_option("rot1", rot_path)->required();
    ejoin->add_option("u", join_u)->required();
    ejoin->add_option("v", join_v)->required();
    ejoin->add_option("rot2", rot_path2)->required();
    ejoin->add_option("x", join_x)->required();
    ejoin->add_option("y", join_y)->required();
    ejoin->add_option("--out", embed_out, "output rotation file")->required();
    auto* emulti = embed->add_subcommand("multisub", "multiply and subdivide an embedding");
    emulti->add_option("file", rot_path)->required();
    emulti->add_option("--l", embed_l, "edge multiplicity (>= 2)")->required();
    emulti->add_option("--out", embed_out, "output rotation file")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "size bounds for a surface");
    long long bounds_genus = -1, bounds_nonor = -1;
    bool bounds_json = false;
    bounds->add_option("--genus", bounds_genus, "orientable genus");
    bounds->add_option("--nonorientable", bounds_nonor, "nonorientable genus");
    bounds->add_flag("--json", bounds_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(analyze_path, analyze_theorem, analyze_json);

        if (*generate) {
            auto pick_surface = [&]() {
                if ((gen_genus >= 0) == (gen_nonor >= 0))
                    throw std::invalid_argument("pass exactly one of --genus / --nonorientable");
            };
            if (*gen_amalgam) {
                pick_surface();
                bool orientable = gen_genus >= 0;
                return run_generate("amalgam",
                                    amalgam_construction(
                                        static_cast<int>(orientable ? gen_genus : gen_nonor),
                                        gen_triangles, orientable),
                                    gen_out);
            }
            if (*gen_union) return run_generate("union", union_construction(gen_n, gen_m), gen_out);
            if (*gen_lower) {
                pick_surface();
                bool orientable = gen_genus >= 0;
                return run_generate(
                    "lowerbound",
                    lower_bound_graph(static_cast<int>(orientable ? gen_genus : gen_nonor),
                                      orientable),
                    gen_out);
            }
            if (*gen_multi)
                return run_generate(
                    "multisub", multiply_subdivide(parse_graph(read_file(gen_base)), gen_l),
                    gen_out);
            if (*gen_kk2) return run_generate("kk2", planar_bipartite_family(gen_k), gen_out);
        }

        if (*embed) {
            if (*etrace) {
                print_trace(trace_faces(parse_rotation(read_file(rot_path))), embed_json);
                return 0;
            }
            if (*esearch) {
                Graph g = parse_graph(read_file(rot_path));
                GenusSearchResult res;
                if (search_mode == "exhaustive") {
                    res = min_genus_exhaustive(g, search_limit);
                } else {
                    if (seed_opt->count() == 0 || budget_opt->count() == 0)
                        throw std::invalid_argument("anneal mode requires --seed and --budget");
                    res = min_genus_anneal(g, search_seed, search_budget);
                }
                std::cout << "genus: " << res.genus << "\n"
                          << "euler lower bound: " << res.euler_bound << "\n"
                          << "certified minimum: " << (res.certified ? "yes" : "no") << "\n"
                          << "inspected: " << res.inspected << "\n";
                if (!embed_out.empty()) write_file(embed_out, serialize_rotation(res.rotation));
                return 0;
            }
            if (*ejoin) {
                RotationSystem joined =
                    embedding_join(parse_rotation(read_file(rot_path)), join_u, join_v,
                                   parse_rotation(read_file(rot_path2)), join_x, join_y);
                write_file(embed_out, serialize_rotation(joined));
                std::cout << "joined genus: " << trace_faces(joined).stats.genus << " -> "
                          << embed_out << "\n";
                return 0;
            }
            if (*emulti) {
                RotationSystem sub =
                    multiply_subdivide_embedding(parse_rotation(read_file(rot_path)), embed_l);
                auto t = trace_faces(sub);
                write_file(embed_out, serialize_rotation(sub));
                std::cout << "p=" << t.stats.p << " q=" << t.stats.q << " r=" << t.stats.r
                          << " genus=" << t.stats.genus << " -> " << embed_out << "\n";
                return 0;
            }
        }

        if (*bounds) {
            if ((bounds_genus >= 0) == (bounds_nonor >= 0))
                throw std::invalid_argument("pass exactly one of --genus / --nonorientable");
            bool orientable = bounds_genus >= 0;
            return run_bounds(orientable, orientable ? bounds_genus : bounds_nonor, bounds_json);
        }
    } catch (const construction_error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
