#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ahtop/exact_sequences.hpp"
#include "ahtop/fundamental_group.hpp"
#include "ahtop/hom_graph.hpp"
#include "ahtop/io.hpp"
#include "ahtop/mapping_fiber.hpp"
#include "ahtop/paths_loops.hpp"
#include "ahtop/report.hpp"

namespace {

using namespace ahtop;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kCapped = 2;
constexpr int kInputError = 3;

struct Options {
    std::size_t cap = Limits{}.enumeration_cap;
    std::size_t adjacency_cap = Limits{}.adjacency_cap;
    std::uint64_t seed = 0;
    std::string out;
    std::string expect;
};

/// Outcome of a verb: the artifact to write and whether an --expect claim was refuted.
struct Outcome {
    std::string text;
    bool refuted = false;
};

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError(o.out + ": cannot write file");
    f << text;
}

PointedGraph read_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) return graph_from_json(read_json_file(arg));
    if (arg.size() >= 2 && std::string("ICKQ").find(arg[0]) != std::string::npos &&
        arg.find_first_not_of("0123456789", 1) == std::string::npos)
        return standard_graph(arg);
    throw InputError(arg + ": cannot open file");
}

GraphPtr read_shared_graph(const std::string& arg) { return share(read_graph(arg)); }

/// "id:<graph>" or a map file.
GraphMap read_map(const std::string& arg) {
    if (arg.rfind("id:", 0) == 0) return identity_map(read_shared_graph(arg.substr(3)));
    if (!std::filesystem::exists(arg)) throw InputError(arg + ": cannot open file");
    return map_from_json(read_json_file(arg));
}

/// A keyword ("id" or "const<k>") or a file holding a map object or a bare assignment array.
GraphMap map_arg(const std::string& arg, const GraphPtr& g, const GraphPtr& h, bool pointed) {
    std::vector<Vertex> a;
    if (arg == "id") {
        if (!(*g == *h)) throw InputError("'id' needs equal source and target graphs");
        return GraphMap(g, h, identity_map(g).assignment(), pointed);
    }
    if (arg.rfind("const", 0) == 0 && arg.size() > 5 &&
        arg.find_first_not_of("0123456789", 5) == std::string::npos) {
        const auto k = static_cast<Vertex>(std::stoul(arg.substr(5)));
        if (k >= h->vertex_count()) throw InputError("constant '" + arg + "' is out of range");
        return GraphMap(g, h, std::vector<Vertex>(g->vertex_count(), k), pointed);
    }
    if (!std::filesystem::exists(arg)) throw InputError(arg + ": not 'id', 'const<k>' or a readable file");
    Json j = read_json_file(arg);
    if (j.is_object()) {
        if (j.contains("domain") && !(graph_from_json(j["domain"]) == *g))
            throw InputError(arg + ": map domain differs from --G");
        if (j.contains("codomain") && !(graph_from_json(j["codomain"]) == *h))
            throw InputError(arg + ": map codomain differs from the target graph");
        if (!j.contains("assignment")) throw InputError(arg + ": missing \"assignment\"");
        j = j["assignment"];
    }
    if (!j.is_array()) throw InputError(arg + ": expected an assignment array");
    for (const Json& v : j) {
        if (!v.is_number_unsigned()) throw InputError(arg + ": assignment entries must be vertex indices");
        a.push_back(v.get<Vertex>());
    }
    if (a.size() != g->vertex_count()) throw InputError(arg + ": assignment is not total");
    for (Vertex v : a)
        if (v >= h->vertex_count()) throw InputError(arg + ": assignment entry out of range");
    return GraphMap(g, h, std::move(a), pointed);
}

Json envelope(const std::string& command, const Options& o, Json parameters, Json result) {
    return {{"tool", "ahtop"},
            {"version", kVersion},
            {"command", command},
            {"limits", {{"enumeration_cap", o.cap}, {"adjacency_cap", o.adjacency_cap}}},
            {"seed", o.seed},
            {"parameters", std::move(parameters)},
            {"result", std::move(result)}};
}

void check_expect(const Options& o, std::initializer_list<const char*> allowed) {
    if (o.expect.empty()) return;
    for (const char* a : allowed)
        if (o.expect == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw InputError("--expect must be one of: " + list);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete homotopy of graphs: maps, homotopies, loop graphs, mapping fibers and exactness checks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--cap", o.cap, "Maximum maps or paths any enumeration may materialize")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--adjacency-cap", o.adjacency_cap,
                   "Maximum one-step adjacencies a homotopy class computation may visit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Seed recorded in every report")->capture_default_str();
    app.add_option("--out", o.out, "Output file (default: standard output)");
    app.add_option("--expect", o.expect, "Property to assert; exit 1 when it is refuted");

    std::function<Outcome()> run;
    auto limits = [&] { return Limits{o.cap, o.adjacency_cap}; };

    // make
    auto* make = app.add_subcommand("make", "Emit a standard graph as JSON");
    std::string family;
    int size = 0;
    std::optional<Vertex> make_base;
    make->add_option("--family", family, "I, C, K or Q")->required()->check(CLI::IsMember({"I", "C", "K", "Q"}));
    make->add_option("--size", size, "m for I_m, n for C_n, K_n, Q_n")->required();
    make->add_option("--base", make_base, "Base vertex (default 0)");
    make->callback([&] {
        run = [&] {
            check_expect(o, {});
            PointedGraph g = standard_graph(family + std::to_string(size));
            if (make_base) g = PointedGraph(g.graph, *make_base);
            return Outcome{dump(graph_to_json(g))};
        };
    });

    // map-check
    auto* map_check = app.add_subcommand("map-check", "Check the graph-map condition for an assignment");
    std::string map_file;
    map_check->add_option("--map", map_file, "Map JSON {domain, codomain, assignment, pointed}")->required();
    map_check->callback([&] {
        run = [&] {
            check_expect(o, {"valid", "invalid"});
            const Json j = read_json_file(map_file);
            if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("assignment"))
                throw InputError(map_file + ": expected {domain, codomain, assignment, pointed}");
            const PointedGraph g = graph_from_json(j["domain"]);
            const PointedGraph h = graph_from_json(j["codomain"]);
            std::vector<Vertex> a;
            for (const Json& v : j["assignment"]) {
                if (!v.is_number_unsigned()) throw InputError(map_file + ": assignment entries must be vertex indices");
                a.push_back(v.get<Vertex>());
            }
            const bool pointed = j.value("pointed", true);
            MapCheck c;
            try {
                c = check_graph_map(g, h, a, pointed);
            } catch (const std::invalid_argument& e) {
                throw InputError(map_file + ": " + e.what());
            }
            const bool refuted = (o.expect == "valid" && !c.ok) || (o.expect == "invalid" && c.ok);
            return Outcome{dump(envelope("map-check", o, {{"map", map_file}, {"pointed", pointed}}, to_json(c))),
                           refuted};
        };
    });

    // homotopy
    auto* homotopy = app.add_subcommand("homotopy", "Decide whether two maps are A-homotopic");
    std::string g_file, h_file, f_spec, g_spec;
    bool pointed = false;
    homotopy->add_option("--G", g_file, "Source graph (file or standard name such as C5)")->required();
    homotopy->add_option("--H", h_file, "Target graph (default: the source)");
    homotopy->add_option("--f", f_spec, "id, const<k> or an assignment file")->required();
    homotopy->add_option("--g", g_spec, "id, const<k> or an assignment file")->required();
    homotopy->add_flag("--pointed", pointed, "Require every intermediate map to be pointed");
    homotopy->callback([&] {
        run = [&] {
            check_expect(o, {"homotopic", "not-homotopic"});
            auto g = read_shared_graph(g_file);
            auto h = h_file.empty() ? g : read_shared_graph(h_file);
            GraphMap f = map_arg(f_spec, g, h, pointed);
            GraphMap k = map_arg(g_spec, g, h, pointed);
            HomotopyResult r = are_homotopic(f, k, pointed, limits());
            const bool refuted =
                (o.expect == "homotopic" && !r.homotopic) || (o.expect == "not-homotopic" && r.homotopic);
            Json params{{"G", g_file}, {"H", h_file.empty() ? g_file : h_file}, {"f", f_spec},
                        {"g", g_spec}, {"pointed", pointed}};
            return Outcome{dump(envelope("homotopy", o, std::move(params), to_json(r))), refuted};
        };
    });

    // classes
    auto* classes = app.add_subcommand("classes", "Homotopy classes [K, G]");
    std::string k_file;
    bool classes_pointed = false;
    classes->add_option("--K", k_file, "Probe graph")->required();
    classes->add_option("--G", g_file, "Target graph")->required();
    classes->add_flag("--pointed", classes_pointed, "Pointed maps and homotopies");
    classes->callback([&] {
        run = [&] {
            check_expect(o, {});
            ClassTable t = homotopy_classes(read_shared_graph(k_file), read_shared_graph(g_file), classes_pointed,
                                            limits());
            Json params{{"K", k_file}, {"G", g_file}, {"pointed", classes_pointed}};
            return Outcome{dump(envelope("classes", o, std::move(params), to_json(t)))};
        };
    });

    // a1
    auto* a1 = app.add_subcommand("a1", "Presentation and abelianization of A_1");
    std::size_t tietze_budget = 1000;
    a1->add_option("--G", g_file, "Pointed graph")->required();
    a1->add_option("--tietze-budget", tietze_budget, "Maximum generator eliminations")->capture_default_str();
    a1->callback([&] {
        run = [&] {
            check_expect(o, {"trivial", "nontrivial"});
            A1Report r = a1_report(read_graph(g_file), tietze_budget);
            const bool refuted = (o.expect == "trivial" && r.verdict != Triviality::trivialized) ||
                                 (o.expect == "nontrivial" && r.verdict != Triviality::nontrivial_by_abelianization);
            Json params{{"G", g_file}, {"tietze_budget", tietze_budget}};
            return Outcome{dump(envelope("a1", o, std::move(params), to_json(r))), refuted};
        };
    });

    // fiber
    auto* fiber = app.add_subcommand("fiber", "Truncated mapping fiber of a pointed map");
    std::size_t length = 3;
    bool ladder = false;
    bool emit_graph = false;
    LadderOptions ladder_options;
    fiber->add_option("--map", map_file, "Map file or id:<graph>")->required();
    fiber->add_option("--L", length, "Path length budget")->capture_default_str();
    fiber->add_flag("--ladder", ladder, "Also check the commuting ladder of the second fiber");
    fiber->add_option("--homotopy-budget", ladder_options.homotopy_budget, "Maximum ladder homotopy length")
        ->capture_default_str();
    fiber->add_option("--fiber3-length", ladder_options.fiber3_length, "Path budget of the third fiber")
        ->capture_default_str();
    fiber->add_option("--bound", ladder_options.bound, "Sublength bound")->capture_default_str();
    fiber->add_flag("--emit-graph", emit_graph, "Include the fiber graph in the report");
    fiber->callback([&] {
        run = [&] {
            check_expect(o, {"pullback", "ladder"});
            GraphMap f1 = read_map(map_file);
            if (!f1.pointed()) throw InputError("the mapping fiber needs a pointed map");
            FiberGraph mf = mapping_fiber(f1, length, limits());
            PullbackCheck pb = verify_pullback(mf);
            std::set<Vertex> image(mf.k.assignment().begin(), mf.k.assignment().end());
            std::set<Vertex> kernel;
            for (Vertex x = 0; x < mf.size(); ++x)
                if (mf.f2(x) == f1.domain()->base) kernel.insert(x);
            Json result{{"vertices", mf.size()},
                        {"edges", mf.graph->graph.edge_count()},
                        {"path_graph_vertices", mf.paths.size()},
                        {"loop_graph_vertices", mf.loops.size()},
                        {"pullback_verified", pb.ok},
                        {"pullback_failure", pb.failure},
                        {"k_injective", is_injective(mf.k)},
                        {"image_k_equals_kernel_f2", image == kernel}};
            if (emit_graph) result["graph"] = graph_to_json(*mf.graph);
            bool refuted = o.expect == "pullback" && !(pb.ok && image == kernel);
            if (ladder) {
                LadderReport lr = check_mf2_ladder(f1, length, ladder_options, limits());
                result["ladder"] = to_json(lr);
                refuted = refuted || (o.expect == "ladder" && !lr.all_commute());
            } else if (o.expect == "ladder") {
                throw InputError("--expect ladder needs --ladder");
            }
            Json params{{"map", map_file}, {"L", length}, {"ladder", ladder}};
            if (ladder)
                params["ladder_options"] = {{"homotopy_budget", ladder_options.homotopy_budget},
                                            {"fiber3_length", ladder_options.fiber3_length},
                                            {"bound", ladder_options.bound}};
            return Outcome{dump(envelope("fiber", o, std::move(params), std::move(result))), refuted};
        };
    });

    // loops
    auto* loops = app.add_subcommand("loops", "Truncated loop graph and the sublength condition");
    std::size_t bound = 4;
    bool paths_instead = false;
    loops->add_option("--G", g_file, "Pointed graph")->required();
    loops->add_option("--L", length, "Loop length budget")->capture_default_str();
    loops->add_option("--bound", bound, "Sublength bound")->capture_default_str();
    loops->add_flag("--paths", paths_instead, "Build the path graph instead of the loop graph");
    loops->add_flag("--emit-graph", emit_graph, "Include the graph in the report");
    loops->callback([&] {
        run = [&] {
            check_expect(o, {"sublength"});
            auto g = read_shared_graph(g_file);
            PathGraph pg = paths_instead ? path_graph_trunc(g, length, limits()) : loop_graph_trunc(g, length, limits());
            SublengthReport sr = check_sublength_condition(g, length, bound, limits());
            Json result{{"vertices", pg.size()},
                        {"edges", pg.graph->graph.edge_count()},
                        {"components", component_count(pg.graph->graph)},
                        {"sublength", to_json(sr)}};
            if (emit_graph) result["graph"] = graph_to_json(*pg.graph);
            Json params{{"G", g_file}, {"L", length}, {"bound", bound}, {"paths", paths_instead}};
            return Outcome{dump(envelope("loops", o, std::move(params), std::move(result))),
                           o.expect == "sublength" && !sr.holds};
        };
    });

    // suspend
    auto* suspend = app.add_subcommand("suspend", "Reduced suspension graph as JSON");
    std::size_t l = 2;
    suspend->add_option("--G", g_file, "Pointed graph")->required();
    suspend->add_option("--l", l, "Suspension length")->capture_default_str();
    suspend->callback([&] {
        run = [&] {
            check_expect(o, {});
            return Outcome{dump(graph_to_json(*suspension(read_graph(g_file), l).graph))};
        };
    });

    // adjunction
    auto* adjunction = app.add_subcommand("adjunction", "Compare [Sigma_l G, H] with [G, Omega_{<=l} H]");
    adjunction->add_option("--G", g_file, "Pointed graph G")->required();
    adjunction->add_option("--H", h_file, "Pointed graph H")->required();
    adjunction->add_option("--l", l, "Suspension and loop length")->capture_default_str();
    adjunction->callback([&] {
        run = [&] {
            check_expect(o, {"holds"});
            AdjunctionReport r = adjunction_check(read_shared_graph(g_file), read_shared_graph(h_file), l, limits());
            Json params{{"G", g_file}, {"H", h_file}, {"l", l}};
            return Outcome{dump(envelope("adjunction", o, std::move(params), to_json(r))),
                           o.expect == "holds" && !r.holds()};
        };
    });

    // puppe
    auto* puppe = app.add_subcommand("puppe", "Build the truncated Puppe sequence and check exactness");
    std::size_t depth = 1;
    std::string probes_arg = "default";
    PuppeOptions puppe_options;
    puppe->add_option("--map", map_file, "Map file or id:<graph>")->required();
    puppe->add_option("--L", length, "Loop length budget at every level")->capture_default_str();
    puppe->add_option("--depth", depth, "Number of loop levels")->capture_default_str();
    puppe->add_option("--probes", probes_arg, "'default' or a comma list such as K1,I1,C4")->capture_default_str();
    puppe->add_option("--retries", puppe_options.retries, "Re-checks of a refuted position at L + 2")
        ->capture_default_str();
    puppe->add_option("--bound", puppe_options.bound, "Sublength bound")->capture_default_str();
    puppe->callback([&] {
        run = [&] {
            check_expect(o, {"exact", "hypotheses"});
            std::vector<Probe> probes;
            if (probes_arg == "default") {
                probes = default_probes();
            } else {
                std::stringstream ss(probes_arg);
                for (std::string name; std::getline(ss, name, ',');) {
                    try {
                        probes.push_back(probe_from_name(name));
                    } catch (const std::exception& e) {
                        throw InputError(e.what());
                    }
                }
            }
            if (probes.empty()) throw InputError("--probes is empty");
            GraphMap f1 = read_map(map_file);
            if (!f1.pointed()) throw InputError("the Puppe sequence needs a pointed map");
            PuppeReport r = puppe_build_and_check(f1, length, depth, probes, puppe_options, limits());
            Json params{{"map", map_file}, {"L", length}, {"depth", depth}, {"probes", probes_arg},
                        {"retries", puppe_options.retries}, {"bound", puppe_options.bound}};
            const bool refuted = (o.expect == "exact" && r.aggregate != "exact") ||
                                 (o.expect == "hypotheses" && !r.hypotheses.hypotheses_met());
            return Outcome{dump(envelope("puppe", o, std::move(params), to_json(r))), refuted};
        };
    });

    // export-dot
    auto* export_dot = app.add_subcommand("export-dot", "Graph in Graphviz DOT form");
    std::string dot_name = "G";
    export_dot->add_option("--G", g_file, "Graph file or standard name")->required();
    export_dot->add_option("--name", dot_name, "Graph name in the DOT header")->capture_default_str();
    export_dot->callback([&] {
        run = [&] {
            check_expect(o, {});
            return Outcome{to_dot(read_graph(g_file), dot_name)};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        Outcome outcome = run();
        write_output(o, outcome.text);
        if (outcome.refuted) {
            std::cerr << "ahtop: expected property '" << o.expect << "' refuted\n";
            return kRefuted;
        }
        return kOk;
    } catch (const ResourceError& e) {
        std::cerr << "ahtop: resource cap reached: " << e.what() << "\n";
        return kCapped;
    } catch (const std::bad_alloc&) {
        std::cerr << "ahtop: resource cap reached: out of memory\n";
        return kCapped;
    } catch (const InputError& e) {
        std::cerr << "ahtop: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "ahtop: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ahtop: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "ahtop: input error: " << e.what() << "\n";
        return kInputError;
    }
}
