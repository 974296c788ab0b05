#include "ahtop/mapping_fiber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ahtop {

std::optional<std::size_t> FiberGraph::index_of(FiberVertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

FiberGraph mapping_fiber(const GraphMap& f1, std::size_t max_length, const Limits& limits) {
    if (!f1.pointed()) throw std::invalid_argument("mapping fiber needs a pointed map");
    const PointedGraph& g = *f1.domain();
    const PointedGraph& h = *f1.codomain();
    PathGraph paths = path_graph_trunc(f1.codomain(), max_length, limits);
    PathGraph loops = loop_graph_trunc(f1.codomain(), max_length, limits);

    std::vector<std::vector<std::size_t>> by_end(h.vertex_count());
    std::vector<std::size_t> position(paths.size());
    for (std::size_t p = 0; p < paths.size(); ++p) {
        auto& bucket = by_end[paths.endpoint(p)];
        position[p] = bucket.size();
        bucket.push_back(p);
    }
    std::vector<std::vector<Vertex>> preimage(h.vertex_count());
    std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        preimage[f1(u)].push_back(u);
        offset[u + 1] = offset[u] + by_end[f1(u)].size();
    }
    const std::size_t n = offset.back();
    if (n > limits.enumeration_cap) throw ResourceError("mapping fiber vertices", n, limits.enumeration_cap);

    std::vector<FiberVertex> vertices;
    vertices.reserve(n);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (std::size_t p : by_end[f1(u)]) vertices.push_back({u, p});
    auto index = [&](Vertex u, std::size_t p) { return static_cast<Vertex>(offset[u] + position[p]); };

    std::vector<Edge> edges;
    for (const Edge& e : paths.graph->graph.edges()) {
        const Vertex end = paths.endpoint(e.u);
        if (paths.endpoint(e.v) != end) continue;
        for (Vertex u : preimage[end]) edges.push_back({index(u, e.u), index(u, e.v)});
    }
    for (const Edge& e : g.graph.edges()) {
        if (f1(e.u) != f1(e.v)) continue;
        for (std::size_t p : by_end[f1(e.u)]) edges.push_back({index(e.u, p), index(e.v, p)});
    }
    const std::size_t base_path = *paths.index_of(Path({h.base}));
    auto graph = share(PointedGraph(Graph(n, std::move(edges)), index(g.base, base_path)));

    std::vector<Vertex> k(loops.size());
    for (std::size_t i = 0; i < loops.size(); ++i) k[i] = index(g.base, *paths.index_of(loops.paths[i]));
    std::vector<Vertex> f2(n), q(n);
    for (std::size_t x = 0; x < n; ++x) {
        f2[x] = vertices[x].u;
        q[x] = paths.endpoint(vertices[x].path);
    }
    GraphMap k_map(loops.graph, graph, std::move(k), true);
    GraphMap f2_map(graph, f1.domain(), std::move(f2), true);
    GraphMap q_map(graph, f1.codomain(), std::move(q), true);
    return FiberGraph{f1,
                      max_length,
                      std::move(paths),
                      std::move(loops),
                      std::move(vertices),
                      std::move(graph),
                      std::move(k_map),
                      std::move(f2_map),
                      std::move(q_map)};
}

bool is_injective(const GraphMap& f) {
    std::vector<Vertex> a = f.assignment();
    std::sort(a.begin(), a.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end();
}

PullbackCheck verify_pullback(const FiberGraph& fiber) {
    auto fail = [](std::string why) { return PullbackCheck{false, std::move(why)}; };
    const GraphMap& f1 = fiber.f1;
    const PointedGraph& g = *f1.domain();
    const PathGraph& ph = fiber.paths;
    const std::size_t n = fiber.vertices.size();

    std::set<FiberVertex> expected;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (std::size_t p = 0; p < ph.size(); ++p)
            if (ph.paths[p].stable_value() == f1(u)) expected.insert({u, p});
    std::set<FiberVertex> actual(fiber.vertices.begin(), fiber.vertices.end());
    if (actual.size() != n) return fail("duplicate fiber vertices");
    for (const FiberVertex& v : actual)
        if (!expected.count(v))
            return fail("vertex (" + std::to_string(v.u) + ", path " + std::to_string(v.path) +
                        ") does not satisfy p(omega) = f1(u)");
    if (actual.size() != expected.size()) return fail("missing pullback vertices");

    if (fiber.graph->vertex_count() != n) return fail("graph size differs from vertex list");
    std::map<FiberVertex, Vertex> where;
    for (std::size_t i = 0; i < n; ++i) where[fiber.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> induced;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [u, p] = fiber.vertices[i];
        for (Vertex q : ph.graph->graph.neighbors(static_cast<Vertex>(p))) {
            auto it = where.find({u, q});
            if (it != where.end() && it->second > i) induced.push_back({static_cast<Vertex>(i), it->second});
        }
        for (Vertex w : g.graph.neighbors(u)) {
            auto it = where.find({w, p});
            if (it != where.end() && it->second > i) induced.push_back({static_cast<Vertex>(i), it->second});
        }
    }
    std::sort(induced.begin(), induced.end());
    if (induced != fiber.graph->graph.edges()) return fail("adjacency is not the one induced from G x PH");

    const Vertex expected_base = where.at({g.base, *ph.index_of(Path({f1.codomain()->base}))});
    if (fiber.graph->base != expected_base) return fail("base vertex is not (u0, omega0)");

    if (fiber.f2.assignment().size() != n || fiber.q.assignment().size() != n)
        return fail("structural maps do not cover the vertex list");
    for (std::size_t i = 0; i < n; ++i) {
        const auto [u, p] = fiber.vertices[i];
        if (fiber.f2(static_cast<Vertex>(i)) != u) return fail("f2 is not the projection to G");
        if (fiber.q(static_cast<Vertex>(i)) != ph.endpoint(p)) return fail("q is not the path endpoint");
        if (f1(u) != ph.endpoint(p)) return fail("square f1 o f2 = p o pr does not commute");
    }
    if (!check_graph_map(*fiber.graph, g, fiber.f2.assignment(), true)) return fail("f2 is not a pointed graph map");
    if (!check_graph_map(*fiber.graph, *f1.codomain(), fiber.q.assignment(), true))
        return fail("q is not a pointed graph map");
    return {};
}

FiberTower iterated_fiber(const GraphMap& f1, std::vector<std::size_t> lengths, std::size_t depth,
                          const Limits& limits) {
    if (depth < 1 || depth > 3) throw std::invalid_argument("fiber tower depth must be 1, 2 or 3");
    if (lengths.size() < depth) throw std::invalid_argument("one path budget per tower stage is required");
    FiberTower tower{mapping_fiber(f1, lengths[0], limits), std::nullopt, std::nullopt, std::nullopt,
                     std::nullopt, lengths};
    if (depth >= 2) {
        tower.mf2 = mapping_fiber(tower.mf1.f2, lengths[1], limits);
        const FiberGraph& mf2 = *tower.mf2;
        const std::size_t beta0 = *mf2.paths.index_of(Path({f1.domain()->base}));
        std::vector<Vertex> j(tower.mf1.loops.size());
        for (std::size_t w = 0; w < j.size(); ++w)
            j[w] = static_cast<Vertex>(*mf2.index_of({tower.mf1.k(static_cast<Vertex>(w)), beta0}));
        tower.j = GraphMap(tower.mf1.loops.graph, mf2.graph, std::move(j), true);
    }
    if (depth >= 3) {
        tower.mf3 = mapping_fiber(tower.mf2->f2, lengths[2], limits);
        const FiberGraph& mf3 = *tower.mf3;
        const std::size_t gamma0 = *mf3.paths.index_of(Path({tower.mf1.graph->base}));
        std::vector<Vertex> jp(tower.mf2->loops.size());
        for (std::size_t b = 0; b < jp.size(); ++b)
            jp[b] = static_cast<Vertex>(*mf3.index_of({tower.mf2->k(static_cast<Vertex>(b)), gamma0}));
        tower.j_prime = GraphMap(tower.mf2->loops.graph, mf3.graph, std::move(jp), true);
    }
    return tower;
}

// ---------------------------------------------------------------------------

bool LadderReport::all_commute() const {
    return !squares.empty() && std::all_of(squares.begin(), squares.end(), [](const SquareVerdict& s) {
        return s.status == SquareStatus::commutes || s.status == SquareStatus::homotopy_commutes;
    });
}

namespace {

SquareVerdict vertexwise(std::string name, const GraphMap& top_then_down, const GraphMap& down_then_bottom) {
    SquareVerdict v;
    v.name = std::move(name);
    v.method = "vertex-wise";
    v.status = top_then_down.assignment() == down_then_bottom.assignment() ? SquareStatus::commutes
                                                                          : SquareStatus::fails;
    return v;
}

/// Pointed contraction id_X ~ const, or nullopt if none exists or the search is capped.
std::optional<HomotopyWitness> contraction(const GraphPtr& x, const Limits& limits) {
    try {
        auto r = are_homotopic(identity_map(x), constant_map(x, x, x->base), true, limits);
        if (r.homotopic) return r.witness;
    } catch (const ResourceError&) {
    }
    return std::nullopt;
}

std::optional<HomotopyWitness> two_phase_homotopy(const FiberTower& tower, const PathGraph& loops_g,
                                                  std::size_t budget, const Limits& limits, std::string& note) {
    const GraphMap& f1 = tower.mf1.f1;
    const FiberGraph& mf1 = tower.mf1;
    const FiberGraph& mf2 = *tower.mf2;
    auto contract_h = contraction(f1.codomain(), limits);
    auto contract_g = contraction(f1.domain(), limits);
    if (!contract_h || !contract_g) {
        note = "two-phase homotopy unavailable: " +
               std::string(!contract_h ? "target" : "source") + " has no pointed contraction";
        return std::nullopt;
    }
    const std::size_t m = contract_h->length();
    const std::size_t m2 = contract_g->length();
    if (m + m2 > budget) {
        note = "two-phase homotopy needs " + std::to_string(m + m2) + " steps, budget is " + std::to_string(budget);
        return std::nullopt;
    }
    const Vertex u0 = f1.domain()->base;
    const std::size_t beta0 = *mf2.paths.index_of(Path({u0}));
    const std::size_t omega0 = *mf1.paths.index_of(Path({f1.codomain()->base}));
    const Vertex mf1_base = static_cast<Vertex>(*mf1.index_of({u0, omega0}));

    HomotopyWitness w;
    // phase 1: (u0, F_s o f1 o beta, beta0)
    for (std::size_t s = 0; s <= m; ++s) {
        const GraphMap& fs = contract_h->steps[s];
        std::vector<Vertex> a(loops_g.size());
        for (std::size_t b = 0; b < loops_g.size(); ++b) {
            Path image = apply(fs, apply(f1, loops_g.paths[b]));
            auto omega = mf1.paths.index_of(image);
            if (!omega) return std::nullopt;
            a[b] = static_cast<Vertex>(*mf2.index_of({static_cast<Vertex>(*mf1.index_of({u0, *omega})), beta0}));
        }
        w.steps.emplace_back(loops_g.graph, mf2.graph, std::move(a), true);
    }
    // phase 2: (u0, omega0, F'_{m'-s} o beta)
    for (std::size_t s = 1; s <= m2; ++s) {
        const GraphMap& fs = contract_g->steps[m2 - s];
        std::vector<Vertex> a(loops_g.size());
        for (std::size_t b = 0; b < loops_g.size(); ++b) {
            auto beta = mf2.paths.index_of(apply(fs, loops_g.paths[b]));
            if (!beta) return std::nullopt;
            a[b] = static_cast<Vertex>(*mf2.index_of({mf1_base, *beta}));
        }
        w.steps.emplace_back(loops_g.graph, mf2.graph, std::move(a), true);
    }
    return w;
}

}  // namespace

LadderReport check_mf2_ladder(const GraphMap& f1, std::size_t max_length, const LadderOptions& options,
                              const Limits& limits) {
    LadderReport report;
    report.max_length = max_length;
    report.fiber3_length = options.fiber3_length;
    report.homotopy_budget = options.homotopy_budget;
    report.source_sublength = check_sublength_condition(f1.domain(), max_length, options.bound, limits);
    report.target_sublength = check_sublength_condition(f1.codomain(), max_length, options.bound, limits);
    report.hypothesis_met = report.source_sublength.holds && report.target_sublength.holds;

    FiberTower tower = iterated_fiber(f1, {max_length, max_length, options.fiber3_length}, 3, limits);
    const FiberGraph& mf1 = tower.mf1;
    const FiberGraph& mf2 = *tower.mf2;
    const PathGraph& loops_g = mf2.loops;  // Omega_{<=L} G

    GraphMap omega_f1 = loop_map(f1, loops_g, mf1.loops);
    GraphMap top = compose(*tower.j, omega_f1);
    GraphMap bottom = compose(tower.f4(), *tower.j_prime);

    SquareVerdict left;
    left.name = "j o Omega f1 ~ f4 o j'";
    if (top.assignment() == bottom.assignment()) {
        left.status = SquareStatus::commutes;
        left.method = "vertex-wise";
    } else {
        std::string note;
        auto w = two_phase_homotopy(tower, loops_g, options.homotopy_budget, limits, note);
        if (w && w->steps.front() == top && w->steps.back() == bottom && validate_witness(*w, true)) {
            left.status = SquareStatus::homotopy_commutes;
            left.method = "two-phase";
            left.witness = std::move(w);
        } else {
            left.method = "search";
            left.note = note;
            Limits capped = limits;
            capped.enumeration_cap = std::min<std::size_t>(limits.enumeration_cap, 200'000);
            try {
                auto r = are_homotopic(top, bottom, true, capped);
                if (r.homotopic && r.distance <= options.homotopy_budget) {
                    left.status = SquareStatus::homotopy_commutes;
                    left.witness = std::move(r.witness);
                } else if (r.homotopic) {
                    left.status = SquareStatus::inconclusive;
                    left.note += "; shortest homotopy exceeds the budget";
                } else {
                    left.status = SquareStatus::fails;
                    left.note += "; component of j o Omega f1 exhausted without reaching f4 o j'";
                }
            } catch (const ResourceError& e) {
                left.status = SquareStatus::inconclusive;
                left.note += std::string("; search capped: ") + e.what();
            }
        }
    }
    if (!report.hypothesis_met) left.note += left.note.empty() ? "hypothesis not met" : "; hypothesis not met";
    report.squares.push_back(std::move(left));

    report.squares.push_back(vertexwise("f3 o j = id o k", compose(tower.f3(), *tower.j), mf1.k));
    report.squares.push_back(vertexwise("f2 o id = id o f2", compose(mf1.f2, identity_map(mf1.graph)),
                                        compose(identity_map(f1.domain()), mf1.f2)));
    report.squares.push_back(vertexwise("f1 o id = id o f1", compose(f1, identity_map(f1.domain())),
                                        compose(identity_map(f1.codomain()), f1)));
    return report;
}

}  // namespace ahtop
