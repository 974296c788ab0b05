#include "ahtop/graph.hpp"
#include "ahtop/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ahtop {

namespace {

constexpr std::size_t kDenseLimit = 4096;

std::vector<Edge> normalize(std::size_t n, std::vector<Edge> edges, bool drop_bad) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} with " + std::to_string(n) +
                                        " vertices");
        if (e.u == e.v) {
            if (drop_bad) continue;
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        out.push_back(make_edge(e.u, e.v));
    }
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end()) {
        if (!drop_bad)
            throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) + "}");
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), edges_(normalize(vertex_count, std::move(edges), false)),
      labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != vertex_count_)
        throw std::invalid_argument("label count does not match vertex count");
    build_index();
}

Graph Graph::simplified(std::size_t vertex_count, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
    return Graph(vertex_count, normalize(vertex_count, std::move(edges), true), std::move(labels));
}

void Graph::build_index() {
    const std::size_t n = vertex_count_;
    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.assign(offsets_[n], 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));

    closed_offsets_.assign(n + 1, 0);
    closed_adjacency_.clear();
    closed_adjacency_.reserve(adjacency_.size() + n);
    for (std::size_t v = 0; v < n; ++v) {
        auto nb = neighbors(static_cast<Vertex>(v));
        auto it = std::lower_bound(nb.begin(), nb.end(), static_cast<Vertex>(v));
        closed_adjacency_.insert(closed_adjacency_.end(), nb.begin(), it);
        closed_adjacency_.push_back(static_cast<Vertex>(v));
        closed_adjacency_.insert(closed_adjacency_.end(), it, nb.end());
        closed_offsets_[v + 1] = closed_adjacency_.size();
    }

    bits_.clear();
    if (n > 0 && n <= kDenseLimit) {
        const std::size_t words = (n + 63) / 64;
        bits_.assign(n * words, 0);
        for (const Edge& e : edges_) {
            bits_[e.u * words + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
            bits_[e.v * words + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
        }
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const Vertex> Graph::closed_neighbors(Vertex v) const {
    return {closed_adjacency_.data() + closed_offsets_[v], closed_offsets_[v + 1] - closed_offsets_[v]};
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return false;
    if (!bits_.empty()) {
        const std::size_t words = (vertex_count_ + 63) / 64;
        return (bits_[a * words + b / 64] >> (b % 64)) & 1U;
    }
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

PointedGraph::PointedGraph(Graph g, Vertex base_vertex) : graph(std::move(g)), base(base_vertex) {
    if (base >= graph.vertex_count())
        throw std::invalid_argument("base vertex " + std::to_string(base) + " out of range for " +
                                    std::to_string(graph.vertex_count()) + " vertices");
}

// ---------------------------------------------------------------------------

PointedGraph interval(std::size_t m) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return {Graph(m + 1, std::move(edges)), 0};
}

PointedGraph cycle(std::size_t n) {
    if (n < 3) throw std::domain_error("C_n requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
    return {Graph(n, std::move(edges)), 0};
}

PointedGraph complete(std::size_t n) {
    if (n < 1) throw std::domain_error("K_n requires n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    return {Graph(n, std::move(edges)), 0};
}

PointedGraph cube(std::size_t n) {
    if (n < 1) throw std::domain_error("Q_n requires n >= 1, got " + std::to_string(n));
    PointedGraph q = interval(1);
    for (std::size_t i = 1; i < n; ++i) q = box_product(q, interval(1));
    return q;
}

PointedGraph make_standard(Family family, int size) {
    switch (family) {
    case Family::interval:
        if (size < 0) throw std::domain_error("I_m requires m >= 0, got " + std::to_string(size));
        return interval(static_cast<std::size_t>(size));
    case Family::cycle:
        if (size < 3) throw std::domain_error("C_n requires n >= 3, got " + std::to_string(size));
        return cycle(static_cast<std::size_t>(size));
    case Family::complete:
        if (size < 1) throw std::domain_error("K_n requires n >= 1, got " + std::to_string(size));
        return complete(static_cast<std::size_t>(size));
    case Family::cube:
        if (size < 1) throw std::domain_error("Q_n requires n >= 1, got " + std::to_string(size));
        return cube(static_cast<std::size_t>(size));
    }
    throw std::domain_error("unknown family");
}

PointedGraph disjoint_union(const PointedGraph& a, const Graph& b) {
    const auto shift = static_cast<Vertex>(a.vertex_count());
    std::vector<Edge> edges = a.graph.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    return {Graph(a.vertex_count() + b.vertex_count(), std::move(edges)), a.base};
}

// ---------------------------------------------------------------------------

Graph box_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(ng * h.edge_count() + g.edge_count() * nh);
    for (Vertex a = 0; a < ng; ++a)
        for (const Edge& e : h.edges()) edges.push_back({product_index(a, e.u, nh), product_index(a, e.v, nh)});
    for (const Edge& e : g.edges())
        for (Vertex b = 0; b < nh; ++b) edges.push_back({product_index(e.u, b, nh), product_index(e.v, b, nh)});
    return Graph(ng * nh, std::move(edges));
}

PointedGraph box_product(const PointedGraph& g, const PointedGraph& h) {
    return {box_product(g.graph, h.graph), product_index(g.base, h.base, h.vertex_count())};
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    InducedSubgraph out;
    out.index.assign(g.vertex_count(), std::nullopt);
    for (Vertex v : subset) {
        if (v >= g.vertex_count())
            throw std::invalid_argument("subset vertex " + std::to_string(v) + " out of range");
        out.index[v] = 0;
    }
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (out.index[v]) {
            out.index[v] = next++;
            out.original.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (out.index[e.u] && out.index[e.v]) edges.push_back({*out.index[e.u], *out.index[e.v]});
    out.graph = Graph(next, std::move(edges));
    return out;
}

Quotient quotient_contract(const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> leader(n);
    std::iota(leader.begin(), leader.end(), Vertex{0});
    std::vector<bool> seen(n, false);
    for (const auto& block : blocks) {
        if (block.empty()) continue;
        Vertex lead = *std::min_element(block.begin(), block.end());
        for (Vertex v : block) {
            if (v >= n) throw std::invalid_argument("block vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two blocks");
            seen[v] = true;
        }
        if (lead >= n) throw std::invalid_argument("block vertex out of range");
        for (Vertex v : block) leader[v] = lead;
    }
    // number blocks by their smallest member
    std::vector<std::optional<Vertex>> id(n);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (leader[v] == v) id[v] = next++;
    Quotient out;
    out.projection.resize(n);
    for (Vertex v = 0; v < n; ++v) out.projection[v] = *id[leader[v]];
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({out.projection[e.u], out.projection[e.v]});
    out.graph = Graph::simplified(next, std::move(edges));
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), std::move(edges));
}

std::vector<std::size_t> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[w] == unset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

std::size_t component_count(const Graph& g) {
    auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

// ---------------------------------------------------------------------------

MapCheck check_graph_map(const PointedGraph& domain, const PointedGraph& codomain,
                         std::span<const Vertex> assignment, bool pointed) {
    if (assignment.size() != domain.vertex_count())
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                    " entries, domain has " + std::to_string(domain.vertex_count()) +
                                    " vertices");
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] >= codomain.vertex_count())
            throw std::invalid_argument("image of vertex " + std::to_string(v) + " out of range");
    MapCheck result;
    for (const Edge& e : domain.graph.edges()) {
        if (!codomain.graph.equal_or_adjacent(assignment[e.u], assignment[e.v])) {
            result.ok = false;
            result.violating_edge = e;
            break;
        }
    }
    if (pointed && assignment[domain.base] != codomain.base) {
        result.ok = false;
        result.base_violation = true;
    }
    return result;
}

GraphMap::GraphMap(GraphPtr domain, GraphPtr codomain, std::vector<Vertex> assignment, bool pointed)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)),
      pointed_(pointed) {
    if (!domain_ || !codomain_) throw std::invalid_argument("graph map needs a domain and a codomain");
    MapCheck check = check_graph_map(*domain_, *codomain_, assignment_, pointed_);
    if (!check) {
        if (check.violating_edge)
            throw MapError("not a graph map: edge {" + std::to_string(check.violating_edge->u) + "," +
                           std::to_string(check.violating_edge->v) + "} is sent to non-adjacent vertices");
        throw MapError("not a pointed map: base is not sent to base");
    }
}

bool operator==(const GraphMap& a, const GraphMap& b) {
    return a.assignment_ == b.assignment_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
}

GraphMap identity_map(const GraphPtr& g) {
    std::vector<Vertex> a(g->vertex_count());
    std::iota(a.begin(), a.end(), Vertex{0});
    return GraphMap(g, g, std::move(a), true);
}

GraphMap constant_map(const GraphPtr& domain, const GraphPtr& codomain, Vertex target) {
    return GraphMap(domain, codomain, std::vector<Vertex>(domain->vertex_count(), target),
                    target == codomain->base);
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
    if (!(*f.codomain() == *g.domain()))
        throw std::invalid_argument("compose: codomain of the inner map differs from domain of the outer map");
    std::vector<Vertex> a(f.assignment().size());
    for (std::size_t v = 0; v < a.size(); ++v) a[v] = g(f(static_cast<Vertex>(v)));
    return GraphMap(f.domain(), g.codomain(), std::move(a), f.pointed() && g.pointed());
}

}  // namespace ahtop
