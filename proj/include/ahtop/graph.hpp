#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ahtop {

using Vertex = std::uint32_t;

/// Undirected edge stored as (min, max).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/**
 * Finite simple undirected graph on the dense vertex set {0, ..., n-1}.
 *
 * Edges are kept in canonical form: each stored as (min, max), sorted
 * lexicographically, without duplicates. Two graphs compare equal iff
 * they have the same vertex count and the same canonical edge list;
 * labels are cosmetic and ignored by comparison.
 */
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on a self-loop, duplicate edge or out-of-range endpoint.
    explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {},
                   std::vector<std::string> labels = {});

    /// Like the constructor, but silently drops self-loops and merges parallel edges.
    static Graph simplified(std::size_t vertex_count, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Sorted open neighbourhood.
    std::span<const Vertex> neighbors(Vertex v) const;
    /// Sorted closed neighbourhood (v together with its neighbours).
    std::span<const Vertex> closed_neighbors(Vertex v) const;

    bool adjacent(Vertex a, Vertex b) const;
    bool equal_or_adjacent(Vertex a, Vertex b) const { return a == b || adjacent(a, b); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    void build_index();

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> offsets_;         // CSR offsets into adjacency_
    std::vector<Vertex> adjacency_;
    std::vector<std::size_t> closed_offsets_;  // CSR offsets into closed_adjacency_
    std::vector<Vertex> closed_adjacency_;
    std::vector<std::uint64_t> bits_;          // dense adjacency, only for small graphs
};

/// A graph with a distinguished base vertex.
struct PointedGraph {
    Graph graph;
    Vertex base = 0;

    PointedGraph() : graph(1) {}
    /// Throws std::invalid_argument unless base < vertex_count.
    PointedGraph(Graph g, Vertex base_vertex);

    std::size_t vertex_count() const noexcept { return graph.vertex_count(); }

    friend bool operator==(const PointedGraph& a, const PointedGraph& b) {
        return a.base == b.base && a.graph == b.graph;
    }
};

using GraphPtr = std::shared_ptr<const PointedGraph>;

inline GraphPtr share(PointedGraph g) { return std::make_shared<const PointedGraph>(std::move(g)); }

// ---------------------------------------------------------------------------
// Standard families

enum class Family { interval, cycle, complete, cube };

/// The member of a standard family with the given size, based at vertex 0. Throws std::domain_error when size is out of range.
PointedGraph make_standard(Family family, int size);

PointedGraph interval(std::size_t m);
PointedGraph cycle(std::size_t n);
PointedGraph complete(std::size_t n);
PointedGraph cube(std::size_t n);

/// Disjoint union; vertices of b are shifted by |V_a|. Base is a's base.
PointedGraph disjoint_union(const PointedGraph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Graph operations

/**
 * Cartesian (box) product. Vertex (a, b) has index a * |V_H| + b, and
 * (a1, b1) ~ (a2, b2) iff a1 = a2 and b1 ~ b2, or a1 ~ a2 and b1 = b2.
 */
Graph box_product(const Graph& g, const Graph& h);
/// Box product of pointed graphs, based at (base_g, base_h).
PointedGraph box_product(const PointedGraph& g, const PointedGraph& h);

inline Vertex product_index(Vertex a, Vertex b, std::size_t right_count) {
    return static_cast<Vertex>(a * right_count + b);
}

struct InducedSubgraph {
    Graph graph;
    /// old index -> new index, or nullopt if dropped
    std::vector<std::optional<Vertex>> index;
    /// new index -> old index
    std::vector<Vertex> original;
};

/// Induced subgraph on `subset`, reindexed densely in increasing order of the old indices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

struct Quotient {
    Graph graph;
    /// old vertex -> block vertex
    std::vector<Vertex> projection;
};

/**
 * Contract each block to one vertex. Unlisted vertices stay singletons.
 * New vertices are numbered by the smallest old vertex of each block.
 * Throws std::invalid_argument if blocks overlap or contain out-of-range indices.
 */
Quotient quotient_contract(const Graph& g, const std::vector<std::vector<Vertex>>& blocks);

/// Relabel vertices by the permutation old -> perm[old].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected component id per vertex; ids are dense and ordered by each component's smallest vertex.
std::vector<std::size_t> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);

// ---------------------------------------------------------------------------
// Graph maps

struct MapCheck {
    bool ok = true;
    /// first domain edge (in canonical order) whose images are neither equal nor adjacent
    std::optional<Edge> violating_edge;
    bool base_violation = false;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Check the graph-map condition for a candidate assignment.
 * Throws std::invalid_argument if the assignment is not total or has
 * out-of-range images.
 */
MapCheck check_graph_map(const PointedGraph& domain, const PointedGraph& codomain,
                         std::span<const Vertex> assignment, bool pointed);

/// A validated graph map. Domain and codomain are shared immutable graphs.
class GraphMap {
public:
    /// Throws MapError if the assignment is not a (pointed) graph map.
    GraphMap(GraphPtr domain, GraphPtr codomain, std::vector<Vertex> assignment, bool pointed);

    const GraphPtr& domain() const noexcept { return domain_; }
    const GraphPtr& codomain() const noexcept { return codomain_; }
    const std::vector<Vertex>& assignment() const noexcept { return assignment_; }
    bool pointed() const noexcept { return pointed_; }

    Vertex operator()(Vertex v) const { return assignment_[v]; }

    /// Same assignment and same (canonical) domain and codomain.
    friend bool operator==(const GraphMap& a, const GraphMap& b);

private:
    GraphPtr domain_;
    GraphPtr codomain_;
    std::vector<Vertex> assignment_;
    bool pointed_;
};

GraphMap identity_map(const GraphPtr& g);
GraphMap constant_map(const GraphPtr& domain, const GraphPtr& codomain, Vertex target);
/// g after f. Pointed iff both are.
GraphMap compose(const GraphMap& g, const GraphMap& f);

}  // namespace ahtop
