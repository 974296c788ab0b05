#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ahtop/errors.hpp"
#include "ahtop/graph.hpp"
#include "ahtop/map_space.hpp"

namespace ahtop {

/**
 * A stabilized path I_inf -> G, constant at the base for t <= 0 and constant
 * from its last change onwards. Stored as its canonical trace omega(0..L)
 * with L minimal, so two paths are equal iff their traces are equal.
 */
class Path {
public:
    Path() : trace_{0} {}
    /// Strips trailing repeats. Throws std::invalid_argument on an empty trace.
    explicit Path(std::vector<Vertex> trace);

    const std::vector<Vertex>& trace() const noexcept { return trace_; }
    std::size_t length() const noexcept { return trace_.size() - 1; }
    Vertex start() const noexcept { return trace_.front(); }
    Vertex stable_value() const noexcept { return trace_.back(); }

    /// omega(t) for any integer t.
    Vertex at(long t) const;
    /// omega(0..L) for L >= length().
    std::vector<Vertex> padded(std::size_t max_length) const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;

private:
    std::vector<Vertex> trace_;
};

/// Starts at the base and every step stays or moves along an edge.
bool is_valid_path(const PointedGraph& g, const Path& p);
bool is_loop(const PointedGraph& g, const Path& p);

/// Pointwise composite f o omega, canonicalized.
Path apply(const GraphMap& f, const Path& p);

/**
 * Truncated path graph P_{<=L} G (or loop graph Omega_{<=L} G). Vertex i is
 * paths[i]; the padded traces (width L + 1) are kept in lexicographic order.
 * Two paths are adjacent iff they agree up to adjacency at every time.
 */
struct PathGraph {
    GraphPtr target;
    std::size_t max_length = 0;
    bool loops_only = false;
    AssignmentTable padded;
    std::vector<Path> paths;
    GraphPtr graph;

    std::size_t size() const noexcept { return paths.size(); }
    std::optional<std::size_t> index_of(const Path& p) const;
    /// p(L) of vertex i.
    Vertex endpoint(std::size_t i) const { return paths[i].stable_value(); }
};

PathGraph path_graph_trunc(const GraphPtr& g, std::size_t max_length, const Limits& limits = {});
PathGraph loop_graph_trunc(const GraphPtr& g, std::size_t max_length, const Limits& limits = {});

/// Omega f between truncated loop graphs built with the same max_length. f must be pointed.
GraphMap loop_map(const GraphMap& f, const PathGraph& source, const PathGraph& target);

/// Path-graph map omega -> f o omega; target built over f's codomain with the same max_length.
GraphMap path_map(const GraphMap& f, const PathGraph& source, const PathGraph& target);

/// Iterated loop graphs Omega^n, one length budget per level: lengths[0] for Omega G, ...
std::vector<PathGraph> iterated_loop_graphs(const GraphPtr& g, std::span<const std::size_t> lengths,
                                            const Limits& limits = {});

// ---------------------------------------------------------------------------
// Subloops

/// Window [begin, end] between consecutive base visits with a non-base interior.
struct Subloop {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t sublength = 0;  // distinct vertices in the window, both ends included

    friend bool operator==(const Subloop&, const Subloop&) = default;
};

std::vector<Subloop> subloop_decompose(const Path& loop, Vertex base);

struct SublengthReport {
    bool holds = true;
    std::size_t bound = 4;
    std::size_t max_length = 0;
    std::size_t loops_checked = 0;
    std::size_t worst_sublength = 0;
    std::optional<Path> offender;  // first loop (lexicographic) attaining the worst sublength, if it violates
};

/// Checks that every loop of length <= max_length has all subloops of sublength <= bound.
SublengthReport check_sublength_condition(const GraphPtr& g, std::size_t max_length, std::size_t bound = 4,
                                          const Limits& limits = {});
/// Same check over an already built loop graph.
SublengthReport check_sublength_condition(const PathGraph& loops, std::size_t bound = 4);

}  // namespace ahtop
