#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ahtop/errors.hpp"
#include "ahtop/graph.hpp"
#include "ahtop/hom_graph.hpp"
#include "ahtop/paths_loops.hpp"

namespace ahtop {

/// (u, omega): a vertex u of the source and a path omega in the target ending at f(u).
struct FiberVertex {
    Vertex u = 0;
    std::size_t path = 0;  // index into FiberGraph::paths

    friend auto operator<=>(const FiberVertex&, const FiberVertex&) = default;
};

/**
 * Truncated mapping fiber of f1: G -> H, i.e. the pullback of the
 * endpoint projection P_{<=L} H -> H along f1, together with its
 * structural maps
 *
 *   k : Omega_{<=L} H -> Mf1,  omega  |-> (u0, omega)
 *   f2: Mf1 -> G,              (u, w) |-> u
 *   q : Mf1 -> H,              (u, w) |-> w(L)
 *
 * Vertices are ordered by (u, path index).
 */
struct FiberGraph {
    GraphMap f1;
    std::size_t max_length = 0;
    PathGraph paths;  // P_{<=L} H
    PathGraph loops;  // Omega_{<=L} H
    std::vector<FiberVertex> vertices;
    GraphPtr graph;
    GraphMap k;
    GraphMap f2;
    GraphMap q;

    std::size_t size() const noexcept { return vertices.size(); }
    std::optional<std::size_t> index_of(FiberVertex v) const;
};

FiberGraph mapping_fiber(const GraphMap& f1, std::size_t max_length, const Limits& limits = {});

struct PullbackCheck {
    bool ok = true;
    std::string failure;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Recomputes the pullback inside G (box) P_{<=L} H from f1 and the path
 * graph alone and compares it with the stored vertices, adjacency and
 * structural maps.
 */
PullbackCheck verify_pullback(const FiberGraph& fiber);

/**
 * Iterated fibers: Mf2 is the fiber of f2 and Mf3 the fiber of f3 (the
 * projection Mf2 -> Mf1). Mf2 vertices are ((u, omega), beta) with beta a
 * path in G ending at u; Mf3 adds a path gamma in Mf1.
 *
 *   j : Omega H -> Mf2,  omega |-> (u0, omega, beta0)
 *   j': Omega G -> Mf3,  beta  |-> (u0, omega0, beta, gamma0)
 */
struct FiberTower {
    FiberGraph mf1;
    std::optional<FiberGraph> mf2;  // fiber of mf1.f2; its f2 is f3
    std::optional<FiberGraph> mf3;  // fiber of mf2->f2; its f2 is f4
    std::optional<GraphMap> j;        // mf1.loops -> Mf2
    std::optional<GraphMap> j_prime;  // mf2->loops -> Mf3
    std::vector<std::size_t> lengths;

    const GraphMap& f3() const { return mf2->f2; }
    const GraphMap& f4() const { return mf3->f2; }
};

/// lengths[i] is the path budget of stage i + 1; depth is 1, 2 or 3.
FiberTower iterated_fiber(const GraphMap& f1, std::vector<std::size_t> lengths, std::size_t depth,
                          const Limits& limits = {});

/// True iff the map is injective on vertices.
bool is_injective(const GraphMap& f);

// ---------------------------------------------------------------------------
// Commuting ladder for the second fiber

enum class SquareStatus { commutes, homotopy_commutes, fails, inconclusive };

struct SquareVerdict {
    std::string name;
    SquareStatus status = SquareStatus::inconclusive;
    std::string method;  // "vertex-wise", "two-phase", "search"
    std::optional<HomotopyWitness> witness;
    std::string note;
};

struct LadderReport {
    std::size_t max_length = 0;
    std::size_t fiber3_length = 0;
    std::size_t homotopy_budget = 0;
    SublengthReport source_sublength;
    SublengthReport target_sublength;
    bool hypothesis_met = false;
    std::vector<SquareVerdict> squares;  // left to right

    bool all_commute() const;
};

struct LadderOptions {
    std::size_t homotopy_budget = 16;  // maximum total witness length m + m'
    std::size_t fiber3_length = 1;     // path budget for the gamma coordinate of Mf3
    std::size_t bound = 4;
};

/**
 * Checks that the ladder Omega G -> Omega H -> Mf1 -> G -> H over
 * Mf3 -> Mf2 -> Mf1 -> G -> H commutes: the three right squares
 * vertex-wise, the left square up to a pointed homotopy from j o Omega f1
 * to f4 o j'. The homotopy is first built in two phases (contract the
 * omega coordinate through a contraction of H, then grow the beta
 * coordinate through a contraction of G) and only then searched for.
 */
LadderReport check_mf2_ladder(const GraphMap& f1, std::size_t max_length, const LadderOptions& options = {},
                              const Limits& limits = {});

}  // namespace ahtop
