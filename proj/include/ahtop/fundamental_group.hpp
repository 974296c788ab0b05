#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ahtop/graph.hpp"
#include "ahtop/smith_normal_form.hpp"

namespace ahtop {

/// Letter +(i+1) is generator i, -(i+1) its inverse.
using Letter = int;
using Word = std::vector<Letter>;

/// Cycle subgraphs of length 3 and 4, each listed once as a vertex sequence
/// starting at its smallest vertex with the second vertex smaller than the last.
struct FilledCycles {
    std::vector<std::vector<Vertex>> triangles;
    std::vector<std::vector<Vertex>> squares;

    std::vector<std::vector<Vertex>> all() const;
};

FilledCycles fill_cycles(const Graph& g);

struct Presentation {
    std::size_t generator_count = 0;
    std::vector<Word> relators;
    /// Non-tree edge (min, max) behind each generator, in the vertex numbering of the input graph.
    std::vector<Edge> generator_edges;
    /// Filled cycle behind each relator; empty once relators have been rewritten.
    std::vector<std::vector<Vertex>> relator_cycles;
    std::vector<std::string> warnings;
};

/**
 * Presentation of the edge-path group of the graph with every 3- and
 * 4-cycle filled: generators are the non-tree edges of a breadth-first
 * spanning tree rooted at the base, relators the words of the filled
 * cycles. A disconnected graph is restricted to the base component with a
 * warning.
 */
Presentation pi1_presentation(const PointedGraph& g);

/// Relator-by-generator matrix of exponent sums.
IntMatrix<std::int64_t> relation_matrix(const Presentation& p);

struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

    bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Cokernel of the relation matrix. Uses checked 64-bit arithmetic, promoting to big integers on overflow.
AbelianInvariants abelianization(const Presentation& p);

enum class TietzeStatus { trivialized, simplified, budget_exhausted };

struct TietzeResult {
    Presentation presentation;
    TietzeStatus status = TietzeStatus::simplified;
    std::size_t steps = 0;
};

/// Free and cyclic reduction of a word.
Word reduce_word(const Word& w);
Word inverse_word(const Word& w);

/**
 * Heuristic simplification: reduce relators freely and cyclically, drop
 * trivial and duplicate relators (up to cyclic permutation and inversion),
 * and eliminate a generator that occurs exactly once in some relator,
 * shortest relator first. Each elimination is one step of the budget.
 */
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget = 1000);

enum class Triviality { trivialized, nontrivial_by_abelianization, unknown };

struct A1Report {
    Presentation presentation;
    TietzeResult simplified;
    AbelianInvariants invariants;
    Triviality verdict = Triviality::unknown;
    std::size_t tietze_budget = 0;
};

/// Everything the a1 report states about one pointed graph.
A1Report a1_report(const PointedGraph& g, std::size_t tietze_budget = 1000);

/// "⟨ a, b | a b a^-1 b^-1 ⟩"; generators a..z, or x1.. beyond 26.
std::string presentation_text(const Presentation& p);

const char* to_string(TietzeStatus s);
const char* to_string(Triviality t);

}  // namespace ahtop
