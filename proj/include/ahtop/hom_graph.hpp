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
 * Exponential graph G^K: one vertex per (pointed) graph map K -> G, in
 * lexicographic assignment order, with f ~ g iff f(u) and g(u) are equal
 * or adjacent for every u. Its base vertex is the constant map to the
 * base of G.
 */
struct HomGraph {
    GraphPtr domain;
    GraphPtr codomain;
    bool pointed = false;
    AssignmentTable maps;
    GraphPtr graph;

    std::size_t size() const noexcept { return maps.size(); }
    GraphMap map_at(std::size_t i) const;
    std::optional<std::size_t> index_of(std::span<const Vertex> assignment) const { return maps.find(assignment); }
};

HomGraph build_hom_graph(const GraphPtr& domain, const GraphPtr& codomain, bool pointed,
                         const Limits& limits = {});

/// A sequence f = h_0, h_1, ..., h_m = g of one-step adjacent maps.
struct HomotopyWitness {
    std::vector<GraphMap> steps;

    std::size_t length() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

/// F(u, t) = h_t(u) as a map G (box) I_m -> H. Throws MapError if the steps do not assemble.
GraphMap assemble_homotopy(const HomotopyWitness& witness);

/// Checks endpoints, one-step adjacency and (if pointed) base preservation of every step,
/// and that the assembled homotopy is a graph map.
bool validate_witness(const HomotopyWitness& witness, bool pointed);

HomotopyWitness reversed(const HomotopyWitness& w);
/// w1 followed by w2; the last map of w1 must equal the first of w2.
HomotopyWitness concatenated(const HomotopyWitness& w1, const HomotopyWitness& w2);

struct HomotopyResult {
    bool homotopic = false;
    std::size_t distance = 0;                  // valid when homotopic
    std::optional<HomotopyWitness> witness;    // shortest witness when homotopic
    std::size_t explored = 0;                  // maps visited by the search
    bool component_exhausted = false;          // true: the whole component of f was explored
    std::size_t map_space = 0;                 // |V_H|^|V_G|, saturated
};

/**
 * Breadth-first search from f in the implicit exponential graph. Returns the
 * shortest homotopy to g, or a refutation certified by exhausting f's
 * component. Throws ResourceError past `limits.enumeration_cap` visited maps.
 */
HomotopyResult are_homotopic(const GraphMap& f, const GraphMap& g, bool pointed, const Limits& limits = {});

/// Shortest one-step distances from f to every map of its component, keyed by assignment.
struct ComponentDistances {
    AssignmentTable maps;
    std::vector<std::size_t> distance;
};
ComponentDistances homotopy_component(const GraphMap& f, bool pointed, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Exponential law

/**
 * For phi: K (box) H -> G given as a raw assignment, the curried assignment
 * K -> exp (exp is G^H), or nullopt if some phi(w, -) is not a vertex of exp.
 */
std::optional<std::vector<Vertex>> curry_assignment(std::span<const Vertex> phi, const PointedGraph& k,
                                                    const HomGraph& exp);

/// Uncurried raw assignment K (box) H -> G of psi: K -> exp.
std::vector<Vertex> uncurry_assignment(std::span<const Vertex> psi, const HomGraph& exp);

/// phi must have domain box_product(K, H) (canonically equal) and codomain G.
GraphMap curry(const GraphMap& phi, const GraphPtr& k, const HomGraph& exp);
GraphMap uncurry(const GraphMap& psi, const HomGraph& exp);

/// e(omega, v) = omega(v) on exp (box) H.
GraphMap evaluation_map(const HomGraph& exp);

// ---------------------------------------------------------------------------
// Homotopy classes

/**
 * Homotopy classes [K, G]: connected components of the exponential graph.
 * Classes are ordered by their lexicographically least member, which is
 * also the class representative.
 */
struct ClassTable {
    GraphPtr probe;
    GraphPtr target;
    bool pointed = false;
    AssignmentTable maps;
    std::vector<std::vector<std::size_t>> classes;  // indices into maps
    std::vector<std::size_t> class_of;              // per map
    std::size_t base_class = 0;

    std::size_t class_count() const noexcept { return classes.size(); }
    std::span<const Vertex> representative(std::size_t c) const { return maps.row(classes[c].front()); }
    std::optional<std::size_t> class_of_assignment(std::span<const Vertex> a) const;
};

ClassTable homotopy_classes(const GraphPtr& probe, const GraphPtr& target, bool pointed,
                            const Limits& limits = {});

/**
 * Class function [K, G] -> [K, H] induced by postcomposition with f.
 * Checks well-definedness on every member; throws std::logic_error if
 * two members of one class land in different classes.
 */
std::vector<std::size_t> induced_on_classes(const GraphMap& f, const ClassTable& source,
                                            const ClassTable& target);

}  // namespace ahtop
