#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ahtop/errors.hpp"
#include "ahtop/graph.hpp"

namespace ahtop {

/**
 * Flat, lexicographically sorted table of equal-width vertex sequences.
 *
 * Used for the vertex sets of exponential graphs (assignments K -> G)
 * and of path graphs (padded traces I_L -> G). Sortedness makes lookup
 * a binary search and lets pointwise-neighbour joins walk the table as
 * an implicit trie.
 */
class AssignmentTable {
public:
    AssignmentTable() = default;
    explicit AssignmentTable(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return width_ == 0 ? count_ : data_.size() / width_; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const Vertex> row(std::size_t i) const { return {data_.data() + i * width_, width_}; }
    Vertex at(std::size_t i, std::size_t column) const { return data_[i * width_ + column]; }

    /// Rows must be appended in strictly increasing lexicographic order.
    void push_back(std::span<const Vertex> r);

    std::optional<std::size_t> find(std::span<const Vertex> r) const;

    /// Keep the rows for which `keep` holds; order is preserved.
    AssignmentTable filtered(const std::function<bool(std::span<const Vertex>)>& keep) const;

private:
    std::size_t width_ = 0;
    std::size_t count_ = 0;  // only meaningful for width 0 (at most one empty row)
    std::vector<Vertex> data_;
};

/**
 * All (pointed) graph maps K -> G in lexicographic assignment order.
 * Throws ResourceError once more than `limits.enumeration_cap` maps are produced.
 */
AssignmentTable enumerate_maps(const PointedGraph& domain, const PointedGraph& codomain, bool pointed,
                               const Limits& limits);

/**
 * Edges (i, j), i < j, between distinct rows that agree up to adjacency at
 * every position: row_i[t] == row_j[t] or row_i[t] ~ row_j[t] in `target`.
 * Output is sorted.
 */
std::vector<std::pair<std::size_t, std::size_t>> pointwise_adjacent_pairs(const AssignmentTable& table,
                                                                          const Graph& target);

/// Streams the same pairs as pointwise_adjacent_pairs without storing them, in row order of i.
void for_each_pointwise_adjacent_pair(const AssignmentTable& table, const Graph& target,
                                      const std::function<void(std::size_t, std::size_t)>& visit);

/**
 * Calls `visit` for every (pointed) graph map g with g(u) equal or adjacent
 * to f(u) for all u, in lexicographic order, excluding f itself.
 */
void for_each_one_step_neighbor(const PointedGraph& domain, const PointedGraph& codomain, bool pointed,
                                std::span<const Vertex> f,
                                const std::function<void(std::span<const Vertex>)>& visit);

/// Pointwise equal-or-adjacent test on two rows.
bool pointwise_adjacent(std::span<const Vertex> a, std::span<const Vertex> b, const Graph& target);

/// |V_G|^|V_K| saturated at SIZE_MAX.
std::size_t raw_assignment_count(std::size_t domain_size, std::size_t codomain_size);

}  // namespace ahtop
