#include "ahtop/map_space.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ahtop {

void AssignmentTable::push_back(std::span<const Vertex> r) {
    if (r.size() != width_) throw std::invalid_argument("AssignmentTable: row width mismatch");
    if (width_ == 0) {
        if (count_ > 0) throw std::invalid_argument("AssignmentTable: rows must be strictly increasing");
        count_ = 1;
        return;
    }
    if (!empty()) {
        auto last = row(size() - 1);
        if (!std::lexicographical_compare(last.begin(), last.end(), r.begin(), r.end()))
            throw std::invalid_argument("AssignmentTable: rows must be strictly increasing");
    }
    data_.insert(data_.end(), r.begin(), r.end());
}

std::optional<std::size_t> AssignmentTable::find(std::span<const Vertex> r) const {
    if (r.size() != width_) return std::nullopt;
    if (width_ == 0) return count_ > 0 ? std::optional<std::size_t>(0) : std::nullopt;
    std::size_t lo = 0;
    std::size_t hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto m = row(mid);
        if (std::lexicographical_compare(m.begin(), m.end(), r.begin(), r.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() && std::equal(r.begin(), r.end(), row(lo).begin())) return lo;
    return std::nullopt;
}

AssignmentTable AssignmentTable::filtered(const std::function<bool(std::span<const Vertex>)>& keep) const {
    AssignmentTable out(width_);
    for (std::size_t i = 0; i < size(); ++i)
        if (keep(row(i))) out.push_back(row(i));
    return out;
}

std::size_t raw_assignment_count(std::size_t domain_size, std::size_t codomain_size) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < domain_size; ++i) {
        if (codomain_size != 0 && total > std::numeric_limits<std::size_t>::max() / codomain_size)
            return std::numeric_limits<std::size_t>::max();
        total *= codomain_size;
    }
    return total;
}

namespace {

/// Backtracking search over assignments, vertex by vertex in index order.
class MapSearch {
public:
    MapSearch(const PointedGraph& domain, const PointedGraph& codomain, bool pointed,
              std::span<const Vertex> centre)
        : domain_(domain), codomain_(codomain), pointed_(pointed), centre_(centre),
          current_(domain.vertex_count()) {
        const std::size_t n = domain.vertex_count();
        earlier_.resize(n);
        for (const Edge& e : domain.graph.edges()) earlier_[e.v].push_back(e.u);  // e.u < e.v
        all_.resize(codomain.vertex_count());
        for (Vertex v = 0; v < all_.size(); ++v) all_[v] = v;
    }

    void run(const std::function<void(std::span<const Vertex>)>& visit) {
        visit_ = &visit;
        extend(0);
    }

private:
    void extend(std::size_t v) {
        if (v == current_.size()) {
            (*visit_)(current_);
            return;
        }
        const auto& before = earlier_[v];
        if (pointed_ && v == domain_.base) {
            try_value(v, codomain_.base);
            return;
        }
        std::span<const Vertex> candidates;
        if (!centre_.empty())
            candidates = codomain_.graph.closed_neighbors(centre_[v]);
        else if (!before.empty())
            candidates = codomain_.graph.closed_neighbors(current_[before.front()]);
        else
            candidates = all_;
        for (Vertex c : candidates) try_value(v, c);
    }

    void try_value(std::size_t v, Vertex c) {
        if (!centre_.empty() && !codomain_.graph.equal_or_adjacent(centre_[v], c)) return;
        for (Vertex w : earlier_[v])
            if (!codomain_.graph.equal_or_adjacent(current_[w], c)) return;
        current_[v] = c;
        extend(v + 1);
    }

    const PointedGraph& domain_;
    const PointedGraph& codomain_;
    bool pointed_;
    std::span<const Vertex> centre_;
    std::vector<Vertex> current_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<Vertex> all_;
    const std::function<void(std::span<const Vertex>)>* visit_ = nullptr;
};

struct CapReached {};

}  // namespace

AssignmentTable enumerate_maps(const PointedGraph& domain, const PointedGraph& codomain, bool pointed,
                               const Limits& limits) {
    AssignmentTable table(domain.vertex_count());
    MapSearch search(domain, codomain, pointed, {});
    std::size_t count = 0;
    try {
        search.run([&](std::span<const Vertex> a) {
            if (++count > limits.enumeration_cap) throw CapReached{};
            table.push_back(a);
        });
    } catch (const CapReached&) {
        throw ResourceError("map enumeration " + std::to_string(domain.vertex_count()) + " -> " +
                                std::to_string(codomain.vertex_count()) + " vertices",
                            count, limits.enumeration_cap);
    }
    return table;
}

void for_each_one_step_neighbor(const PointedGraph& domain, const PointedGraph& codomain, bool pointed,
                                std::span<const Vertex> f,
                                const std::function<void(std::span<const Vertex>)>& visit) {
    if (f.size() != domain.vertex_count()) throw std::invalid_argument("assignment width mismatch");
    if (f.empty()) return;
    MapSearch search(domain, codomain, pointed, f);
    search.run([&](std::span<const Vertex> g) {
        if (!std::equal(g.begin(), g.end(), f.begin())) visit(g);
    });
}

bool pointwise_adjacent(std::span<const Vertex> a, std::span<const Vertex> b, const Graph& target) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!target.equal_or_adjacent(a[t], b[t])) return false;
    return true;
}

namespace {

class PairJoin {
public:
    PairJoin(const AssignmentTable& table, const Graph& target,
             const std::function<void(std::size_t, std::size_t)>& visit)
        : table_(table), target_(target), visit_(visit) {}

    void run() {
        for (std::size_t i = 0; i < table_.size(); ++i) {
            query_ = i;
            descend(0, i, table_.size());  // partners j > i only
        }
    }

private:
    // rows in [lo, hi) share the same prefix of length `depth`
    void descend(std::size_t depth, std::size_t lo, std::size_t hi) {
        if (lo >= hi) return;
        if (depth == table_.width()) {
            for (std::size_t j = lo; j < hi; ++j)
                if (j > query_) visit_(query_, j);
            return;
        }
        const Vertex q = table_.at(query_, depth);
        for (Vertex c : target_.closed_neighbors(q)) {
            auto [a, b] = equal_range(depth, lo, hi, c);
            if (b <= query_) continue;
            descend(depth + 1, std::max(a, query_), b);
        }
    }

    std::pair<std::size_t, std::size_t> equal_range(std::size_t col, std::size_t lo, std::size_t hi,
                                                    Vertex c) const {
        std::size_t a = lo, b = hi;
        while (a < b) {
            std::size_t m = a + (b - a) / 2;
            if (table_.at(m, col) < c) a = m + 1; else b = m;
        }
        std::size_t first = a;
        b = hi;
        while (a < b) {
            std::size_t m = a + (b - a) / 2;
            if (table_.at(m, col) <= c) a = m + 1; else b = m;
        }
        return {first, a};
    }

    const AssignmentTable& table_;
    const Graph& target_;
    const std::function<void(std::size_t, std::size_t)>& visit_;
    std::size_t query_ = 0;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> pointwise_adjacent_pairs(const AssignmentTable& table,
                                                                          const Graph& target) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for_each_pointwise_adjacent_pair(table, target, [&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_pointwise_adjacent_pair(const AssignmentTable& table, const Graph& target,
                                      const std::function<void(std::size_t, std::size_t)>& visit) {
    if (table.width() == 0) return;
    PairJoin(table, target, visit).run();
}

}  // namespace ahtop
