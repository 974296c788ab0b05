#include "ahtop/hom_graph.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace ahtop {

namespace {

/// Hash set of equal-width vertex sequences stored contiguously.
class SequenceSet {
public:
    explicit SequenceSet(std::size_t width)
        : store_(std::make_unique<Store>(Store{width, {}})),
          set_(64, Hash{store_.get()}, Equal{store_.get()}) {}

    /// Returns (index, inserted).
    std::pair<std::size_t, bool> insert(std::span<const Vertex> s) {
        const std::size_t idx = count_;
        store_->data.insert(store_->data.end(), s.begin(), s.end());
        ++count_;
        auto [it, inserted] = set_.insert(idx);
        if (!inserted) {
            store_->data.resize(store_->data.size() - store_->width);
            --count_;
        }
        return {*it, inserted};
    }

    std::span<const Vertex> at(std::size_t i) const { return store_->at(i); }
    std::size_t size() const noexcept { return count_; }

private:
    struct Store {
        std::size_t width;
        std::vector<Vertex> data;
        std::span<const Vertex> at(std::size_t i) const { return {data.data() + i * width, width}; }
    };
    struct Hash {
        const Store* store;
        std::size_t operator()(std::size_t i) const {
            std::size_t h = 1469598103934665603ULL;
            for (Vertex v : store->at(i)) h = (h ^ v) * 1099511628211ULL;
            return h;
        }
    };
    struct Equal {
        const Store* store;
        bool operator()(std::size_t a, std::size_t b) const {
            auto x = store->at(a);
            auto y = store->at(b);
            return std::equal(x.begin(), x.end(), y.begin());
        }
    };

    std::unique_ptr<Store> store_;
    std::size_t count_ = 0;
    std::unordered_set<std::size_t, Hash, Equal> set_;
};

void require_same_spaces(const GraphMap& f, const GraphMap& g) {
    if (!(*f.domain() == *g.domain()) || !(*f.codomain() == *g.codomain()))
        throw std::invalid_argument("maps do not share domain and codomain");
}

bool is_pointed_assignment(const GraphMap& f) {
    return f(f.domain()->base) == f.codomain()->base;
}

struct SearchResult {
    SequenceSet seen;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> distance;
    std::optional<std::size_t> target;
};

SearchResult bfs(const GraphMap& f, std::optional<std::span<const Vertex>> goal, bool pointed,
                 const Limits& limits) {
    const PointedGraph& dom = *f.domain();
    const PointedGraph& cod = *f.codomain();
    SearchResult r{SequenceSet(dom.vertex_count()), {}, {}, std::nullopt};
    r.seen.insert(f.assignment());
    r.parent.push_back(0);
    r.distance.push_back(0);
    auto is_goal = [&](std::size_t i) {
        if (!goal) return false;
        auto a = r.seen.at(i);
        return std::equal(a.begin(), a.end(), goal->begin());
    };
    if (is_goal(0)) {
        r.target = 0;
        return r;
    }
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        std::vector<Vertex> centre(r.seen.at(cur).begin(), r.seen.at(cur).end());
        bool found = false;
        for_each_one_step_neighbor(dom, cod, pointed, centre, [&](std::span<const Vertex> g) {
            if (found) return;
            auto [idx, inserted] = r.seen.insert(g);
            if (!inserted) return;
            if (r.seen.size() > limits.enumeration_cap)
                throw ResourceError("homotopy search", r.seen.size(), limits.enumeration_cap);
            r.parent.push_back(cur);
            r.distance.push_back(r.distance[cur] + 1);
            if (is_goal(idx)) {
                r.target = idx;
                found = true;
                return;
            }
            frontier.push_back(idx);
        });
        if (found) break;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

GraphMap HomGraph::map_at(std::size_t i) const {
    auto row = maps.row(i);
    return GraphMap(domain, codomain, std::vector<Vertex>(row.begin(), row.end()), pointed);
}

HomGraph build_hom_graph(const GraphPtr& domain, const GraphPtr& codomain, bool pointed, const Limits& limits) {
    HomGraph hg;
    hg.domain = domain;
    hg.codomain = codomain;
    hg.pointed = pointed;
    hg.maps = enumerate_maps(*domain, *codomain, pointed, limits);
    std::vector<Edge> edges;
    for (auto [i, j] : pointwise_adjacent_pairs(hg.maps, codomain->graph))
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    std::vector<Vertex> constant(domain->vertex_count(), codomain->base);
    auto base = hg.maps.find(constant);
    hg.graph = share(PointedGraph(Graph(hg.maps.size(), std::move(edges)), base.value_or(0)));
    return hg;
}

GraphMap assemble_homotopy(const HomotopyWitness& witness) {
    if (witness.steps.empty()) throw std::invalid_argument("empty homotopy witness");
    const GraphMap& first = witness.steps.front();
    const std::size_t m = witness.length();
    const std::size_t n = first.domain()->vertex_count();
    auto domain = share(box_product(*first.domain(), interval(m)));
    std::vector<Vertex> a(n * (m + 1));
    for (std::size_t t = 0; t <= m; ++t) {
        const GraphMap& h = witness.steps[t];
        if (!(*h.domain() == *first.domain()) || !(*h.codomain() == *first.codomain()))
            throw std::invalid_argument("witness steps do not share domain and codomain");
        for (Vertex u = 0; u < n; ++u) a[product_index(u, static_cast<Vertex>(t), m + 1)] = h(u);
    }
    return GraphMap(domain, first.codomain(), std::move(a), false);
}

bool validate_witness(const HomotopyWitness& witness, bool pointed) {
    if (witness.steps.empty()) return false;
    const Graph& target = witness.steps.front().codomain()->graph;
    for (std::size_t t = 0; t < witness.steps.size(); ++t) {
        const GraphMap& h = witness.steps[t];
        if (pointed && !is_pointed_assignment(h)) return false;
        if (t > 0 && !pointwise_adjacent(witness.steps[t - 1].assignment(), h.assignment(), target)) return false;
    }
    try {
        assemble_homotopy(witness);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

HomotopyWitness reversed(const HomotopyWitness& w) {
    return HomotopyWitness{std::vector<GraphMap>(w.steps.rbegin(), w.steps.rend())};
}

HomotopyWitness concatenated(const HomotopyWitness& w1, const HomotopyWitness& w2) {
    if (w1.steps.empty()) return w2;
    if (w2.steps.empty()) return w1;
    if (!(w1.steps.back() == w2.steps.front()))
        throw std::invalid_argument("witnesses do not meet");
    HomotopyWitness out = w1;
    out.steps.insert(out.steps.end(), w2.steps.begin() + 1, w2.steps.end());
    return out;
}

HomotopyResult are_homotopic(const GraphMap& f, const GraphMap& g, bool pointed, const Limits& limits) {
    require_same_spaces(f, g);
    if (pointed && (!is_pointed_assignment(f) || !is_pointed_assignment(g)))
        throw std::invalid_argument("pointed homotopy requested for a map that is not pointed");
    HomotopyResult result;
    result.map_space = raw_assignment_count(f.domain()->vertex_count(), f.codomain()->vertex_count());
    SearchResult search = bfs(f, std::span<const Vertex>(g.assignment()), pointed, limits);
    result.explored = search.seen.size();
    if (!search.target) {
        result.homotopic = false;
        result.component_exhausted = true;
        return result;
    }
    result.homotopic = true;
    result.distance = search.distance[*search.target];
    std::vector<std::size_t> chain;
    for (std::size_t i = *search.target;; i = search.parent[i]) {
        chain.push_back(i);
        if (i == 0) break;
    }
    std::reverse(chain.begin(), chain.end());
    HomotopyWitness w;
    for (std::size_t i : chain) {
        auto a = search.seen.at(i);
        w.steps.emplace_back(f.domain(), f.codomain(), std::vector<Vertex>(a.begin(), a.end()),
                             pointed);
    }
    result.witness = std::move(w);
    return result;
}

ComponentDistances homotopy_component(const GraphMap& f, bool pointed, const Limits& limits) {
    if (pointed && !is_pointed_assignment(f))
        throw std::invalid_argument("pointed homotopy requested for a map that is not pointed");
    SearchResult search = bfs(f, std::nullopt, pointed, limits);
    std::vector<std::size_t> order(search.seen.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto x = search.seen.at(a);
        auto y = search.seen.at(b);
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    ComponentDistances out{AssignmentTable(f.domain()->vertex_count()), {}};
    for (std::size_t i : order) {
        out.maps.push_back(search.seen.at(i));
        out.distance.push_back(search.distance[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Vertex>> curry_assignment(std::span<const Vertex> phi, const PointedGraph& k,
                                                    const HomGraph& exp) {
    const std::size_t nh = exp.domain->vertex_count();
    if (phi.size() != k.vertex_count() * nh) throw std::invalid_argument("curry: assignment width mismatch");
    std::vector<Vertex> out(k.vertex_count());
    for (std::size_t w = 0; w < k.vertex_count(); ++w) {
        auto idx = exp.index_of(phi.subspan(w * nh, nh));
        if (!idx) return std::nullopt;
        out[w] = static_cast<Vertex>(*idx);
    }
    return out;
}

std::vector<Vertex> uncurry_assignment(std::span<const Vertex> psi, const HomGraph& exp) {
    const std::size_t nh = exp.domain->vertex_count();
    std::vector<Vertex> out(psi.size() * nh);
    for (std::size_t w = 0; w < psi.size(); ++w) {
        if (psi[w] >= exp.size()) throw std::invalid_argument("uncurry: index outside exponential graph");
        auto row = exp.maps.row(psi[w]);
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(w * nh));
    }
    return out;
}

GraphMap curry(const GraphMap& phi, const GraphPtr& k, const HomGraph& exp) {
    if (!(*phi.domain() == box_product(*k, *exp.domain)))
        throw std::invalid_argument("curry: domain is not K (box) H");
    if (!(*phi.codomain() == *exp.codomain)) throw std::invalid_argument("curry: codomain mismatch");
    auto a = curry_assignment(phi.assignment(), *k, exp);
    if (!a) throw MapError("curry: some slice phi(w, -) is not a vertex of the exponential graph");
    const bool pointed = (*a)[k->base] == exp.graph->base;
    return GraphMap(k, exp.graph, std::move(*a), pointed);
}

GraphMap uncurry(const GraphMap& psi, const HomGraph& exp) {
    if (!(*psi.codomain() == *exp.graph)) throw std::invalid_argument("uncurry: codomain is not the exponential graph");
    auto domain = share(box_product(*psi.domain(), *exp.domain));
    return GraphMap(domain, exp.codomain, uncurry_assignment(psi.assignment(), exp), psi.pointed());
}

GraphMap evaluation_map(const HomGraph& exp) {
    auto domain = share(box_product(*exp.graph, *exp.domain));
    const std::size_t nh = exp.domain->vertex_count();
    std::vector<Vertex> a(exp.size() * nh);
    for (std::size_t w = 0; w < exp.size(); ++w)
        for (std::size_t v = 0; v < nh; ++v) a[w * nh + v] = exp.maps.at(w, v);
    return GraphMap(domain, exp.codomain, std::move(a), true);
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> ClassTable::class_of_assignment(std::span<const Vertex> a) const {
    auto idx = maps.find(a);
    if (!idx) return std::nullopt;
    return class_of[*idx];
}

ClassTable homotopy_classes(const GraphPtr& probe, const GraphPtr& target, bool pointed, const Limits& limits) {
    ClassTable t;
    t.probe = probe;
    t.target = target;
    t.pointed = pointed;
    t.maps = enumerate_maps(*probe, *target, pointed, limits);
    const std::size_t n = t.maps.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t visited = 0;
    for_each_pointwise_adjacent_pair(t.maps, target->graph, [&](std::size_t i, std::size_t j) {
        if (++visited > limits.adjacency_cap)
            throw ResourceError("homotopy class adjacencies", visited, limits.adjacency_cap);
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
    // roots are the least member of each component; number classes in root order
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_of_root(n, unset);
    t.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (class_of_root[r] == unset) {
            class_of_root[r] = t.classes.size();
            t.classes.emplace_back();
        }
        t.class_of[i] = class_of_root[r];
        t.classes[class_of_root[r]].push_back(i);
    }
    std::vector<Vertex> constant(probe->vertex_count(), target->base);
    if (auto c = t.class_of_assignment(constant)) t.base_class = *c;
    return t;
}

std::vector<std::size_t> induced_on_classes(const GraphMap& f, const ClassTable& source, const ClassTable& target) {
    if (!(*f.domain() == *source.target) || !(*f.codomain() == *target.target))
        throw std::invalid_argument("induced_on_classes: map is not composable with the class tables");
    if (!(*source.probe == *target.probe) || source.pointed != target.pointed)
        throw std::invalid_argument("induced_on_classes: tables use different probes or pointedness");
    std::vector<std::size_t> out(source.class_count());
    std::vector<Vertex> image(source.maps.width());
    for (std::size_t c = 0; c < source.class_count(); ++c) {
        std::optional<std::size_t> cls;
        for (std::size_t member : source.classes[c]) {
            auto row = source.maps.row(member);
            for (std::size_t u = 0; u < row.size(); ++u) image[u] = f(row[u]);
            auto d = target.class_of_assignment(image);
            if (!d) throw std::logic_error("induced_on_classes: composite is not in the target table");
            if (cls && *cls != *d) throw std::logic_error("induced_on_classes: class function not well defined");
            cls = d;
        }
        out[c] = *cls;
    }
    return out;
}

}  // namespace ahtop
