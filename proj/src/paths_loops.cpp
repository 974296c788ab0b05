#include "ahtop/paths_loops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ahtop {

Path::Path(std::vector<Vertex> trace) : trace_(std::move(trace)) {
    if (trace_.empty()) throw std::invalid_argument("a path needs at least one vertex");
    while (trace_.size() > 1 && trace_[trace_.size() - 1] == trace_[trace_.size() - 2]) trace_.pop_back();
}

Vertex Path::at(long t) const {
    if (t <= 0) return trace_.front();
    if (static_cast<std::size_t>(t) >= trace_.size()) return trace_.back();
    return trace_[static_cast<std::size_t>(t)];
}

std::vector<Vertex> Path::padded(std::size_t max_length) const {
    if (max_length < length()) throw std::invalid_argument("padding shorter than the path");
    std::vector<Vertex> out(trace_);
    out.resize(max_length + 1, trace_.back());
    return out;
}

bool is_valid_path(const PointedGraph& g, const Path& p) {
    const auto& tr = p.trace();
    if (tr.front() != g.base) return false;
    for (Vertex v : tr)
        if (v >= g.vertex_count()) return false;
    for (std::size_t t = 1; t < tr.size(); ++t)
        if (!g.graph.equal_or_adjacent(tr[t - 1], tr[t])) return false;
    return true;
}

bool is_loop(const PointedGraph& g, const Path& p) { return is_valid_path(g, p) && p.stable_value() == g.base; }

Path apply(const GraphMap& f, const Path& p) {
    std::vector<Vertex> tr(p.trace().size());
    for (std::size_t t = 0; t < tr.size(); ++t) tr[t] = f(p.trace()[t]);
    return Path(std::move(tr));
}

std::optional<std::size_t> PathGraph::index_of(const Path& p) const {
    if (p.length() > max_length) return std::nullopt;
    return padded.find(p.padded(max_length));
}

namespace {

PathGraph finish(const GraphPtr& g, std::size_t max_length, bool loops_only, AssignmentTable table) {
    PathGraph pg;
    pg.target = g;
    pg.max_length = max_length;
    pg.loops_only = loops_only;
    pg.padded = std::move(table);
    pg.paths.reserve(pg.padded.size());
    for (std::size_t i = 0; i < pg.padded.size(); ++i) {
        auto row = pg.padded.row(i);
        pg.paths.emplace_back(std::vector<Vertex>(row.begin(), row.end()));
    }
    std::vector<Edge> edges;
    for (auto [i, j] : pointwise_adjacent_pairs(pg.padded, g->graph))
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    const auto base = pg.index_of(Path({g->base}));
    pg.graph = share(PointedGraph(Graph(pg.paths.size(), std::move(edges)), static_cast<Vertex>(base.value())));
    return pg;
}

}  // namespace

PathGraph path_graph_trunc(const GraphPtr& g, std::size_t max_length, const Limits& limits) {
    return finish(g, max_length, false, enumerate_maps(interval(max_length), *g, true, limits));
}

PathGraph loop_graph_trunc(const GraphPtr& g, std::size_t max_length, const Limits& limits) {
    const Vertex base = g->base;
    auto all = enumerate_maps(interval(max_length), *g, true, limits);
    auto loops = all.filtered([base](std::span<const Vertex> r) { return r.back() == base; });
    return finish(g, max_length, true, std::move(loops));
}

namespace {

GraphMap pathwise(const GraphMap& f, const PathGraph& source, const PathGraph& target) {
    if (!f.pointed()) throw std::invalid_argument("Omega f needs a pointed map");
    if (!(*f.domain() == *source.target) || !(*f.codomain() == *target.target))
        throw std::invalid_argument("path graphs do not match the map's domain and codomain");
    if (source.max_length != target.max_length)
        throw std::invalid_argument("path graphs are truncated at different lengths");
    std::vector<Vertex> assignment(source.size());
    std::vector<Vertex> image(source.max_length + 1);
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto row = source.padded.row(i);
        for (std::size_t t = 0; t < row.size(); ++t) image[t] = f(row[t]);
        auto idx = target.padded.find(image);
        if (!idx) throw std::invalid_argument("image path missing from the target path graph");
        assignment[i] = static_cast<Vertex>(*idx);
    }
    return GraphMap(source.graph, target.graph, std::move(assignment), true);
}

}  // namespace

GraphMap loop_map(const GraphMap& f, const PathGraph& source, const PathGraph& target) {
    if (!source.loops_only || !target.loops_only) throw std::invalid_argument("loop_map needs loop graphs");
    return pathwise(f, source, target);
}

GraphMap path_map(const GraphMap& f, const PathGraph& source, const PathGraph& target) {
    return pathwise(f, source, target);
}

std::vector<PathGraph> iterated_loop_graphs(const GraphPtr& g, std::span<const std::size_t> lengths,
                                            const Limits& limits) {
    std::vector<PathGraph> levels;
    GraphPtr current = g;
    for (std::size_t L : lengths) {
        levels.push_back(loop_graph_trunc(current, L, limits));
        current = levels.back().graph;
    }
    return levels;
}

// ---------------------------------------------------------------------------

std::vector<Subloop> subloop_decompose(const Path& loop, Vertex base) {
    const auto& tr = loop.trace();
    std::vector<Subloop> out;
    std::optional<std::size_t> last_base;
    for (std::size_t t = 0; t < tr.size(); ++t) {
        if (tr[t] != base) continue;
        if (last_base && t > *last_base + 1) {
            std::set<Vertex> distinct(tr.begin() + static_cast<std::ptrdiff_t>(*last_base),
                                      tr.begin() + static_cast<std::ptrdiff_t>(t) + 1);
            out.push_back({*last_base, t, distinct.size()});
        }
        last_base = t;
    }
    return out;
}

namespace {

SublengthReport sublength_over(const AssignmentTable& padded, Vertex base, std::size_t max_length,
                               std::size_t bound) {
    SublengthReport report;
    report.bound = bound;
    report.max_length = max_length;
    std::optional<Path> worst;
    for (std::size_t i = 0; i < padded.size(); ++i) {
        auto row = padded.row(i);
        if (row.back() != base) continue;
        ++report.loops_checked;
        Path loop(std::vector<Vertex>(row.begin(), row.end()));
        for (const Subloop& s : subloop_decompose(loop, base)) {
            if (s.sublength > report.worst_sublength) {
                report.worst_sublength = s.sublength;
                worst = loop;
            }
        }
    }
    report.holds = report.worst_sublength <= bound;
    if (!report.holds) report.offender = worst;
    return report;
}

}  // namespace

SublengthReport check_sublength_condition(const PathGraph& loops, std::size_t bound) {
    if (!loops.loops_only) throw std::invalid_argument("sublength condition needs a loop graph");
    return sublength_over(loops.padded, loops.target->base, loops.max_length, bound);
}

SublengthReport check_sublength_condition(const GraphPtr& g, std::size_t max_length, std::size_t bound,
                                          const Limits& limits) {
    return sublength_over(enumerate_maps(interval(max_length), *g, true, limits), g->base, max_length, bound);
}

}  // namespace ahtop
