#include "ahtop/exact_sequences.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>

namespace ahtop {

void PointedSequence::validate() const {
    if (stages.empty()) throw std::invalid_argument("a sequence needs at least one stage");
    if (maps.size() + 1 != stages.size()) throw std::invalid_argument("a sequence needs one map between each pair of stages");
    if (!tags.empty() && tags.size() != stages.size()) throw std::invalid_argument("one tag per stage is required");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!maps[i].pointed()) throw std::invalid_argument("sequence map " + std::to_string(i) + " is not pointed");
        if (!(*maps[i].domain() == *stages[i]) || !(*maps[i].codomain() == *stages[i + 1]))
            throw std::invalid_argument("sequence map " + std::to_string(i) + " does not match its stages");
    }
}

std::vector<Probe> default_probes() {
    std::vector<Probe> out;
    for (const char* name : {"K1", "I1", "I2", "C3", "C4", "C5"}) out.push_back(probe_from_name(name));
    return out;
}

Probe probe_from_name(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("probe name must look like K1, I2, C4 or Q2: '" + name + "'");
    int size = 0;
    try {
        std::size_t used = 0;
        size = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("probe name must look like K1, I2, C4 or Q2: '" + name + "'");
    }
    Family family;
    switch (name[0]) {
        case 'K': family = Family::complete; break;
        case 'I': family = Family::interval; break;
        case 'C': family = Family::cycle; break;
        case 'Q': family = Family::cube; break;
        default: throw std::invalid_argument("unknown probe family in '" + name + "'");
    }
    return {name, share(make_standard(family, size))};
}

namespace {

using TableOrError = std::variant<ClassTable, std::string>;

/// Class tables [K, stage] computed once per (stage, probe).
class TableCache {
public:
    TableCache(const PointedSequence& seq, const Limits& limits) : seq_(seq), limits_(limits) {}

    const TableOrError& get(std::size_t stage, const Probe& probe) {
        auto key = std::pair{stage, probe.name};
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
        TableOrError value = std::string();
        try {
            value = homotopy_classes(probe.graph, seq_.stages[stage], true, limits_);
        } catch (const ResourceError& e) {
            value = std::string("[") + probe.name + ", " + tag(stage) + "] capped: " + e.what();
        }
        return tables_.emplace(key, std::move(value)).first->second;
    }

    std::string tag(std::size_t stage) const {
        return stage < seq_.tags.size() ? seq_.tags[stage] : "stage " + std::to_string(stage);
    }

private:
    const PointedSequence& seq_;
    Limits limits_;
    std::map<std::pair<std::size_t, std::string>, TableOrError> tables_;
};

ExactnessVerdict exact_with(const PointedSequence& seq, std::size_t position, const Probe& probe, TableCache& cache) {
    if (position == 0 || position + 1 >= seq.stages.size())
        throw std::invalid_argument("exactness is checked at an interior stage");
    ExactnessVerdict v;
    v.probe = probe.name;
    v.position = position;
    const ClassTable* tables[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const TableOrError& t = cache.get(position - 1 + i, probe);
        if (auto* err = std::get_if<std::string>(&t)) {
            v.status = ExactnessStatus::inconclusive;
            v.note = *err;
            v.class_counts.clear();
            return v;
        }
        tables[i] = &std::get<ClassTable>(t);
        v.class_counts.push_back(tables[i]->class_count());
    }
    const auto in = induced_on_classes(seq.maps[position - 1], *tables[0], *tables[1]);
    const auto out = induced_on_classes(seq.maps[position], *tables[1], *tables[2]);
    std::set<std::size_t> image(in.begin(), in.end());
    v.image_classes.assign(image.begin(), image.end());
    for (std::size_t c = 0; c < out.size(); ++c)
        if (out[c] == tables[2]->base_class) v.kernel_classes.push_back(c);
    for (std::size_t c : v.image_classes)
        if (!std::binary_search(v.kernel_classes.begin(), v.kernel_classes.end(), c)) {
            v.status = ExactnessStatus::image_not_in_kernel;
            v.witness_class = c;
            return v;
        }
    for (std::size_t c : v.kernel_classes)
        if (!image.count(c)) {
            v.status = ExactnessStatus::image_smaller_than_kernel;
            v.witness_class = c;
            return v;
        }
    v.status = ExactnessStatus::exact;
    return v;
}

}  // namespace

ExactnessVerdict check_exact_at(const PointedSequence& seq, std::size_t position, const Probe& probe,
                                const Limits& limits) {
    seq.validate();
    TableCache cache(seq, limits);
    return exact_with(seq, position, probe, cache);
}

// ---------------------------------------------------------------------------

Suspension suspension(const PointedGraph& g, std::size_t l) {
    const PointedGraph box = box_product(g, interval(l));
    const std::size_t width = l + 1;
    std::vector<Vertex> block;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        block.push_back(product_index(u, 0, width));
        block.push_back(product_index(u, static_cast<Vertex>(l), width));
    }
    for (Vertex t = 0; t <= l; ++t) block.push_back(product_index(g.base, t, width));
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    Quotient q = quotient_contract(box.graph, {block});
    const Vertex base = q.projection[product_index(g.base, 0, width)];
    return {share(PointedGraph(std::move(q.graph), base)), l, std::move(q.projection)};
}

GraphMap adjoint(const GraphMap& f, const Suspension& s, const GraphPtr& g, const PathGraph& loops) {
    if (loops.max_length != s.length) throw std::invalid_argument("loop graph truncation differs from the suspension length");
    const std::size_t width = s.length + 1;
    std::vector<Vertex> out(g->vertex_count());
    std::vector<Vertex> trace(width);
    for (Vertex u = 0; u < g->vertex_count(); ++u) {
        for (std::size_t t = 0; t < width; ++t) trace[t] = f(s.projection[product_index(u, static_cast<Vertex>(t), width)]);
        auto idx = loops.index_of(Path(trace));
        if (!idx) throw MapError("adjoint: image of a vertex is not a loop of the truncated loop graph");
        out[u] = static_cast<Vertex>(*idx);
    }
    return GraphMap(g, loops.graph, std::move(out), true);
}

GraphMap coadjoint(const GraphMap& psi, const Suspension& s, const PathGraph& loops) {
    const std::size_t width = s.length + 1;
    std::vector<std::optional<Vertex>> out(s.graph->vertex_count());
    for (Vertex u = 0; u < psi.domain()->vertex_count(); ++u) {
        const Path& loop = loops.paths[psi(u)];
        for (std::size_t t = 0; t < width; ++t) {
            auto& slot = out[s.projection[product_index(u, static_cast<Vertex>(t), width)]];
            const Vertex value = loop.at(static_cast<long>(t));
            if (slot && *slot != value) throw MapError("coadjoint: contracted vertices receive different values");
            slot = value;
        }
    }
    std::vector<Vertex> a(out.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = out[i].value();
    return GraphMap(s.graph, loops.target, std::move(a), true);
}

AdjunctionReport adjunction_check(const GraphPtr& g, const GraphPtr& h, std::size_t l, const Limits& limits) {
    AdjunctionReport r;
    r.length = l;
    const Suspension s = suspension(*g, l);
    const PathGraph loops = loop_graph_trunc(h, l, limits);
    r.suspension_vertices = s.graph->vertex_count();
    r.loop_vertices = loops.size();
    const ClassTable left = homotopy_classes(s.graph, h, true, limits);
    const ClassTable right = homotopy_classes(g, loops.graph, true, limits);
    r.left_maps = left.maps.size();
    r.right_maps = right.maps.size();
    r.left_classes = left.class_count();
    r.right_classes = right.class_count();

    std::vector<std::size_t> phi(left.maps.size());
    std::vector<bool> hit(right.maps.size(), false);
    bool bijective = left.maps.size() == right.maps.size();
    for (std::size_t i = 0; i < left.maps.size() && bijective; ++i) {
        auto row = left.maps.row(i);
        GraphMap f(s.graph, h, std::vector<Vertex>(row.begin(), row.end()), true);
        const GraphMap image = adjoint(f, s, g, loops);
        auto j = right.maps.find(image.assignment());
        if (!j || hit[*j]) {
            bijective = false;
            break;
        }
        hit[*j] = true;
        phi[i] = *j;
    }
    r.bijective_on_maps = bijective;
    if (!bijective) return r;

    bool one_step = true;
    for (auto [a, b] : pointwise_adjacent_pairs(left.maps, h->graph))
        one_step = one_step && pointwise_adjacent(right.maps.row(phi[a]), right.maps.row(phi[b]), loops.graph->graph);
    std::vector<std::size_t> inverse(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) inverse[phi[i]] = i;
    for (auto [a, b] : pointwise_adjacent_pairs(right.maps, loops.graph->graph))
        one_step = one_step && pointwise_adjacent(left.maps.row(inverse[a]), left.maps.row(inverse[b]), h->graph);
    r.preserves_one_step = one_step;

    r.class_map.assign(left.class_count(), 0);
    bool well_defined = true;
    for (std::size_t c = 0; c < left.class_count(); ++c) {
        r.class_map[c] = right.class_of[phi[left.classes[c].front()]];
        for (std::size_t m : left.classes[c]) well_defined = well_defined && right.class_of[phi[m]] == r.class_map[c];
    }
    r.well_defined = well_defined;
    std::vector<std::size_t> sorted = r.class_map;
    std::sort(sorted.begin(), sorted.end());
    r.bijective_on_classes = left.class_count() == right.class_count() &&
                             std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return r;
}

// ---------------------------------------------------------------------------

bool PuppeHypothesisReport::hypotheses_met() const {
    if (levels.size() != depth) return false;
    return std::all_of(levels.begin(), levels.end(), [](const LevelHypothesis& l) {
        return l.source_sublength && l.source_sublength->holds && l.target_sublength && l.target_sublength->holds &&
               l.surjective.value_or(false);
    });
}

PuppeHypothesisReport check_puppe_hypotheses(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                             const std::vector<Probe>& probes, const Limits& limits,
                                             std::size_t bound) {
    PuppeHypothesisReport report;
    report.max_length = max_length;
    report.depth = depth;
    report.bound = bound;
    std::optional<GraphMap> current = f1;
    for (std::size_t n = 1; n <= depth; ++n) {
        LevelHypothesis level;
        level.level = n;
        try {
            PathGraph lg = loop_graph_trunc(current->domain(), max_length, limits);
            PathGraph lh = loop_graph_trunc(current->codomain(), max_length, limits);
            level.source_sublength = check_sublength_condition(lg, report.bound);
            level.target_sublength = check_sublength_condition(lh, report.bound);
            GraphMap looped = loop_map(*current, lg, lh);
            std::vector<bool> hit(lh.size(), false);
            for (Vertex v : looped.assignment()) hit[v] = true;
            auto missed = std::find(hit.begin(), hit.end(), false);
            level.surjective = missed == hit.end();
            if (missed != hit.end()) level.missed_loop = lh.paths[static_cast<std::size_t>(missed - hit.begin())];
            current = std::move(looped);
        } catch (const ResourceError& e) {
            level.note = std::string("capped: ") + e.what();
            report.levels.push_back(std::move(level));
            break;
        }
        report.levels.push_back(std::move(level));
    }
    try {
        FiberGraph mf1 = mapping_fiber(f1, max_length, limits);
        PointedSequence seq{{mf1.graph, f1.domain(), f1.codomain()}, {mf1.f2, f1}, {"Mf1", "G", "H"}};
        TableCache cache(seq, limits);
        for (const Probe& p : probes) report.base_exactness.push_back(exact_with(seq, 1, p, cache));
    } catch (const ResourceError& e) {
        for (const Probe& p : probes) {
            ExactnessVerdict v;
            v.probe = p.name;
            v.position = 1;
            v.note = std::string("mapping fiber capped: ") + e.what();
            report.base_exactness.push_back(std::move(v));
        }
    }
    return report;
}

PointedSequence build_puppe_sequence(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                     const Limits& limits) {
    FiberGraph mf1 = mapping_fiber(f1, max_length, limits);
    // level n holds Omega^n of each space and the looped maps between them
    std::vector<GraphPtr> m{mf1.graph}, g{f1.domain()}, h{f1.codomain()};
    std::vector<GraphMap> f1s{f1}, f2s{mf1.f2}, ks;
    std::vector<PathGraph> m_loops, h_loops;
    for (std::size_t n = 1; n <= depth; ++n) {
        h_loops.push_back(n == 1 ? mf1.loops : loop_graph_trunc(h.back(), max_length, limits));
        PathGraph gl = loop_graph_trunc(g.back(), max_length, limits);
        m_loops.push_back(loop_graph_trunc(m.back(), max_length, limits));
        const PathGraph& hl = h_loops.back();
        const PathGraph& ml = m_loops.back();
        f1s.push_back(loop_map(f1s.back(), gl, hl));
        f2s.push_back(loop_map(f2s.back(), ml, gl));
        // connecting map Omega^{n-1} k : Omega^n H -> Omega^{n-1} Mf1
        if (n == 1)
            ks.push_back(mf1.k);
        else
            ks.push_back(loop_map(ks.back(), hl, m_loops[n - 2]));
        m.push_back(ml.graph);
        g.push_back(gl.graph);
        h.push_back(hl.graph);
    }
    PointedSequence seq;
    auto tag = [](std::size_t n, const std::string& name) {
        return n == 0 ? name : "Omega^" + std::to_string(n) + " " + name;
    };
    for (std::size_t n = depth + 1; n-- > 0;) {
        seq.stages.insert(seq.stages.end(), {m[n], g[n], h[n]});
        seq.tags.insert(seq.tags.end(), {tag(n, "Mf1"), tag(n, "G"), tag(n, "H")});
        seq.maps.push_back(f2s[n]);
        seq.maps.push_back(f1s[n]);
        if (n > 0) seq.maps.push_back(ks[n - 1]);
    }
    seq.validate();
    return seq;
}

PuppeReport puppe_build_and_check(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                  const std::vector<Probe>& probes, const PuppeOptions& options,
                                  const Limits& limits) {
    PuppeReport report;
    report.max_length = max_length;
    report.depth = depth;
    report.options = options;
    for (const Probe& p : probes) report.probes.push_back(p.name);
    report.hypotheses = check_puppe_hypotheses(f1, max_length, depth, probes, limits, options.bound);

    struct Built {
        PointedSequence seq;
        std::unique_ptr<TableCache> cache;
    };
    std::map<std::size_t, std::variant<Built, std::string>> built;
    auto store = [&](std::size_t L, std::variant<Built, std::string> value) -> std::variant<Built, std::string>& {
        auto& slot = built.emplace(L, std::move(value)).first->second;
        if (auto* b = std::get_if<Built>(&slot)) b->cache = std::make_unique<TableCache>(b->seq, limits);
        return slot;
    };
    auto at_length = [&](std::size_t L) -> std::variant<Built, std::string>& {
        auto it = built.find(L);
        if (it != built.end()) return it->second;
        try {
            return store(L, Built{build_puppe_sequence(f1, L, depth, limits), nullptr});
        } catch (const ResourceError& e) {
            return store(L, std::string(e.what()));
        }
    };

    // A cap at the requested truncation is fatal; caps on retries only mark the position.
    auto& first = store(max_length, Built{build_puppe_sequence(f1, max_length, depth, limits), nullptr});
    const PointedSequence& seq = std::get<Built>(first).seq;
    report.stage_tags = seq.tags;
    for (const auto& s : seq.stages) report.stage_sizes.push_back(s->vertex_count());

    bool any_refuted = false;
    bool any_inconclusive = false;
    for (std::size_t pos = 1; pos + 1 < seq.stages.size(); ++pos)
        for (const Probe& probe : probes) {
            PuppePositionVerdict pv;
            std::size_t L = max_length;
            for (std::size_t attempt = 0;; ++attempt) {
                auto& slot = at_length(L);
                if (auto* err = std::get_if<std::string>(&slot)) {
                    pv.verdict.note += (pv.verdict.note.empty() ? "" : "; ") + std::string("retry at L = ") +
                                       std::to_string(L) + " capped: " + *err;
                    break;
                }
                auto& b = std::get<Built>(slot);
                pv.verdict = exact_with(b.seq, pos, probe, *b.cache);
                pv.checked_length = L;
                if (!pv.verdict.refuted()) break;
                pv.refuted_at.push_back(L);
                if (attempt >= options.retries) break;
                L += 2;
            }
            if (!pv.refuted_at.empty()) {
                std::string history = "refuted at L =";
                for (std::size_t x : pv.refuted_at) history += " " + std::to_string(x);
                pv.verdict.note = pv.verdict.note.empty() ? history : history + "; " + pv.verdict.note;
            }
            if (pv.verdict.refuted() || (!pv.refuted_at.empty() && pv.verdict.status == ExactnessStatus::inconclusive))
                any_refuted = true;
            else if (pv.verdict.status == ExactnessStatus::inconclusive)
                any_inconclusive = true;
            report.verdicts.push_back(std::move(pv));
        }
    report.aggregate = any_refuted ? "refuted" : any_inconclusive ? "inconclusive" : "exact";
    return report;
}

const char* to_string(ExactnessStatus s) {
    switch (s) {
        case ExactnessStatus::exact: return "exact";
        case ExactnessStatus::image_smaller_than_kernel: return "image_smaller_than_kernel";
        case ExactnessStatus::image_not_in_kernel: return "image_not_in_kernel";
        case ExactnessStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace ahtop
