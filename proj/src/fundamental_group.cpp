#include "ahtop/fundamental_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace ahtop {

std::vector<std::vector<Vertex>> FilledCycles::all() const {
    std::vector<std::vector<Vertex>> out(triangles);
    out.insert(out.end(), squares.begin(), squares.end());
    return out;
}

FilledCycles fill_cycles(const Graph& g) {
    FilledCycles out;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex a = 0; a < n; ++a) {
        std::vector<Vertex> up;
        for (Vertex v : g.neighbors(a))
            if (v > a) up.push_back(v);
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t k = i + 1; k < up.size(); ++k) {
                const Vertex b = up[i];
                const Vertex d = up[k];
                if (g.adjacent(b, d)) out.triangles.push_back({a, b, d});
                for (Vertex c : g.neighbors(b))
                    if (c > a && c != d && g.adjacent(c, d)) out.squares.push_back({a, b, c, d});
            }
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    std::sort(out.squares.begin(), out.squares.end());
    return out;
}

Presentation pi1_presentation(const PointedGraph& pg) {
    Presentation p;
    const Graph& full = pg.graph;
    const auto comp = connected_components(full);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < full.vertex_count(); ++v)
        if (comp[v] == comp[pg.base]) members.push_back(v);
    const bool restricted = members.size() != full.vertex_count();
    if (restricted)
        p.warnings.push_back("graph is disconnected; restricted to the base component (" +
                             std::to_string(members.size()) + " of " + std::to_string(full.vertex_count()) +
                             " vertices)");
    InducedSubgraph sub = induced_subgraph(full, members);
    const Graph& g = sub.graph;
    const Vertex base = static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), pg.base) - members.begin());

    std::vector<std::optional<Vertex>> parent(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<Vertex> queue;
    queue.push(base);
    seen[base] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push(w);
            }
    }
    std::map<Edge, std::size_t> generator;
    for (const Edge& e : g.edges()) {
        const bool tree = parent[e.v] == e.u || parent[e.u] == e.v;
        if (tree) continue;
        generator.emplace(e, p.generator_count++);
        p.generator_edges.push_back({members[e.u], members[e.v]});
    }
    for (const auto& cyc : fill_cycles(g).all()) {
        Word w;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vertex a = cyc[i];
            const Vertex b = cyc[(i + 1) % cyc.size()];
            auto it = generator.find(make_edge(a, b));
            if (it == generator.end()) continue;
            const int letter = static_cast<int>(it->second) + 1;
            w.push_back(a < b ? letter : -letter);
        }
        p.relators.push_back(std::move(w));
        std::vector<Vertex> original;
        for (Vertex v : cyc) original.push_back(members[v]);
        p.relator_cycles.push_back(std::move(original));
    }
    return p;
}

IntMatrix<std::int64_t> relation_matrix(const Presentation& p) {
    IntMatrix<std::int64_t> m = IntMatrix<std::int64_t>::Zero(static_cast<Eigen::Index>(p.relators.size()),
                                                              static_cast<Eigen::Index>(p.generator_count));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (Letter l : p.relators[r]) {
            const auto col = static_cast<Eigen::Index>(std::abs(l) - 1);
            if (col < 0 || static_cast<std::size_t>(col) >= p.generator_count)
                throw std::invalid_argument("relator letter references a missing generator");
            m(static_cast<Eigen::Index>(r), col) += l > 0 ? 1 : -1;
        }
    return m;
}

AbelianInvariants abelianization(const Presentation& p) {
    const IntMatrix<std::int64_t> m = relation_matrix(p);
    std::vector<BigInt> factors;
    try {
        for (std::int64_t d : invariant_factors<std::int64_t>(m)) factors.emplace_back(d);
    } catch (const std::overflow_error&) {
        factors = invariant_factors<BigInt>(m.cast<BigInt>());
    }
    AbelianInvariants out;
    out.free_rank = p.generator_count - factors.size();
    for (const BigInt& d : factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l = -l;
    return out;
}

Word reduce_word(const Word& w) {
    Word out;
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace {

/// Least rotation of w or of its inverse; identifies conjugate and inverse relators.
Word canonical_relator(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse_word(w)})
        for (std::size_t s = 0; s < base.size(); ++s) {
            Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
            if (rot < best) best = std::move(rot);
        }
    return best;
}

void normalize(Presentation& p) {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (const Word& r : p.relators) {
        Word c = canonical_relator(reduce_word(r));
        if (c.empty() || !seen.insert(c).second) continue;
        kept.push_back(std::move(c));
    }
    std::stable_sort(kept.begin(), kept.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    p.relators = std::move(kept);
    p.relator_cycles.clear();
}

/// Removes generator g (0-based) using relator r in which it occurs exactly once.
void eliminate(Presentation& p, std::size_t r, std::size_t g) {
    const Word rel = p.relators[r];
    const int letter = static_cast<int>(g) + 1;
    const auto at = static_cast<std::size_t>(
        std::find_if(rel.begin(), rel.end(), [&](Letter l) { return std::abs(l) == letter; }) - rel.begin());
    // rel rotated to g^e W; g^e = W^-1, so g = W^-1 (e = +1) or W (e = -1).
    Word rest(rel.begin() + static_cast<std::ptrdiff_t>(at) + 1, rel.end());
    rest.insert(rest.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(at));
    const Word value = rel[at] > 0 ? inverse_word(rest) : rest;
    const Word value_inv = inverse_word(value);

    std::vector<Word> out;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i == r) continue;
        Word w;
        for (Letter l : p.relators[i]) {
            if (l == letter) {
                w.insert(w.end(), value.begin(), value.end());
            } else if (l == -letter) {
                w.insert(w.end(), value_inv.begin(), value_inv.end());
            } else {
                w.push_back(l);
            }
        }
        for (Letter& l : w)
            if (std::abs(l) > letter) l += l > 0 ? -1 : 1;
        out.push_back(std::move(w));
    }
    p.relators = std::move(out);
    --p.generator_count;
    if (g < p.generator_edges.size()) p.generator_edges.erase(p.generator_edges.begin() + static_cast<std::ptrdiff_t>(g));
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& input, std::size_t budget) {
    TietzeResult result;
    result.presentation = input;
    Presentation& p = result.presentation;
    normalize(p);
    bool exhausted = false;
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> choice;
        for (std::size_t r = 0; r < p.relators.size() && !choice; ++r) {
            std::map<int, std::size_t> occurrences;
            for (Letter l : p.relators[r]) ++occurrences[std::abs(l)];
            for (const auto& [gen, count] : occurrences)
                if (count == 1) {
                    choice = std::pair{r, static_cast<std::size_t>(gen - 1)};
                    break;
                }
        }
        if (!choice) break;
        if (result.steps >= budget) {
            exhausted = true;
            break;
        }
        eliminate(p, choice->first, choice->second);
        ++result.steps;
        normalize(p);
    }
    if (p.generator_count == 0)
        result.status = TietzeStatus::trivialized;
    else
        result.status = exhausted ? TietzeStatus::budget_exhausted : TietzeStatus::simplified;
    return result;
}

A1Report a1_report(const PointedGraph& g, std::size_t tietze_budget) {
    A1Report report;
    report.tietze_budget = tietze_budget;
    report.presentation = pi1_presentation(g);
    report.simplified = tietze_simplify(report.presentation, tietze_budget);
    report.invariants = abelianization(report.presentation);
    if (report.simplified.status == TietzeStatus::trivialized)
        report.verdict = Triviality::trivialized;
    else if (!report.invariants.trivial())
        report.verdict = Triviality::nontrivial_by_abelianization;
    else
        report.verdict = Triviality::unknown;
    return report;
}

std::string presentation_text(const Presentation& p) {
    auto name = [&](std::size_t i) {
        return p.generator_count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1);
    };
    std::string out = "⟨ ";
    for (std::size_t i = 0; i < p.generator_count; ++i) out += (i ? ", " : "") + name(i);
    out += p.generator_count ? " | " : "| ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r) out += ", ";
        for (std::size_t k = 0; k < p.relators[r].size(); ++k) {
            const Letter l = p.relators[r][k];
            out += (k ? " " : "") + name(static_cast<std::size_t>(std::abs(l) - 1)) + (l < 0 ? "^-1" : "");
        }
    }
    out += p.relators.empty() ? "⟩" : " ⟩";
    return out;
}

const char* to_string(TietzeStatus s) {
    switch (s) {
        case TietzeStatus::trivialized: return "trivialized";
        case TietzeStatus::simplified: return "simplified";
        case TietzeStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

const char* to_string(Triviality t) {
    switch (t) {
        case Triviality::trivialized: return "trivialized";
        case Triviality::nontrivial_by_abelianization: return "nontrivial_by_abelianization";
        case Triviality::unknown: return "unknown";
    }
    return "?";
}

}  // namespace ahtop
