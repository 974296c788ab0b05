#include "ahtop/report.hpp"

namespace ahtop {

namespace {

Json big(const BigInt& v) {
    if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(v);
    return v.str();
}

Json witness_json(const HomotopyWitness& w) {
    Json steps = Json::array();
    for (const GraphMap& s : w.steps) steps.push_back(s.assignment());
    return steps;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const MapCheck& c) {
    Json j{{"ok", c.ok}, {"base_violation", c.base_violation}};
    j["violating_edge"] = c.violating_edge ? Json{c.violating_edge->u, c.violating_edge->v} : Json(nullptr);
    return j;
}

Json to_json(const HomotopyResult& r) {
    Json j{{"homotopic", r.homotopic},
           {"explored", r.explored},
           {"component_exhausted", r.component_exhausted},
           {"map_space", r.map_space}};
    j["distance"] = r.homotopic ? Json(r.distance) : Json(nullptr);
    j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const ClassTable& t) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.class_count(); ++c) {
        auto rep = t.representative(c);
        classes.push_back({{"size", t.classes[c].size()}, {"representative", std::vector<Vertex>(rep.begin(), rep.end())}});
    }
    return {{"pointed", t.pointed},
            {"map_count", t.maps.size()},
            {"class_count", t.class_count()},
            {"base_class", t.base_class},
            {"classes", std::move(classes)}};
}

Json to_json(const Path& p) { return p.trace(); }

Json to_json(const SublengthReport& r) {
    return {{"holds", r.holds},
            {"bound", r.bound},
            {"max_length", r.max_length},
            {"loops_checked", r.loops_checked},
            {"worst_sublength", r.worst_sublength},
            {"offender", optional_json(r.offender)}};
}

Json to_json(const Presentation& p) {
    Json j{{"generators", p.generator_count}, {"relators", p.relators}, {"text", presentation_text(p)}};
    Json edges = Json::array();
    for (const Edge& e : p.generator_edges) edges.push_back({e.u, e.v});
    j["generator_edges"] = std::move(edges);
    j["relator_cycles"] = p.relator_cycles;
    j["warnings"] = p.warnings;
    return j;
}

Json to_json(const AbelianInvariants& a) {
    Json torsion = Json::array();
    for (const BigInt& d : a.torsion) torsion.push_back(big(d));
    return {{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}};
}

Json to_json(const A1Report& r) {
    return {{"presentation", to_json(r.presentation)},
            {"simplified", {{"presentation", to_json(r.simplified.presentation)},
                            {"status", to_string(r.simplified.status)},
                            {"steps", r.simplified.steps}}},
            {"abelianization", to_json(r.invariants)},
            {"verdict", to_string(r.verdict)},
            {"tietze_budget", r.tietze_budget}};
}

const char* to_string(SquareStatus s) {
    switch (s) {
        case SquareStatus::commutes: return "commutes";
        case SquareStatus::homotopy_commutes: return "homotopy_commutes";
        case SquareStatus::fails: return "fails";
        case SquareStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

Json to_json(const LadderReport& r) {
    Json squares = Json::array();
    for (const SquareVerdict& s : r.squares) {
        Json j{{"name", s.name}, {"status", to_string(s.status)}, {"method", s.method}, {"note", s.note}};
        j["witness_length"] = s.witness ? Json(s.witness->length()) : Json(nullptr);
        j["witness"] = s.witness ? witness_json(*s.witness) : Json(nullptr);
        squares.push_back(std::move(j));
    }
    return {{"max_length", r.max_length},
            {"fiber3_length", r.fiber3_length},
            {"homotopy_budget", r.homotopy_budget},
            {"source_sublength", to_json(r.source_sublength)},
            {"target_sublength", to_json(r.target_sublength)},
            {"hypothesis_met", r.hypothesis_met},
            {"all_commute", r.all_commute()},
            {"squares", std::move(squares)}};
}

Json to_json(const ExactnessVerdict& v) {
    Json j{{"probe", v.probe},
           {"position", v.position},
           {"status", to_string(v.status)},
           {"image_classes", v.image_classes},
           {"kernel_classes", v.kernel_classes},
           {"class_counts", v.class_counts},
           {"note", v.note}};
    j["witness_class"] = v.witness_class ? Json(*v.witness_class) : Json(nullptr);
    return j;
}

Json to_json(const AdjunctionReport& r) {
    return {{"length", r.length},
            {"suspension_vertices", r.suspension_vertices},
            {"loop_vertices", r.loop_vertices},
            {"left_maps", r.left_maps},
            {"right_maps", r.right_maps},
            {"left_classes", r.left_classes},
            {"right_classes", r.right_classes},
            {"bijective_on_maps", r.bijective_on_maps},
            {"preserves_one_step", r.preserves_one_step},
            {"well_defined", r.well_defined},
            {"bijective_on_classes", r.bijective_on_classes},
            {"class_map", r.class_map},
            {"holds", r.holds()}};
}

Json to_json(const PuppeHypothesisReport& r) {
    Json levels = Json::array();
    for (const LevelHypothesis& l : r.levels) {
        Json j{{"level", l.level}, {"note", l.note}};
        j["source_sublength"] = optional_json(l.source_sublength);
        j["target_sublength"] = optional_json(l.target_sublength);
        j["surjective"] = l.surjective ? Json(*l.surjective) : Json(nullptr);
        j["missed_loop"] = optional_json(l.missed_loop);
        levels.push_back(std::move(j));
    }
    Json base = Json::array();
    for (const ExactnessVerdict& v : r.base_exactness) base.push_back(to_json(v));
    return {{"max_length", r.max_length},
            {"depth", r.depth},
            {"bound", r.bound},
            {"levels", std::move(levels)},
            {"base_exactness", std::move(base)},
            {"hypotheses_met", r.hypotheses_met()}};
}

Json to_json(const PuppeReport& r) {
    Json verdicts = Json::array();
    for (const PuppePositionVerdict& v : r.verdicts) {
        Json j = to_json(v.verdict);
        j["stage"] = r.stage_tags.at(v.verdict.position);
        j["refuted_at"] = v.refuted_at;
        j["checked_length"] = v.checked_length;
        verdicts.push_back(std::move(j));
    }
    Json stages = Json::array();
    for (std::size_t i = 0; i < r.stage_tags.size(); ++i)
        stages.push_back({{"tag", r.stage_tags[i]}, {"vertices", r.stage_sizes[i]}});
    return {{"max_length", r.max_length},
            {"depth", r.depth},
            {"retries", r.options.retries},
            {"bound", r.options.bound},
            {"probes", r.probes},
            {"stages", std::move(stages)},
            {"hypotheses", to_json(r.hypotheses)},
            {"verdicts", std::move(verdicts)},
            {"aggregate", r.aggregate}};
}

}  // namespace ahtop
