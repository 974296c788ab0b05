#include "doctest.h"

#include "ahtop/exact_sequences.hpp"
#include "oracles.hpp"

using namespace ahtop;

namespace {

GraphPtr std_graph(Family f, int n) { return share(make_standard(f, n)); }

}  // namespace

TEST_CASE("suspension examples") {
    auto k1 = make_standard(Family::complete, 1);
    auto i1 = make_standard(Family::interval, 1);
    auto c4 = make_standard(Family::cycle, 4);
    for (std::size_t l : {0, 1, 2, 3}) CHECK(suspension(k1, l).graph->vertex_count() == 1);
    CHECK(suspension(c4, 1).graph->vertex_count() == 1);
    CHECK(suspension(c4, 0).graph->vertex_count() == 1);
    auto s = suspension(i1, 2);
    CHECK(s.graph->graph == i1.graph);
    CHECK(s.graph->base == 0);
    for (const auto& g : {i1, c4, make_standard(Family::cycle, 5), make_standard(Family::complete, 4)})
        for (std::size_t l = 1; l <= 4; ++l) {
            auto sg = suspension(g, l);
            CHECK(sg.graph->vertex_count() == (l - 1) * (g.vertex_count() - 1) + 1);
            CHECK(sg.projection.size() == g.vertex_count() * (l + 1));
            // the projection from the product is a graph map
            CHECK(check_graph_map(box_product(g, interval(l)), *sg.graph, sg.projection, true).ok);
        }
}

TEST_CASE("adjunction on small cases") {
    struct Case {
        GraphPtr g, h;
        std::size_t l;
    };
    std::vector<Case> cases{{std_graph(Family::complete, 1), std_graph(Family::cycle, 4), 2},
                            {std_graph(Family::interval, 1), std_graph(Family::cycle, 4), 2},
                            {std_graph(Family::interval, 1), std_graph(Family::cycle, 5), 3},
                            {std_graph(Family::interval, 2), std_graph(Family::cycle, 3), 2}};
    for (const auto& c : cases) {
        AdjunctionReport r = adjunction_check(c.g, c.h, c.l);
        CHECK(r.holds());
        CHECK(r.left_classes == r.right_classes);
        // class counts against the explicit exponential graphs
        auto s = suspension(*c.g, c.l);
        oracle::ExplicitHom left(*s.graph, *c.h, true);
        CHECK(left.component_count() == r.left_classes);
    }
    CHECK(adjunction_check(std_graph(Family::complete, 1), std_graph(Family::cycle, 4), 2).left_classes == 1);
}

TEST_CASE("adjoint round trip and naturality") {
    auto i1 = std_graph(Family::interval, 1);
    auto c4 = std_graph(Family::cycle, 4);
    auto k3 = std_graph(Family::complete, 3);
    const std::size_t l = 2;
    auto s = suspension(*i1, l);
    auto loops4 = loop_graph_trunc(c4, l);
    auto loops3 = loop_graph_trunc(k3, l);
    for (const auto& a : oracle::all_maps(*s.graph, *c4, true)) {
        GraphMap f(s.graph, c4, a, true);
        GraphMap phi = adjoint(f, s, i1, loops4);
        CHECK(coadjoint(phi, s, loops4) == f);
        for (const auto& b : oracle::all_maps(*c4, *k3, true)) {
            GraphMap h(c4, k3, b, true);
            CHECK(adjoint(compose(h, f), s, i1, loops3) == compose(loop_map(h, loops4, loops3), phi));
        }
    }
}

TEST_CASE("exactness of simple sequences") {
    auto c4 = std_graph(Family::cycle, 4);
    auto k1 = std_graph(Family::complete, 1);
    PointedSequence seq{{c4, c4, k1}, {identity_map(c4), constant_map(c4, k1, 0)}, {"G", "G", "K1"}};
    for (const auto& p : default_probes()) CHECK(check_exact_at(seq, 1, p).status == ExactnessStatus::exact);

    auto c5 = std_graph(Family::cycle, 5);
    FiberGraph mf = mapping_fiber(GraphMap(k1, c5, {0}, true), 3);
    PointedSequence fib{{mf.graph, k1, c5}, {mf.f2, GraphMap(k1, c5, {0}, true)}, {"Mf1", "G", "H"}};
    auto v = check_exact_at(fib, 1, probe_from_name("K1"));
    CHECK_FALSE(v.status == ExactnessStatus::image_not_in_kernel);

    // a sequence that is not exact: C5 -> C5 -> K1 with the identity, probe C5
    PointedSequence not_exact{{k1, c5, k1}, {GraphMap(k1, c5, {0}, true), constant_map(c5, k1, 0)}, {}};
    auto w = check_exact_at(not_exact, 1, probe_from_name("C5"));
    CHECK(w.status == ExactnessStatus::image_smaller_than_kernel);
    REQUIRE(w.witness_class);
    auto capped = check_exact_at(not_exact, 1, probe_from_name("C5"), Limits{3});
    CHECK(capped.status == ExactnessStatus::inconclusive);
}

TEST_CASE("sequence validation") {
    auto c4 = std_graph(Family::cycle, 4);
    auto c3 = std_graph(Family::cycle, 3);
    PointedSequence bad{{c4, c3}, {identity_map(c4)}, {}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PointedSequence unpointed{{c4, c4}, {GraphMap(c4, c4, {1, 2, 3, 0}, false)}, {}};
    CHECK_THROWS_AS(unpointed.validate(), std::invalid_argument);
}

TEST_CASE("probe names") {
    CHECK(default_probes().size() == 6);
    CHECK(probe_from_name("Q2").graph->vertex_count() == 4);
    CHECK_THROWS_AS(probe_from_name("X3"), std::invalid_argument);
    CHECK_THROWS_AS(probe_from_name("C"), std::invalid_argument);
    CHECK_THROWS_AS(probe_from_name("C2"), std::domain_error);
}

TEST_CASE("Puppe hypotheses") {
    auto c4 = std_graph(Family::cycle, 4);
    auto c5 = std_graph(Family::cycle, 5);
    auto k1 = std_graph(Family::complete, 1);
    std::vector<Probe> k1_only{probe_from_name("K1")};

    auto id4 = check_puppe_hypotheses(identity_map(c4), 6, 1, k1_only);
    REQUIRE(id4.levels.size() == 1);
    CHECK(id4.levels[0].source_sublength->holds);
    CHECK(*id4.levels[0].surjective);
    CHECK(id4.hypotheses_met());

    auto id5 = check_puppe_hypotheses(identity_map(c5), 5, 1, k1_only);
    CHECK_FALSE(id5.levels[0].target_sublength->holds);
    CHECK_FALSE(id5.hypotheses_met());

    auto point = check_puppe_hypotheses(GraphMap(k1, c4, {0}, true), 2, 1, k1_only);
    CHECK_FALSE(*point.levels[0].surjective);
    REQUIRE(point.levels[0].missed_loop);
    CHECK(point.levels[0].missed_loop->length() > 0);
}

TEST_CASE("Puppe sequence assembly and checks") {
    auto k1 = std_graph(Family::complete, 1);
    auto c3 = std_graph(Family::cycle, 3);
    auto c4 = std_graph(Family::cycle, 4);

    auto seq = build_puppe_sequence(GraphMap(k1, c4, {0}, true), 2, 1);
    CHECK(seq.stages.size() == 6);
    CHECK(seq.tags.front() == "Omega^1 Mf1");
    CHECK(seq.tags.back() == "H");

    auto trivial = puppe_build_and_check(identity_map(k1), 2, 1, default_probes());
    CHECK(trivial.aggregate == "exact");
    CHECK(trivial.verdicts.size() == 4 * 6);

    auto to_point = puppe_build_and_check(GraphMap(c3, k1, {0, 0, 0}, true), 4, 0, {probe_from_name("K1")});
    REQUIRE(to_point.verdicts.size() == 1);
    CHECK(to_point.verdicts[0].verdict.status == ExactnessStatus::exact);

    // for an identity, Mf1 -> G is a bijection on classes for the one-point probe
    auto fib = mapping_fiber(identity_map(c4), 3);
    auto a = homotopy_classes(k1, fib.graph, true);
    auto b = homotopy_classes(k1, c4, true);
    auto induced = induced_on_classes(fib.f2, a, b);
    CHECK(a.class_count() == b.class_count());
    CHECK(std::set<std::size_t>(induced.begin(), induced.end()).size() == induced.size());

    auto report = puppe_build_and_check(GraphMap(k1, c4, {0}, true), 2, 1, {probe_from_name("K1"), probe_from_name("I1")});
    for (const auto& v : report.verdicts) {
        if (!v.refuted_at.empty()) CHECK(v.refuted_at.front() == 2);
        if (v.verdict.status != ExactnessStatus::inconclusive) CHECK(v.checked_length >= 2);
    }
}

TEST_CASE("looped exactness transports through the adjunction") {
    auto k1 = std_graph(Family::complete, 1);
    auto c4 = std_graph(Family::cycle, 4);
    auto c5 = std_graph(Family::cycle, 5);
    auto i1 = std_graph(Family::interval, 1);
    const std::size_t l = 2;
    std::vector<GraphMap> maps{GraphMap(k1, c4, {0}, true), GraphMap(i1, c5, {0, 1}, true), identity_map(c4)};
    for (const GraphMap& f1 : maps) {
        FiberGraph mf = mapping_fiber(f1, l);
        PointedSequence base{{mf.graph, f1.domain(), f1.codomain()}, {mf.f2, f1}, {}};
        auto lm = loop_graph_trunc(mf.graph, l);
        auto lg = loop_graph_trunc(f1.domain(), l);
        auto lh = loop_graph_trunc(f1.codomain(), l);
        PointedSequence looped{{lm.graph, lg.graph, lh.graph}, {loop_map(mf.f2, lm, lg), loop_map(f1, lg, lh)}, {}};
        for (const char* name : {"K1", "I1"}) {
            Probe k = probe_from_name(name);
            Probe sk{std::string("S") + name, suspension(*k.graph, l).graph};
            auto outer = check_exact_at(base, 1, sk);
            auto inner = check_exact_at(looped, 1, k);
            REQUIRE(outer.status != ExactnessStatus::inconclusive);
            REQUIRE(inner.status != ExactnessStatus::inconclusive);
            CHECK(outer.status == inner.status);
            CHECK(outer.class_counts == inner.class_counts);
        }
    }
}
