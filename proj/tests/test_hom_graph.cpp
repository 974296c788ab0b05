#include "doctest.h"

#include <random>

#include "ahtop/hom_graph.hpp"
#include "oracles.hpp"

using namespace ahtop;

namespace {

GraphPtr std_graph(Family f, int n) { return share(make_standard(f, n)); }

GraphMap from(const GraphPtr& d, const GraphPtr& c, const oracle::Assignment& a, bool pointed) {
    return GraphMap(d, c, a, pointed);
}

std::vector<std::pair<GraphPtr, GraphPtr>> small_pairs() {
    std::vector<std::pair<GraphPtr, GraphPtr>> out;
    std::mt19937_64 rng(99);
    for (int i = 0; i < 12; ++i) {
        auto k = share(PointedGraph(oracle::random_graph(rng, 1 + i % 4, 0.6), 0));
        auto g = share(PointedGraph(oracle::random_graph(rng, 2 + i % 4, 0.5), 0));
        out.push_back({k, g});
    }
    out.push_back({std_graph(Family::interval, 1), std_graph(Family::cycle, 4)});
    out.push_back({std_graph(Family::cycle, 3), std_graph(Family::cycle, 5)});
    out.push_back({std_graph(Family::interval, 2), std_graph(Family::cycle, 3)});
    return out;
}

}  // namespace

TEST_CASE("exponential graph matches the explicit construction") {
    for (auto [k, g] : small_pairs())
        for (bool pointed : {false, true}) {
            HomGraph hg = build_hom_graph(k, g, pointed);
            oracle::ExplicitHom ex(*k, *g, pointed);
            REQUIRE(hg.size() == ex.maps.size());
            for (std::size_t i = 0; i < hg.size(); ++i) {
                auto row = hg.maps.row(i);
                CHECK(oracle::Assignment(row.begin(), row.end()) == ex.maps[i]);
                std::vector<Vertex> nb(hg.graph->graph.neighbors(static_cast<Vertex>(i)).begin(),
                                       hg.graph->graph.neighbors(static_cast<Vertex>(i)).end());
                std::vector<Vertex> expected(ex.adj[i].begin(), ex.adj[i].end());
                std::sort(expected.begin(), expected.end());
                CHECK(nb == expected);
            }
            if (pointed) {
                auto base = hg.maps.row(hg.graph->base);
                for (Vertex v : base) CHECK(v == g->base);
            }
        }
}

TEST_CASE("small cycles: contractible or not") {
    auto c3 = std_graph(Family::cycle, 3);
    auto r3 = are_homotopic(identity_map(c3), constant_map(c3, c3, 0), true);
    CHECK(r3.homotopic);
    CHECK(r3.distance == 1);
    REQUIRE(r3.witness);
    CHECK(validate_witness(*r3.witness, true));

    auto c4 = std_graph(Family::cycle, 4);
    auto r4 = are_homotopic(identity_map(c4), constant_map(c4, c4, 0), true);
    CHECK(r4.homotopic);
    CHECK(r4.distance == 2);
    CHECK(validate_witness(*r4.witness, true));
    auto big = assemble_homotopy(*r4.witness);
    CHECK(big.domain()->vertex_count() == 4 * 3);

    auto c5 = std_graph(Family::cycle, 5);
    auto r5 = are_homotopic(identity_map(c5), constant_map(c5, c5, 0), true);
    CHECK_FALSE(r5.homotopic);
    CHECK(r5.component_exhausted);
    CHECK(r5.map_space == 3125);
    auto u5 = are_homotopic(identity_map(c5), constant_map(c5, c5, 0), false);
    CHECK_FALSE(u5.homotopic);
}

TEST_CASE("search distances agree with the explicit exponential graph") {
    std::mt19937_64 rng(5);
    for (auto [k, g] : small_pairs())
        for (bool pointed : {false, true}) {
            oracle::ExplicitHom ex(*k, *g, pointed);
            if (ex.maps.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, ex.maps.size() - 1);
            for (int trial = 0; trial < 6; ++trial) {
                auto a = ex.maps[pick(rng)];
                auto b = ex.maps[pick(rng)];
                auto r = are_homotopic(from(k, g, a, pointed), from(k, g, b, pointed), pointed);
                const long d = ex.distance(a, b);
                CHECK(r.homotopic == (d >= 0));
                if (d >= 0) {
                    CHECK(r.distance == static_cast<std::size_t>(d));
                    CHECK(validate_witness(*r.witness, pointed));
                    CHECK(r.witness->steps.front().assignment() == a);
                    CHECK(r.witness->steps.back().assignment() == b);
                } else {
                    CHECK(r.component_exhausted);
                }
            }
        }
}

TEST_CASE("class tables agree with explicit components") {
    for (auto [k, g] : small_pairs())
        for (bool pointed : {false, true}) {
            ClassTable t = homotopy_classes(k, g, pointed);
            oracle::ExplicitHom ex(*k, *g, pointed);
            CHECK(t.class_count() == ex.component_count());
            auto comp = ex.components();
            for (std::size_t i = 0; i < ex.maps.size(); ++i)
                for (std::size_t j = 0; j < ex.maps.size(); ++j)
                    CHECK((comp[i] == comp[j]) == (t.class_of[i] == t.class_of[j]));
            for (std::size_t c = 0; c + 1 < t.class_count(); ++c)
                CHECK(t.classes[c].front() < t.classes[c + 1].front());
        }
}

TEST_CASE("composition respects homotopy classes") {
    auto c4 = std_graph(Family::cycle, 4);
    auto c3 = std_graph(Family::cycle, 3);
    auto i2 = std_graph(Family::interval, 2);
    ClassTable src = homotopy_classes(i2, c4, true);
    ClassTable dst = homotopy_classes(i2, c3, true);
    for (const auto& a : oracle::all_maps(*c4, *c3, true)) {
        GraphMap g = from(c4, c3, a, true);
        CHECK_NOTHROW(induced_on_classes(g, src, dst));
        // [g][f] = [g f]: members of a class stay together after postcomposition
        for (const auto& cls : src.classes) {
            std::set<std::size_t> images;
            for (std::size_t m : cls) {
                auto row = src.maps.row(m);
                GraphMap f(i2, c4, std::vector<Vertex>(row.begin(), row.end()), true);
                images.insert(*dst.class_of_assignment(compose(g, f).assignment()));
            }
            CHECK(images.size() == 1);
        }
    }
}

TEST_CASE("exponential law, exhaustive") {
    struct Case {
        GraphPtr k, h, g;
    };
    std::vector<Case> cases{{std_graph(Family::interval, 1), std_graph(Family::interval, 1), std_graph(Family::cycle, 3)},
                            {std_graph(Family::interval, 1), std_graph(Family::interval, 1), std_graph(Family::cycle, 4)},
                            {std_graph(Family::complete, 1), std_graph(Family::cycle, 3), std_graph(Family::cycle, 4)}};
    for (const auto& c : cases) {
        HomGraph exp = build_hom_graph(c.h, c.g, false);
        auto kh = share(box_product(*c.k, *c.h));
        oracle::Adjacency ag(c.g->graph);
        std::size_t maps = 0;
        oracle::for_each_assignment(kh->vertex_count(), c.g->vertex_count(), [&](const oracle::Assignment& phi) {
            const bool phi_map = oracle::is_graph_map(kh->graph, ag, phi);
            auto psi = curry_assignment(phi, *c.k, exp);
            bool psi_map = false;
            if (psi) {
                psi_map = check_graph_map(*c.k, *exp.graph, *psi, false).ok;
                CHECK(uncurry_assignment(*psi, exp) == phi);
            }
            CHECK(phi_map == psi_map);
            if (phi_map) {
                ++maps;
                GraphMap f(kh, c.g, phi, false);
                GraphMap curried = curry(f, c.k, exp);
                CHECK(uncurry(curried, exp) == f);
            }
        });
        CHECK(maps > 0);
        // every K -> G^H assignment: graph map iff its uncurried form is
        oracle::Adjacency ae(exp.graph->graph);
        oracle::for_each_assignment(c.k->vertex_count(), exp.size(), [&](const oracle::Assignment& psi) {
            auto phi = uncurry_assignment(psi, exp);
            CHECK(oracle::is_graph_map(c.k->graph, ae, psi) == oracle::is_graph_map(kh->graph, ag, phi));
        });
    }
}

TEST_CASE("evaluation map") {
    auto i1 = std_graph(Family::interval, 1);
    auto c4 = std_graph(Family::cycle, 4);
    HomGraph exp = build_hom_graph(i1, c4, true);
    GraphMap e = evaluation_map(exp);
    CHECK(e.domain()->vertex_count() == exp.size() * 2);
    CHECK(curry(e, exp.graph, exp) == identity_map(exp.graph));
}

TEST_CASE("witness algebra") {
    auto c4 = std_graph(Family::cycle, 4);
    auto r = are_homotopic(identity_map(c4), constant_map(c4, c4, 0), true);
    auto back = reversed(*r.witness);
    CHECK(back.steps.front() == constant_map(c4, c4, 0));
    auto loop = concatenated(*r.witness, back);
    CHECK(loop.length() == 4);
    CHECK(validate_witness(loop, true));
    CHECK_THROWS_AS(concatenated(*r.witness, *r.witness), std::invalid_argument);
}

TEST_CASE("caps raise resource errors") {
    auto c6 = std_graph(Family::cycle, 6);
    Limits tiny{5};
    CHECK_THROWS_AS(are_homotopic(constant_map(c6, c6, 0), identity_map(c6), true, tiny), ResourceError);
    CHECK_THROWS_AS(homotopy_classes(c6, c6, false, tiny), ResourceError);
    CHECK_THROWS_AS(build_hom_graph(c6, c6, false, tiny), ResourceError);
}

TEST_CASE("component distances") {
    auto c4 = std_graph(Family::cycle, 4);
    auto comp = homotopy_component(identity_map(c4), true);
    auto idx = comp.maps.find(constant_map(c4, c4, 0).assignment());
    REQUIRE(idx);
    CHECK(comp.distance[*idx] == 2);
    CHECK(comp.distance[*comp.maps.find(identity_map(c4).assignment())] == 0);
}
