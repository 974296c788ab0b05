#include "doctest.h"

#include "ahtop/mapping_fiber.hpp"
#include "oracles.hpp"

using namespace ahtop;

namespace {

GraphPtr std_graph(Family f, int n) { return share(make_standard(f, n)); }

struct FiberCase {
    std::string name;
    GraphMap f1;
    std::size_t L;
};

std::vector<FiberCase> corpus() {
    auto k1 = std_graph(Family::complete, 1);
    auto c3 = std_graph(Family::cycle, 3);
    auto c4 = std_graph(Family::cycle, 4);
    auto c5 = std_graph(Family::cycle, 5);
    auto i2 = std_graph(Family::interval, 2);
    auto i1 = std_graph(Family::interval, 1);
    return {
        {"K1 -> C5", GraphMap(k1, c5, {0}, true), 3},
        {"id C4", identity_map(c4), 2},
        {"C3 -> K1", GraphMap(c3, k1, {0, 0, 0}, true), 3},
        {"I2 -> C5", GraphMap(i2, c5, {0, 1, 2}, true), 3},
        {"C4 -> I1", GraphMap(c4, i1, {0, 1, 0, 1}, true), 2},
        {"id C3", identity_map(c3), 2},
    };
}

}  // namespace

TEST_CASE("fiber vertex set and adjacency from the definition") {
    for (const auto& c : corpus()) {
        CAPTURE(c.name);
        FiberGraph mf = mapping_fiber(c.f1, c.L);
        const PointedGraph& g = *c.f1.domain();
        const PointedGraph& h = *c.f1.codomain();
        oracle::Adjacency ag(g.graph), ah(h.graph);
        // vertices: (u, omega) with omega(L) = f1(u), enumerated independently
        std::vector<std::pair<Vertex, std::vector<Vertex>>> expected;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            oracle::for_each_assignment(c.L, h.vertex_count(), [&](const oracle::Assignment& tail) {
                std::vector<Vertex> t{h.base};
                t.insert(t.end(), tail.begin(), tail.end());
                for (std::size_t i = 1; i < t.size(); ++i)
                    if (!ah.equal_or_adjacent(t[i - 1], t[i])) return;
                if (t.back() == c.f1(u)) expected.push_back({u, t});
            });
        REQUIRE(mf.size() == expected.size());
        for (std::size_t x = 0; x < mf.size(); ++x) {
            CHECK(mf.vertices[x].u == expected[x].first);
            CHECK(mf.paths.paths[mf.vertices[x].path] == Path(expected[x].second));
        }
        for (std::size_t x = 0; x < mf.size(); ++x)
            for (std::size_t y = x + 1; y < mf.size(); ++y) {
                const auto& [u1, w1] = expected[x];
                const auto& [u2, w2] = expected[y];
                bool adj = (u1 == u2 && oracle::pointwise(w1, w2, ah)) || (w1 == w2 && ag.adjacent(u1, u2));
                CHECK(mf.graph->graph.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(y)) == adj);
            }
        CHECK(verify_pullback(mf).ok);
    }
}

TEST_CASE("special fibers") {
    auto k1 = std_graph(Family::complete, 1);
    auto c5 = std_graph(Family::cycle, 5);
    FiberGraph over_point = mapping_fiber(GraphMap(k1, c5, {0}, true), 3);
    // K1 -> H: the fiber is the loop graph and k is the identity
    CHECK(over_point.graph->graph == over_point.loops.graph->graph);
    CHECK(over_point.k == identity_map(over_point.graph) );

    auto c3 = std_graph(Family::cycle, 3);
    FiberGraph to_point = mapping_fiber(GraphMap(c3, k1, {0, 0, 0}, true), 3);
    CHECK(to_point.graph->graph == c3->graph);
}

TEST_CASE("exactness at Mf1 on vertices: im k = ker f2") {
    for (const auto& c : corpus()) {
        CAPTURE(c.name);
        FiberGraph mf = mapping_fiber(c.f1, c.L);
        std::set<Vertex> image(mf.k.assignment().begin(), mf.k.assignment().end());
        std::set<Vertex> kernel;
        for (Vertex x = 0; x < mf.size(); ++x)
            if (mf.f2(x) == c.f1.domain()->base) kernel.insert(x);
        CHECK(image == kernel);
        CHECK(is_injective(mf.k));
    }
}

TEST_CASE("pullback check rejects corrupted fibers") {
    auto c = corpus()[3];
    FiberGraph mf = mapping_fiber(c.f1, c.L);
    // a vertex whose path does not end at f1(u)
    FiberGraph bad_vertex = mf;
    for (std::size_t p = 0; p < mf.paths.size(); ++p)
        if (mf.paths.endpoint(p) != c.f1(0)) {
            bad_vertex.vertices[1] = {0, p};
            break;
        }
    std::sort(bad_vertex.vertices.begin(), bad_vertex.vertices.end());
    CHECK_FALSE(verify_pullback(bad_vertex).ok);
    // an edge dropped from the graph
    FiberGraph bad_edge = mf;
    auto edges = mf.graph->graph.edges();
    edges.pop_back();
    bad_edge.graph = share(PointedGraph(Graph(mf.size(), edges), mf.graph->base));
    CHECK_FALSE(verify_pullback(bad_edge).ok);
    // an extra edge
    FiberGraph extra = mf;
    auto more = mf.graph->graph.edges();
    for (Vertex a = 0; a < mf.size(); ++a)
        for (Vertex b = a + 1; b < mf.size(); ++b)
            if (!mf.graph->graph.adjacent(a, b) && more.size() == mf.graph->graph.edge_count()) more.push_back({a, b});
    extra.graph = share(PointedGraph(Graph(mf.size(), more), mf.graph->base));
    CHECK_FALSE(verify_pullback(extra).ok);
}

TEST_CASE("iterated fibers and the comparison maps") {
    auto c4 = std_graph(Family::cycle, 4);
    FiberTower t = iterated_fiber(identity_map(c4), {2, 2, 1}, 3);
    REQUIRE(t.mf2);
    REQUIRE(t.mf3);
    CHECK(verify_pullback(*t.mf2).ok);
    CHECK(verify_pullback(*t.mf3).ok);
    CHECK(compose(t.f3(), *t.j) == t.mf1.k);
    CHECK(compose(t.f4(), *t.j_prime) == t.mf2->k);
    CHECK(is_injective(*t.j));
    CHECK(is_injective(*t.j_prime));
    CHECK_THROWS_AS(iterated_fiber(identity_map(c4), {2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(iterated_fiber(identity_map(c4), {2, 2, 2, 2}, 4), std::invalid_argument);
}

TEST_CASE("second fiber ladder") {
    auto c4 = std_graph(Family::cycle, 4);
    LadderReport r = check_mf2_ladder(identity_map(c4), 2);
    CHECK(r.hypothesis_met);
    REQUIRE(r.squares.size() == 4);
    CHECK(r.all_commute());
    CHECK(r.squares[0].status == SquareStatus::homotopy_commutes);
    CHECK(r.squares[0].method == "two-phase");
    REQUIRE(r.squares[0].witness);
    CHECK(validate_witness(*r.squares[0].witness, true));
    for (std::size_t i = 1; i < 4; ++i) CHECK(r.squares[i].status == SquareStatus::commutes);

    auto k1 = std_graph(Family::complete, 1);
    LadderReport point = check_mf2_ladder(GraphMap(k1, c4, {0}, true), 2);
    CHECK(point.all_commute());
}

TEST_CASE("unpointed maps are rejected") {
    auto c4 = std_graph(Family::cycle, 4);
    CHECK_THROWS_AS(mapping_fiber(GraphMap(c4, c4, {1, 2, 3, 0}, false), 2), std::invalid_argument);
}
