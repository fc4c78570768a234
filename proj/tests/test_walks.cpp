#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hamclass/error.hpp"
#include "hamclass/walks.hpp"
#include "support/oracles.hpp"

#include "hamclass/graph6.hpp"

#include <fstream>
#include <random>
#include <string>

using namespace hamclass;

namespace {

Graph triangle_with_pendant()
{
    return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

Graph two_triangles()
{
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

Graph minus(const Graph &g, Vertex v)
{
    return induced_subgraph(g, g.vertices() - VertexSet{v});
}

} // namespace

TEST_CASE("hamilton cycles")
{
    auto k4 = hamilton_cycle(Graph::complete(4));
    REQUIRE(k4);
    CHECK(k4->length() == 4);
    CHECK(is_valid_cycle(Graph::complete(4), k4->vertices));

    CHECK_FALSE(hamilton_cycle(Graph::petersen()));
    for (Vertex v = 0; v < 10; ++v) {
        Graph h = minus(Graph::petersen(), v);
        auto c = hamilton_cycle(h);
        REQUIRE(c);
        CHECK(c->length() == 9);
        CHECK(is_valid_cycle(h, c->vertices));
    }
    CHECK_FALSE(hamilton_cycle(Graph(2, {{0, 1}})));
    CHECK_FALSE(hamilton_cycle(Graph::path(5)));
    // Deterministic: same graph, same witness.
    CHECK(hamilton_cycle(Graph::complete(6)) == hamilton_cycle(Graph::complete(6)));
}

TEST_CASE("hamilton paths")
{
    auto p5 = hamilton_path(Graph::path(5));
    REQUIRE(p5);
    CHECK(p5->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});

    const Graph petersen = Graph::petersen();
    auto p = hamilton_path(petersen);
    REQUIRE(p);
    CHECK(p->order() == 10);
    CHECK(is_valid_path(petersen, p->vertices));
    REQUIRE(oracle::brute_detour(petersen) == 10);

    CHECK_FALSE(hamilton_path(two_triangles()));
    CHECK_FALSE(hamilton_path(Graph::star(4)));
    CHECK(hamilton_path(Graph(1)));
}

TEST_CASE("circumference")
{
    Circumference tree = circumference(Graph::star(6));
    CHECK(tree.length == 0);
    CHECK_FALSE(tree.witness);
    CHECK(circumference(Graph::path(7)).length == 0);

    const Graph petersen = Graph::petersen();
    REQUIRE(oracle::brute_circumference(petersen) == 9);
    Circumference c = circumference(petersen);
    CHECK(c.length == 9);
    REQUIRE(c.witness);
    CHECK(is_valid_cycle(petersen, c.witness->vertices));
    CHECK(c.witness->length() == 9);

    Circumference k5 = circumference(Graph::complete(5));
    CHECK(k5.length == 5);
    CHECK(k5.witness->length() == 5);

    CHECK(circumference(triangle_with_pendant()).length == 3);
    CHECK(circumference(two_triangles()).length == 3);
}

TEST_CASE("detour order")
{
    Detour k1 = detour_order(Graph(1));
    CHECK(k1.order == 1);
    CHECK(k1.witness.vertices == std::vector<Vertex>{0});

    Detour p = detour_order(Graph::petersen());
    CHECK(p.order == 10);
    CHECK(is_valid_path(Graph::petersen(), p.witness.vertices));

    Detour star = detour_order(Graph::star(5));
    CHECK(star.order == 3);
    CHECK(star.witness.vertices == std::vector<Vertex>{1, 0, 2});

    CHECK(detour_order(two_triangles()).order == 3);
    CHECK(detour_order(Graph(4)).order == 1);
}

TEST_CASE("subset DP oracle")
{
    CHECK(circumference_dp_oracle(Graph::cycle(6)) == 6);
    CHECK(circumference_dp_oracle(Graph::petersen()) == 9);
    CHECK(circumference_dp_oracle(Graph::star(5)) == 0);
    CHECK_THROWS_AS(circumference_dp_oracle(Graph(21)), Error);
}

TEST_CASE("branch and bound agrees with the subset DP and brute force on random graphs")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> order(3, 12);
    std::uniform_real_distribution<double> density(0.15, 0.8);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        Circumference c = circumference(g);
        CHECK(c.length == circumference_dp_oracle(g));
        if (g.order() <= 9) CHECK(c.length == oracle::brute_circumference(g));
        if (c.length > 0) {
            REQUIRE(c.witness);
            CHECK(is_valid_cycle(g, c.witness->vertices));
            CHECK(c.witness->length() == c.length);
        }
        CHECK(hamilton_cycle(g).has_value() == (c.length == g.order()));

        Detour d = detour_order(g);
        CHECK(is_valid_path(g, d.witness.vertices));
        CHECK(d.witness.order() == d.order);
        if (g.order() <= 9) CHECK(d.order == oracle::brute_detour(g));
        CHECK(hamilton_path(g).has_value() == (d.order == g.order()));

        // Deleting a vertex never increases either measure.
        if (g.order() > 3) {
            Graph h = minus(g, static_cast<Vertex>(trial % g.order()));
            CHECK(circumference(h).length <= c.length);
            CHECK(detour_order(h).order <= d.order);
        }
    }
}

TEST_CASE("circumference across cut vertices and near-Hamiltonian blocks (property)")
{
    // Chains of random pieces glued at single vertices, plus pendant trees.
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> pieces(1, 4);
    std::uniform_int_distribution<int> piece_order(2, 7);
    std::uniform_real_distribution<double> density(0.3, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        int n = 1;
        const int count = pieces(rng);
        for (int p = 0; p < count && n < 16; ++p) {
            const int size = std::min(piece_order(rng), 17 - n);
            const Vertex glue = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const Graph piece = oracle::random_connected_graph(rng, size, density(rng));
            auto label = [&](Vertex v) { return v == 0 ? glue : static_cast<Vertex>(n + v - 1); };
            for (Vertex a = 0; a < size; ++a)
                for (Vertex b = a + 1; b < size; ++b)
                    if (piece.adjacent(a, b)) edges.emplace_back(label(a), label(b));
            n += size - 1;
        }
        Graph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        const Circumference c = circumference(g);
        CHECK(c.length == circumference_dp_oracle(g));
        if (c.length > 0) CHECK(is_valid_cycle(g, c.witness->vertices));
    }
}

TEST_CASE("circumference on large graphs with one dominant block")
{
    // Values from the plain enumeration before blocks were searched separately.
    std::ifstream in(HAMCLASS_TEST_DATA "/large_blocks.g6");
    REQUIRE(in);
    const std::vector<int> expected{61, 41, 48};
    std::string line;
    for (int want : expected) {
        REQUIRE(std::getline(in, line));
        const Graph g = parse_graph6(line);
        const Circumference c = circumference(g);
        CHECK(c.length == want);
        REQUIRE(c.witness);
        CHECK(is_valid_cycle(g, c.witness->vertices));
    }
}

TEST_CASE("longest induced path from a vertex")
{
    for (Vertex v = 0; v < 5; ++v) CHECK(longest_induced_path_from(Graph::complete(5), v).order() == 2);
    PathWitness p5 = longest_induced_path_from(Graph::path(5), 0);
    CHECK(p5.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});

    const Graph petersen = Graph::petersen();
    for (Vertex v = 0; v < 10; ++v) {
        PathWitness p = longest_induced_path_from(petersen, v);
        CHECK(p.order() == oracle::brute_longest_induced_path(petersen, v));
        CHECK(p.order() == 5); // frozen from the brute-force enumeration above
        CHECK(p.vertices.front() == v);
        CHECK(is_induced_path(petersen, p.vertices));
    }

    // Ties go to the lexicographically smallest sequence: C6 from 0 gives 0,1,2,3,4.
    CHECK(longest_induced_path_from(Graph::cycle(6), 0).vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(has_induced_path_from(Graph::cycle(7), 3, 3));
    CHECK_FALSE(has_induced_path_from(Graph::complete(5), 0, 3));
    auto first = first_induced_path_from(Graph::cycle(7), 2, 3);
    REQUIRE(first);
    CHECK(first->vertices == std::vector<Vertex>{2, 1, 0});
}

TEST_CASE("induced path search agrees with brute force (property)")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> order(2, 11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), 0.35);
        const Vertex v = static_cast<Vertex>(trial % g.order());
        PathWitness p = longest_induced_path_from(g, v);
        CHECK(p.order() == oracle::brute_longest_induced_path(g, v));
        CHECK(is_induced_path(g, p.vertices));
        CHECK(is_valid_path(g, p.vertices));
    }
}

TEST_CASE("extend_cycle")
{
    Graph k5 = Graph::complete(5);
    auto five = extend_cycle(k5, CycleWitness{{0, 1, 2, 3}});
    REQUIRE(five);
    CHECK(five->length() == 5);
    CHECK(is_valid_cycle(k5, five->vertices));

    const Graph petersen = Graph::petersen();
    Circumference c = circumference(petersen);
    REQUIRE(c.witness);
    CHECK_FALSE(extend_cycle(petersen, *c.witness));

    CHECK_FALSE(extend_cycle(triangle_with_pendant(), CycleWitness{{0, 1, 2}}));
    CHECK_THROWS_AS(extend_cycle(k5, CycleWitness{{0, 1}}), Error);
    CHECK_THROWS_AS(extend_cycle(Graph::cycle(5), CycleWitness{{0, 1, 3}}), Error);
    CHECK_FALSE(extend_cycle(k5, CycleWitness{{0, 1, 2, 3, 4}}));
}

TEST_CASE("extend_cycle always returns a strictly longer valid cycle (property)")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 8, 0.45);
        Circumference c = circumference(g);
        if (!c.witness) continue;
        // Start from a shortest available cycle: any triangle or the witness.
        CycleWitness start = *c.witness;
        for (Vertex a = 0; a < 8; ++a)
            for (Vertex b : g.neighbors(a))
                for (Vertex x : g.neighbors(a) & g.neighbors(b))
                    if (a < b && b < x) start = CycleWitness{{a, b, x}};
        if (auto longer = extend_cycle(g, start)) {
            CHECK(longer->length() > start.length());
            CHECK(is_valid_cycle(g, longer->vertices));
        }
    }
}
