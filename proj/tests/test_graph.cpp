#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hamclass/canon.hpp"
#include "hamclass/error.hpp"
#include "hamclass/graph.hpp"
#include "hamclass/graph6.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace hamclass;

namespace {

std::vector<std::vector<int>> kneser_5_2_matrix()
{
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    std::vector<std::vector<int>> m(10, std::vector<int>(10, 0));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            m[i][j] = (i != j && a != c && a != d && b != c && b != d) ? 1 : 0;
        }
    return m;
}

} // namespace

TEST_CASE("graph6 decodes the 5-vertex record D?{")
{
    // Hand-built star centred at vertex 4, encoded by the reference codec.
    std::vector<std::vector<int>> m(5, std::vector<int>(5, 0));
    for (int v = 0; v < 4; ++v) m[v][4] = m[4][v] = 1;
    REQUIRE(oracle::reference_graph6(m) == "D?{");

    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(oracle::matrix_of(g) == m);
    CHECK(write_graph6(g) == "D?{");
}

TEST_CASE("graph6 K1 and header handling")
{
    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{"));
}

TEST_CASE("graph6 Petersen record")
{
    const std::string record = oracle::reference_graph6(kneser_5_2_matrix());
    Graph g = parse_graph6(record);
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(g == Graph::petersen());
    CHECK(write_graph6(g) == record);
}

TEST_CASE("graph6 rejects malformed records")
{
    auto kind_of = [](std::string_view s) {
        try {
            parse_graph6(s);
        } catch (const Error &e) {
            return e.kind();
        }
        FAIL("expected an error for " << s);
        return ErrorKind::Parse;
    };
    CHECK(kind_of("") == ErrorKind::Parse);
    CHECK(kind_of("D?") == ErrorKind::Parse);     // body too short
    CHECK(kind_of("D?{?") == ErrorKind::Parse);   // body too long
    CHECK(kind_of("D?|") == ErrorKind::Parse);    // stray padding bit (124 - 63 = 61)
    CHECK(kind_of("D? {") == ErrorKind::Parse);   // byte below 63
    CHECK(kind_of("~??~") == ErrorKind::Parse);   // n = 63 with no body
    CHECK(kind_of("~?@?") == ErrorKind::Parse);   // n = 64 with no body
    CHECK(kind_of("~??D") == ErrorKind::Parse);   // long form used for n = 5
    CHECK(kind_of("~?A?") == ErrorKind::UnsupportedOrder); // n = 128
    CHECK(kind_of("?") == ErrorKind::UnsupportedOrder);
}

TEST_CASE("graph6 long form for orders 63 and 64")
{
    for (int n : {63, 64}) {
        std::mt19937_64 rng(static_cast<unsigned>(n));
        Graph g = oracle::random_graph(rng, n, 0.3);
        const std::string record = write_graph6(g);
        CHECK(record == oracle::reference_graph6(oracle::matrix_of(g)));
        CHECK(record.substr(0, 1) == "~");
        CHECK(parse_graph6(record) == g);
    }
    CHECK_THROWS_AS(Graph(65), Error);
    CHECK_THROWS_AS(Graph(0), Error);
}

TEST_CASE("graph6 round trip on random graphs (property)")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(1, 64);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        REQUIRE(is_well_formed(g));
        const std::string record = write_graph6(g);
        CHECK(record == oracle::reference_graph6(oracle::matrix_of(g)));
        CHECK(parse_graph6(record) == g);
    }
}

TEST_CASE("degree profiles")
{
    DegreeProfile p = degree_profile(Graph::petersen());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    DegreeProfile k5 = degree_profile(Graph::complete(5));
    CHECK(k5.min_degree == 4);
    CHECK(k5.max_degree == 4);
    DegreeProfile star = degree_profile(Graph::star(5));
    CHECK(star.min_degree == 1);
    CHECK(star.max_degree == 4);
    CHECK(star.degree_sequence == std::vector<int>{1, 1, 1, 1, 4});
}

TEST_CASE("vertex connectivity")
{
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(Graph::path(4)) == 1);
    const Graph petersen = Graph::petersen();
    REQUIRE(oracle::brute_connectivity(petersen) == 3);
    CHECK(vertex_connectivity(petersen) == 3);
    CHECK(vertex_connectivity(Graph::cycle(7)) == 2);
    CHECK(vertex_connectivity(Graph(2)) == 0);
    CHECK(vertex_connectivity(Graph(2, {{0, 1}})) == 1);
    CHECK_THROWS_AS(vertex_connectivity(Graph(1)), Error);
}

TEST_CASE("vertex connectivity agrees with subset brute force and is monotone under edge addition")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const int kappa = vertex_connectivity(g);
        CHECK(kappa == oracle::brute_connectivity(g));
        CHECK(kappa <= degree_profile(g).min_degree);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                CHECK(vertex_connectivity(h) >= kappa);
            }
    }
}

TEST_CASE("induced subgraphs")
{
    Graph c5 = Graph::cycle(5);
    Graph p4 = induced_subgraph(c5, VertexSet{1, 2, 3, 4});
    CHECK(p4 == Graph::path(4));
    CHECK(induced_subgraph(Graph::complete(5), VertexSet{0, 2, 4}) == Graph::complete(3));
    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{}), Error);

    const Graph petersen = Graph::petersen();
    CHECK(induced_subgraph(petersen, petersen.vertices()) == petersen);
    for (Vertex v = 0; v < 10; ++v) {
        Graph h = induced_subgraph(petersen, petersen.vertices() - VertexSet{v});
        CHECK(h.order() == 9);
        CHECK(degree_profile(h).degree_sequence == std::vector<int>{2, 2, 2, 3, 3, 3, 3, 3, 3});
    }
}

TEST_CASE("induced paths")
{
    Graph p4 = Graph::path(4);
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(is_induced_path(p4, all));
    Graph c4 = Graph::cycle(4);
    std::vector<Vertex> three{0, 1, 2};
    CHECK(is_induced_path(c4, three));
    CHECK_FALSE(is_induced_path(c4, all));
    std::vector<Vertex> repeated{0, 1, 0};
    CHECK_THROWS_AS(is_induced_path(c4, repeated), Error);

    const Graph petersen = Graph::petersen();
    REQUIRE(oracle::brute_girth(petersen) == 5);
    for (Vertex a = 0; a < 10; ++a)
        for (Vertex b : petersen.neighbors(a))
            for (Vertex c : petersen.neighbors(b)) {
                if (c == a) continue;
                std::vector<Vertex> seq{a, b, c};
                CHECK(is_induced_path(petersen, seq));
            }
}

TEST_CASE("canonical forms identify isomorphic relabellings")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> order(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), 0.4);
        std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        CanonicalLabelling lab = canonical_labelling(g);
        CHECK(canonical_form(relabel(g, lab.order)) == lab.form);
    }
    // Highly symmetric graphs must stay cheap.
    CHECK(canonical_form(Graph(20)) == canonical_form(Graph(20)));
    CHECK(canonical_form(Graph::complete(20)).rows.size() == 20);
    CHECK_FALSE(are_isomorphic(Graph::cycle(6), Graph::path(6)));
    CHECK(are_isomorphic(parse_graph6(oracle::reference_graph6(kneser_5_2_matrix())), Graph::petersen()));
}

TEST_CASE("canonical forms agree with brute force on small graphs")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> order(2, 7);
    for (int trial = 0; trial < 300; ++trial) {
        Graph a = oracle::random_graph(rng, order(rng), 0.5);
        Graph b = oracle::random_graph(rng, a.order(), 0.5);
        CHECK((canonical_form(a) == canonical_form(b)) ==
              (oracle::brute_canonical_code(a) == oracle::brute_canonical_code(b)));
    }
}
