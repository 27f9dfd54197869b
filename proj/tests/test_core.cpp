#include <random>
#include <sstream>

#include "dhg/constructions.hpp"
#include "dhg/core.hpp"
#include "doctest.h"

using namespace dhg;

TEST_SUITE_BEGIN("core");

TEST_CASE("make_edge normalizes tails and rejects collisions") {
    Edge e = make_edge(3, 1, 2);
    CHECK(e.tail_lo == 1);
    CHECK(e.tail_hi == 3);
    CHECK(e.head == 2);
    CHECK_THROWS_AS(make_edge(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(-1, 1, 2), std::invalid_argument);
}

TEST_CASE("with_edge inserts once and validates") {
    DirectedHypergraph h(3);
    h = h.with_edge(0, 1, 2);
    CHECK(h.edge_count() == 1);
    h = h.with_edge(1, 0, 2);  // same edge, tails unordered
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(0, 1, 2));
    CHECK_THROWS_AS(h.with_edge(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h.with_edge(0, 1, 3), std::invalid_argument);
}

TEST_CASE("is_oriented") {
    DirectedHypergraph empty(5);
    CHECK(is_oriented(empty));

    auto two_on_triple = DirectedHypergraph::from_edges(
        3, {make_edge(0, 1, 2), make_edge(0, 2, 1)});
    CHECK_FALSE(is_oriented(two_on_triple));

    CHECK(is_oriented(build_h2_oriented(5)));
}

TEST_CASE("tail link graph") {
    auto h = DirectedHypergraph::from_edges(4, {make_edge(0, 1, 2), make_edge(0, 3, 2)});
    auto t = tail_link_graph(h, 2);
    REQUIRE(t.size() == 2);
    CHECK(t.pairs[0] == std::pair<Vertex, Vertex>{0, 1});
    CHECK(t.pairs[1] == std::pair<Vertex, Vertex>{0, 3});

    // a vertex that is never a head
    CHECK(tail_link_graph(h, 0).size() == 0);
    CHECK_THROWS_AS(tail_link_graph(h, 4), std::invalid_argument);

    // gatekeeper construction: every tail link graph is an (n-2)-star at f(x)
    const int n = 6;
    auto f = cyclic_successor_gatekeeper(n);
    auto g = build_i0_standard(n, f);
    for (Vertex x = 0; x < n; ++x) {
        auto tx = tail_link_graph(g, x);
        CHECK(tx.size() == n - 2);
        for (auto [a, b] : tx.pairs) CHECK((a == f.f[x] || b == f.f[x]));
    }
}

TEST_CASE("directed link graph") {
    auto h = DirectedHypergraph::from_edges(3, {make_edge(0, 1, 2)});
    auto d0 = directed_link_graph(h, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0.arcs[0] == std::pair<Vertex, Vertex>{1, 2});
    CHECK(directed_link_graph(h, 1).arcs[0] == std::pair<Vertex, Vertex>{0, 2});
    CHECK(directed_link_graph(h, 2).size() == 0);

    // sum over all vertices is twice the edge count; 20 on the 10-edge seed
    auto g5 = build_h2_oriented(5);
    long long sum = 0;
    for (Vertex x = 0; x < 5; ++x) sum += directed_link_graph(g5, x).size();
    CHECK(sum == 20);
}

TEST_CASE("tail_count") {
    auto h = DirectedHypergraph::from_edges(4, {make_edge(0, 1, 2), make_edge(0, 1, 3)});
    CHECK(tail_count(h, 0, 1) == 2);
    CHECK(tail_count(h, 1, 0) == 2);
    CHECK(tail_count(h, 0, 2) == 0);
    CHECK_THROWS_AS(tail_count(h, 1, 1), std::invalid_argument);

    // H2-free graphs use every pair at most once
    auto g = build_h2_standard(6, cyclic_pair_heads(6));
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = a + 1; b < 6; ++b) CHECK(tail_count(g, a, b) <= 1);
}

TEST_CASE("sum identities on random graphs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(3, 7);
    for (int round = 0; round < 200; ++round) {
        int n = size(rng);
        std::bernoulli_distribution coin(0.2);
        std::vector<Edge> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = 0; c < n; ++c)
                    if (c != a && c != b && coin(rng)) edges.push_back(make_edge(a, b, c));
        auto h = DirectedHypergraph::from_edges(n, edges);

        long long sum_t = 0, sum_d = 0, sum_pairs = 0;
        for (Vertex x = 0; x < n; ++x) {
            sum_t += tail_link_graph(h, x).size();
            sum_d += directed_link_graph(h, x).size();
        }
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) sum_pairs += tail_count(h, a, b);
        CHECK(sum_t == h.edge_count());
        CHECK(sum_d == 2 * h.edge_count());
        CHECK(sum_pairs == h.edge_count());
    }
}

TEST_CASE("text format round trip") {
    auto g = build_h2_oriented(6);
    std::string text = to_text(g, Mode::oriented);
    std::istringstream in(text);
    auto back = read_graph_text(in);
    CHECK(back.graph == g);
    CHECK(back.mode == Mode::oriented);
    CHECK(to_text(back.graph, back.mode) == text);
}

TEST_CASE("text format accepts comments and blank lines") {
    std::istringstream in(
        "# a comment\n"
        "dhg n=4 mode=standard\n"
        "\n"
        "0 1 > 2\n"
        "# another\n"
        "0 1 > 3\n");
    auto gf = read_graph_text(in);
    CHECK(gf.graph.edge_count() == 2);
    CHECK(gf.mode == Mode::standard);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_graph_text(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("dhg n=3 mode=standard\n0 1 2\n", 2);              // malformed edge
    expect_line("dhg n=3 mode=standard\n1 0 > 2\n", 2);            // tails out of order
    expect_line("dhg n=3 mode=standard\n0 1 > 3\n", 2);            // id out of range
    expect_line("dhg n=3 mode=standard\n0 1 > 2\n0 1 > 2\n", 3);   // duplicate
    expect_line("dhg n=3 mode=bogus\n", 1);                        // bad header
    expect_line("dhg n=3 mode=oriented\n0 1 > 2\n0 2 > 1\n", 3);   // second edge on a triple
}

TEST_SUITE_END();
