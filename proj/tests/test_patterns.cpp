#include <random>

#include "dhg/constructions.hpp"
#include "dhg/patterns.hpp"
#include "doctest.h"

using namespace dhg;

TEST_SUITE_BEGIN("patterns");

namespace {

// every standard graph on n vertices, as edge subsets over the 3*C(n,3) slots
std::vector<Edge> all_possible_edges(int n) {
    std::vector<Edge> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                if (c != a && c != b) out.push_back(make_edge(a, b, c));
    return out;
}

}  // namespace

TEST_CASE("pattern graphs match their definitions") {
    CHECK(pattern_graph(PatternName::I0).vertex_count() == 5);
    CHECK(pattern_graph(PatternName::I1).vertex_count() == 4);
    CHECK(pattern_graph(PatternName::H1).vertex_count() == 5);
    CHECK(pattern_graph(PatternName::H2).vertex_count() == 4);
    CHECK(pattern_graph(PatternName::R3).vertex_count() == 4);
    CHECK(pattern_graph(PatternName::R4).vertex_count() == 5);
    CHECK(pattern_graph(PatternName::E).vertex_count() == 4);
    CHECK(pattern_graph(PatternName::D2).vertex_count() == 3);
    CHECK(pattern_graph(PatternName::Disjoint2).vertex_count() == 6);
    for (PatternName p : kAllPatterns) CHECK(pattern_graph(p).edge_count() == 2);
}

TEST_CASE("pattern names parse case-insensitively") {
    CHECK(pattern_from_string("i0") == PatternName::I0);
    CHECK(pattern_from_string("H2") == PatternName::H2);
    CHECK(pattern_from_string("DISJOINT2") == PatternName::Disjoint2);
    CHECK_FALSE(pattern_from_string("nope").has_value());
}

TEST_CASE("classify_edge_pair on the defining examples") {
    auto cls = [](Edge a, Edge b) { return classify_edge_pair(a, b); };
    CHECK(cls(make_edge(0, 1, 4), make_edge(2, 3, 4)) == EdgePairClass::I0);
    CHECK(cls(make_edge(0, 1, 2), make_edge(0, 3, 2)) == EdgePairClass::I1);
    CHECK(cls(make_edge(0, 1, 2), make_edge(0, 1, 3)) == EdgePairClass::H2);
    CHECK(cls(make_edge(0, 4, 1), make_edge(2, 4, 3)) == EdgePairClass::H1);
    CHECK(cls(make_edge(0, 1, 2), make_edge(1, 2, 3)) == EdgePairClass::R3);
    CHECK(cls(make_edge(0, 1, 2), make_edge(2, 3, 4)) == EdgePairClass::R4);
    CHECK(cls(make_edge(0, 1, 2), make_edge(2, 3, 1)) == EdgePairClass::E);
    CHECK(cls(make_edge(0, 1, 2), make_edge(0, 2, 1)) == EdgePairClass::D2);
    CHECK(cls(make_edge(0, 1, 2), make_edge(3, 4, 5)) == EdgePairClass::Disjoint2);
    CHECK(cls(make_edge(0, 1, 2), make_edge(0, 1, 2)) == EdgePairClass::Identical);
    // unordered in the pair
    CHECK(cls(make_edge(2, 3, 4), make_edge(0, 1, 4)) == EdgePairClass::I0);
    CHECK(cls(make_edge(1, 2, 3), make_edge(0, 1, 2)) == EdgePairClass::R3);
}

TEST_CASE("every pair classification embeds back into its host") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(4, 7);
    for (int round = 0; round < 60; ++round) {
        int n = size(rng);
        std::bernoulli_distribution coin(0.15);
        std::vector<Edge> edges;
        for (const Edge& e : all_possible_edges(n))
            if (coin(rng)) edges.push_back(e);
        auto h = DirectedHypergraph::from_edges(n, edges);
        const auto& es = h.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                EdgePairClass c = classify_edge_pair(es[i], es[j]);
                REQUIRE(c != EdgePairClass::Identical);
                // the two-edge subgraph of H is a copy of exactly that pattern
                for (PatternName p : kAllPatterns) {
                    auto sub = DirectedHypergraph::from_edges(n, {es[i], es[j]});
                    CHECK(contains_subgraph(sub, pattern_graph(p)) == pair_class_matches(c, p));
                }
            }
    }
}

TEST_CASE("contains_pattern basics") {
    auto single = DirectedHypergraph::from_edges(3, {make_edge(0, 1, 2)});
    CHECK_FALSE(contains_pattern(single, PatternName::I1));

    auto i1_host = DirectedHypergraph::from_edges(4, {make_edge(0, 1, 2), make_edge(0, 3, 2)});
    CHECK(contains_pattern(i1_host, PatternName::I1));

    CHECK_FALSE(contains_pattern(build_h2_oriented(5), PatternName::H2));
}

TEST_CASE("injectivity: a double edge alone is not I1 or H2") {
    auto d2 = DirectedHypergraph::from_edges(4, {make_edge(0, 1, 2), make_edge(0, 2, 1)});
    CHECK(contains_pattern(d2, PatternName::D2));
    CHECK_FALSE(contains_pattern(d2, PatternName::I1));
    CHECK_FALSE(contains_pattern(d2, PatternName::H2));
}

TEST_CASE("fast pair scan agrees with backtracking containment") {
    // full enumeration over all graphs on 4 vertices
    auto slots = all_possible_edges(4);
    REQUIRE(slots.size() == 12);
    for (std::uint32_t mask = 0; mask < (1u << 12); mask += 1) {
        std::vector<Edge> edges;
        for (int i = 0; i < 12; ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        auto h = DirectedHypergraph::from_edges(4, edges);
        for (PatternName p : kAllPatterns)
            REQUIRE(contains_pattern(h, p) == contains_subgraph(h, pattern_graph(p)));
    }
}

TEST_CASE("fast pair scan agrees with backtracking on random n=6 graphs") {
    std::mt19937 rng(13);
    for (int round = 0; round < 40; ++round) {
        std::bernoulli_distribution coin(0.1);
        std::vector<Edge> edges;
        for (const Edge& e : all_possible_edges(6))
            if (coin(rng)) edges.push_back(e);
        auto h = DirectedHypergraph::from_edges(6, edges);
        for (PatternName p : kAllPatterns)
            CHECK(contains_pattern(h, p) == contains_subgraph(h, pattern_graph(p)));
    }
}

TEST_CASE("containment is monotone under edge additions") {
    std::mt19937 rng(17);
    for (int round = 0; round < 50; ++round) {
        std::bernoulli_distribution coin(0.1);
        std::vector<Edge> edges;
        for (const Edge& e : all_possible_edges(5))
            if (coin(rng)) edges.push_back(e);
        auto h = DirectedHypergraph::from_edges(5, edges);
        auto slots = all_possible_edges(5);
        std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
        Edge extra = slots[pick(rng)];
        auto grown = h.with_edge(extra.tail_lo, extra.tail_hi, extra.head);
        for (PatternName p : kAllPatterns)
            if (contains_pattern(h, p)) CHECK(contains_pattern(grown, p));
    }
}

TEST_CASE("embedding witness maps edges onto edges") {
    auto host = build_h1_standard(8);
    for (PatternName p : kAllPatterns) {
        auto embedding = find_embedding(host, pattern_graph(p));
        if (!embedding) continue;
        for (const Edge& e : pattern_graph(p).edges()) {
            CHECK(host.has_edge((*embedding)[e.tail_lo], (*embedding)[e.tail_hi],
                                (*embedding)[e.head]));
        }
    }
}

TEST_CASE("degeneracy of the nine catalog patterns") {
    auto degenerate = {PatternName::I0, PatternName::I1, PatternName::H1, PatternName::H2,
                       PatternName::Disjoint2};
    auto nondegenerate = {PatternName::R3, PatternName::R4, PatternName::E, PatternName::D2};
    for (PatternName p : degenerate) CHECK(is_degenerate(pattern_graph(p)));
    for (PatternName p : nondegenerate) CHECK_FALSE(is_degenerate(pattern_graph(p)));
}

TEST_CASE("degeneracy witnesses partition and cover edges") {
    auto w = degeneracy_witness(pattern_graph(PatternName::I0));
    REQUIRE(w.has_value());
    CHECK(w->t1.size() + w->t2.size() + w->k.size() == 5);

    auto single = DirectedHypergraph::from_edges(3, {make_edge(0, 1, 2)});
    auto ws = degeneracy_witness(single);
    REQUIRE(ws.has_value());
    CHECK(ws->t1 == std::vector<Vertex>{0});
    CHECK(ws->t2 == std::vector<Vertex>{1});
    CHECK(ws->k == std::vector<Vertex>{2});

    CHECK_FALSE(degeneracy_witness(pattern_graph(PatternName::R3)).has_value());
}

TEST_SUITE_END();
