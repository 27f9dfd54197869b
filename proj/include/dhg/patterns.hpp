#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dhg/core.hpp"

// Catalog of the nine two-edge configurations and the decision procedures
// for pattern containment and degeneracy.
namespace dhg {

// The subscript of an I/H name is the number of shared tail vertices; I pairs
// also share the head, H pairs do not. R4/R3/E have a head landing in the
// other edge's tail; D2 is two edges on one triple; DISJOINT2 is two edges
// with no common vertex.
enum class PatternName { I0, I1, H1, H2, R3, R4, E, D2, Disjoint2 };

inline constexpr PatternName kAllPatterns[] = {
    PatternName::I0, PatternName::I1, PatternName::H1,
    PatternName::H2, PatternName::R3, PatternName::R4,
    PatternName::E,  PatternName::D2, PatternName::Disjoint2,
};

std::string to_string(PatternName p);
// Case-insensitive: i0, i1, h1, h2, r3, r4, e, d2, disjoint2.
std::optional<PatternName> pattern_from_string(std::string_view s);

// The pattern as a concrete graph on 3..6 vertices.
const DirectedHypergraph& pattern_graph(PatternName p);

enum class EdgePairClass { I0, I1, H1, H2, R3, R4, E, D2, Disjoint2, Identical };

std::string to_string(EdgePairClass c);

// The unique two-edge pattern isomorphic to {e1, e2}. Classification key:
// how many vertices the edges share and which roles the shared vertices play.
EdgePairClass classify_edge_pair(const Edge& e1, const Edge& e2);

bool pair_class_matches(EdgePairClass c, PatternName p);

// True iff an injective map V(F) -> V(H) sends every edge of F to an edge of
// H (tail set to tail set, head to head). For the two-edge catalog this is a
// scan over edge pairs; contains_subgraph() is the generic backtracking
// route and the two must agree.
bool contains_pattern(const DirectedHypergraph& h, PatternName p);

bool contains_subgraph(const DirectedHypergraph& h, const DirectedHypergraph& f);

// Witness embedding: result[v] is the host vertex for pattern vertex v.
std::optional<std::vector<Vertex>> find_embedding(const DirectedHypergraph& h,
                                                  const DirectedHypergraph& f);

// Partition of V(F) into tail sides and a head side such that every edge has
// one tail in each side and its head in `k`.
struct DegeneracyWitness {
    std::vector<Vertex> t1, t2, k;
};

// Brute force over 3-colorings; returns the lexicographically first witness
// under per-vertex color order t1 < t2 < k, or nullopt if none exists.
std::optional<DegeneracyWitness> degeneracy_witness(const DirectedHypergraph& f);

inline bool is_degenerate(const DirectedHypergraph& f) {
    return degeneracy_witness(f).has_value();
}

}  // namespace dhg
