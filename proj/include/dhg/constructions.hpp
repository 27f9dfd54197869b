#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dhg/core.hpp"

// Generators for the extremal and lower-bound families. Every builder
// verifies its own postconditions (edge count, forbidden-pattern freeness,
// orientedness where claimed) and throws std::logic_error on a mismatch.
namespace dhg {

// -------------------------------------------------------------- I0, standard

// Total map with f(x) != x; vertex x receives its edges through {f(x),y}->x.
struct GatekeeperFunction {
    std::vector<Vertex> f;
};

GatekeeperFunction cyclic_successor_gatekeeper(int n);

// n(n-2) edges, I0-free: every tail pointing at x contains f(x).
DirectedHypergraph build_i0_standard(int n, const GatekeeperFunction& f);

// Number of labeled I0-free graphs with n(n-2) edges, by independent
// enumeration of admissible tail link graphs per head. Supported for
// 6 <= n <= 7.
std::uint64_t enumerate_i0_standard_extremal(int n);

// -------------------------------------------------------------- I0, oriented

// Gate shape of an extremal oriented I0-free graph: disjoint directed
// triangles plus, depending on n mod 3, one special component on the last
// 4 or 5 vertices.
enum class I0GateShape { triangles, c4, c3_plus_edge, c5, c3_plus_path };

std::string to_string(I0GateShape s);

// `choices` picks one edge per conflicted triple of the special component:
//   c4:           4 binary choices (0 = middle-head edge, 1 = forward edge)
//   c3_plus_edge: two binary choices then one ternary choice
//   c5:           5 binary choices
//   c3_plus_path: two binary, one ternary, one binary choice
// The triangles shape has no choices (the three completions of a triangle
// are isomorphic; the lex-least edge is kept).
struct I0OrientedVariant {
    I0GateShape shape = I0GateShape::triangles;
    std::vector<int> choices;
};

// All labeled variants admissible for this n (1, 16+12, or 32+24 of them).
std::vector<I0OrientedVariant> i0_oriented_variants(int n);

// Oriented, I0-free, with n(n-3) + n/3, n(n-3) + (n-4)/3, or
// n(n-3) + (n-5)/3 edges for n = 0, 1, 2 mod 3. Requires n >= 9.
DirectedHypergraph build_i0_oriented(int n, const I0OrientedVariant& variant);

// Builds every variant and deduplicates by canonical form; expected class
// counts are 1, 18, 32 for n = 0, 1, 2 mod 3. Representatives are canonical
// graphs in canonical-byte order.
std::vector<DirectedHypergraph> enumerate_i0_oriented_classes(int n);

// ------------------------------------------------------------------------ I1

using Matching = std::vector<std::pair<Vertex, Vertex>>;

// For each head, consecutive others paired in ascending order.
std::vector<Matching> default_i1_matchings(int n);

// Tail link graph of each x is the given maximum matching on the other n-1
// vertices; n*floor((n-1)/2) edges, I1-free.
DirectedHypergraph build_i1_standard(int n, const std::vector<Matching>& per_head);

// Cyclic construction: even n uses tails (i+2k, i+2k+1) pointing at i; odd n
// extends the even construction on n-1 vertices by a new vertex with its own
// matched tails. Oriented and I1-free with n*floor((n-1)/2) edges.
DirectedHypergraph build_i1_oriented(int n);

// ------------------------------------------------------------------------ H1

enum class H1OddVariant { matching, single_head };

// floor(n/2)*(n-2) edges, oriented, H1-free. Even n: each matched pair
// points at all other vertices. Odd n: either the same with one vertex
// unmatched (default) or all pairs of the others pointing at one head.
DirectedHypergraph build_h1_oriented(int n, H1OddVariant variant = H1OddVariant::matching);

// C(n+1,2) - 3 edges, H1-free. Core {0,1} carries all three edges on every
// triple {0,1,p}; every petal pair points at core vertex 0.
DirectedHypergraph build_h1_standard(int n);

// ------------------------------------------------------------------------ H2

int pair_index(int n, Vertex a, Vertex b);

// Head assignment per unordered pair, avoiding the pair's own vertices.
struct PairHeadAssignment {
    int n = 0;
    std::vector<Vertex> head_for_pair;  // indexed by pair_index(n, a, b)
};

// Default assignment: first vertex after max(a,b) in cyclic order that is
// not a or b.
PairHeadAssignment cyclic_pair_heads(int n);

// C(n,2) edges, H2-free: each pair is a tail set exactly once.
DirectedHypergraph build_h2_standard(int n, const PairHeadAssignment& f);

// Oriented family grown from a 5-vertex seed where every triple carries
// exactly one edge; vertex m joins with each i < m pointing at i+1 mod m.
// C(n,2) edges, oriented, H2-free. Requires n >= 5.
DirectedHypergraph build_h2_oriented(int n);

}  // namespace dhg
