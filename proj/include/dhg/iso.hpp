#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhg/core.hpp"

// Isomorphism testing, canonical forms, and automorphism counting. Two
// graphs are isomorphic when a vertex relabeling maps edges to edges with
// heads to heads and tail sets to tail sets; the standard/oriented mode flag
// is not part of the comparison.
namespace dhg {

inline constexpr int kCanonicalVertexLimit = 14;

// Byte string equal for two graphs iff they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Edge {a,b}->c maps to {p[a],p[b]}->p[c]; p must be a bijection on 0..n-1.
DirectedHypergraph apply_permutation(const DirectedHypergraph& h, const std::vector<Vertex>& p);

// Minimum serialized edge list over vertex orderings compatible with
// iterative invariant refinement. Throws if n exceeds the limit.
CanonicalForm canonical_form(const DirectedHypergraph& h, int limit = kCanonicalVertexLimit);

// The relabeled graph realizing canonical_form(h).
DirectedHypergraph canonical_representative(const DirectedHypergraph& h,
                                            int limit = kCanonicalVertexLimit);

// FNV-1a 64 over the canonical bytes, as 16 hex digits.
std::string canonical_digest_hex(const CanonicalForm& form);

bool are_isomorphic(const DirectedHypergraph& a, const DirectedHypergraph& b,
                    int limit = kCanonicalVertexLimit);

// Number of permutations fixing the edge set.
std::uint64_t automorphism_group_order(const DirectedHypergraph& h,
                                       int limit = kCanonicalVertexLimit);

}  // namespace dhg
