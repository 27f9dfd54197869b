#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dhg/core.hpp"
#include "dhg/patterns.hpp"

// Exact extremal computations at desk scale: complete branch-and-bound
// search for the maximum edge count of a pattern-free graph, labeled
// counting at the optimum, class enumeration, and the combinatorial helpers
// around multiedge triples.
namespace dhg {

enum class Objective { max_edges, count_labeled_extremal, enumerate_classes };
enum class ExploreOrder { lex, reverse };

struct SearchLimits {
    int oriented_max_n = 6;   // 4^C(n,3) states, pruned
    int standard_max_n = 5;   // 2^(3*C(n,3)) states, pruned
    int per_head_max_n = 7;   // standard I0/I1 via per-head decomposition
    int classes_max_n = 5;
};

struct SearchProblem {
    int n = 0;
    PatternName pattern = PatternName::I0;
    Mode mode = Mode::standard;
    Objective objective = Objective::max_edges;

    int workers = 1;
    std::optional<double> timeout_seconds;
    ExploreOrder order = ExploreOrder::lex;

    bool use_bound_pruning = true;   // off only for pruning-soundness tests
    bool force_generic = false;      // skip the per-head fast path
    SearchLimits limits{};
};

struct SearchOutcome {
    int max_edges = 0;
    std::vector<DirectedHypergraph> witnesses;
    std::optional<std::uint64_t> labeled_count;
    std::optional<int> class_count;
    std::uint64_t nodes_expanded = 0;
    double wall_seconds = 0.0;
    bool complete = true;   // false after a timeout; max_edges is then a lower bound
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete search. Oriented mode branches over triples with four states per
// triple; standard mode branches over single edges. Both prune on pattern
// containment after each assignment and on the optimistic bound
// current + remaining <= best. Deterministic for fixed inputs: the value,
// witnesses, labeled count, and class representatives do not depend on the
// worker count.
SearchOutcome extremal_search(const SearchProblem& problem);

// Convenience wrappers.
std::uint64_t count_labeled_extremal(SearchProblem problem);
std::vector<DirectedHypergraph> enumerate_extremal_classes(SearchProblem problem);

// ------------------------------------------------- multiedge triple analysis

struct MultiedgeProfile {
    long long triples_with_edge = 0;   // triples holding >= 1 edge
    long long multiedge_triples = 0;   // triples holding >= 2 edges
};

// Exact counts; |E| <= triples_with_edge + 2 * multiedge_triples always.
MultiedgeProfile multiedge_profile(const DirectedHypergraph& h);

std::vector<std::array<Vertex, 3>> multiedge_triples(const DirectedHypergraph& h);

// Adds all three edges on a triple that already holds at least two, for an
// H1-free input; the result is checked to still be H1-free.
DirectedHypergraph saturate_multiedge(const DirectedHypergraph& h,
                                      const std::array<Vertex, 3>& triple);

// True iff no two multiedge triples share exactly one vertex. Input must be
// H1-free; a false return signals a bug or a bad input.
bool multiedge_pair_check(const DirectedHypergraph& h);

// For an H1-free oriented graph: true iff the pairs with tail_count >= 2 are
// pairwise disjoint.
bool disjoint_tail_pair_check(const DirectedHypergraph& h);

// ----------------------------------- undirected 3-uniform structure analysis

struct TripleSystem {
    int n = 0;
    std::vector<std::array<Vertex, 3>> triples;   // each ascending
};

enum class BlockKind { k4, k4_minus, sunflower };

std::string to_string(BlockKind k);

struct BlockComponent {
    BlockKind kind = BlockKind::sunflower;
    int edge_count = 0;
    std::vector<Vertex> vertices;
};

struct IntersectionStructure {
    bool valid = false;                      // no two triples share exactly one vertex
    std::vector<BlockComponent> components;  // only filled when valid
    int max_edges_bound = 0;                 // n, n-1, or n-2 by n mod 4
};

IntersectionStructure check_intersection_structure(const TripleSystem& u);

int intersection_free_bound(int n);

struct IntersectionScan {
    long long families = 0;          // nonempty valid families enumerated
    int max_edges = 0;
    bool decompositions_ok = true;   // every family decomposed and within bound
};

// Enumerates every triple family in which no two triples share exactly one
// vertex, exhaustively via backtracking.
IntersectionScan scan_intersection_free_families(int n);

}  // namespace dhg
