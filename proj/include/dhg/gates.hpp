#pragma once

#include <utility>
#include <vector>

#include "dhg/core.hpp"

// Gate machinery for I0-free graphs. Every tail link graph of an I0-free
// graph is empty, a triangle, or a star; where it is a nonempty star the
// common vertex is the gatekeeper g(x), and the gate is the 2-digraph with
// arcs g(x) -> x. In-degree is at most 1 everywhere, so every weak component
// is a directed cycle with in-trees hanging off it (or a single in-tree).
namespace dhg {

struct Gate {
    int n = 0;
    std::vector<Vertex> gatekeeper;                 // per vertex; -1 when undefined
    std::vector<std::pair<Vertex, Vertex>> arcs;    // (g(x), x), sorted
};

struct GateComponent {
    std::vector<Vertex> vertices;                   // ascending
    std::vector<std::pair<Vertex, Vertex>> arcs;    // sorted
    int cycle_length = 0;                           // 0 = acyclic
    std::vector<int> branch_profile;                // nonzero branch sizes, ascending
};

// D3: a bare directed triangle. D2: a bare k-cycle (k >= 4), or a triangle
// whose only decoration is one nonempty directed path. D1: everything else.
enum class ComponentRegime { D1, D2, D3 };

std::string to_string(ComponentRegime r);

// Throws std::invalid_argument when some tail link graph has two disjoint
// pairs (i.e. the input is not I0-free). Tie-break for a single-edge tail
// link graph {a,b}: g(x) = min(a,b).
Gate extract_gate(const DirectedHypergraph& h);

std::vector<GateComponent> gate_components(const Gate& g);

ComponentRegime classify_regime(const GateComponent& c);

// P(C): for every arc a->b, all edges {a,v}->b with v outside {a,b}. Distinct
// arcs never produce the same edge (the head pins down its unique in-arc), so
// the set size equals |arcs| * (n-2).
std::vector<Edge> possible_edges(const GateComponent& c, int n);

struct ComponentAudit {
    long long tail_degree_sum = 0;   // sum of |T_x| over the component
    long long bound = 0;             // m(n-3), plus 1 for a bare triangle
    bool tight = false;
    long long possible_multiset = 0; // |arcs| * (n-2)
    long long possible_set = 0;      // |P(C)| as a set
};

// Asserts tail_degree_sum <= bound when n >= 8; a violation throws
// std::logic_error (it means a bug or a non-I0-free input).
ComponentAudit audit_component_bound(const DirectedHypergraph& h, const GateComponent& c);

}  // namespace dhg
