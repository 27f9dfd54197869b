#include "dhg/gates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace dhg {

std::string to_string(ComponentRegime r) {
    switch (r) {
        case ComponentRegime::D1: return "D1";
        case ComponentRegime::D2: return "D2";
        case ComponentRegime::D3: return "D3";
    }
    return "?";
}

Gate extract_gate(const DirectedHypergraph& h) {
    const int n = h.vertex_count();
    Gate g;
    g.n = n;
    g.gatekeeper.assign(n, -1);

    for (Vertex x = 0; x < n; ++x) {
        TailLinkGraph t = tail_link_graph(h, x);
        if (t.pairs.empty()) continue;

        // Common vertex of all pairs, if any.
        Vertex a = t.pairs[0].first, b = t.pairs[0].second;
        bool a_common = true, b_common = true;
        for (const auto& [p, q] : t.pairs) {
            if (p != a && q != a) a_common = false;
            if (p != b && q != b) b_common = false;
        }
        if (a_common || b_common) {
            // A star; with a single edge both endpoints qualify and the
            // smaller id wins.
            g.gatekeeper[x] = a_common ? a : b;
            continue;
        }

        // No common vertex: either a triangle (allowed, no gatekeeper) or two
        // disjoint pairs exist (not I0-free).
        std::set<Vertex> support;
        for (const auto& [p, q] : t.pairs) {
            support.insert(p);
            support.insert(q);
        }
        if (support.size() == 3 && t.pairs.size() == 3) continue;  // triangle
        throw std::invalid_argument(
            "extract_gate: tail link graph of vertex " + std::to_string(x) +
            " has two disjoint pairs; graph is not I0-free");
    }

    for (Vertex x = 0; x < n; ++x)
        if (g.gatekeeper[x] >= 0) g.arcs.emplace_back(g.gatekeeper[x], x);
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

std::vector<GateComponent> gate_components(const Gate& g) {
    const int n = g.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.arcs) parent[find(u)] = find(v);

    std::map<int, GateComponent> comps;
    std::vector<bool> incident(n, false);
    for (const auto& [u, v] : g.arcs) incident[u] = incident[v] = true;
    for (Vertex v = 0; v < n; ++v)
        if (incident[v]) comps[find(v)].vertices.push_back(v);
    for (const auto& arc : g.arcs) comps[find(arc.first)].arcs.push_back(arc);

    // in-arc per vertex (at most one since g is a partial function)
    std::vector<Vertex> pred(n, -1);
    for (const auto& [u, v] : g.arcs) pred[v] = u;

    std::vector<GateComponent> out;
    for (auto& [root, comp] : comps) {
        std::sort(comp.arcs.begin(), comp.arcs.end());

        // Walk predecessors from any vertex; with in-degree <= 1 this either
        // terminates at an in-degree-0 root (acyclic) or enters the unique cycle.
        std::map<Vertex, int> visit_step;
        Vertex v = comp.vertices.front();
        int step = 0;
        std::vector<Vertex> cycle;
        while (v >= 0 && !visit_step.count(v)) {
            visit_step[v] = step++;
            v = pred[v];
        }
        if (v >= 0) {
            comp.cycle_length = step - visit_step[v];
            Vertex w = v;
            do {
                cycle.push_back(w);
                w = pred[w];
            } while (w != v);
        }

        // Branch sizes: non-cycle vertices grouped by the cycle vertex their
        // predecessor chain reaches (for acyclic components, by the root's
        // child subtrees).
        std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
        std::map<Vertex, int> branch_size;
        for (Vertex u : comp.vertices) {
            if (on_cycle.count(u)) continue;
            Vertex w = u;
            Vertex anchor = -1;
            while (w >= 0) {
                if (on_cycle.count(w)) {
                    anchor = w;
                    break;
                }
                if (pred[w] < 0) {
                    anchor = w;  // acyclic root
                    break;
                }
                Vertex p = pred[w];
                if (comp.cycle_length == 0 && pred[p] < 0) {
                    anchor = w;  // group acyclic branches by the root's children
                    break;
                }
                w = p;
            }
            if (comp.cycle_length == 0) {
                if (pred[u] < 0) continue;  // the root itself is not in a branch
                ++branch_size[anchor];
            } else {
                ++branch_size[anchor];
            }
        }
        for (const auto& [anchor, size] : branch_size) comp.branch_profile.push_back(size);
        std::sort(comp.branch_profile.begin(), comp.branch_profile.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// True when the non-cycle part is a single directed path hanging off one
// cycle vertex.
bool single_path_branch(const GateComponent& c) {
    if (c.cycle_length <= 0) return false;
    int branch_vertices = static_cast<int>(c.vertices.size()) - c.cycle_length;
    if (branch_vertices <= 0) return false;
    std::map<Vertex, int> out_degree;
    for (const auto& [u, v] : c.arcs) ++out_degree[u];
    int twos = 0;
    for (const auto& [v, d] : out_degree) {
        if (d > 2) return false;
        if (d == 2) ++twos;
    }
    // Exactly one fork total: the cycle vertex carrying the path.
    return twos == 1;
}

}  // namespace

ComponentRegime classify_regime(const GateComponent& c) {
    const int m = static_cast<int>(c.vertices.size());
    if (c.cycle_length == 3 && m == 3) return ComponentRegime::D3;
    if (c.cycle_length >= 4 && m == c.cycle_length) return ComponentRegime::D2;
    if (c.cycle_length == 3 && single_path_branch(c)) return ComponentRegime::D2;
    return ComponentRegime::D1;
}

std::vector<Edge> possible_edges(const GateComponent& c, int n) {
    for (Vertex v : c.vertices)
        if (v >= n) throw std::invalid_argument("possible_edges: component vertex out of range");
    std::vector<Edge> out;
    for (const auto& [a, b] : c.arcs)
        for (Vertex v = 0; v < n; ++v)
            if (v != a && v != b) out.push_back(make_edge(a, v, b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ComponentAudit audit_component_bound(const DirectedHypergraph& h, const GateComponent& c) {
    const int n = h.vertex_count();
    const long long m = static_cast<long long>(c.vertices.size());

    ComponentAudit audit;
    for (Vertex x : c.vertices)
        audit.tail_degree_sum += tail_link_graph(h, x).size();

    bool bare_triangle = c.cycle_length == 3 && m == 3;
    audit.bound = m * (n - 3) + (bare_triangle ? 1 : 0);
    audit.tight = audit.tail_degree_sum == audit.bound;
    audit.possible_multiset = static_cast<long long>(c.arcs.size()) * (n - 2);
    audit.possible_set = static_cast<long long>(possible_edges(c, n).size());

    if (n >= 8 && audit.tail_degree_sum > audit.bound)
        throw std::logic_error("audit_component_bound: component tail-degree sum exceeds bound");
    return audit;
}

}  // namespace dhg
