#include "dhg/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dhg {

std::string to_string(PatternName p) {
    switch (p) {
        case PatternName::I0: return "i0";
        case PatternName::I1: return "i1";
        case PatternName::H1: return "h1";
        case PatternName::H2: return "h2";
        case PatternName::R3: return "r3";
        case PatternName::R4: return "r4";
        case PatternName::E: return "e";
        case PatternName::D2: return "d2";
        case PatternName::Disjoint2: return "disjoint2";
    }
    return "?";
}

std::optional<PatternName> pattern_from_string(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (PatternName p : kAllPatterns)
        if (lower == to_string(p)) return p;
    return std::nullopt;
}

const DirectedHypergraph& pattern_graph(PatternName p) {
    static const auto make = [](int n, std::vector<Edge> es) {
        return DirectedHypergraph::from_edges(n, std::move(es));
    };
    static const DirectedHypergraph i0 = make(5, {make_edge(0, 1, 4), make_edge(2, 3, 4)});
    static const DirectedHypergraph i1 = make(4, {make_edge(0, 1, 2), make_edge(0, 3, 2)});
    static const DirectedHypergraph h1 = make(5, {make_edge(0, 4, 1), make_edge(2, 4, 3)});
    static const DirectedHypergraph h2 = make(4, {make_edge(0, 1, 2), make_edge(0, 1, 3)});
    static const DirectedHypergraph r3 = make(4, {make_edge(0, 1, 2), make_edge(1, 2, 3)});
    static const DirectedHypergraph r4 = make(5, {make_edge(0, 1, 2), make_edge(2, 3, 4)});
    static const DirectedHypergraph e = make(4, {make_edge(0, 1, 2), make_edge(2, 3, 1)});
    static const DirectedHypergraph d2 = make(3, {make_edge(0, 1, 2), make_edge(0, 2, 1)});
    static const DirectedHypergraph dj = make(6, {make_edge(0, 1, 2), make_edge(3, 4, 5)});
    switch (p) {
        case PatternName::I0: return i0;
        case PatternName::I1: return i1;
        case PatternName::H1: return h1;
        case PatternName::H2: return h2;
        case PatternName::R3: return r3;
        case PatternName::R4: return r4;
        case PatternName::E: return e;
        case PatternName::D2: return d2;
        case PatternName::Disjoint2: return dj;
    }
    return i0;
}

std::string to_string(EdgePairClass c) {
    switch (c) {
        case EdgePairClass::I0: return "i0";
        case EdgePairClass::I1: return "i1";
        case EdgePairClass::H1: return "h1";
        case EdgePairClass::H2: return "h2";
        case EdgePairClass::R3: return "r3";
        case EdgePairClass::R4: return "r4";
        case EdgePairClass::E: return "e";
        case EdgePairClass::D2: return "d2";
        case EdgePairClass::Disjoint2: return "disjoint2";
        case EdgePairClass::Identical: return "identical";
    }
    return "?";
}

namespace {

inline bool in_tail(Vertex v, const Edge& e) {
    return v == e.tail_lo || v == e.tail_hi;
}

inline bool in_edge(Vertex v, const Edge& e) {
    return in_tail(v, e) || v == e.head;
}

}  // namespace

EdgePairClass classify_edge_pair(const Edge& e1, const Edge& e2) {
    if (e1 == e2) return EdgePairClass::Identical;

    int shared = 0;
    for (Vertex v : {e1.tail_lo, e1.tail_hi, e1.head})
        if (in_edge(v, e2)) ++shared;

    switch (shared) {
        case 0:
            return EdgePairClass::Disjoint2;
        case 3:
            return EdgePairClass::D2;  // distinct edges on one triple
        case 1: {
            Vertex v = in_edge(e1.tail_lo, e2)   ? e1.tail_lo
                       : in_edge(e1.tail_hi, e2) ? e1.tail_hi
                                                 : e1.head;
            bool head1 = (v == e1.head);
            bool head2 = (v == e2.head);
            if (head1 && head2) return EdgePairClass::I0;
            if (!head1 && !head2) return EdgePairClass::H1;
            return EdgePairClass::R4;
        }
        default: {  // shared == 2
            bool same_tails = e1.tail_lo == e2.tail_lo && e1.tail_hi == e2.tail_hi;
            if (same_tails) return EdgePairClass::H2;
            if (e1.head == e2.head) return EdgePairClass::I1;
            bool h1_in_t2 = in_tail(e1.head, e2);
            bool h2_in_t1 = in_tail(e2.head, e1);
            if (h1_in_t2 && h2_in_t1) return EdgePairClass::E;
            return EdgePairClass::R3;
        }
    }
}

bool pair_class_matches(EdgePairClass c, PatternName p) {
    switch (p) {
        case PatternName::I0: return c == EdgePairClass::I0;
        case PatternName::I1: return c == EdgePairClass::I1;
        case PatternName::H1: return c == EdgePairClass::H1;
        case PatternName::H2: return c == EdgePairClass::H2;
        case PatternName::R3: return c == EdgePairClass::R3;
        case PatternName::R4: return c == EdgePairClass::R4;
        case PatternName::E: return c == EdgePairClass::E;
        case PatternName::D2: return c == EdgePairClass::D2;
        case PatternName::Disjoint2: return c == EdgePairClass::Disjoint2;
    }
    return false;
}

bool contains_pattern(const DirectedHypergraph& h, PatternName p) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (pair_class_matches(classify_edge_pair(es[i], es[j]), p)) return true;
    return false;
}

namespace {

struct EmbeddingSearch {
    const DirectedHypergraph& host;
    const DirectedHypergraph& pattern;
    std::vector<Vertex> map;        // pattern vertex -> host vertex (-1 unset)
    std::vector<bool> used;         // host vertex already taken
    std::vector<Vertex> order;      // pattern vertices, edge-covered first

    EmbeddingSearch(const DirectedHypergraph& h, const DirectedHypergraph& f)
        : host(h), pattern(f), map(f.vertex_count(), -1), used(h.vertex_count(), false) {
        std::vector<bool> covered(f.vertex_count(), false);
        for (const Edge& e : f.edges())
            for (Vertex v : {e.tail_lo, e.tail_hi, e.head}) covered[v] = true;
        for (Vertex v = 0; v < f.vertex_count(); ++v)
            if (covered[v]) order.push_back(v);
        for (Vertex v = 0; v < f.vertex_count(); ++v)
            if (!covered[v]) order.push_back(v);
    }

    bool consistent(Vertex just_mapped) const {
        for (const Edge& e : pattern.edges()) {
            if (!in_edge(just_mapped, e)) continue;
            Vertex a = map[e.tail_lo], b = map[e.tail_hi], c = map[e.head];
            if (a < 0 || b < 0 || c < 0) continue;
            if (!host.has_edge(a, b, c)) return false;
        }
        return true;
    }

    bool run(std::size_t idx) {
        if (idx == order.size()) return true;
        Vertex pv = order[idx];
        for (Vertex hv = 0; hv < host.vertex_count(); ++hv) {
            if (used[hv]) continue;
            map[pv] = hv;
            used[hv] = true;
            if (consistent(pv) && run(idx + 1)) return true;
            used[hv] = false;
            map[pv] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const DirectedHypergraph& h,
                                                  const DirectedHypergraph& f) {
    if (f.vertex_count() > h.vertex_count()) return std::nullopt;
    EmbeddingSearch search(h, f);
    if (!search.run(0)) return std::nullopt;
    return search.map;
}

bool contains_subgraph(const DirectedHypergraph& h, const DirectedHypergraph& f) {
    return find_embedding(h, f).has_value();
}

std::optional<DegeneracyWitness> degeneracy_witness(const DirectedHypergraph& f) {
    const int n = f.vertex_count();
    if (n > 20) throw std::invalid_argument("degeneracy_witness: graph too large for brute force");

    std::vector<int> color(n, 0);  // 0 = t1, 1 = t2, 2 = k
    // Colorings in lexicographic order, vertex 0 most significant.
    const long long total = [&] {
        long long t = 1;
        for (int i = 0; i < n; ++i) t *= 3;
        return t;
    }();
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = n - 1; v >= 0; --v) {
            color[v] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool ok = true;
        for (const Edge& e : f.edges()) {
            int ca = color[e.tail_lo], cb = color[e.tail_hi];
            if (color[e.head] != 2 || ca == cb || ca == 2 || cb == 2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        DegeneracyWitness w;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] == 0) w.t1.push_back(v);
            else if (color[v] == 1) w.t2.push_back(v);
            else w.k.push_back(v);
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace dhg
