#include "dhg/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dhg/iso.hpp"
#include "dhg/patterns.hpp"

namespace dhg {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void postcondition(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("construction postcondition failed: " + what);
}

void check_free(const DirectedHypergraph& h, PatternName p, const std::string& who) {
    postcondition(!contains_pattern(h, p), who + " is not " + to_string(p) + "-free");
}

}  // namespace

// -------------------------------------------------------------- I0, standard

GatekeeperFunction cyclic_successor_gatekeeper(int n) {
    GatekeeperFunction g;
    g.f.resize(n);
    for (Vertex x = 0; x < n; ++x) g.f[x] = (x + 1) % n;
    return g;
}

DirectedHypergraph build_i0_standard(int n, const GatekeeperFunction& f) {
    require(n >= 3, "build_i0_standard: need n >= 3");
    require(static_cast<int>(f.f.size()) == n, "build_i0_standard: gatekeeper size mismatch");
    for (Vertex x = 0; x < n; ++x) {
        require(f.f[x] >= 0 && f.f[x] < n, "build_i0_standard: gatekeeper value out of range");
        require(f.f[x] != x, "build_i0_standard: gatekeeper must avoid its own vertex");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 2));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (y != x && y != f.f[x]) edges.push_back(make_edge(f.f[x], y, x));

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == n * (n - 2), "i0 standard edge count");
    check_free(h, PatternName::I0, "build_i0_standard");
    return h;
}

std::uint64_t enumerate_i0_standard_extremal(int n) {
    require(n >= 6 && n <= 7, "enumerate_i0_standard_extremal: supported for 6 <= n <= 7");

    std::uint64_t total = 1;
    for (Vertex head = 0; head < n; ++head) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (i != head && j != head) pairs.emplace_back(i, j);
        const int p = static_cast<int>(pairs.size());

        // conflict = two pairs with no shared vertex
        std::vector<std::uint32_t> conflict(p, 0);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (i == j) continue;
                auto [a, b] = pairs[i];
                auto [c, d] = pairs[j];
                if (a != c && a != d && b != c && b != d) conflict[i] |= 1u << j;
            }

        int best = 0;
        std::uint64_t count = 0;
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            bool ok = true;
            for (std::uint32_t m = mask; m;) {
                int i = std::countr_zero(m);
                m &= m - 1;
                if (conflict[i] & mask) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int size = std::popcount(mask);
            if (size > best) {
                best = size;
                count = 1;
            } else if (size == best) {
                ++count;
            }
        }
        postcondition(best == n - 2, "per-head maximum tail-link size");
        total *= count;
    }
    return total;
}

// -------------------------------------------------------------- I0, oriented

std::string to_string(I0GateShape s) {
    switch (s) {
        case I0GateShape::triangles: return "triangles";
        case I0GateShape::c4: return "c4";
        case I0GateShape::c3_plus_edge: return "c3-plus-edge";
        case I0GateShape::c5: return "c5";
        case I0GateShape::c3_plus_path: return "c3-plus-path";
    }
    return "?";
}

namespace {

struct ChoiceGroup {
    std::vector<Edge> candidates;  // mutually exclusive edges on one triple
};

struct SpecialComponent {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<ChoiceGroup> groups;
};

SpecialComponent special_component(I0GateShape shape, int n) {
    SpecialComponent sc;
    switch (shape) {
        case I0GateShape::triangles:
            break;
        case I0GateShape::c4: {
            std::array<Vertex, 4> v{n - 4, n - 3, n - 2, n - 1};
            for (int i = 0; i < 4; ++i) sc.arcs.emplace_back(v[i], v[(i + 1) % 4]);
            for (int i = 0; i < 4; ++i) {
                Vertex prev = v[(i + 3) % 4], cur = v[i], next = v[(i + 1) % 4];
                sc.groups.push_back({{make_edge(prev, next, cur), make_edge(cur, prev, next)}});
            }
            break;
        }
        case I0GateShape::c3_plus_edge: {
            Vertex x = n - 4, y = n - 3, z = n - 2, a = n - 1;
            sc.arcs = {{x, y}, {y, z}, {z, x}, {x, a}};
            sc.groups.push_back({{make_edge(x, a, y), make_edge(x, y, a)}});
            sc.groups.push_back({{make_edge(z, a, x), make_edge(x, z, a)}});
            sc.groups.push_back(
                {{make_edge(z, x, y), make_edge(y, z, x), make_edge(x, y, z)}});
            break;
        }
        case I0GateShape::c5: {
            std::array<Vertex, 5> v{n - 5, n - 4, n - 3, n - 2, n - 1};
            for (int i = 0; i < 5; ++i) sc.arcs.emplace_back(v[i], v[(i + 1) % 5]);
            for (int i = 0; i < 5; ++i) {
                Vertex prev = v[(i + 4) % 5], cur = v[i], next = v[(i + 1) % 5];
                sc.groups.push_back({{make_edge(prev, next, cur), make_edge(cur, prev, next)}});
            }
            break;
        }
        case I0GateShape::c3_plus_path: {
            Vertex x = n - 5, y = n - 4, z = n - 3, a = n - 2, b = n - 1;
            sc.arcs = {{x, y}, {y, z}, {z, x}, {x, a}, {a, b}};
            sc.groups.push_back({{make_edge(a, x, y), make_edge(y, x, a)}});
            sc.groups.push_back({{make_edge(a, z, x), make_edge(z, x, a)}});
            sc.groups.push_back(
                {{make_edge(z, x, y), make_edge(y, z, x), make_edge(x, y, z)}});
            sc.groups.push_back({{make_edge(x, a, b), make_edge(b, x, a)}});
            break;
        }
    }
    return sc;
}

int special_size(I0GateShape s) {
    switch (s) {
        case I0GateShape::triangles: return 0;
        case I0GateShape::c4:
        case I0GateShape::c3_plus_edge: return 4;
        case I0GateShape::c5:
        case I0GateShape::c3_plus_path: return 5;
    }
    return 0;
}

}  // namespace

std::vector<I0OrientedVariant> i0_oriented_variants(int n) {
    require(n >= 9, "i0_oriented_variants: need n >= 9");
    std::vector<I0OrientedVariant> out;
    auto enumerate_choices = [&](I0GateShape shape, const std::vector<int>& radix) {
        std::vector<int> cur(radix.size(), 0);
        for (;;) {
            out.push_back({shape, cur});
            int i = static_cast<int>(radix.size()) - 1;
            while (i >= 0 && ++cur[i] == radix[i]) cur[i--] = 0;
            if (i < 0) break;
        }
    };
    switch (n % 3) {
        case 0:
            out.push_back({I0GateShape::triangles, {}});
            break;
        case 1:
            enumerate_choices(I0GateShape::c4, {2, 2, 2, 2});
            enumerate_choices(I0GateShape::c3_plus_edge, {2, 2, 3});
            break;
        default:
            enumerate_choices(I0GateShape::c5, {2, 2, 2, 2, 2});
            enumerate_choices(I0GateShape::c3_plus_path, {2, 2, 3, 2});
            break;
    }
    return out;
}

DirectedHypergraph build_i0_oriented(int n, const I0OrientedVariant& variant) {
    require(n >= 9, "build_i0_oriented: need n >= 9");
    const int residue = n % 3;
    const int special = special_size(variant.shape);
    switch (residue) {
        case 0:
            require(variant.shape == I0GateShape::triangles,
                    "build_i0_oriented: shape/n mismatch (need triangles)");
            break;
        case 1:
            require(variant.shape == I0GateShape::c4 || variant.shape == I0GateShape::c3_plus_edge,
                    "build_i0_oriented: shape/n mismatch (need a 4-vertex component)");
            break;
        default:
            require(variant.shape == I0GateShape::c5 || variant.shape == I0GateShape::c3_plus_path,
                    "build_i0_oriented: shape/n mismatch (need a 5-vertex component)");
            break;
    }

    const int triangle_vertices = n - special;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::set<Edge> edges;

    auto add_arc_edges = [&](Vertex from, Vertex to) {
        arcs.emplace_back(from, to);
        for (Vertex w = 0; w < n; ++w)
            if (w != from && w != to) edges.insert(make_edge(from, w, to));
    };

    // Triangle blocks: keep the lex-least of the three conflicted edges on
    // each block's own triple and drop the other two.
    for (Vertex base = 0; base < triangle_vertices; base += 3) {
        Vertex a = base, b = base + 1, c = base + 2;
        add_arc_edges(a, b);
        add_arc_edges(b, c);
        add_arc_edges(c, a);
        edges.erase(make_edge(a, c, b));
        edges.erase(make_edge(b, c, a));
    }

    SpecialComponent sc = special_component(variant.shape, n);
    require(variant.choices.size() == sc.groups.size(),
            "build_i0_oriented: wrong number of choices for shape");
    for (const auto& [from, to] : sc.arcs) add_arc_edges(from, to);
    for (std::size_t g = 0; g < sc.groups.size(); ++g) {
        const auto& cands = sc.groups[g].candidates;
        int pick = variant.choices[g];
        require(pick >= 0 && pick < static_cast<int>(cands.size()),
                "build_i0_oriented: choice out of range");
        for (const Edge& e : cands) edges.erase(e);
        edges.insert(cands[pick]);
    }

    auto h = DirectedHypergraph::from_edges(n, {edges.begin(), edges.end()});

    const int expected =
        n * (n - 3) + (residue == 0 ? n / 3 : residue == 1 ? (n - 4) / 3 : (n - 5) / 3);
    postcondition(h.edge_count() == expected, "i0 oriented edge count");
    postcondition(is_oriented(h), "i0 oriented construction must be oriented");
    check_free(h, PatternName::I0, "build_i0_oriented");
    return h;
}

std::vector<DirectedHypergraph> enumerate_i0_oriented_classes(int n) {
    std::map<std::vector<std::uint8_t>, DirectedHypergraph> classes;
    for (const auto& variant : i0_oriented_variants(n)) {
        DirectedHypergraph h = build_i0_oriented(n, variant);
        CanonicalForm form = canonical_form(h);
        if (!classes.count(form.bytes)) classes.emplace(form.bytes, canonical_representative(h));
    }
    std::vector<DirectedHypergraph> out;
    out.reserve(classes.size());
    for (auto& [bytes, graph] : classes) out.push_back(std::move(graph));
    return out;
}

// ------------------------------------------------------------------------ I1

std::vector<Matching> default_i1_matchings(int n) {
    std::vector<Matching> out(n);
    for (Vertex x = 0; x < n; ++x) {
        std::vector<Vertex> others;
        for (Vertex v = 0; v < n; ++v)
            if (v != x) others.push_back(v);
        for (std::size_t i = 0; i + 1 < others.size(); i += 2)
            out[x].emplace_back(others[i], others[i + 1]);
    }
    return out;
}

DirectedHypergraph build_i1_standard(int n, const std::vector<Matching>& per_head) {
    require(n >= 3, "build_i1_standard: need n >= 3");
    require(static_cast<int>(per_head.size()) == n, "build_i1_standard: need one matching per vertex");

    const int want = (n - 1) / 2;
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x) {
        const Matching& m = per_head[x];
        require(static_cast<int>(m.size()) == want,
                "build_i1_standard: matching for vertex " + std::to_string(x) +
                    " is not maximum");
        std::set<Vertex> used;
        for (const auto& [a, b] : m) {
            require(a >= 0 && a < n && b >= 0 && b < n && a != b,
                    "build_i1_standard: bad matching pair");
            require(a != x && b != x, "build_i1_standard: matching pair uses its own head");
            require(used.insert(a).second && used.insert(b).second,
                    "build_i1_standard: matching pairs are not disjoint");
            edges.push_back(make_edge(a, b, x));
        }
    }

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == n * want, "i1 standard edge count");
    check_free(h, PatternName::I1, "build_i1_standard");
    return h;
}

DirectedHypergraph build_i1_oriented(int n) {
    require(n >= 4, "build_i1_oriented: need n >= 4");

    std::vector<Edge> edges;
    auto even_part = [&edges](int m) {
        // tails (i+2k, i+2k+1) mod m pointing at i, for k = 1 .. (m-2)/2
        for (Vertex i = 0; i < m; ++i)
            for (int k = 1; k <= (m - 2) / 2; ++k)
                edges.push_back(make_edge((i + 2 * k) % m, (i + 2 * k + 1) % m, i));
    };

    if (n % 2 == 0) {
        even_part(n);
    } else {
        const int m = n - 1;
        const Vertex v = n - 1;
        even_part(m);
        for (Vertex i = 0; i < m; ++i) edges.push_back(make_edge(v, (i + 1) % m, i));
        for (Vertex i = 1; i < m / 2; ++i) edges.push_back(make_edge(i, m - i, v));
        edges.push_back(make_edge(0, m / 2, v));
    }

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == n * ((n - 1) / 2), "i1 oriented edge count");
    postcondition(is_oriented(h), "i1 oriented construction must be oriented");
    check_free(h, PatternName::I1, "build_i1_oriented");
    return h;
}

// ------------------------------------------------------------------------ H1

DirectedHypergraph build_h1_oriented(int n, H1OddVariant variant) {
    require(n >= 4, "build_h1_oriented: need n >= 4");
    require(n % 2 == 1 || variant == H1OddVariant::matching,
            "build_h1_oriented: single-head variant only applies to odd n");

    std::vector<Edge> edges;
    if (variant == H1OddVariant::matching) {
        for (Vertex i = 0; i + 1 < n; i += 2)
            for (Vertex z = 0; z < n; ++z)
                if (z != i && z != i + 1) edges.push_back(make_edge(i, i + 1, z));
    } else {
        const Vertex head = n - 1;
        for (Vertex a = 0; a < head; ++a)
            for (Vertex b = a + 1; b < head; ++b) edges.push_back(make_edge(a, b, head));
    }

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == (n / 2) * (n - 2), "h1 oriented edge count");
    postcondition(is_oriented(h), "h1 oriented construction must be oriented");
    check_free(h, PatternName::H1, "build_h1_oriented");
    return h;
}

DirectedHypergraph build_h1_standard(int n) {
    require(n >= 3, "build_h1_standard: need n >= 3");

    std::vector<Edge> edges;
    for (Vertex p = 2; p < n; ++p) {
        edges.push_back(make_edge(0, 1, p));
        edges.push_back(make_edge(0, p, 1));
        edges.push_back(make_edge(1, p, 0));
    }
    for (Vertex p = 2; p < n; ++p)
        for (Vertex q = p + 1; q < n; ++q) edges.push_back(make_edge(p, q, 0));

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == (n + 1) * n / 2 - 3, "h1 standard edge count");
    check_free(h, PatternName::H1, "build_h1_standard");
    return h;
}

// ------------------------------------------------------------------------ H2

int pair_index(int n, Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    require(a >= 0 && b < n && a != b, "pair_index: bad pair");
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

PairHeadAssignment cyclic_pair_heads(int n) {
    require(n >= 3, "cyclic_pair_heads: need n >= 3");
    PairHeadAssignment f;
    f.n = n;
    f.head_for_pair.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            Vertex head = (b + 1) % n;
            while (head == a || head == b) head = (head + 1) % n;
            f.head_for_pair[pair_index(n, a, b)] = head;
        }
    return f;
}

DirectedHypergraph build_h2_standard(int n, const PairHeadAssignment& f) {
    require(n >= 3, "build_h2_standard: need n >= 3");
    require(f.n == n && static_cast<int>(f.head_for_pair.size()) == n * (n - 1) / 2,
            "build_h2_standard: assignment size mismatch");

    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            Vertex head = f.head_for_pair[pair_index(n, a, b)];
            require(head >= 0 && head < n && head != a && head != b,
                    "build_h2_standard: head must avoid its own pair");
            edges.push_back(make_edge(a, b, head));
        }

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == n * (n - 1) / 2, "h2 standard edge count");
    check_free(h, PatternName::H2, "build_h2_standard");
    return h;
}

DirectedHypergraph build_h2_oriented(int n) {
    require(n >= 5, "build_h2_oriented: need n >= 5");

    std::vector<Edge> edges = {
        make_edge(0, 1, 2), make_edge(1, 3, 0), make_edge(0, 4, 1), make_edge(0, 2, 3),
        make_edge(2, 4, 0), make_edge(0, 3, 4), make_edge(2, 3, 1), make_edge(1, 2, 4),
        make_edge(1, 4, 3), make_edge(3, 4, 2),
    };
    for (int m = 6; m <= n; ++m) {
        // new vertex m-1 joins each older vertex i, pointing at i's cyclic
        // successor among 0..m-2
        for (Vertex i = 0; i < m - 1; ++i)
            edges.push_back(make_edge(m - 1, i, (i + 1) % (m - 1)));
    }

    auto h = DirectedHypergraph::from_edges(n, std::move(edges));
    postcondition(h.edge_count() == n * (n - 1) / 2, "h2 oriented edge count");
    postcondition(is_oriented(h), "h2 oriented construction must be oriented");
    check_free(h, PatternName::H2, "build_h2_oriented");
    return h;
}

}  // namespace dhg
