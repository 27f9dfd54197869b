#include "dhg/iso.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace dhg {

DirectedHypergraph apply_permutation(const DirectedHypergraph& h, const std::vector<Vertex>& p) {
    const int n = h.vertex_count();
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (Vertex v : p) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("apply_permutation: not a bijection on 0..n-1");
        seen[v] = true;
    }
    std::vector<Edge> out;
    out.reserve(h.edges().size());
    for (const Edge& e : h.edges())
        out.push_back(make_edge(p[e.tail_lo], p[e.tail_hi], p[e.head]));
    return DirectedHypergraph::from_edges(n, std::move(out));
}

namespace {

// One round of invariant refinement: vertices get new colors ordered by
// (old color, sorted multiset of incident-edge role signatures).
std::vector<int> refine_colors(const DirectedHypergraph& h, std::vector<int> colors) {
    const int n = h.vertex_count();
    if (n == 0) return colors;
    auto count_classes = [&](const std::vector<int>& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    };
    int classes = count_classes(colors);
    for (;;) {
        std::vector<std::vector<long long>> sig(n);
        for (Vertex v = 0; v < n; ++v) sig[v].push_back(colors[v]);
        for (const Edge& e : h.edges()) {
            long long ct1 = colors[e.tail_lo], ct2 = colors[e.tail_hi], ch = colors[e.head];
            // head role: unordered tail colors; tail role: partner tail color, head color
            sig[e.head].push_back((0LL << 16) | (std::min(ct1, ct2) << 8) | std::max(ct1, ct2));
            sig[e.tail_lo].push_back((1LL << 16) | (ct2 << 8) | ch);
            sig[e.tail_hi].push_back((1LL << 16) | (ct1 << 8) | ch);
        }
        for (Vertex v = 0; v < n; ++v)
            std::sort(sig[v].begin() + 1, sig[v].end());

        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        std::vector<int> next(n, 0);
        int c = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        int new_classes = count_classes(next);
        colors = std::move(next);
        if (new_classes == classes) return colors;
        classes = new_classes;
    }
}

struct CanonSearch {
    const DirectedHypergraph& h;
    int n;
    std::vector<std::vector<Edge>> incident;  // edges per vertex
    std::vector<bool> isolated;

    std::vector<Vertex> labels;  // position -> original vertex
    std::vector<int> position;   // original vertex -> position (-1 unset)
    std::vector<std::uint8_t> prefix;
    std::vector<std::size_t> prefix_len_at;  // prefix length before each position

    std::vector<std::uint8_t> best;
    std::vector<Vertex> best_labels;
    bool have_best = false;

    explicit CanonSearch(const DirectedHypergraph& graph)
        : h(graph),
          n(graph.vertex_count()),
          incident(n),
          isolated(n, true),
          position(n, -1) {
        for (const Edge& e : h.edges()) {
            for (Vertex v : {e.tail_lo, e.tail_hi, e.head}) {
                incident[v].push_back(e);
                isolated[v] = false;
            }
        }
        prefix.push_back(static_cast<std::uint8_t>(n));
    }

    // -1 while equal to best so far, 0 once strictly smaller; pruned branches
    // (strictly greater) never descend.
    void assign(Vertex v, int& cmp_state) {
        int pos = static_cast<int>(labels.size());
        prefix_len_at.push_back(prefix.size());
        labels.push_back(v);
        position[v] = pos;

        // edges completed by this assignment, in label space
        std::vector<std::array<std::uint8_t, 3>> group;
        for (const Edge& e : incident[v]) {
            int pa = position[e.tail_lo], pb = position[e.tail_hi], pc = position[e.head];
            if (pa < 0 || pb < 0 || pc < 0) continue;
            if (pa > pb) std::swap(pa, pb);
            group.push_back({static_cast<std::uint8_t>(pa), static_cast<std::uint8_t>(pb),
                             static_cast<std::uint8_t>(pc)});
        }
        std::sort(group.begin(), group.end());
        std::size_t start = prefix.size();
        prefix.push_back(static_cast<std::uint8_t>(group.size()));
        for (const auto& g : group) {
            prefix.push_back(g[0]);
            prefix.push_back(g[1]);
            prefix.push_back(g[2]);
        }

        if (have_best && cmp_state < 0) {
            for (std::size_t i = start; i < prefix.size(); ++i) {
                if (prefix[i] != best[i]) {
                    cmp_state = prefix[i] < best[i] ? 0 : 1;
                    break;
                }
            }
        }
    }

    void unassign() {
        Vertex v = labels.back();
        labels.pop_back();
        position[v] = -1;
        prefix.resize(prefix_len_at.back());
        prefix_len_at.pop_back();
    }

    void run(int cmp_state) {
        if (static_cast<int>(labels.size()) == n) {
            if (!have_best || cmp_state == 0) {
                best = prefix;
                best_labels = labels;
                have_best = true;
            }
            return;
        }

        // Refine with the assigned prefix individualized.
        std::vector<int> colors(n, static_cast<int>(labels.size()));
        for (std::size_t i = 0; i < labels.size(); ++i) colors[labels[i]] = static_cast<int>(i);
        colors = refine_colors(h, colors);

        int target = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (position[v] >= 0) continue;
            if (target < 0 || colors[v] < target) target = colors[v];
        }
        std::vector<Vertex> cell;
        for (Vertex v = 0; v < n; ++v)
            if (position[v] < 0 && colors[v] == target) cell.push_back(v);

        bool all_isolated = std::all_of(cell.begin(), cell.end(),
                                        [&](Vertex v) { return isolated[v]; });
        if (all_isolated) {
            // Interchangeable: their order never shows up in the byte string.
            int state = cmp_state;
            for (Vertex v : cell) assign(v, state);
            if (state <= 0) run(state);
            for (std::size_t i = 0; i < cell.size(); ++i) unassign();
            return;
        }

        for (Vertex v : cell) {
            int state = cmp_state;
            assign(v, state);
            if (state <= 0) run(state);
            unassign();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const DirectedHypergraph& h, int limit) {
    if (h.vertex_count() > limit)
        throw std::invalid_argument("canonical_form: vertex count exceeds limit");
    CanonSearch search(h);
    search.run(-1);
    if (!search.have_best) {  // n == 0
        return CanonicalForm{{0}};
    }
    return CanonicalForm{std::move(search.best)};
}

DirectedHypergraph canonical_representative(const DirectedHypergraph& h, int limit) {
    if (h.vertex_count() > limit)
        throw std::invalid_argument("canonical_representative: vertex count exceeds limit");
    CanonSearch search(h);
    search.run(-1);
    if (!search.have_best) return h;
    std::vector<Vertex> perm(h.vertex_count());
    for (int pos = 0; pos < h.vertex_count(); ++pos) perm[search.best_labels[pos]] = pos;
    return apply_permutation(h, perm);
}

std::string canonical_digest_hex(const CanonicalForm& form) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (std::uint8_t b : form.bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

bool are_isomorphic(const DirectedHypergraph& a, const DirectedHypergraph& b, int limit) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

namespace {

struct AutSearch {
    const DirectedHypergraph& h;
    int n;
    std::vector<int> colors;
    std::vector<Vertex> order;   // non-isolated vertices, by (color, id)
    std::vector<Vertex> image;   // original -> mapped (-1 unset)
    std::vector<bool> used;
    std::vector<std::vector<Edge>> incident;
    std::uint64_t count = 0;

    explicit AutSearch(const DirectedHypergraph& graph)
        : h(graph), n(graph.vertex_count()), image(n, -1), used(n, false), incident(n) {
        colors = refine_colors(h, std::vector<int>(n, 0));
        std::vector<bool> isolated(n, true);
        for (const Edge& e : h.edges())
            for (Vertex v : {e.tail_lo, e.tail_hi, e.head}) {
                incident[v].push_back(e);
                isolated[v] = false;
            }
        for (Vertex v = 0; v < n; ++v)
            if (!isolated[v]) order.push_back(v);
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return std::tie(colors[a], a) < std::tie(colors[b], b); });
    }

    bool consistent(Vertex v) const {
        for (const Edge& e : incident[v]) {
            Vertex a = image[e.tail_lo], b = image[e.tail_hi], c = image[e.head];
            if (a < 0 || b < 0 || c < 0) continue;
            if (!h.has_edge(a, b, c)) return false;
        }
        return true;
    }

    void run(std::size_t idx) {
        if (idx == order.size()) {
            ++count;
            return;
        }
        Vertex v = order[idx];
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || colors[w] != colors[v]) continue;
            image[v] = w;
            used[w] = true;
            if (consistent(v)) run(idx + 1);
            used[w] = false;
            image[v] = -1;
        }
    }
};

}  // namespace

std::uint64_t automorphism_group_order(const DirectedHypergraph& h, int limit) {
    const int n = h.vertex_count();
    if (n > limit)
        throw std::invalid_argument("automorphism_group_order: vertex count exceeds limit");
    if (n == 0) return 1;

    AutSearch search(h);
    search.run(0);

    // Isolated vertices permute freely among themselves.
    std::uint64_t isolated = static_cast<std::uint64_t>(n) - search.order.size();
    std::uint64_t factor = 1;
    for (std::uint64_t i = 2; i <= isolated; ++i) factor *= i;
    return search.count * factor;
}

}  // namespace dhg
