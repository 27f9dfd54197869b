#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

// Data model for 2->1 directed hypergraphs: 3-uniform edges with an
// unordered two-vertex tail set and a single head vertex, written ab->c.
namespace dhg {

using Vertex = int;

// Tail vertices are kept sorted so that (tail_lo, tail_hi, head) is the
// identity of an edge.
struct Edge {
    Vertex tail_lo{};
    Vertex tail_hi{};
    Vertex head{};

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes tail order; throws std::invalid_argument unless a, b, c are
// three distinct non-negative ids.
Edge make_edge(Vertex a, Vertex b, Vertex c);

// The three vertices of an edge in ascending order.
std::array<Vertex, 3> edge_triple(const Edge& e);

enum class Mode { standard, oriented };

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view s);

// Vertex set 0..n-1 plus a duplicate-free edge set. Immutable after
// construction; "mutation" goes through with_edge() or from_edges().
class DirectedHypergraph {
public:
    DirectedHypergraph() = default;
    explicit DirectedHypergraph(int n);

    // Validates ranges, normalizes tail order, sorts, drops duplicates.
    static DirectedHypergraph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(const Edge& e) const;
    bool has_edge(Vertex a, Vertex b, Vertex c) const;

    // Returns a copy with {a,b}->c included (idempotent).
    DirectedHypergraph with_edge(Vertex a, Vertex b, Vertex c) const;

    friend bool operator==(const DirectedHypergraph& lhs, const DirectedHypergraph& rhs) {
        return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
    }

private:
    void reindex();

    int n_ = 0;
    std::vector<Edge> edges_;                   // sorted by (tail_lo, tail_hi, head)
    std::unordered_set<std::uint32_t> index_;   // packed keys for O(1) membership
};

// Undirected link graph of pairs that point at `center`.
struct TailLinkGraph {
    Vertex center{};
    std::vector<std::pair<Vertex, Vertex>> pairs;   // sorted, lo < hi

    int size() const { return static_cast<int>(pairs.size()); }
};

// 2-digraph with arc y->z whenever {center,y}->z is an edge.
struct DirectedLinkGraph {
    Vertex center{};
    std::vector<std::pair<Vertex, Vertex>> arcs;    // sorted

    int size() const { return static_cast<int>(arcs.size()); }
};

// True iff every 3-subset of vertices carries at most one edge.
bool is_oriented(const DirectedHypergraph& h);

TailLinkGraph tail_link_graph(const DirectedHypergraph& h, Vertex x);
DirectedLinkGraph directed_link_graph(const DirectedHypergraph& h, Vertex x);

// Number of edges with tail set {x,y}; x != y required.
int tail_count(const DirectedHypergraph& h, Vertex x, Vertex y);

// --- text edge-list format -------------------------------------------------
//
// Header line:  dhg n=<n> mode=<standard|oriented>
// Edge lines:   <a> <b> > <c>      with a < b
// '#' starts a comment line; blank lines are ignored.
// Writers emit edges sorted lexicographically by (a, b, c).

struct GraphFile {
    DirectedHypergraph graph;
    Mode mode = Mode::standard;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_number);
    int line = 0;
};

GraphFile read_graph_text(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const DirectedHypergraph& h, Mode mode);
void write_graph_file(const std::string& path, const DirectedHypergraph& h, Mode mode);
std::string to_text(const DirectedHypergraph& h, Mode mode);

}  // namespace dhg
