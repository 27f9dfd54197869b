#include "dhg/core.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dhg {

namespace {

std::uint32_t pack_key(Vertex a, Vertex b, Vertex c) {
    return (static_cast<std::uint32_t>(a) << 20) |
           (static_cast<std::uint32_t>(b) << 10) |
           static_cast<std::uint32_t>(c);
}

}  // namespace

Edge make_edge(Vertex a, Vertex b, Vertex c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("edge vertices must be non-negative");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("edge vertices must be three distinct ids");
    if (a > b) std::swap(a, b);
    return Edge{a, b, c};
}

std::array<Vertex, 3> edge_triple(const Edge& e) {
    std::array<Vertex, 3> t{e.tail_lo, e.tail_hi, e.head};
    std::sort(t.begin(), t.end());
    return t;
}

std::string to_string(Mode mode) {
    return mode == Mode::standard ? "standard" : "oriented";
}

std::optional<Mode> mode_from_string(std::string_view s) {
    if (s == "standard") return Mode::standard;
    if (s == "oriented") return Mode::oriented;
    return std::nullopt;
}

DirectedHypergraph::DirectedHypergraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

DirectedHypergraph DirectedHypergraph::from_edges(int n, std::vector<Edge> edges) {
    DirectedHypergraph h(n);
    for (Edge& e : edges) {
        e = make_edge(e.tail_lo, e.tail_hi, e.head);
        if (e.tail_hi >= n || e.head >= n)
            throw std::invalid_argument("edge vertex id out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges_ = std::move(edges);
    h.reindex();
    return h;
}

void DirectedHypergraph::reindex() {
    index_.clear();
    index_.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) index_.insert(pack_key(e.tail_lo, e.tail_hi, e.head));
}

bool DirectedHypergraph::has_edge(const Edge& e) const {
    return index_.count(pack_key(e.tail_lo, e.tail_hi, e.head)) != 0;
}

bool DirectedHypergraph::has_edge(Vertex a, Vertex b, Vertex c) const {
    return has_edge(make_edge(a, b, c));
}

DirectedHypergraph DirectedHypergraph::with_edge(Vertex a, Vertex b, Vertex c) const {
    Edge e = make_edge(a, b, c);
    if (e.tail_hi >= n_ || e.head >= n_)
        throw std::invalid_argument("edge vertex id out of range");
    if (has_edge(e)) return *this;
    DirectedHypergraph out = *this;
    out.edges_.insert(std::upper_bound(out.edges_.begin(), out.edges_.end(), e), e);
    out.index_.insert(pack_key(e.tail_lo, e.tail_hi, e.head));
    return out;
}

bool is_oriented(const DirectedHypergraph& h) {
    // Two edges on the same vertex triple have the same sorted triple.
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(h.edges().size() * 2);
    for (const Edge& e : h.edges()) {
        auto t = edge_triple(e);
        if (!seen.insert(pack_key(t[0], t[1], t[2])).second) return false;
    }
    return true;
}

TailLinkGraph tail_link_graph(const DirectedHypergraph& h, Vertex x) {
    if (x < 0 || x >= h.vertex_count())
        throw std::invalid_argument("tail_link_graph: vertex out of range");
    TailLinkGraph t{x, {}};
    for (const Edge& e : h.edges())
        if (e.head == x) t.pairs.emplace_back(e.tail_lo, e.tail_hi);
    std::sort(t.pairs.begin(), t.pairs.end());
    return t;
}

DirectedLinkGraph directed_link_graph(const DirectedHypergraph& h, Vertex x) {
    if (x < 0 || x >= h.vertex_count())
        throw std::invalid_argument("directed_link_graph: vertex out of range");
    DirectedLinkGraph d{x, {}};
    for (const Edge& e : h.edges()) {
        if (e.tail_lo == x) d.arcs.emplace_back(e.tail_hi, e.head);
        else if (e.tail_hi == x) d.arcs.emplace_back(e.tail_lo, e.head);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

int tail_count(const DirectedHypergraph& h, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("tail_count: vertices must differ");
    if (x > y) std::swap(x, y);
    int count = 0;
    for (const Edge& e : h.edges())
        if (e.tail_lo == x && e.tail_hi == y) ++count;
    return count;
}

ParseError::ParseError(const std::string& msg, int line_number)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
      line(line_number) {}

GraphFile read_graph_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Mode mode = Mode::standard;

    // header
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tag, nfield, mfield;
        ss >> tag >> nfield >> mfield;
        if (tag != "dhg" || nfield.rfind("n=", 0) != 0 || mfield.rfind("mode=", 0) != 0)
            throw ParseError("expected header 'dhg n=<n> mode=<standard|oriented>'", line_no);
        try {
            n = std::stoi(nfield.substr(2));
        } catch (const std::exception&) {
            throw ParseError("bad vertex count in header", line_no);
        }
        if (n < 0) throw ParseError("bad vertex count in header", line_no);
        auto m = mode_from_string(mfield.substr(5));
        if (!m) throw ParseError("bad mode in header", line_no);
        mode = *m;
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens after header", line_no);
        break;
    }
    if (n < 0) throw ParseError("missing header", line_no == 0 ? 1 : line_no);

    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        long a, b, c;
        std::string arrow;
        if (!(ss >> a >> b >> arrow >> c) || arrow != ">")
            throw ParseError("expected '<a> <b> > <c>'", line_no);
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens after edge", line_no);
        if (a >= b) throw ParseError("tail vertices must satisfy a < b", line_no);
        if (a < 0 || b >= n || c < 0 || c >= n)
            throw ParseError("vertex id out of range", line_no);
        if (c == a || c == b) throw ParseError("head vertex repeats a tail vertex", line_no);
        Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c));
        for (const Edge& prev : edges)
            if (prev == e) throw ParseError("duplicate edge", line_no);
        edges.push_back(e);
        edge_lines.push_back(line_no);
    }

    if (mode == Mode::oriented) {
        std::unordered_set<std::uint32_t> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto t = edge_triple(edges[i]);
            if (!seen.insert(pack_key(t[0], t[1], t[2])).second)
                throw ParseError("second edge on a triple in an oriented graph", edge_lines[i]);
        }
    }

    return GraphFile{DirectedHypergraph::from_edges(n, std::move(edges)), mode};
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const DirectedHypergraph& h, Mode mode) {
    out << "dhg n=" << h.vertex_count() << " mode=" << to_string(mode) << "\n";
    // edges() is already sorted by (tail_lo, tail_hi, head)
    for (const Edge& e : h.edges())
        out << e.tail_lo << " " << e.tail_hi << " > " << e.head << "\n";
}

void write_graph_file(const std::string& path, const DirectedHypergraph& h, Mode mode) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_graph_text(out, h, mode);
}

std::string to_text(const DirectedHypergraph& h, Mode mode) {
    std::ostringstream ss;
    write_graph_text(ss, h, mode);
    return ss.str();
}

}  // namespace dhg
