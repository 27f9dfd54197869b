#include "dhg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "dhg/iso.hpp"

namespace dhg {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::array<Vertex, 3>> all_triples(int n) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

Edge edge_with_head(const std::array<Vertex, 3>& t, int head_idx) {
    Vertex head = t[head_idx];
    Vertex u = t[(head_idx + 1) % 3], v = t[(head_idx + 2) % 3];
    return make_edge(u, v, head);
}

// Static description of one search run.
struct Plan {
    int n = 0;
    Mode mode = Mode::standard;
    PatternName pattern = PatternName::I0;
    bool bound_pruning = true;
    bool root_symmetry = false;   // oriented only: fix the first triple's head choice
    ExploreOrder order = ExploreOrder::lex;

    std::vector<std::array<Vertex, 3>> triples;   // oriented decisions
    std::vector<Edge> slots;                      // standard decisions
    int depth_total = 0;

    std::optional<Clock::time_point> deadline;

    static Plan build(const SearchProblem& p) {
        Plan plan;
        plan.n = p.n;
        plan.mode = p.mode;
        plan.pattern = p.pattern;
        plan.bound_pruning = p.use_bound_pruning;
        plan.order = p.order;
        plan.root_symmetry = p.mode == Mode::oriented;
        plan.triples = all_triples(p.n);
        if (p.order == ExploreOrder::reverse)
            std::reverse(plan.triples.begin(), plan.triples.end());
        if (p.mode == Mode::standard) {
            for (const auto& t : plan.triples)
                for (int i = 0; i < 3; ++i) plan.slots.push_back(edge_with_head(t, i));
            if (p.order == ExploreOrder::reverse) {
                // triple-major order already reversed; flip heads within triples too
                for (std::size_t base = 0; base + 2 < plan.slots.size(); base += 3)
                    std::swap(plan.slots[base], plan.slots[base + 2]);
            }
            plan.depth_total = static_cast<int>(plan.slots.size());
        } else {
            plan.depth_total = static_cast<int>(plan.triples.size());
        }
        if (p.timeout_seconds)
            plan.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                               std::chrono::duration<double>(*p.timeout_seconds));
        return plan;
    }
};

enum class PassKind { find_max, count_at, classes_at, witness_at };

struct Dfs {
    const Plan& plan;
    PassKind kind;
    int target = 0;                           // count_at / classes_at / witness_at
    std::atomic<int>* shared_best = nullptr;  // find_max only

    std::vector<Edge> current;
    std::uint64_t weight = 1;   // root-symmetry multiplier along this path
    std::uint64_t nodes = 0;
    bool timed_out = false;

    int local_best = 0;
    std::vector<Edge> best_edges;
    std::uint64_t count = 0;
    std::map<std::vector<std::uint8_t>, DirectedHypergraph> classes;
    std::optional<std::vector<Edge>> witness;

    Dfs(const Plan& p, PassKind k) : plan(p), kind(k) {}

    bool violates(const Edge& e) const {
        for (const Edge& prev : current)
            if (pair_class_matches(classify_edge_pair(e, prev), plan.pattern)) return true;
        return false;
    }

    void note_best() {
        int cur = static_cast<int>(current.size());
        if (cur > local_best) {
            local_best = cur;
            best_edges = current;
            if (shared_best) {
                int seen = shared_best->load(std::memory_order_relaxed);
                while (seen < cur &&
                       !shared_best->compare_exchange_weak(seen, cur, std::memory_order_relaxed)) {
                }
            }
        }
    }

    int best_known() const {
        if (!shared_best) return local_best;
        return std::max(local_best, shared_best->load(std::memory_order_relaxed));
    }

    void leaf() {
        int cur = static_cast<int>(current.size());
        switch (kind) {
            case PassKind::find_max:
                break;  // note_best already ran
            case PassKind::count_at:
                if (cur == target) count += weight;
                break;
            case PassKind::classes_at:
                if (cur == target) {
                    auto g = DirectedHypergraph::from_edges(plan.n, current);
                    auto form = canonical_form(g);
                    if (!classes.count(form.bytes))
                        classes.emplace(form.bytes, canonical_representative(g));
                }
                break;
            case PassKind::witness_at:
                break;  // handled at node entry
        }
    }

    // Returns false to stop the whole search (witness found or timed out).
    bool rec(int depth) {
        ++nodes;
        if ((nodes & 0xfff) == 0 && plan.deadline && Clock::now() > *plan.deadline) {
            timed_out = true;
            return false;
        }
        const int cur = static_cast<int>(current.size());
        if (kind == PassKind::find_max) note_best();
        if (kind == PassKind::witness_at && cur == target) {
            witness = current;
            return false;
        }
        if (depth == plan.depth_total) {
            leaf();
            return true;
        }
        const int remaining = plan.depth_total - depth;
        if (plan.bound_pruning || kind == PassKind::witness_at) {
            if (kind == PassKind::find_max) {
                if (plan.bound_pruning && cur + remaining <= best_known()) return true;
            } else if (cur + remaining < target) {
                return true;
            }
        }

        if (plan.mode == Mode::oriented) {
            const auto& t = plan.triples[depth];
            bool symmetric_root = plan.root_symmetry && depth == 0;
            auto try_head = [&](int head_idx, std::uint64_t w) -> bool {
                Edge e = edge_with_head(t, head_idx);
                if (violates(e)) return true;
                current.push_back(e);
                std::uint64_t saved = weight;
                weight *= w;
                bool go = rec(depth + 1);
                weight = saved;
                current.pop_back();
                return go;
            };
            if (symmetric_root) {
                // The three head choices on the first triple are equivalent
                // under relabeling; explore one and weight it.
                if (plan.order == ExploreOrder::lex) {
                    if (!try_head(2, 3)) return false;
                    return rec(depth + 1);
                }
                if (!rec(depth + 1)) return false;
                return try_head(2, 3);
            }
            if (plan.order == ExploreOrder::lex) {
                for (int i = 0; i < 3; ++i)
                    if (!try_head(i, 1)) return false;
                return rec(depth + 1);
            }
            if (!rec(depth + 1)) return false;
            for (int i = 2; i >= 0; --i)
                if (!try_head(i, 1)) return false;
            return true;
        }

        // standard mode: one edge slot per depth
        const Edge& e = plan.slots[depth];
        auto include = [&]() -> bool {
            if (violates(e)) return true;
            current.push_back(e);
            bool go = rec(depth + 1);
            current.pop_back();
            return go;
        };
        if (plan.order == ExploreOrder::lex) {
            if (!include()) return false;
            return rec(depth + 1);
        }
        if (!rec(depth + 1)) return false;
        return include();
    }
};

struct FrontierEntry {
    std::vector<Edge> edges;
    std::uint64_t weight = 1;
};

// Enumerates all valid partial assignments at a fixed split depth.
struct FrontierBuilder {
    const Plan& plan;
    int split_depth;
    PassKind kind;
    int target;
    std::vector<FrontierEntry> entries;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::vector<Edge> current;
    std::uint64_t weight = 1;
    int running_best = 0;

    void rec(int depth) {
        ++nodes;
        if ((nodes & 0xfff) == 0 && plan.deadline && Clock::now() > *plan.deadline) {
            timed_out = true;
            return;
        }
        const int cur = static_cast<int>(current.size());
        running_best = std::max(running_best, cur);
        if (depth == split_depth) {
            entries.push_back({current, weight});
            return;
        }
        const int remaining = plan.depth_total - depth;
        if (plan.bound_pruning && kind != PassKind::find_max && cur + remaining < target) return;

        auto violates = [&](const Edge& e) {
            for (const Edge& prev : current)
                if (pair_class_matches(classify_edge_pair(e, prev), plan.pattern)) return true;
            return false;
        };

        if (plan.mode == Mode::oriented) {
            const auto& t = plan.triples[depth];
            bool symmetric_root = plan.root_symmetry && depth == 0;
            auto try_head = [&](int head_idx, std::uint64_t w) {
                if (timed_out) return;
                Edge e = edge_with_head(t, head_idx);
                if (violates(e)) return;
                current.push_back(e);
                std::uint64_t saved = weight;
                weight *= w;
                rec(depth + 1);
                weight = saved;
                current.pop_back();
            };
            if (symmetric_root) {
                if (plan.order == ExploreOrder::lex) {
                    try_head(2, 3);
                    if (!timed_out) rec(depth + 1);
                } else {
                    rec(depth + 1);
                    try_head(2, 3);
                }
                return;
            }
            if (plan.order == ExploreOrder::lex) {
                for (int i = 0; i < 3 && !timed_out; ++i) try_head(i, 1);
                if (!timed_out) rec(depth + 1);
            } else {
                rec(depth + 1);
                for (int i = 2; i >= 0 && !timed_out; --i) try_head(i, 1);
            }
            return;
        }

        const Edge& e = plan.slots[depth];
        auto include = [&]() {
            if (timed_out || violates(e)) return;
            current.push_back(e);
            rec(depth + 1);
            current.pop_back();
        };
        if (plan.order == ExploreOrder::lex) {
            include();
            if (!timed_out) rec(depth + 1);
        } else {
            rec(depth + 1);
            include();
        }
    }
};

struct TaskResult {
    std::uint64_t nodes = 0;
    bool timed_out = false;
    int local_best = 0;
    std::vector<Edge> best_edges;
    std::uint64_t count = 0;
    std::map<std::vector<std::uint8_t>, DirectedHypergraph> classes;
};

TaskResult run_subtree(const Plan& plan, PassKind kind, int target,
                       std::atomic<int>* shared_best, const FrontierEntry& entry,
                       int split_depth) {
    Dfs dfs(plan, kind);
    dfs.target = target;
    dfs.shared_best = shared_best;
    dfs.current = entry.edges;
    dfs.weight = entry.weight;
    if (shared_best) dfs.local_best = shared_best->load(std::memory_order_relaxed);
    dfs.rec(split_depth);
    TaskResult r;
    r.nodes = dfs.nodes;
    r.timed_out = dfs.timed_out;
    r.local_best = dfs.kind == PassKind::find_max ? dfs.local_best : 0;
    r.best_edges = std::move(dfs.best_edges);
    r.count = dfs.count;
    r.classes = std::move(dfs.classes);
    return r;
}

struct GenericResult {
    int max_edges = 0;
    std::vector<Edge> best_edges;
    std::optional<std::vector<Edge>> witness;
    std::uint64_t count = 0;
    std::map<std::vector<std::uint8_t>, DirectedHypergraph> classes;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

int split_depth_for(const Plan& plan) {
    int d = plan.mode == Mode::oriented ? 3 : 6;
    return std::min(d, plan.depth_total);
}

// Phase shared by every objective: frontier split, parallel subtree tasks,
// deterministic merge in frontier order.
void run_pass(const Plan& plan, PassKind kind, int target, int workers, GenericResult& out) {
    FrontierBuilder fb{plan, split_depth_for(plan), kind, target, {}, 0, false, {}, 1, 0};
    fb.rec(0);
    out.nodes += fb.nodes;
    if (fb.timed_out) {
        out.timed_out = true;
        return;
    }
    if (kind == PassKind::find_max && fb.running_best > out.max_edges) {
        // best seen among frontier prefixes; subtree tasks can only improve
        out.max_edges = fb.running_best;
    }

    std::atomic<int> shared_best{kind == PassKind::find_max ? out.max_edges : 0};
    const int t = static_cast<int>(fb.entries.size());
    std::vector<TaskResult> results(t);
    std::atomic<int> next{0};

    auto loop = [&]() {
        for (;;) {
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= t) return;
            results[i] = run_subtree(plan, kind, target,
                                     kind == PassKind::find_max ? &shared_best : nullptr,
                                     fb.entries[i], fb.split_depth);
        }
    };

    int threads = std::max(1, std::min(workers, t));
    if (threads <= 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(loop);
        for (auto& th : pool) th.join();
    }

    for (const TaskResult& r : results) {
        out.nodes += r.nodes;
        out.timed_out = out.timed_out || r.timed_out;
        if (kind == PassKind::find_max && r.local_best > out.max_edges) {
            out.max_edges = r.local_best;
            out.best_edges = r.best_edges;
        }
        if (kind == PassKind::count_at) out.count += r.count;
        if (kind == PassKind::classes_at)
            for (const auto& [bytes, graph] : r.classes) out.classes.emplace(bytes, graph);
    }
}

// Deterministic first witness at the known optimum (serial, stops early).
void run_witness(const Plan& plan, int target, GenericResult& out) {
    Dfs dfs(plan, PassKind::witness_at);
    dfs.target = target;
    dfs.rec(0);
    out.nodes += dfs.nodes;
    out.timed_out = out.timed_out || dfs.timed_out;
    if (dfs.witness) out.witness = std::move(dfs.witness);
}

GenericResult generic_search(const SearchProblem& p) {
    Plan plan = Plan::build(p);
    GenericResult res;

    run_pass(plan, PassKind::find_max, 0, p.workers, res);
    if (res.timed_out) return res;

    switch (p.objective) {
        case Objective::max_edges:
            run_witness(plan, res.max_edges, res);
            break;
        case Objective::count_labeled_extremal:
            run_pass(plan, PassKind::count_at, res.max_edges, p.workers, res);
            if (!res.timed_out) run_witness(plan, res.max_edges, res);
            break;
        case Objective::enumerate_classes:
            run_pass(plan, PassKind::classes_at, res.max_edges, p.workers, res);
            break;
    }
    return res;
}

// ---------------------------------------------------------------- fast path

// Standard-mode I0/I1: tail link constraints are independent per head (both
// patterns share the head vertex), so the optimum is a product over heads of
// admissible tail link graphs.
struct PerHeadResult {
    int max_edges = 0;
    std::uint64_t count = 1;
    std::vector<Edge> witness;
    std::uint64_t nodes = 0;
};

PerHeadResult per_head_search(int n, PatternName pattern) {
    PerHeadResult out;
    for (Vertex head = 0; head < n; ++head) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (i != head && j != head) pairs.emplace_back(i, j);
        const int p = static_cast<int>(pairs.size());

        std::vector<std::uint32_t> conflict(p, 0);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (i == j) continue;
                auto [a, b] = pairs[i];
                auto [c, d] = pairs[j];
                int shared = (a == c) + (a == d) + (b == c) + (b == d);
                bool clash = pattern == PatternName::I0 ? shared == 0 : shared == 1;
                if (clash) conflict[i] |= 1u << j;
            }

        int best = 0;
        std::uint64_t count = 0;
        std::uint32_t first_best = 0;
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            ++out.nodes;
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
                first_best = mask;
            } else if (size == best) {
                ++count;
            }
        }
        out.max_edges += best;
        out.count *= count;
        for (int i = 0; i < p; ++i)
            if (first_best & (1u << i))
                out.witness.push_back(make_edge(pairs[i].first, pairs[i].second, head));
    }
    return out;
}

}  // namespace

SearchOutcome extremal_search(const SearchProblem& problem) {
    const auto start = Clock::now();
    auto finish = [&](SearchOutcome out) {
        out.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return out;
    };

    if (problem.n < 0) throw std::invalid_argument("extremal_search: bad vertex count");

    SearchOutcome out;
    if (problem.n < 3) {  // no edges possible
        out.max_edges = 0;
        DirectedHypergraph empty(problem.n);
        if (problem.objective == Objective::enumerate_classes) {
            out.class_count = 1;
            out.witnesses = {empty};
        } else {
            if (problem.objective == Objective::count_labeled_extremal) out.labeled_count = 1;
            out.witnesses = {empty};
        }
        return finish(out);
    }

    const bool per_head_applies = !problem.force_generic && problem.mode == Mode::standard &&
                                  (problem.pattern == PatternName::I0 ||
                                   problem.pattern == PatternName::I1) &&
                                  problem.objective != Objective::enumerate_classes;

    if (per_head_applies) {
        if (problem.n > problem.limits.per_head_max_n)
            throw InfeasibleError("per-head search limited to n <= " +
                                  std::to_string(problem.limits.per_head_max_n));
        PerHeadResult r = per_head_search(problem.n, problem.pattern);
        out.max_edges = r.max_edges;
        out.witnesses = {DirectedHypergraph::from_edges(problem.n, r.witness)};
        if (problem.objective == Objective::count_labeled_extremal) out.labeled_count = r.count;
        out.nodes_expanded = r.nodes;
        return finish(out);
    }

    if (problem.mode == Mode::oriented && problem.n > problem.limits.oriented_max_n)
        throw InfeasibleError("oriented search limited to n <= " +
                              std::to_string(problem.limits.oriented_max_n));
    if (problem.mode == Mode::standard && problem.n > problem.limits.standard_max_n)
        throw InfeasibleError("standard search limited to n <= " +
                              std::to_string(problem.limits.standard_max_n));
    if (problem.objective == Objective::enumerate_classes &&
        problem.n > problem.limits.classes_max_n)
        throw InfeasibleError("class enumeration limited to n <= " +
                              std::to_string(problem.limits.classes_max_n));

    GenericResult res = generic_search(problem);
    out.nodes_expanded = res.nodes;
    out.max_edges = res.max_edges;
    out.complete = !res.timed_out;

    if (!out.complete) {
        // best-known lower bound and its witness when we have one
        if (static_cast<int>(res.best_edges.size()) == res.max_edges)
            out.witnesses = {DirectedHypergraph::from_edges(problem.n, res.best_edges)};
        return finish(out);
    }

    switch (problem.objective) {
        case Objective::max_edges:
            break;
        case Objective::count_labeled_extremal:
            out.labeled_count = res.count;
            break;
        case Objective::enumerate_classes: {
            out.class_count = static_cast<int>(res.classes.size());
            for (const auto& [bytes, graph] : res.classes) out.witnesses.push_back(graph);
            break;
        }
    }
    if (problem.objective != Objective::enumerate_classes) {
        if (res.witness)
            out.witnesses = {DirectedHypergraph::from_edges(problem.n, *res.witness)};
        else
            out.witnesses = {DirectedHypergraph(problem.n)};
    }
    return finish(out);
}

std::uint64_t count_labeled_extremal(SearchProblem problem) {
    problem.objective = Objective::count_labeled_extremal;
    SearchOutcome out = extremal_search(problem);
    if (!out.complete || !out.labeled_count)
        throw std::runtime_error("count_labeled_extremal: search did not complete");
    return *out.labeled_count;
}

std::vector<DirectedHypergraph> enumerate_extremal_classes(SearchProblem problem) {
    problem.objective = Objective::enumerate_classes;
    SearchOutcome out = extremal_search(problem);
    if (!out.complete)
        throw std::runtime_error("enumerate_extremal_classes: search did not complete");
    return out.witnesses;
}

// ------------------------------------------------- multiedge triple analysis

namespace {

std::uint32_t triple_key(const std::array<Vertex, 3>& t) {
    return (static_cast<std::uint32_t>(t[0]) << 20) | (static_cast<std::uint32_t>(t[1]) << 10) |
           static_cast<std::uint32_t>(t[2]);
}

std::map<std::uint32_t, int> triple_counts(const DirectedHypergraph& h) {
    std::map<std::uint32_t, int> counts;
    for (const Edge& e : h.edges()) ++counts[triple_key(edge_triple(e))];
    return counts;
}

}  // namespace

MultiedgeProfile multiedge_profile(const DirectedHypergraph& h) {
    MultiedgeProfile p;
    for (const auto& [key, count] : triple_counts(h)) {
        ++p.triples_with_edge;
        if (count >= 2) ++p.multiedge_triples;
    }
    return p;
}

std::vector<std::array<Vertex, 3>> multiedge_triples(const DirectedHypergraph& h) {
    std::vector<std::array<Vertex, 3>> out;
    for (const auto& [key, count] : triple_counts(h)) {
        if (count < 2) continue;
        out.push_back({static_cast<Vertex>(key >> 20), static_cast<Vertex>((key >> 10) & 1023),
                       static_cast<Vertex>(key & 1023)});
    }
    return out;
}

DirectedHypergraph saturate_multiedge(const DirectedHypergraph& h,
                                      const std::array<Vertex, 3>& triple) {
    auto t = triple;
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("saturate_multiedge: triple vertices must be distinct");
    int present = 0;
    for (int i = 0; i < 3; ++i)
        if (h.has_edge(edge_with_head(t, i))) ++present;
    if (present < 2)
        throw std::invalid_argument("saturate_multiedge: triple must already hold two edges");
    if (contains_pattern(h, PatternName::H1))
        throw std::invalid_argument("saturate_multiedge: input must be H1-free");

    std::vector<Edge> edges = h.edges();
    for (int i = 0; i < 3; ++i) edges.push_back(edge_with_head(t, i));
    auto out = DirectedHypergraph::from_edges(h.vertex_count(), std::move(edges));
    if (contains_pattern(out, PatternName::H1))
        throw std::logic_error("saturate_multiedge: completion introduced an H1 copy");
    return out;
}

bool multiedge_pair_check(const DirectedHypergraph& h) {
    if (contains_pattern(h, PatternName::H1))
        throw std::invalid_argument("multiedge_pair_check: input must be H1-free");
    auto triples = multiedge_triples(h);
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
            int shared = 0;
            for (Vertex v : triples[i])
                shared += std::count(triples[j].begin(), triples[j].end(), v);
            if (shared == 1) return false;
        }
    return true;
}

bool disjoint_tail_pair_check(const DirectedHypergraph& h) {
    if (contains_pattern(h, PatternName::H1))
        throw std::invalid_argument("disjoint_tail_pair_check: input must be H1-free");
    if (!is_oriented(h))
        throw std::invalid_argument("disjoint_tail_pair_check: input must be oriented");

    std::map<std::pair<Vertex, Vertex>, int> tails;
    for (const Edge& e : h.edges()) ++tails[{e.tail_lo, e.tail_hi}];
    std::vector<std::pair<Vertex, Vertex>> heavy;
    for (const auto& [pair, count] : tails)
        if (count >= 2) heavy.push_back(pair);
    for (std::size_t i = 0; i < heavy.size(); ++i)
        for (std::size_t j = i + 1; j < heavy.size(); ++j) {
            auto [a, b] = heavy[i];
            auto [c, d] = heavy[j];
            if (a == c || a == d || b == c || b == d) return false;
        }
    return true;
}

// ----------------------------------- undirected 3-uniform structure analysis

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::k4: return "k4";
        case BlockKind::k4_minus: return "k4-minus";
        case BlockKind::sunflower: return "sunflower";
    }
    return "?";
}

int intersection_free_bound(int n) {
    switch (n % 4) {
        case 0: return n;
        case 1: return n - 1;
        default: return n - 2;
    }
}

IntersectionStructure check_intersection_structure(const TripleSystem& u) {
    for (const auto& t : u.triples) {
        if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < u.n))
            throw std::invalid_argument("check_intersection_structure: malformed triple");
    }

    IntersectionStructure out;
    out.max_edges_bound = intersection_free_bound(u.n);
    const auto& ts = u.triples;
    auto shared_count = [&](std::size_t i, std::size_t j) {
        int shared = 0;
        for (Vertex v : ts[i])
            shared += std::count(ts[j].begin(), ts[j].end(), v);
        return shared;
    };

    out.valid = true;
    for (std::size_t i = 0; i < ts.size() && out.valid; ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (shared_count(i, j) == 1) {
                out.valid = false;
                break;
            }
    if (!out.valid) return out;

    // components under shared-pair adjacency
    std::vector<int> parent(ts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (shared_count(i, j) == 2) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));

    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ts.size(); ++i) groups[find(static_cast<int>(i))].push_back(i);

    for (const auto& [root, members] : groups) {
        BlockComponent comp;
        comp.edge_count = static_cast<int>(members.size());
        std::set<Vertex> verts;
        for (std::size_t i : members)
            for (Vertex v : ts[i]) verts.insert(v);
        comp.vertices.assign(verts.begin(), verts.end());
        const int v = static_cast<int>(verts.size());
        const int k = comp.edge_count;
        if (v == 4 && k == 4) {
            comp.kind = BlockKind::k4;
        } else if (v == 4 && k == 3) {
            comp.kind = BlockKind::k4_minus;
        } else {
            // must be a sunflower: a pair common to every member
            bool found = false;
            const auto& t0 = ts[members[0]];
            for (int a = 0; a < 3 && !found; ++a)
                for (int b = a + 1; b < 3 && !found; ++b) {
                    Vertex p = t0[a], q = t0[b];
                    bool all = true;
                    for (std::size_t i : members) {
                        const auto& t = ts[i];
                        if (std::count(t.begin(), t.end(), p) == 0 ||
                            std::count(t.begin(), t.end(), q) == 0) {
                            all = false;
                            break;
                        }
                    }
                    if (all) found = true;
                }
            if (!found || v != k + 2)
                throw std::logic_error(
                    "check_intersection_structure: valid component fails to decompose");
            comp.kind = BlockKind::sunflower;
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

IntersectionScan scan_intersection_free_families(int n) {
    if (n < 3 || n > 10)
        throw std::invalid_argument("scan_intersection_free_families: supported for 3 <= n <= 10");

    auto triples = all_triples(n);
    const int t = static_cast<int>(triples.size());
    std::vector<std::vector<std::uint64_t>> conflict(t);
    const int words = (t + 63) / 64;
    for (int i = 0; i < t; ++i) conflict[i].assign(words, 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            int shared = 0;
            for (Vertex v : triples[i])
                shared += std::count(triples[j].begin(), triples[j].end(), v);
            if (shared == 1) conflict[i][j / 64] |= 1ull << (j % 64);
        }

    IntersectionScan scan;
    scan.max_edges = 0;
    std::vector<std::uint64_t> chosen_mask(words, 0);
    std::vector<std::size_t> chosen;
    const int bound = intersection_free_bound(n);

    std::function<void(int)> rec = [&](int start) {
        for (int i = start; i < t; ++i) {
            bool clash = false;
            for (int w = 0; w < words; ++w)
                if (conflict[i][w] & chosen_mask[w]) {
                    clash = true;
                    break;
                }
            if (clash) continue;

            chosen.push_back(i);
            chosen_mask[i / 64] |= 1ull << (i % 64);
            ++scan.families;
            const int size = static_cast<int>(chosen.size());
            scan.max_edges = std::max(scan.max_edges, size);
            if (size > bound) scan.decompositions_ok = false;

            TripleSystem u{n, {}};
            for (std::size_t idx : chosen) u.triples.push_back(triples[idx]);
            try {
                auto structure = check_intersection_structure(u);
                if (!structure.valid) scan.decompositions_ok = false;
            } catch (const std::logic_error&) {
                scan.decompositions_ok = false;
            }

            rec(i + 1);
            chosen_mask[i / 64] &= ~(1ull << (i % 64));
            chosen.pop_back();
        }
    };
    rec(0);
    return scan;
}

}  // namespace dhg
