#include "dhg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dhg/constructions.hpp"
#include "dhg/core.hpp"
#include "dhg/gates.hpp"
#include "dhg/iso.hpp"
#include "dhg/patterns.hpp"
#include "dhg/search.hpp"

namespace dhg {

std::optional<Scope> scope_from_string(std::string_view s) {
    if (s == "all") return Scope::all;
    if (s == "i0") return Scope::i0;
    if (s == "i1") return Scope::i1;
    if (s == "h1") return Scope::h1;
    if (s == "h2") return Scope::h2;
    return std::nullopt;
}

std::string to_string(Scope s) {
    switch (s) {
        case Scope::all: return "all";
        case Scope::i0: return "i0";
        case Scope::i1: return "i1";
        case Scope::h1: return "h1";
        case Scope::h2: return "h2";
    }
    return "?";
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped_infeasible: return "skipped-infeasible";
    }
    return "?";
}

int VerificationReport::failures() const {
    int k = 0;
    for (const auto& e : entries)
        if (e.status == ClaimStatus::fail) ++k;
    return k;
}

int VerificationReport::skipped() const {
    int k = 0;
    for (const auto& e : entries)
        if (e.status == ClaimStatus::skipped_infeasible) ++k;
    return k;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Verifier {
    VerificationReport report;
    const VerifyOptions& opts;

    explicit Verifier(const VerifyOptions& o) : opts(o) {}

    template <typename F>
    void run(const std::string& id, const std::string& detail, const std::string& expected, F f) {
        ClaimResult r;
        r.id = id;
        r.detail = detail;
        r.expected = expected;
        auto begin = Clock::now();
        try {
            // f fills actual and returns pass/fail/skip
            r.status = f(r.actual);
        } catch (const std::exception& e) {
            r.status = ClaimStatus::fail;
            r.actual = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - begin).count();
        report.entries.push_back(std::move(r));
    }

    template <typename F>
    void claim_int(const std::string& id, const std::string& detail, long long expected, F f) {
        run(id, detail, std::to_string(expected), [&](std::string& actual) {
            long long v = f();
            actual = std::to_string(v);
            return v == expected ? ClaimStatus::pass : ClaimStatus::fail;
        });
    }

    template <typename F>
    void claim_true(const std::string& id, const std::string& detail, F f) {
        run(id, detail, "true", [&](std::string& actual) {
            bool ok = f(actual);
            if (actual.empty()) actual = ok ? "true" : "false";
            return ok ? ClaimStatus::pass : ClaimStatus::fail;
        });
    }
};

DirectedHypergraph delete_random_edges(const DirectedHypergraph& h, double keep,
                                       std::mt19937& rng) {
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> kept;
    for (const Edge& e : h.edges())
        if (coin(rng)) kept.push_back(e);
    return DirectedHypergraph::from_edges(h.vertex_count(), kept);
}

GatekeeperFunction random_gatekeeper(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, n - 2);
    GatekeeperFunction g;
    g.f.resize(n);
    for (Vertex x = 0; x < n; ++x) {
        int v = pick(rng);
        g.f[x] = v >= x ? v + 1 : v;
    }
    return g;
}

long long i0_oriented_expected_edges(int n) {
    int extra = n % 3 == 0 ? n / 3 : n % 3 == 1 ? (n - 4) / 3 : (n - 5) / 3;
    return static_cast<long long>(n) * (n - 3) + extra;
}

bool gate_matches_mandate(const DirectedHypergraph& h, int n) {
    Gate g = extract_gate(h);
    auto comps = gate_components(g);
    int triangles = 0, specials = 0;
    for (const auto& c : comps) {
        bool bare_triangle = c.cycle_length == 3 && c.vertices.size() == 3;
        if (bare_triangle) {
            ++triangles;
            continue;
        }
        ++specials;
        if (classify_regime(c) != ComponentRegime::D2) return false;
        int size = static_cast<int>(c.vertices.size());
        if (n % 3 == 1 && size != 4) return false;
        if (n % 3 == 2 && size != 5) return false;
    }
    if (n % 3 == 0) return specials == 0 && triangles == n / 3;
    int expect_triangles = n % 3 == 1 ? (n - 4) / 3 : (n - 5) / 3;
    return specials == 1 && triangles == expect_triangles;
}

SearchProblem basic_problem(int n, PatternName pattern, Mode mode, Objective obj,
                            const VerifyOptions& opts) {
    SearchProblem p;
    p.n = n;
    p.pattern = pattern;
    p.mode = mode;
    p.objective = obj;
    p.workers = opts.workers;
    return p;
}

// ------------------------------------------------------------------ I0 scope

void verify_i0(Verifier& v) {
    for (int n = 5; n <= 12; ++n) {
        v.claim_int("i0.std.edges.n" + std::to_string(n),
                    "edge count of the gatekeeper construction (I0, standard)",
                    static_cast<long long>(n) * (n - 2), [&, n] {
                        auto h = build_i0_standard(n, cyclic_successor_gatekeeper(n));
                        return static_cast<long long>(h.edge_count());
                    });
    }

    v.claim_true("i0.std.free.n5-12",
                 "I0-freeness and star-shaped tail links of the standard construction",
                 [&](std::string&) {
                     std::mt19937 rng(v.opts.rng_seed);
                     for (int n = 5; n <= 12; ++n) {
                         std::vector<GatekeeperFunction> fns{cyclic_successor_gatekeeper(n)};
                         for (int k = 0; k < 3; ++k) fns.push_back(random_gatekeeper(n, rng));
                         for (const auto& f : fns) {
                             auto h = build_i0_standard(n, f);
                             if (contains_pattern(h, PatternName::I0)) return false;
                             if (n < 6) continue;
                             for (Vertex x = 0; x < n; ++x) {
                                 auto t = tail_link_graph(h, x);
                                 if (t.size() != n - 2) return false;
                                 for (const auto& [a, b] : t.pairs)
                                     if (a != f.f[x] && b != f.f[x]) return false;
                             }
                         }
                     }
                     return true;
                 });

    v.claim_int("i0.std.labeled.n6", "labeled extremal count (I0, standard, n=6)", 15625,
                [] { return static_cast<long long>(enumerate_i0_standard_extremal(6)); });
    v.claim_int("i0.std.labeled.n7", "labeled extremal count (I0, standard, n=7)", 279936,
                [] { return static_cast<long long>(enumerate_i0_standard_extremal(7)); });

    for (int n = 9; n <= 14; ++n) {
        v.claim_int("i0.ori.edges.n" + std::to_string(n),
                    "edge count shared by every oriented I0 variant",
                    i0_oriented_expected_edges(n), [n]() -> long long {
                        long long count = -1;
                        for (const auto& variant : i0_oriented_variants(n)) {
                            auto h = build_i0_oriented(n, variant);
                            if (count < 0) count = h.edge_count();
                            if (count != h.edge_count()) return -1;
                        }
                        return count;
                    });
    }

    v.claim_true("i0.ori.valid.n9-14", "orientedness and I0-freeness of every variant",
                 [&](std::string&) {
                     for (int n = 9; n <= 14; ++n)
                         for (const auto& variant : i0_oriented_variants(n)) {
                             auto h = build_i0_oriented(n, variant);
                             if (!is_oriented(h)) return false;
                             if (contains_pattern(h, PatternName::I0)) return false;
                         }
                     return true;
                 });

    v.claim_true("i0.ori.gates.n9-14",
                 "gate of every variant is disjoint triangles plus the mandated component",
                 [&](std::string&) {
                     for (int n = 9; n <= 14; ++n)
                         for (const auto& variant : i0_oriented_variants(n))
                             if (!gate_matches_mandate(build_i0_oriented(n, variant), n))
                                 return false;
                     return true;
                 });

    const long long class_counts[] = {1, 18, 32, 1, 18, 32};
    for (int n = 9; n <= std::min(14, v.opts.i0_class_max_n); ++n) {
        v.claim_int("i0.ori.classes.n" + std::to_string(n),
                    "isomorphism classes among extremal oriented I0 constructions",
                    class_counts[n - 9], [n] {
                        auto reps = enumerate_i0_oriented_classes(n);
                        return static_cast<long long>(reps.size());
                    });
    }

    v.claim_true("i0.gate.audits.random",
                 "component bound audits on randomly thinned I0-free graphs (n >= 8)",
                 [&](std::string& actual) {
                     std::mt19937 rng(v.opts.rng_seed + 1);
                     std::uniform_real_distribution<double> keep(0.3, 1.0);
                     int cases = 0;
                     for (int round = 0; round < 250; ++round) {
                         for (int n = 8; n <= 12; ++n) {
                             DirectedHypergraph base =
                                 (n >= 9 && round % 2 == 0)
                                     ? build_i0_oriented(n, i0_oriented_variants(n).front())
                                     : build_i0_standard(n, random_gatekeeper(n, rng));
                             auto h = delete_random_edges(base, keep(rng), rng);
                             Gate g = extract_gate(h);  // throws if not I0-free
                             for (const auto& c : gate_components(g))
                                 audit_component_bound(h, c);  // throws on violation
                             // tail link dichotomy: empty, triangle, or star
                             for (Vertex x = 0; x < n; ++x) {
                                 auto t = tail_link_graph(h, x);
                                 if (t.pairs.empty()) continue;
                                 std::set<Vertex> support;
                                 for (auto [a, b] : t.pairs) {
                                     support.insert(a);
                                     support.insert(b);
                                 }
                                 bool star = false;
                                 for (Vertex c : support) {
                                     bool all = true;
                                     for (auto [a, b] : t.pairs)
                                         if (a != c && b != c) all = false;
                                     if (all) star = true;
                                 }
                                 bool triangle = support.size() == 3 && t.pairs.size() == 3;
                                 if (!star && !triangle) return false;
                             }
                             ++cases;
                         }
                     }
                     actual = "checked " + std::to_string(cases) + " graphs";
                     return cases >= 1000;
                 });
}

// ------------------------------------------------------------------ I1 scope

void verify_i1(Verifier& v) {
    const struct {
        int n;
        Mode mode;
        long long expect;
    } searches[] = {
        {4, Mode::standard, 4}, {4, Mode::oriented, 4},
        {5, Mode::standard, 10}, {5, Mode::oriented, 10},
    };
    for (const auto& s : searches) {
        std::string id = std::string("i1.search.") +
                         (s.mode == Mode::standard ? "std" : "ori") + ".n" + std::to_string(s.n);
        v.claim_int(id, "extremal edge count by complete search (I1)", s.expect, [&, s] {
            auto out = extremal_search(
                basic_problem(s.n, PatternName::I1, s.mode, Objective::max_edges, v.opts));
            return static_cast<long long>(out.max_edges);
        });
    }

    v.claim_int("i1.labeled.std.n5", "labeled extremal count (I1, standard, n=5)", 243, [&] {
        return static_cast<long long>(count_labeled_extremal(
            basic_problem(5, PatternName::I1, Mode::standard, Objective::max_edges, v.opts)));
    });

    v.claim_true("i1.std.construct.n4-12",
                 "per-head matching construction: exact count and I1-freeness",
                 [&](std::string&) {
                     for (int n = 4; n <= 12; ++n) {
                         auto h = build_i1_standard(n, default_i1_matchings(n));
                         if (h.edge_count() != n * ((n - 1) / 2)) return false;
                         if (contains_pattern(h, PatternName::I1)) return false;
                     }
                     return true;
                 });

    v.claim_true("i1.ori.construct.n4-12",
                 "cyclic oriented construction: exact count, oriented, I1-free",
                 [&](std::string&) {
                     for (int n = 4; n <= 12; ++n) {
                         auto h = build_i1_oriented(n);
                         if (h.edge_count() != n * ((n - 1) / 2)) return false;
                         if (!is_oriented(h)) return false;
                         if (contains_pattern(h, PatternName::I1)) return false;
                     }
                     return true;
                 });
}

// ------------------------------------------------------------------ H1 scope

void verify_h1(Verifier& v) {
    v.run("h1.search.ori.n5", "complete oriented search at n=5 (value reported)", "complete",
          [&](std::string& actual) {
              auto out = extremal_search(
                  basic_problem(5, PatternName::H1, Mode::oriented, Objective::max_edges, v.opts));
              actual = out.complete ? "complete, value=" + std::to_string(out.max_edges)
                                    : "incomplete";
              // the matching construction supplies 6, so anything below means a bug
              return out.complete && out.max_edges >= 6 ? ClaimStatus::pass : ClaimStatus::fail;
          });

    v.run("h1.search.ori.n6", "branch-and-bound optimum at n=6 within the time budget", "12",
          [&](std::string& actual) {
              auto p = basic_problem(6, PatternName::H1, Mode::oriented, Objective::max_edges,
                                     v.opts);
              p.timeout_seconds = v.opts.h1_n6_budget_seconds;
              auto out = extremal_search(p);
              if (!out.complete) {
                  actual = "timeout, best found = " + std::to_string(out.max_edges);
                  return ClaimStatus::skipped_infeasible;
              }
              actual = std::to_string(out.max_edges);
              return out.max_edges == 12 ? ClaimStatus::pass : ClaimStatus::fail;
          });

    v.claim_int("h1.ori.edges.n6", "matching construction size at n=6", 12,
                [] { return static_cast<long long>(build_h1_oriented(6).edge_count()); });

    v.claim_true("h1.ori.construct.n6-12",
                 "matching (and odd single-head) constructions: count, oriented, H1-free",
                 [&](std::string&) {
                     for (int n = 6; n <= 12; ++n) {
                         std::vector<DirectedHypergraph> hs{build_h1_oriented(n)};
                         if (n % 2 == 1) hs.push_back(build_h1_oriented(n, H1OddVariant::single_head));
                         for (const auto& h : hs) {
                             if (h.edge_count() != (n / 2) * (n - 2)) return false;
                             if (!is_oriented(h)) return false;
                             if (contains_pattern(h, PatternName::H1)) return false;
                         }
                     }
                     return true;
                 });

    v.claim_int("h1.std.edges.n8", "two-core construction size at n=8", 33,
                [] { return static_cast<long long>(build_h1_standard(8).edge_count()); });
    v.claim_int("h1.std.edges.n9", "two-core construction size at n=9", 42,
                [] { return static_cast<long long>(build_h1_standard(9).edge_count()); });

    v.claim_true("h1.std.construct.n8-12", "two-core construction: exact count and H1-freeness",
                 [&](std::string&) {
                     for (int n = 8; n <= 12; ++n) {
                         auto h = build_h1_standard(n);
                         if (h.edge_count() != (n + 1) * n / 2 - 3) return false;
                         if (contains_pattern(h, PatternName::H1)) return false;
                     }
                     return true;
                 });

    v.claim_int("h1.std.triples.n8", "occupied triples of the two-core construction at n=8", 21,
                [] { return multiedge_profile(build_h1_standard(8)).triples_with_edge; });
    v.claim_int("h1.std.multi.n8", "multiedge triples of the two-core construction at n=8", 6,
                [] { return multiedge_profile(build_h1_standard(8)).multiedge_triples; });

    v.claim_true("h1.std.sunflower.n8-12",
                 "multiedge triples form a two-core sunflower with n-2 petals",
                 [&](std::string&) {
                     for (int n = 8; n <= 12; ++n) {
                         auto h = build_h1_standard(n);
                         auto triples = multiedge_triples(h);
                         if (static_cast<int>(triples.size()) != n - 2) return false;
                         for (const auto& t : triples)
                             if (t[0] != 0 || t[1] != 1) return false;  // common core {0,1}
                     }
                     return true;
                 });

    v.claim_true("h1.random.multiedge",
                 "multiedge pair rule and saturation closure on randomized H1-free graphs",
                 [&](std::string& actual) {
                     std::mt19937 rng(v.opts.rng_seed + 2);
                     std::uniform_real_distribution<double> keep(0.3, 1.0);
                     int cases = 0, saturations = 0;
                     for (int round = 0; round < 220; ++round) {
                         for (int n = 8; n <= 12; ++n) {
                             DirectedHypergraph base = round % 2 == 0
                                                           ? build_h1_standard(n)
                                                           : build_h1_oriented(n);
                             auto h = delete_random_edges(base, keep(rng), rng);
                             if (!multiedge_pair_check(h)) return false;
                             for (const auto& t : multiedge_triples(h)) {
                                 auto saturated = saturate_multiedge(h, t);  // throws if H1 appears
                                 if (saturated.edge_count() < h.edge_count()) return false;
                                 ++saturations;
                             }
                             ++cases;
                         }
                     }
                     actual = "checked " + std::to_string(cases) + " graphs, " +
                              std::to_string(saturations) + " saturations";
                     return cases >= 1000;
                 });

    const long long undirected_max[] = {4, 5, 8};
    for (int n = 6; n <= 8; ++n) {
        v.claim_int("h1.undirected.max.n" + std::to_string(n),
                    "largest triple family with no two triples sharing exactly one vertex",
                    undirected_max[n - 6], [n] {
                        return static_cast<long long>(scan_intersection_free_families(n).max_edges);
                    });
    }
    v.claim_true("h1.undirected.decomp.n6-8",
                 "every such family splits into K4, K4-minus, and sunflower blocks within bound",
                 [&](std::string& actual) {
                     long long families = 0;
                     for (int n = 6; n <= 8; ++n) {
                         auto scan = scan_intersection_free_families(n);
                         if (!scan.decompositions_ok) return false;
                         families += scan.families;
                     }
                     actual = "checked " + std::to_string(families) + " families";
                     return true;
                 });
}

// ------------------------------------------------------------------ H2 scope

void verify_h2(Verifier& v) {
    const struct {
        int n;
        Mode mode;
        long long expect;
    } searches[] = {
        {4, Mode::standard, 6}, {4, Mode::oriented, 4},
        {5, Mode::standard, 10}, {5, Mode::oriented, 10},
    };
    for (const auto& s : searches) {
        std::string id = std::string("h2.search.") +
                         (s.mode == Mode::standard ? "std" : "ori") + ".n" + std::to_string(s.n);
        v.claim_int(id, "extremal edge count by complete search (H2)", s.expect, [&, s] {
            auto out = extremal_search(
                basic_problem(s.n, PatternName::H2, s.mode, Objective::max_edges, v.opts));
            return static_cast<long long>(out.max_edges);
        });
    }

    v.claim_int("h2.labeled.std.n4", "labeled extremal count (H2, standard, n=4)", 64, [&] {
        return static_cast<long long>(count_labeled_extremal(
            basic_problem(4, PatternName::H2, Mode::standard, Objective::max_edges, v.opts)));
    });
    v.claim_int("h2.labeled.std.n5", "labeled extremal count (H2, standard, n=5)", 59049, [&] {
        return static_cast<long long>(count_labeled_extremal(
            basic_problem(5, PatternName::H2, Mode::standard, Objective::max_edges, v.opts)));
    });

    for (int n : {4, 5}) {
        v.claim_true("h2.count.formulas.n" + std::to_string(n),
                     "enumerated labeled count matches (n-2)^C(n,2) and not C(n,2)^(n-2)",
                     [&, n](std::string& actual) {
                         auto counted = count_labeled_extremal(basic_problem(
                             n, PatternName::H2, Mode::standard, Objective::max_edges, v.opts));
                         const int pairs = n * (n - 1) / 2;
                         auto power = [](long long base, int exp) {
                             long long r = 1;
                             while (exp-- > 0) r *= base;
                             return r;
                         };
                         long long a = power(n - 2, pairs);
                         long long b = power(pairs, n - 2);
                         std::ostringstream ss;
                         ss << "enumerated=" << counted << " (n-2)^C(n,2)=" << a
                            << " C(n,2)^(n-2)=" << b;
                         actual = ss.str();
                         return static_cast<long long>(counted) == a &&
                                static_cast<long long>(counted) != b;
                     });
    }

    v.claim_int("h2.ori.edges.n10", "inductive oriented construction size at n=10", 45,
                [] { return static_cast<long long>(build_h2_oriented(10).edge_count()); });

    v.claim_true("h2.ori.construct.n5-12",
                 "inductive oriented construction: count, oriented, H2-free",
                 [&](std::string&) {
                     for (int n = 5; n <= 12; ++n) {
                         auto h = build_h2_oriented(n);
                         if (h.edge_count() != n * (n - 1) / 2) return false;
                         if (!is_oriented(h)) return false;
                         if (contains_pattern(h, PatternName::H2)) return false;
                     }
                     return true;
                 });

    v.claim_true("h2.std.construct.n5-12",
                 "pair-head construction: count and H2-freeness (default and random heads)",
                 [&](std::string&) {
                     std::mt19937 rng(v.opts.rng_seed + 3);
                     for (int n = 5; n <= 12; ++n) {
                         std::vector<PairHeadAssignment> fs{cyclic_pair_heads(n)};
                         for (int k = 0; k < 3; ++k) {
                             PairHeadAssignment f;
                             f.n = n;
                             f.head_for_pair.resize(n * (n - 1) / 2);
                             std::uniform_int_distribution<int> pick(0, n - 1);
                             for (Vertex a = 0; a < n; ++a)
                                 for (Vertex b = a + 1; b < n; ++b) {
                                     int head = pick(rng);
                                     while (head == a || head == b) head = pick(rng);
                                     f.head_for_pair[pair_index(n, a, b)] = head;
                                 }
                             fs.push_back(std::move(f));
                         }
                         for (const auto& f : fs) {
                             auto h = build_h2_standard(n, f);
                             if (h.edge_count() != n * (n - 1) / 2) return false;
                             if (contains_pattern(h, PatternName::H2)) return false;
                         }
                     }
                     return true;
                 });
}

// ------------------------------------------------------------ cross-cutting

void verify_crosscut(Verifier& v) {
    v.claim_true("cross.sums.random",
                 "link and tail-count sum identities on random graphs",
                 [&](std::string& actual) {
                     std::mt19937 rng(v.opts.rng_seed + 4);
                     std::uniform_int_distribution<int> size(3, 8);
                     std::uniform_real_distribution<double> density(0.02, 0.5);
                     int cases = 10000;
                     for (int i = 0; i < cases; ++i) {
                         int n = size(rng);
                         std::bernoulli_distribution coin(density(rng));
                         std::vector<Edge> edges;
                         for (Vertex a = 0; a < n; ++a)
                             for (Vertex b = a + 1; b < n; ++b)
                                 for (Vertex c = 0; c < n; ++c) {
                                     if (c == a || c == b) continue;
                                     if (coin(rng)) edges.push_back(make_edge(a, b, c));
                                 }
                         auto h = DirectedHypergraph::from_edges(n, edges);
                         long long sum_t = 0, sum_d = 0, sum_pairs = 0;
                         for (Vertex x = 0; x < n; ++x) {
                             sum_t += tail_link_graph(h, x).size();
                             sum_d += directed_link_graph(h, x).size();
                         }
                         for (Vertex a = 0; a < n; ++a)
                             for (Vertex b = a + 1; b < n; ++b) sum_pairs += tail_count(h, a, b);
                         if (sum_t != h.edge_count()) return false;
                         if (sum_d != 2LL * h.edge_count()) return false;
                         if (sum_pairs != h.edge_count()) return false;
                     }
                     actual = "checked " + std::to_string(cases) + " graphs";
                     return true;
                 });

    v.claim_true("cross.canon.random",
                 "canonical form is invariant under random relabelings",
                 [&](std::string& actual) {
                     std::mt19937 rng(v.opts.rng_seed + 5);
                     std::uniform_int_distribution<int> size(2, 8);
                     std::uniform_real_distribution<double> density(0.02, 0.4);
                     int cases = 1000;
                     for (int i = 0; i < cases; ++i) {
                         int n = size(rng);
                         std::bernoulli_distribution coin(density(rng));
                         std::vector<Edge> edges;
                         for (Vertex a = 0; a < n; ++a)
                             for (Vertex b = a + 1; b < n; ++b)
                                 for (Vertex c = 0; c < n; ++c) {
                                     if (c == a || c == b) continue;
                                     if (coin(rng)) edges.push_back(make_edge(a, b, c));
                                 }
                         auto h = DirectedHypergraph::from_edges(n, edges);
                         std::vector<Vertex> p(n);
                         std::iota(p.begin(), p.end(), 0);
                         std::shuffle(p.begin(), p.end(), rng);
                         if (!(canonical_form(h) == canonical_form(apply_permutation(h, p))))
                             return false;
                     }
                     actual = "checked " + std::to_string(cases) + " pairs";
                     return true;
                 });

    v.claim_true("cross.search.orders",
                 "search value, count, and class count agree across exploration orders",
                 [&](std::string& actual) {
                     int instances = 0;
                     for (PatternName p : kAllPatterns)
                         for (Mode mode : {Mode::standard, Mode::oriented})
                             for (int n : {3, 4}) {
                                 SearchProblem a = basic_problem(
                                     n, p, mode, Objective::count_labeled_extremal, v.opts);
                                 a.force_generic = true;
                                 SearchProblem b = a;
                                 b.order = ExploreOrder::reverse;
                                 auto oa = extremal_search(a);
                                 auto ob = extremal_search(b);
                                 if (oa.max_edges != ob.max_edges) return false;
                                 if (oa.labeled_count != ob.labeled_count) return false;
                                 SearchProblem ca = a, cb = b;
                                 ca.objective = Objective::enumerate_classes;
                                 cb.objective = Objective::enumerate_classes;
                                 auto oca = extremal_search(ca);
                                 auto ocb = extremal_search(cb);
                                 if (oca.class_count != ocb.class_count) return false;
                                 ++instances;
                             }
                     actual = "checked " + std::to_string(instances) + " instances";
                     return true;
                 });
}

}  // namespace

VerificationReport run_verification(Scope scope, const VerifyOptions& options) {
    Verifier v(options);
    if (scope == Scope::all || scope == Scope::i0) verify_i0(v);
    if (scope == Scope::all || scope == Scope::i1) verify_i1(v);
    if (scope == Scope::all || scope == Scope::h1) verify_h1(v);
    if (scope == Scope::all || scope == Scope::h2) verify_h2(v);
    if (scope == Scope::all) verify_crosscut(v);
    return v.report;
}

}  // namespace dhg
