// Command-line workbench for 2->1 directed hypergraphs: builds the extremal
// constructions, checks forbidden-pattern containment, runs exact searches,
// inspects gates, canonicalizes graphs, and replays the verification suite.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dhg/constructions.hpp"
#include "dhg/core.hpp"
#include "dhg/gates.hpp"
#include "dhg/iso.hpp"
#include "dhg/patterns.hpp"
#include "dhg/search.hpp"
#include "dhg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContainsOrFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitInfeasible = 4;

int default_workers() {
    if (const char* env = std::getenv("DHG_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

dhg::PatternName require_pattern(const std::string& name) {
    auto p = dhg::pattern_from_string(name);
    if (!p) throw CLI::ValidationError("--pattern", "unknown pattern '" + name + "'");
    return *p;
}

dhg::Mode require_mode(const std::string& name) {
    auto m = dhg::mode_from_string(name);
    if (!m) throw CLI::ValidationError("--mode", "unknown mode '" + name + "'");
    return *m;
}

// Named labeled variants of one construction family.
struct BuiltVariant {
    std::string name;
    dhg::DirectedHypergraph graph;
};

int extremal_threshold(dhg::PatternName p, dhg::Mode m) {
    using dhg::Mode;
    using dhg::PatternName;
    switch (p) {
        case PatternName::I0: return m == Mode::standard ? 5 : 9;
        case PatternName::I1: return 4;
        case PatternName::H1: return m == Mode::standard ? 8 : 6;
        case PatternName::H2: return 5;
        default: return -1;
    }
}

std::vector<BuiltVariant> build_variants(dhg::PatternName pattern, dhg::Mode mode, int n,
                                         const std::string& variant, bool all_variants) {
    using dhg::Mode;
    using dhg::PatternName;
    std::vector<BuiltVariant> out;

    if (pattern == PatternName::I0 && mode == Mode::standard) {
        out.push_back({"default", dhg::build_i0_standard(n, dhg::cyclic_successor_gatekeeper(n))});
    } else if (pattern == PatternName::I0 && mode == Mode::oriented) {
        auto variants = dhg::i0_oriented_variants(n);
        if (all_variants) {
            for (std::size_t i = 0; i < variants.size(); ++i)
                out.push_back({"v" + std::to_string(i), dhg::build_i0_oriented(n, variants[i])});
        } else {
            std::size_t idx = 0;
            if (!variant.empty()) idx = std::stoul(variant);
            if (idx >= variants.size())
                throw CLI::ValidationError("--variant", "index out of range (have " +
                                                            std::to_string(variants.size()) + ")");
            out.push_back({"v" + std::to_string(idx), dhg::build_i0_oriented(n, variants[idx])});
        }
    } else if (pattern == PatternName::I1 && mode == Mode::standard) {
        out.push_back({"default", dhg::build_i1_standard(n, dhg::default_i1_matchings(n))});
    } else if (pattern == PatternName::I1 && mode == Mode::oriented) {
        out.push_back({"default", dhg::build_i1_oriented(n)});
    } else if (pattern == PatternName::H1 && mode == Mode::oriented) {
        if (all_variants && n % 2 == 1) {
            out.push_back({"matching", dhg::build_h1_oriented(n, dhg::H1OddVariant::matching)});
            out.push_back({"single-head", dhg::build_h1_oriented(n, dhg::H1OddVariant::single_head)});
        } else if (variant == "single-head") {
            out.push_back({"single-head", dhg::build_h1_oriented(n, dhg::H1OddVariant::single_head)});
        } else {
            out.push_back({"matching", dhg::build_h1_oriented(n)});
        }
    } else if (pattern == PatternName::H1 && mode == Mode::standard) {
        out.push_back({"default", dhg::build_h1_standard(n)});
    } else if (pattern == PatternName::H2 && mode == Mode::standard) {
        out.push_back({"default", dhg::build_h2_standard(n, dhg::cyclic_pair_heads(n))});
    } else if (pattern == PatternName::H2 && mode == Mode::oriented) {
        out.push_back({"default", dhg::build_h2_oriented(n)});
    } else {
        throw CLI::ValidationError("--pattern",
                                   "no construction for this pattern (catalog entry only)");
    }
    return out;
}

int cmd_construct(dhg::PatternName pattern, dhg::Mode mode, int n, const std::string& variant,
                  bool all_variants, const std::string& out_path, const std::string& out_dir) {
    int threshold = extremal_threshold(pattern, mode);
    if (threshold > 0 && n < threshold)
        std::cerr << "warning: n=" << n << " is below the smallest size (" << threshold
                  << ") with a verified extremal claim for this family\n";

    auto variants = build_variants(pattern, mode, n, variant, all_variants);

    if (!all_variants) {
        const auto& g = variants.front().graph;
        if (out_path.empty() || out_path == "-") {
            dhg::write_graph_text(std::cout, g, mode);
        } else {
            dhg::write_graph_file(out_path, g, mode);
            std::cout << "wrote " << out_path << " edges=" << g.edge_count() << "\n";
        }
        return kExitOk;
    }

    // one file per isomorphism class plus a manifest
    std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
    std::filesystem::create_directories(dir);
    std::map<std::vector<std::uint8_t>, BuiltVariant> classes;
    for (auto& bv : variants) {
        auto form = dhg::canonical_form(bv.graph);
        classes.emplace(form.bytes, std::move(bv));
    }
    std::string stem = dhg::to_string(pattern) + "_" + dhg::to_string(mode) + "_n" +
                       std::to_string(n);
    std::ofstream manifest(dir / (stem + "_classes.txt"));
    int index = 0;
    for (auto& [bytes, bv] : classes) {
        std::string file = stem + "_class" + std::to_string(index) + ".dhg";
        dhg::write_graph_file((dir / file).string(), bv.graph, mode);
        manifest << "class=" << index << " file=" << file
                 << " canon=" << dhg::canonical_digest_hex(dhg::CanonicalForm{bytes})
                 << " edges=" << bv.graph.edge_count() << " variant=" << bv.name << "\n";
        ++index;
    }
    std::cout << "classes=" << index << " dir=" << dir.string() << " manifest=" << stem
              << "_classes.txt\n";
    return kExitOk;
}

int cmd_check(const std::string& file, const std::string& pattern_name) {
    dhg::PatternName pattern = require_pattern(pattern_name);
    dhg::GraphFile gf = dhg::read_graph_file(file);
    const auto& target = dhg::pattern_graph(pattern);
    auto embedding = dhg::find_embedding(gf.graph, target);

    bool fast = dhg::contains_pattern(gf.graph, pattern);
    if (fast != embedding.has_value())
        throw std::logic_error("containment fast path and embedding search disagree");

    if (!embedding) {
        std::cout << "pattern=" << dhg::to_string(pattern) << " contains=false\n";
        return kExitOk;
    }
    std::cout << "pattern=" << dhg::to_string(pattern) << " contains=true map=";
    for (std::size_t v = 0; v < embedding->size(); ++v)
        std::cout << (v ? "," : "") << v << "->" << (*embedding)[v];
    std::cout << "\n";
    return kExitContainsOrFail;
}

int cmd_search(dhg::PatternName pattern, dhg::Mode mode, int n, const std::string& objective,
               int workers, double timeout, bool force, const std::string& order,
               const std::string& out_dir) {
    dhg::SearchProblem p;
    p.n = n;
    p.pattern = pattern;
    p.mode = mode;
    p.workers = workers;
    if (timeout > 0) p.timeout_seconds = timeout;
    if (order == "reverse") p.order = dhg::ExploreOrder::reverse;
    if (objective == "max") p.objective = dhg::Objective::max_edges;
    else if (objective == "count") p.objective = dhg::Objective::count_labeled_extremal;
    else if (objective == "classes") p.objective = dhg::Objective::enumerate_classes;
    else throw CLI::ValidationError("--objective", "expected max, count, or classes");
    if (force) {
        p.limits.oriented_max_n = n;
        p.limits.standard_max_n = n;
        p.limits.per_head_max_n = std::max(n, p.limits.per_head_max_n);
        p.limits.classes_max_n = n;
    }

    auto out = dhg::extremal_search(p);
    std::cout << "claim=search pattern=" << dhg::to_string(pattern)
              << " mode=" << dhg::to_string(mode) << " n=" << n << " objective=" << objective
              << " max_edges=" << out.max_edges;
    if (out.labeled_count) std::cout << " labeled_count=" << *out.labeled_count;
    if (out.class_count) std::cout << " class_count=" << *out.class_count;
    std::cout << " complete=" << (out.complete ? "true" : "false")
              << " nodes=" << out.nodes_expanded << " time=" << out.wall_seconds << "\n";

    if (!out_dir.empty() && !out.witnesses.empty()) {
        std::filesystem::path dir = out_dir;
        std::filesystem::create_directories(dir);
        std::string stem = "search_" + dhg::to_string(pattern) + "_" + dhg::to_string(mode) +
                           "_n" + std::to_string(n);
        for (std::size_t i = 0; i < out.witnesses.size(); ++i) {
            std::string file = stem + (out.witnesses.size() > 1
                                           ? "_class" + std::to_string(i)
                                           : "_witness") + ".dhg";
            dhg::write_graph_file((dir / file).string(), out.witnesses[i], mode);
            std::cout << "witness=" << i
                      << " canon=" << dhg::canonical_digest_hex(dhg::canonical_form(out.witnesses[i]))
                      << " edges=" << out.witnesses[i].edge_count() << " file=" << file << "\n";
        }
    }
    return out.complete ? kExitOk : kExitInfeasible;
}

int cmd_gate(const std::string& file) {
    dhg::GraphFile gf = dhg::read_graph_file(file);
    dhg::Gate gate;
    try {
        gate = dhg::extract_gate(gf.graph);
    } catch (const std::invalid_argument& e) {
        std::cout << "gate=undefined reason=" << e.what() << "\n";
        return kExitContainsOrFail;
    }

    std::cout << "n=" << gate.n << " arcs=" << gate.arcs.size() << "\n";
    for (dhg::Vertex x = 0; x < gate.n; ++x) {
        std::cout << "g(" << x << ")=";
        if (gate.gatekeeper[x] >= 0) std::cout << gate.gatekeeper[x];
        else std::cout << "-";
        std::cout << "\n";
    }
    auto comps = dhg::gate_components(gate);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        auto audit = dhg::audit_component_bound(gf.graph, c);
        std::cout << "component=" << i << " vertices=";
        for (std::size_t j = 0; j < c.vertices.size(); ++j)
            std::cout << (j ? "," : "") << c.vertices[j];
        std::cout << " cycle=" << c.cycle_length << " branches=";
        if (c.branch_profile.empty()) std::cout << "-";
        for (std::size_t j = 0; j < c.branch_profile.size(); ++j)
            std::cout << (j ? "," : "") << c.branch_profile[j];
        std::cout << " regime=" << dhg::to_string(dhg::classify_regime(c))
                  << " sum_tails=" << audit.tail_degree_sum << " bound=" << audit.bound
                  << " tight=" << (audit.tight ? "true" : "false")
                  << " possible_edges=" << audit.possible_set << "\n";
    }
    return kExitOk;
}

int cmd_canon(const std::string& file) {
    dhg::GraphFile gf = dhg::read_graph_file(file);
    auto rep = dhg::canonical_representative(gf.graph);
    dhg::write_graph_text(std::cout, rep, gf.mode);
    std::cout << "canon=" << dhg::canonical_digest_hex(dhg::canonical_form(gf.graph)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& scope_name, int workers, double h1_budget, int class_max_n,
               bool human) {
    auto scope = dhg::scope_from_string(scope_name);
    if (!scope) throw CLI::ValidationError("--scope", "expected all, i0, i1, h1, or h2");
    dhg::VerifyOptions opts;
    opts.workers = workers;
    opts.h1_n6_budget_seconds = h1_budget;
    opts.i0_class_max_n = class_max_n;

    auto report = dhg::run_verification(*scope, opts);
    for (const auto& e : report.entries) {
        if (human) {
            std::printf("%-28s %-18s expected=%-12s actual=%s (%.2fs)\n", e.id.c_str(),
                        dhg::to_string(e.status).c_str(), e.expected.c_str(), e.actual.c_str(),
                        e.seconds);
        } else {
            std::cout << "claim=" << e.id << " status=" << dhg::to_string(e.status)
                      << " expected=" << e.expected << " actual=" << e.actual
                      << " time=" << e.seconds << " detail=" << e.detail << "\n";
        }
    }
    std::cout << "claims=" << report.entries.size() << " failures=" << report.failures()
              << " skipped=" << report.skipped() << "\n";
    return report.all_passed() ? kExitOk : kExitContainsOrFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2->1 directed hypergraph workbench"};
    app.require_subcommand(1);

    // construct
    std::string c_pattern, c_mode = "standard", c_variant, c_out, c_out_dir;
    int c_n = 0;
    bool c_all = false;
    auto* construct = app.add_subcommand("construct", "emit an extremal construction");
    construct->add_option("--pattern", c_pattern, "i0, i1, h1, or h2")->required();
    construct->add_option("--mode", c_mode, "standard or oriented");
    construct->add_option("--n", c_n, "vertex count")->required();
    construct->add_option("--variant", c_variant, "variant id (i0 oriented: index; h1 odd: matching|single-head)");
    construct->add_flag("--all-variants", c_all, "write one file per isomorphism class");
    construct->add_option("--out", c_out, "output file ('-' = stdout)");
    construct->add_option("--out-dir", c_out_dir, "output directory for --all-variants");

    // check
    std::string k_file, k_pattern;
    auto* check = app.add_subcommand("check", "test a graph file for a forbidden pattern");
    check->add_option("file", k_file, "graph file")->required();
    check->add_option("--pattern", k_pattern, "pattern name")->required();

    // search
    std::string s_pattern, s_mode = "standard", s_objective = "max", s_order = "lex", s_out_dir;
    int s_n = 0, s_workers = default_workers();
    double s_timeout = 0;
    bool s_force = false;
    auto* search = app.add_subcommand("search", "exact extremal search");
    search->add_option("--pattern", s_pattern)->required();
    search->add_option("--mode", s_mode);
    search->add_option("--n", s_n)->required();
    search->add_option("--objective", s_objective, "max, count, or classes");
    search->add_option("--workers", s_workers, "worker threads (env DHG_WORKERS)");
    search->add_option("--timeout", s_timeout, "seconds before reporting incomplete");
    search->add_option("--order", s_order, "lex or reverse exploration order");
    search->add_flag("--force", s_force, "lift the default feasibility limits");
    search->add_option("--out-dir", s_out_dir, "write witness/class files here");

    // gate
    std::string g_file;
    auto* gate = app.add_subcommand("gate", "gatekeeper map, components, and audits");
    gate->add_option("file", g_file)->required();

    // canon
    std::string n_file;
    auto* canon = app.add_subcommand("canon", "canonical edge list and digest");
    canon->add_option("file", n_file)->required();

    // verify
    std::string v_scope = "all";
    int v_workers = default_workers();
    double v_budget = 600;
    int v_class_max = 14;
    bool v_human = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--scope", v_scope, "all, i0, i1, h1, or h2");
    verify->add_option("--workers", v_workers);
    verify->add_option("--h1-budget", v_budget, "seconds for the n=6 branch-and-bound");
    verify->add_option("--max-class-n", v_class_max, "upper n for the class-count sweep");
    verify->add_flag("--human", v_human, "aligned table instead of key=value lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(require_pattern(c_pattern), require_mode(c_mode), c_n, c_variant,
                                 c_all, c_out, c_out_dir);
        if (check->parsed()) return cmd_check(k_file, k_pattern);
        if (search->parsed())
            return cmd_search(require_pattern(s_pattern), require_mode(s_mode), s_n, s_objective,
                              s_workers, s_timeout, s_force, s_order, s_out_dir);
        if (gate->parsed()) return cmd_gate(g_file);
        if (canon->parsed()) return cmd_canon(n_file);
        if (verify->parsed()) return cmd_verify(v_scope, v_workers, v_budget, v_class_max, v_human);
    } catch (const dhg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dhg::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContainsOrFail;
    }
    return kExitUsage;
}
