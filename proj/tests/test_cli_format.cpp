#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "dhg/constructions.hpp"
#include "dhg/core.hpp"
#include "dhg/iso.hpp"
#include "dhg/verify.hpp"
#include "doctest.h"

using namespace dhg;

TEST_SUITE_BEGIN("cli");

TEST_CASE("file round trip through the filesystem") {
    auto dir = std::filesystem::temp_directory_path() / "dhg_format_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "g.dhg").string();

    for (Mode mode : {Mode::standard, Mode::oriented}) {
        auto g = mode == Mode::standard ? build_h1_standard(8) : build_h2_oriented(7);
        write_graph_file(path, g, mode);
        auto back = read_graph_file(path);
        CHECK(back.graph == g);
        CHECK(back.mode == mode);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("writer emits edges sorted lexicographically") {
    auto g = build_h2_oriented(6);
    std::string text = to_text(g, Mode::oriented);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    Edge prev{-1, -1, -1};
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        int a, b, c;
        std::string arrow;
        REQUIRE((ss >> a >> b >> arrow >> c));
        Edge cur{a, b, c};
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("missing file raises a filesystem error, not a parse error") {
    CHECK_THROWS_AS(read_graph_file("/nonexistent/path/x.dhg"), std::runtime_error);
}

TEST_CASE("scope names") {
    CHECK(scope_from_string("all") == Scope::all);
    CHECK(scope_from_string("i0") == Scope::i0);
    CHECK(scope_from_string("h2") == Scope::h2);
    CHECK_FALSE(scope_from_string("x9").has_value());
}

TEST_CASE("verification scope i1 passes and has unique claim ids") {
    VerifyOptions opts;
    auto report = run_verification(Scope::i1, opts);
    CHECK(report.failures() == 0);
    CHECK(report.entries.size() >= 6);
    std::set<std::string> ids;
    for (const auto& e : report.entries) CHECK(ids.insert(e.id).second);
}

TEST_SUITE_END();
