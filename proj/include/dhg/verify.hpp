#pragma once

#include <optional>
#include <string>
#include <vector>

// Desk-scale verification: every claim the workbench can check exactly is
// encoded here once, with a stable id, and reported pass/fail/skipped.
namespace dhg {

enum class Scope { all, i0, i1, h1, h2 };

std::optional<Scope> scope_from_string(std::string_view s);
std::string to_string(Scope s);

enum class ClaimStatus { pass, fail, skipped_infeasible };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string id;
    std::string detail;     // what is being checked, human readable
    std::string expected;
    std::string actual;
    ClaimStatus status = ClaimStatus::fail;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<ClaimResult> entries;

    int failures() const;
    int skipped() const;
    bool all_passed() const { return failures() == 0; }
};

struct VerifyOptions {
    double h1_n6_budget_seconds = 600.0;  // branch-and-bound budget at n=6
    int workers = 1;
    int i0_class_max_n = 14;              // upper end of the class-count sweep
    unsigned rng_seed = 0x5eed;
};

VerificationReport run_verification(Scope scope, const VerifyOptions& options = {});

}  // namespace dhg
