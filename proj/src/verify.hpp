// Named identity registry. Every structural fact the engine is built on is
// re-derived here from scratch and reported under a stable tag, grouped into
// suites. A check that confirms a frozen discrepancy (the quoted form of an
// identity fails while the computed correction holds) reports
// documented-discrepancy; that is the expected state, not a failure.
#pragma once

#include <string>
#include <vector>

namespace qsu2 {

enum class CheckStatus { Pass, Fail, Discrepancy };

const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string tag;
    std::string suite;
    std::string detail;
    CheckStatus status = CheckStatus::Fail;
};

struct VerifyOptions {
    // Subset of all_suites(); empty means every suite.
    std::vector<std::string> suites;
    // Fault injection for exercising the failure path: perturbs one entry of
    // the braiding inside the braid-relation check, which must then fail.
    bool corrupt_sigma = false;
};

const std::vector<std::string>& all_suites();

// Runs the registered checks in declaration order; throws
// std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_checks(const VerifyOptions& opt = {});

// True when no check failed (documented discrepancies are expected).
bool all_ok(const std::vector<CheckResult>& results);

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    int discrepancies = 0;
};

VerifySummary summarize(const std::vector<CheckResult>& results);

} // namespace qsu2
