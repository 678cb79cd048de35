#pragma once

// The acceptance suite: one entry per shipped criterion, each with a runtime
// budget.  Shared by the standalone test binary and the selftest subcommand.

#include <string>
#include <vector>

namespace cdl::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, empty on success
    double ms = 0;
    double budget_ms = 0;  // 0 = no stated budget
};

std::vector<CriterionResult> run_all();
bool all_pass(const std::vector<CriterionResult>& rs);
std::string format_line(const CriterionResult& r);

}  // namespace cdl::accept
