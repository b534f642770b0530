#pragma once

#include <string>
#include <vector>

namespace pgd::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance suite. `scratch_dir` receives the CSV output of
/// the determinism check; everything else is in-memory. Desk scale: the
/// whole suite stays well under five minutes single-threaded.
std::vector<CriterionResult> run_all(const std::string& scratch_dir);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace pgd::acceptance
