#pragma once

#include <string>
#include <vector>

namespace k3fix {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Deterministic structural checks across every module: the fixed-point identity on all
/// generated loci, Euler budgets, parity, the triage ledger, fiber propagation and the
/// lattice facts used by the classification.
std::vector<CheckResult> run_invariant_suites();

}  // namespace k3fix
