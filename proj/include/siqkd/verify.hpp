#pragma once

#include <functional>
#include <string>
#include <vector>

#include "siqkd/gains.hpp"

namespace siqkd {

struct VerifyCheck {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
    std::string to_string() const;
};

/// Test hook: lets a harness perturb the analytic sector gains to prove the
/// oracle comparison is sensitive. Identity when empty.
using GainPerturbation = std::function<ComponentGain(int sector, ComponentGain)>;

// Oracle-equivalence grid, ideal-limit identity, cat-state Fock checks and
// statistics invariants. Deterministic; no environment dependence.
VerifyReport run_verify(const GainPerturbation& perturb = {});

}  // namespace siqkd
