#pragma once

#include <string>
#include <vector>

#include "yq/config.hpp"

namespace yq {

// One verdict of the self-check suite. worst is the largest deviation across
// the criterion's checks, measured as a fraction of its budget, so any value
// >= 1 fails. note names the first failing check (or carries an exception).
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double seconds = 0.0;
    std::string note;
};

// End-to-end property suite over all modules: exact Cartan inversion, field
// relations, abelian R-matrix identities, the loop-algebra functor, the
// tensor-structure twist, and the monodromy checks. quick shrinks sample
// counts and grids so the run fits in interactive time; numerical budgets
// are unchanged, but the slowest cross-checks are skipped.
std::vector<CriterionResult> run_acceptance(const GlobalParams& par, bool quick = false);

}  // namespace yq
