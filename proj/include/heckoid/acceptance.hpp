#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heckoid/textio.hpp"

namespace heckoid {

struct CriterionOutcome {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The full acceptance suite. Budgets and tolerances default to the pinned
// values; overriding them (tiny budgets, zero tolerance) degrades verdicts,
// never crashes.
std::vector<CriterionOutcome> run_acceptance(const RunConfig& config);

bool all_pass(const std::vector<CriterionOutcome>& outcomes);

void print_outcomes(const std::vector<CriterionOutcome>& outcomes, std::ostream& out);

json outcomes_to_json(const std::vector<CriterionOutcome>& outcomes);

}  // namespace heckoid
