#pragma once

#include <string>
#include <vector>

namespace superconf::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // measured values, thresholds and recorded conventions
};

inline constexpr int kCriteria = 13;

// Runs one criterion (1..13). Pipeline errors are caught and reported as a failure.
CriterionResult run(int id);
std::vector<CriterionResult> run_all();

// Criteria whose expected values contradict the construction they test; the
// criterion still runs and still reports FAIL. Returns nullptr for the others.
const char* known_conflict(int id);

// "PASS 3 dual-pair claims: ..." / "FAIL ..."
std::string format(const CriterionResult& r);

// Parser golden suite: expressions that must round-trip through print/parse, and
// malformed inputs with the position of the expected error.
const std::vector<std::string>& golden_expressions();

struct MalformedCase {
    std::string text;
    int line;
    int column;
};
const std::vector<MalformedCase>& malformed_inputs();

}  // namespace superconf::acceptance
