#pragma once

#include "mvis/common.hpp"

#include <string>
#include <vector>

namespace mvis::acceptance
{

struct SuiteContext
{
    SearchOptions opt;
    /// Directory holding the golden grids (strong_p12.txt, strong_p8.txt).
    std::string golden_dir;
};

struct SuiteResult
{
    std::string id;
    std::string title;
    bool passed = false;
    std::size_t checks = 0;
    double seconds = 0;
    /// First few failed checks, verbatim.
    std::vector<std::string> failures;
    /// Observations that are reported but not asserted.
    std::vector<std::string> notes;
};

/// "ac1" ... "ac15".
const std::vector<std::string> & suite_ids();
std::string suite_title(const std::string & id);

/// Runs one suite. Unknown ids raise InputError. A BudgetExhausted inside a
/// suite counts as a failure of that suite.
SuiteResult run_suite(const std::string & id, const SuiteContext & ctx);

/// `PASS ac3  trees ... (N checks, T s)` or `FAIL ...: first failure`.
std::string summary_line(const SuiteResult & r);

/// Golden directory used when none is given: $MVIS_GOLDEN_DIR, else the
/// source tree's tests/golden.
std::string default_golden_dir();

}
