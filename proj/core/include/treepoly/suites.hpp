#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace treepoly {

struct SuiteResult {
    std::string suite;
    int max_n = 0;
    std::uint64_t cases = 0;
    bool ok = true;
    std::optional<std::string> counterexample;
    std::string summary;
};

/// crew: gdp_from_csf and the degree-sequence formula against the engines.
/// bridge: verify_bridge on every free tree.
/// recurrence: the non-leaf edge recurrence on every non-leaf edge.
/// closedform: gdp_cat / hdp_cat on every caterpillar signature with |alpha| <= max_n.
/// exhibits: verify_exhibits (max_n ignored).
/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& suite, int max_n);

} // namespace treepoly
