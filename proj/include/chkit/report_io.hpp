#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chkit/verifier.hpp"

namespace chkit {

// JSON object with fields claim, outcome, preconditions_ok, instances,
// violations (list of {tuple, witness, detail}) and, when present,
// layer_instances and precondition_failure.
std::string format_report(const ClaimReport& report);
// JSON array of reports, one per line, with a trailing newline.
std::string format_reports(const std::vector<ClaimReport>& reports);
ClaimReport parse_report(std::string_view text);

const char* outcome_name(ClaimOutcome outcome);

}  // namespace chkit
