#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jokerlab {

/* One verification check: a stable id, a terse anchor into the source
 * document (the claim being verified), a status, and deterministic evidence
 * text.  Status is "pass", "fail", or "flagged"; flagged marks the two
 * documented discrepancies in the source (the closing Massey display and the
 * duplicated action-matrix displays), which are reported with computed values
 * but do not fail the run. */
struct VerificationCheck {
    std::string id;
    std::string claim;
    std::string status;
    std::string details;
};

/* A full verification run: artifact version, the seed of every seeded
 * computation, and the checks in fixed execution order. */
struct VerificationReport {
    std::string version;
    std::vector<std::string> seeds;
    std::vector<VerificationCheck> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t flagged = 0;
};

/* All check ids, in execution order. */
std::vector<std::string> verification_check_ids();

/* Runs every check whose id starts with filter ("" runs all).  Check
 * failures are recorded in the report, never thrown; a filter matching no
 * check throws Error listing the valid ids.  Output is deterministic. */
VerificationReport verify_paper(const std::string& filter = "");

/* True when no check failed; flagged checks are expected and do not count. */
bool report_ok(const VerificationReport& report);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace jokerlab
