#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// Registered verification cases: each re-derives one tracked numerical
// claim and reports a verdict with the exact intermediate values. `fail`
// means the mathematics contradicts the recorded claim; `discrepancy`
// means the computation succeeded but a transcribed reference display
// disagrees with the derived value in a documented way (such findings are
// warnings, not failures).

namespace qcv {

enum class Verdict { pass, discrepancy, fail };

std::string verdict_name(Verdict v);

struct RunReport {
  std::string id;
  Verdict verdict = Verdict::fail;
  std::string claim;
  std::vector<std::string> trail;  // never empty after a run
};

struct VerificationCase {
  std::string id;     // doubles as the tracked-claim key in the ledger
  std::string claim;  // the statement being re-derived, in words
  std::function<void(RunReport&)> run;
};

// Canonical list of tracked claims. The registry must carry exactly one
// case per entry; the coverage test diffs the two lists.
const std::vector<std::string>& claim_ledger();

const std::vector<VerificationCase>& case_registry();
const VerificationCase& find_case(const std::string& id);  // throws UnknownCaseId

// Runs the requested cases (every id validated before anything runs) and
// returns reports ordered by case id. An exception escaping a runner is
// converted to a fail verdict carrying the message.
std::vector<RunReport> verify(const std::vector<std::string>& ids);
std::vector<RunReport> verify_all();

enum class ReportFormat { text, json };

// Deterministic serialization; exact values only ("p/q" strings for
// non-integers, never floating point).
void emit_report(const std::vector<RunReport>& reports, ReportFormat format, std::ostream& out);

// Exit-code policy helper: true only for genuine mathematical failures.
bool any_failures(const std::vector<RunReport>& reports);

}  // namespace qcv
