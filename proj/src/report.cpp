#include "qcv/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "qcv/errors.hpp"

namespace qcv {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::discrepancy: return "discrepancy";
    case Verdict::fail: return "fail";
  }
  throw std::logic_error("verdict_name: unhandled enumerator");
}

const VerificationCase& find_case(const std::string& id) {
  for (const VerificationCase& c : case_registry())
    if (c.id == id) return c;
  throw UnknownCaseId("no verification case is registered under '" + id + "'");
}

namespace {

RunReport run_case(const VerificationCase& c) {
  RunReport rep;
  rep.id = c.id;
  rep.claim = c.claim;
  rep.verdict = Verdict::fail;
  try {
    c.run(rep);
  } catch (const std::exception& e) {
    rep.verdict = Verdict::fail;
    rep.trail.push_back(std::string("exception: ") + e.what());
  }
  if (rep.trail.empty()) {
    rep.verdict = Verdict::fail;
    rep.trail.push_back("case produced no trail");
  }
  return rep;
}

}  // namespace

std::vector<RunReport> verify(const std::vector<std::string>& ids) {
  std::vector<const VerificationCase*> cases;
  cases.reserve(ids.size());
  for (const std::string& id : ids) cases.push_back(&find_case(id));
  std::vector<RunReport> reports;
  reports.reserve(cases.size());
  for (const VerificationCase* c : cases) reports.push_back(run_case(*c));
  std::sort(reports.begin(), reports.end(),
            [](const RunReport& a, const RunReport& b) { return a.id < b.id; });
  return reports;
}

std::vector<RunReport> verify_all() {
  std::vector<std::string> ids;
  for (const VerificationCase& c : case_registry()) ids.push_back(c.id);
  return verify(ids);
}

bool any_failures(const std::vector<RunReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const RunReport& r) { return r.verdict == Verdict::fail; });
}

void emit_report(const std::vector<RunReport>& reports, ReportFormat format, std::ostream& out) {
  std::map<Verdict, long> tally = {
      {Verdict::pass, 0}, {Verdict::discrepancy, 0}, {Verdict::fail, 0}};
  for (const RunReport& r : reports) ++tally[r.verdict];

  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["summary"] = {{"total", reports.size()},
                    {"pass", tally[Verdict::pass]},
                    {"discrepancy", tally[Verdict::discrepancy]},
                    {"fail", tally[Verdict::fail]}};
    nlohmann::json cases = nlohmann::json::array();
    for (const RunReport& r : reports) {
      nlohmann::json c;
      c["id"] = r.id;
      c["verdict"] = verdict_name(r.verdict);
      c["claim"] = r.claim;
      c["trail"] = r.trail;
      cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    out << j.dump(2) << '\n';
    return;
  }

  out << "verification cases: " << reports.size() << "  pass: " << tally[Verdict::pass]
      << "  discrepancy: " << tally[Verdict::discrepancy] << "  fail: " << tally[Verdict::fail]
      << "\n\n";
  for (const RunReport& r : reports) {
    out << '[' << verdict_name(r.verdict) << "] " << r.id << '\n';
    out << "  claim: " << r.claim << '\n';
    for (const std::string& line : r.trail) out << "    " << line << '\n';
  }
  bool any_disc = false;
  for (const RunReport& r : reports) {
    if (r.verdict != Verdict::discrepancy) continue;
    if (!any_disc) {
      out << "\ntranscription discrepancies (documented findings, not failures):\n";
      any_disc = true;
    }
    out << "  " << r.id << '\n';
  }
}

}  // namespace qcv
