// qcv — command-line front end.
//
// Verbs:
//   qcv verify [id ...]                      run verification cases (default: all)
//   qcv solve dpf --preset NAME              solve one divisor-restriction preset
//   qcv solve dpf --list                     list available presets
//   qcv conic-bundle solve --d D --x X --y Y exact solve of the 5x5 system
//   qcv conic-bundle triangle --d D          vertices of the feasible region
//   qcv conic-bundle bounds --d D            genus window endpoints
//   qcv enumerate conic-bundle [...]         filtered lattice sweep
//   qcv table known-pairs                    the reference table of low-degree pairs
//
// Every number printed anywhere is an exact rational rendered as "p" or
// "p/q"; there is no floating point in this binary. Exit status: 0 on
// success (documented transcription discrepancies included), 1 on a
// mathematical contradiction, 2 on usage or I/O errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcv/conic_bundle.hpp"
#include "qcv/dpf_restriction.hpp"
#include "qcv/enumeration.hpp"
#include "qcv/errors.hpp"
#include "qcv/invariants.hpp"
#include "qcv/rational.hpp"
#include "qcv/report.hpp"

namespace {

using nlohmann::json;
using namespace qcv;

json rat(const Rational& r) { return rational_to_string(r); }

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

// --- verify ------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& ids, const std::optional<std::string>& json_path) {
  std::vector<RunReport> reports;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
    reports = verify_all();
  else
    reports = verify(ids);
  emit_report(reports, ReportFormat::text, std::cout);
  if (json_path) {
    std::ofstream out(*json_path);
    if (!out) throw std::runtime_error("cannot open " + *json_path + " for writing");
    emit_report(reports, ReportFormat::json, out);
  }
  return any_failures(reports) ? 1 : 0;
}

// --- solve dpf ---------------------------------------------------------

std::string solutions_to_text(const std::vector<DegreeSolution>& sols) {
  std::string out = "{";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) out += ", ";
    out += "d=" + std::to_string(sols[i].d);
    if (sols[i].a) out += " (a=" + std::to_string(*sols[i].a) + ")";
  }
  return out + "}";
}

int cmd_solve_dpf(const std::string& preset_name, bool list,
                  const std::optional<std::string>& json_path) {
  if (list) {
    std::cout << preset_catalog_fixture_text();
    return 0;
  }
  const FiberPreset& p = find_preset(preset_name);
  const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
  std::cout << p.name << ": " << p.description << '\n';
  std::cout << "  solutions: " << solutions_to_text(sols) << '\n';
  std::cout << "  recorded:  " << solutions_to_text(p.expected_degrees) << '\n';
  const bool match = sols == p.expected_degrees;
  std::cout << (match ? "  agreement: yes" : "  MISMATCH against the recorded list") << '\n';
  if (json_path) {
    json jsols = json::array();
    for (const auto& s : sols) {
      json e = {{"d", s.d}};
      if (s.a) e["a"] = *s.a;
      jsols.push_back(e);
    }
    write_json_file({{"preset", p.name}, {"solutions", jsols}, {"matches_recorded", match}},
                    *json_path);
  }
  return match ? 0 : 1;
}

// --- conic-bundle ------------------------------------------------------

json vertex_json(const std::pair<Rational, Rational>& v) {
  return json::array({rat(v.first), rat(v.second)});
}

int cmd_cb_solve(long d, long x, long y, const std::optional<std::string>& json_path) {
  const SolutionVector v = solve_point(d, x, y);
  std::cout << "d = " << d << ", x = b1^2 = " << x << ", y = DR = " << y << '\n';
  std::cout << "  b1R  = " << rational_to_string(v.b1R) << '\n';
  std::cout << "  R^2  = " << rational_to_string(v.R2) << '\n';
  std::cout << "  Db1  = " << rational_to_string(v.Db1) << '\n';
  std::cout << "  D^2  = " << rational_to_string(v.D2) << '\n';
  std::cout << "  b2   = " << rational_to_string(v.b2) << '\n';
  std::cout << "derived:\n";
  std::cout << "  e2     = " << rational_to_string(v.e2()) << '\n';
  std::cout << "  e1.D   = " << rational_to_string(v.e1_dot_D()) << '\n';
  std::cout << "  m^2    = " << rational_to_string(v.m_sq()) << '\n';
  std::cout << "  m.D    = " << rational_to_string(v.m_dot_D()) << '\n';
  std::cout << "  g - 1  = " << rational_to_string(v.genus_minus_1()) << '\n';
  if (json_path) {
    write_json_file({{"d", d},
                     {"x", x},
                     {"y", y},
                     {"solution",
                      {{"b1R", rat(v.b1R)},
                       {"R2", rat(v.R2)},
                       {"Db1", rat(v.Db1)},
                       {"D2", rat(v.D2)},
                       {"b2", rat(v.b2)}}},
                     {"derived",
                      {{"e2", rat(v.e2())},
                       {"e1_dot_D", rat(v.e1_dot_D())},
                       {"m_sq", rat(v.m_sq())},
                       {"m_dot_D", rat(v.m_dot_D())},
                       {"g_minus_1", rat(v.genus_minus_1())}}}},
                    *json_path);
  }
  return 0;
}

int cmd_cb_triangle(long d, const std::optional<std::string>& json_path) {
  const FeasibleTriangle t = triangle(d);
  std::cout << "d = " << d << '\n';
  std::cout << "  v1 (e2 = 0, y = 0):   (" << rational_to_string(t.v1.first) << ", "
            << rational_to_string(t.v1.second) << ")\n";
  std::cout << "  v2 (e1.D = 0, y = 0): (" << rational_to_string(t.v2.first) << ", "
            << rational_to_string(t.v2.second) << ")\n";
  std::cout << "  v3 (e2 = 0, e1.D = 0): (" << rational_to_string(t.v3.first) << ", "
            << rational_to_string(t.v3.second) << ")\n";
  if (json_path)
    write_json_file(
        {{"d", d}, {"v1", vertex_json(t.v1)}, {"v2", vertex_json(t.v2)}, {"v3", vertex_json(t.v3)}},
        *json_path);
  return 0;
}

int cmd_cb_bounds(long d, const std::optional<std::string>& json_path) {
  const auto [lo, hi] = superbound(d);
  std::cout << "d = " << d << ": " << rational_to_string(lo) << " <= g - 1 <= "
            << rational_to_string(hi) << '\n';
  const auto discrepancies = printed_formula_discrepancies();
  std::cout << "transcription findings on record: " << discrepancies.size() << '\n';
  for (const auto& f : discrepancies)
    std::cout << "  " << f.subject << ": printed " << f.printed << ", normative " << f.normative
              << '\n';
  if (json_path) {
    json jf = json::array();
    for (const auto& f : discrepancies)
      jf.push_back({{"subject", f.subject},
                    {"printed", f.printed},
                    {"normative", f.normative},
                    {"note", f.note}});
    write_json_file({{"d", d}, {"g_minus_1_lo", rat(lo)}, {"g_minus_1_hi", rat(hi)},
                     {"findings", jf}},
                    *json_path);
  }
  return 0;
}

// --- enumerate conic-bundle ---------------------------------------------

// Splits [d_min, d_max] (even endpoints) into at most `jobs` adjacent even
// sub-ranges of near-equal size, preserving merge_reports' adjacency rule.
std::vector<std::pair<long, long>> split_even_range(long d_min, long d_max, int jobs) {
  const long degrees = (d_max - d_min) / 2 + 1;
  const long parts = std::min<long>(jobs, degrees);
  std::vector<std::pair<long, long>> ranges;
  long taken = 0;
  for (long i = 0; i < parts; ++i) {
    const long size = degrees / parts + (i < degrees % parts ? 1 : 0);
    const long lo = d_min + 2 * taken;
    ranges.emplace_back(lo, lo + 2 * (size - 1));
    taken += size;
  }
  return ranges;
}

long long budget_from_env(long long fallback) {
  const char* env = std::getenv("QCV_BUDGET");
  if (!env) return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw std::invalid_argument("QCV_BUDGET must be a positive integer");
  return v;
}

int cmd_enumerate(long d_min, long d_max, const std::vector<std::string>& disabled,
                  const std::optional<std::string>& gross_path, int jobs,
                  const std::optional<std::string>& json_path) {
  FilterConfig cfg;
  cfg.d_min = d_min;
  cfg.d_max = d_max;
  for (const std::string& name : disabled) {
    const auto f = parse_filter_name(name);
    if (!f) throw std::invalid_argument("unknown screen: " + name);
    cfg.filters.erase(*f);
  }
  if (gross_path) {
    cfg.gross_bound = load_gross_bound(*gross_path);
    cfg.enable_gross_bound = true;
  }
  cfg.budget = budget_from_env(cfg.budget);
  cfg.validate();

  SurvivorReport report;
  if (jobs <= 1) {
    report = qcv::enumerate(cfg);
  } else {
    const auto ranges = split_even_range(cfg.d_min, cfg.d_max, jobs);
    std::vector<SurvivorReport> parts(ranges.size());
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
      pool.emplace_back([&, i] {
        try {
          FilterConfig part = cfg;
          part.d_min = ranges[i].first;
          part.d_max = ranges[i].second;
          parts[i] = qcv::enumerate(part);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    report = merge_reports(parts);
  }

  for (const std::string& line : report.trail) std::cout << line << '\n';
  for (const SurvivorRecord& rec : report.survivors)
    for (const Witness& w : rec.witnesses)
      std::cout << "  d=" << rec.d << ": (x, y) = (" << w.x << ", " << w.y
                << ")  chi(O_Y) = " << rational_to_string(w.chi_Y)
                << "  chi(O_S) = " << rational_to_string(w.chi_S)
                << "  g - 1 = " << rational_to_string(w.g_minus_1) << '\n';

  if (json_path) {
    json jscreens = json::array();
    for (const Filter f : report.config.filters) jscreens.push_back(filter_name(f));
    json jconfig = {{"d_min", report.config.d_min},
                    {"d_max", report.config.d_max},
                    {"screens", jscreens},
                    {"budget", report.config.budget}};
    if (report.config.enable_gross_bound && report.config.gross_bound)
      jconfig["gross_bound"] = {
          {"name", report.config.gross_bound->name},
          {"certified_matches_cited_theorem",
           report.config.gross_bound->certified_matches_cited_theorem}};
    else
      jconfig["gross_bound"] = nullptr;

    json jrejected = json::object();
    for (const char* screen :
         {"integrality", "superbound", "gross-bound", "s3-chi", "hodge-Y", "k3-tail"})
      jrejected[screen] = report.total_first_fail(screen);

    json jsurvivors = json::array();
    for (const SurvivorRecord& rec : report.survivors) {
      json jw = json::array();
      for (const Witness& w : rec.witnesses)
        jw.push_back({{"x", w.x},
                      {"y", w.y},
                      {"b1R", rat(w.v.b1R)},
                      {"R2", rat(w.v.R2)},
                      {"Db1", rat(w.v.Db1)},
                      {"D2", rat(w.v.D2)},
                      {"b2", rat(w.v.b2)},
                      {"chi_Y", rat(w.chi_Y)},
                      {"chi_S", rat(w.chi_S)},
                      {"g_minus_1", rat(w.g_minus_1)}});
      jsurvivors.push_back({{"d", rec.d}, {"witnesses", jw}});
    }
    write_json_file({{"config", jconfig},
                     {"in_triangle", report.total_in_triangle()},
                     {"rejected", jrejected},
                     {"survivors", jsurvivors}},
                    *json_path);
  }
  return 0;
}

// --- table ---------------------------------------------------------------

int cmd_table(const std::optional<std::string>& json_path) {
  std::cout << known_pairs_fixture_text();
  if (json_path) {
    json rows = json::array();
    for (const KnownPairRecord& r : known_pairs())
      rows.push_back({{"type", r.type_label},
                      {"n", r.n},
                      {"d", r.d},
                      {"g", r.g},
                      {"q", r.q},
                      {"p_g", r.p_g},
                      {"description", r.description}});
    write_json_file(rows, *json_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification and enumeration for codimension-two subvarieties of quadrics"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification cases (default: all)");
  std::vector<std::string> verify_ids;
  std::optional<std::string> verify_json;
  verify_cmd->add_option("ids", verify_ids, "case ids, or 'all'");
  verify_cmd->add_option("--json", verify_json, "also write a JSON report to this path");

  // solve dpf
  auto* solve_cmd = app.add_subcommand("solve", "divisor-restriction solvers");
  solve_cmd->require_subcommand(1);
  auto* dpf_cmd = solve_cmd->add_subcommand("dpf", "solve a restriction preset for the degree");
  std::string dpf_preset;
  bool dpf_list = false;
  std::optional<std::string> dpf_json;
  auto* preset_opt = dpf_cmd->add_option("--preset", dpf_preset, "preset name");
  dpf_cmd->add_flag("--list", dpf_list, "list presets and exit");
  dpf_cmd->add_option("--json", dpf_json, "write solutions as JSON to this path");

  // conic-bundle
  auto* cb_cmd = app.add_subcommand("conic-bundle", "exact conic-bundle system tools");
  cb_cmd->require_subcommand(1);
  long cb_d = 20, cb_x = 0, cb_y = 0;
  std::optional<std::string> cb_json;
  auto* cb_solve = cb_cmd->add_subcommand("solve", "solve the 5x5 system at (d, x, y)");
  cb_solve->add_option("--d", cb_d, "even degree >= 20")->required();
  cb_solve->add_option("--x", cb_x, "x = b1^2")->required();
  cb_solve->add_option("--y", cb_y, "y = D.R >= 0")->required();
  cb_solve->add_option("--json", cb_json, "write the solution as JSON to this path");
  auto* cb_triangle = cb_cmd->add_subcommand("triangle", "feasible-region vertices at d");
  cb_triangle->add_option("--d", cb_d, "even degree >= 20")->required();
  cb_triangle->add_option("--json", cb_json, "write the vertices as JSON to this path");
  auto* cb_bounds = cb_cmd->add_subcommand("bounds", "genus window endpoints at d");
  cb_bounds->add_option("--d", cb_d, "even degree >= 20")->required();
  cb_bounds->add_option("--json", cb_json, "write the bounds as JSON to this path");

  // enumerate conic-bundle
  auto* enum_cmd = app.add_subcommand("enumerate", "lattice sweeps");
  enum_cmd->require_subcommand(1);
  auto* enum_cb = enum_cmd->add_subcommand("conic-bundle", "filtered sweep over even degrees");
  long enum_d_min = 20, enum_d_max = 276;
  std::vector<std::string> enum_disabled;
  std::optional<std::string> enum_gross, enum_json;
  int enum_jobs = 1;
  enum_cb->add_option("--d-min", enum_d_min, "first even degree (default 20)");
  enum_cb->add_option("--d-max", enum_d_max, "last even degree (default 276)");
  enum_cb->add_option("--disable-filter", enum_disabled, "screen name to disable (repeatable)");
  enum_cb->add_option("--gross-bound", enum_gross, "path to an external genus-bound plugin (JSON)");
  enum_cb->add_option("--jobs", enum_jobs, "worker threads (range is split, then merged)")
      ->check(CLI::PositiveNumber);
  enum_cb->add_option("--json", enum_json, "write the survivor report as JSON to this path");

  // table known-pairs
  auto* table_cmd = app.add_subcommand("table", "reference tables");
  table_cmd->require_subcommand(1);
  auto* table_kp = table_cmd->add_subcommand("known-pairs", "low-degree pair table");
  std::optional<std::string> table_json;
  table_kp->add_option("--json", table_json, "write the table as JSON to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_ids, verify_json);
    if (app.got_subcommand(solve_cmd)) {
      if (!dpf_list && preset_opt->count() == 0)
        throw std::invalid_argument("solve dpf needs --preset NAME or --list");
      return cmd_solve_dpf(dpf_preset, dpf_list, dpf_json);
    }
    if (app.got_subcommand(cb_cmd)) {
      if (cb_cmd->got_subcommand(cb_solve)) return cmd_cb_solve(cb_d, cb_x, cb_y, cb_json);
      if (cb_cmd->got_subcommand(cb_triangle)) return cmd_cb_triangle(cb_d, cb_json);
      return cmd_cb_bounds(cb_d, cb_json);
    }
    if (app.got_subcommand(enum_cmd))
      return cmd_enumerate(enum_d_min, enum_d_max, enum_disabled, enum_gross, enum_jobs,
                           enum_json);
    return cmd_table(table_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
