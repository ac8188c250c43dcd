#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qcv/conic_bundle.hpp"
#include "qcv/diophantine_screens.hpp"
#include "qcv/dpf_restriction.hpp"
#include "qcv/enumeration.hpp"
#include "qcv/errors.hpp"
#include "qcv/genus_bounds.hpp"
#include "qcv/invariants.hpp"
#include "qcv/report.hpp"

// The verification-case registry. Every tracked numerical claim gets
// exactly one case; a case re-derives the numbers from scratch through the
// library and writes each intermediate value into the trail. Keep runners
// free of shortcuts: the point is that a failing claim fails loudly here.

namespace qcv {

namespace {

std::string rs(const Rational& r) { return rational_to_string(r); }

std::string sols_str(const std::vector<DegreeSolution>& sols) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) out << ", ";
    if (sols[i].a)
      out << '(' << sols[i].d << ',' << *sols[i].a << ')';
    else
      out << sols[i].d;
  }
  out << '}';
  return out.str();
}

struct Check {
  RunReport& rep;
  bool ok = true;

  void note(std::string line) { rep.trail.push_back(std::move(line)); }
  void expect(bool cond, std::string line) {
    rep.trail.push_back((cond ? "ok: " : "FAILED: ") + std::move(line));
    ok = ok && cond;
  }
  // Verdict for a case whose computations all succeeded but which records a
  // documented disagreement with a transcribed display.
  void finish(bool documented_discrepancy = false) {
    rep.verdict = !ok ? Verdict::fail
                      : (documented_discrepancy ? Verdict::discrepancy : Verdict::pass);
  }
};

// Re-solves a preset and compares with its recorded degree list.
void run_preset_case(RunReport& rep, const std::string& preset_name) {
  Check c{rep};
  const FiberPreset& p = find_preset(preset_name);
  c.note("preset: " + p.name + " — " + p.description);
  if (p.forced_a) c.note("forced parameter a = " + std::to_string(*p.forced_a));
  const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
  c.note("solved degrees: " + sols_str(sols));
  c.expect(sols == p.expected_degrees, "matches recorded list " + sols_str(p.expected_degrees));
  c.finish();
}

// chi(O_X) of the reference threefolds on the 5-dimensional quadric,
// derived in docs/derivations.md (complete intersections by the Koszul
// resolution, bundles and covers by push-forward).
const std::map<std::string, long>& reference_chi_OX() {
  static const std::map<std::string, long> chi = {{"A", 1}, {"B", 1}, {"D", 1}, {"F", 1},
                                                  {"G", 1}, {"H", 0}, {"I", 1}, {"L", 1},
                                                  {"M", -5}, {"N", 1}, {"O", 2}};
  return chi;
}

std::vector<VerificationCase> build_registry() {
  std::vector<VerificationCase> cases;
  auto add = [&cases](std::string id, std::string claim, std::function<void(RunReport&)> run) {
    cases.push_back({std::move(id), std::move(claim), std::move(run)});
  };

  add("dpf2.structure",
      "the restricted degree-two double-point identity carries ambient constants 11 on Q5 and "
      "16 on Q6",
      [](RunReport& rep) {
        Check c{rep};
        SurfaceRestrictionData unit;
        unit.n = 5;
        unit.L2 = RationalPoly::from_ints({1});
        unit.rank1_normal = true;
        DegreeEquation eq5 = dpf2_equation(unit);
        c.expect(eq5.A == RationalPoly({make_rational(1, 2)}), "A = L2/2 = 1/2");
        c.expect(eq5.B == RationalPoly::from_ints({11}), "B(Q5) = 11 for unit L2");
        unit.n = 6;
        DegreeEquation eq6 = dpf2_equation(unit);
        c.expect(eq6.B == RationalPoly::from_ints({16}), "B(Q6) = 16 for unit L2");
        c.finish();
      });

  add("dpf3.delpezzo",
      "the degree-three restriction forces top Chern number 24 on a degree-six threefold "
      "fiber, excluding the two candidate fibers with Euler numbers 8 and 6",
      [](RunReport& rep) {
        Check c{rep};
        // Both candidates share the degree-six Fano-index-two intersection
        // numbers (L3, c1.L2, c1^2.L, c1^3, c2.L, c1.c2) = (6,12,24,48,12,24)
        // but have Euler numbers 8 (product of three lines) and 6
        // (projectivized tangent bundle of the plane).
        ThreefoldFiberChernData product(6, 12, 24, 48, 12, 24, 8);
        ThreefoldFiberChernData tangent(6, 12, 24, 48, 12, 24, 6);
        const Rational forced = dpf3_x3_forced(product, 12);
        c.expect(forced == 24, "forced x3 = " + rs(forced));
        c.expect(dpf3_x3_forced(tangent, 12) == 24, "same intersection data, same forced value");
        c.expect(forced != product.x3_expected,
                 "candidate with x3 = " + rs(product.x3_expected) + " excluded");
        c.expect(forced != tangent.x3_expected,
                 "candidate with x3 = " + rs(tangent.x3_expected) + " excluded");
        c.finish();
      });

  add("dpf2.p4",
      "the degree-two identity for surfaces in four-dimensional ambient space gives "
      "K^2 = d^2/8 - 3d/2 - 4(g-1) + 6chi; K3-type sections have K^2 = 0 exactly at the "
      "Mukai degrees",
      [](RunReport& rep) {
        Check c{rep};
        for (auto [d, g] : {std::pair<long, long>{6, 4}, {8, 5}}) {
          const Rational k2 = surface_k2(Surface4Invariants(d, g, 2));
          c.expect(k2 == 0, "d=" + std::to_string(d) + ", g=" + std::to_string(g) +
                                ", chi=2: K^2 = " + rs(k2));
        }
        const Rational probe = surface_k2(Surface4Invariants(10, 8, 2));
        c.expect(probe != 0, "non-K3 probe (10,8,2): K^2 = " + rs(probe) + " (nonzero)");
        c.finish();
      });

  add("invariants.kl2", "K.L^2 = 2(g-1) - 2d for threefold sections",
      [](RunReport& rep) {
        Check c{rep};
        const Rational n = kl2(Threefold5Invariants(10, 8, 3, 1));
        c.expect(n == -6, "d=10, g=8: K.L^2 = " + rs(n));
        const Rational g2 = kl2(Threefold5Invariants(6, 2, 1, 1));
        c.expect(g2 == -10, "d=6, g=2: K.L^2 = " + rs(g2));
        c.finish();
      });

  add("invariants.k2l", "K^2.L = d^2/4 + 3d/2 - 8(g-1) + 6 chi(O_S)",
      [](RunReport& rep) {
        Check c{rep};
        const Rational a = k2l(Threefold5Invariants(8, 5, 2, 1));
        c.expect(a == 8, "d=8, g=5, chi_S=2: K^2.L = " + rs(a));
        const Rational b = k2l(Threefold5Invariants(10, 8, 3, 1));
        c.expect(b == 2, "d=10, g=8, chi_S=3: K^2.L = " + rs(b));
        c.finish();
      });

  add("invariants.k3",
      "K^3 = -9d^2/4 + 27d/2 + gd + 18(g-1) - 30 chi(O_S) - 24 chi(O_X)",
      [](RunReport& rep) {
        Check c{rep};
        const Rational a = k3(Threefold5Invariants(10, 8, 3, 1));
        c.expect(a == 2, "d=10, g=8, chi_S=3, chi_X=1: K^3 = " + rs(a));
        const Rational b = k3(Threefold5Invariants(8, 5, 2, 1));
        c.expect(b == -8, "d=8, g=5, chi_S=2, chi_X=1: K^3 = " + rs(b));
        c.finish();
      });

  add("screens.s3ghit",
      "every reference pair on Q5 passes both chi(O_S) screens (s3 >= 0 and the generalized "
      "index bound)",
      [](RunReport& rep) {
        Check c{rep};
        for (const KnownPairRecord& r : known_pairs()) {
          if (r.n != 5) continue;
          const long chi_S = r.chi_section();
          const long chi_X = reference_chi_OX().at(r.type_label);
          Threefold5Invariants inv(r.d, r.g, chi_S, chi_X);
          const ScreenResult s3 = check_s3_nonneg(inv);
          const ScreenResult hit = check_ghit(inv);
          c.expect(s3.pass && hit.pass, "type " + r.type_label + ": s3 residual " +
                                            rs(s3.residual) + ", index margin " +
                                            rs(hit.residual));
        }
        c.finish();
      });

  add("remark.degeven", "codimension-two degrees on the 5-dimensional quadric are even",
      [](RunReport& rep) {
        Check c{rep};
        for (const KnownPairRecord& r : known_pairs())
          if (r.n == 5)
            c.expect(r.d % 2 == 0, "type " + r.type_label + " has d = " + std::to_string(r.d));
        bool rejected = false;
        try {
          Threefold5Invariants bad(7, 3, 1, 1);
        } catch (const std::invalid_argument&) {
          rejected = true;
        }
        c.expect(rejected, "odd degree is rejected at construction");
        c.finish();
      });

  add("table.smalld", "the reference table lists thirteen pairs of degree at most 12",
      [](RunReport& rep) {
        Check c{rep};
        const auto& table = known_pairs();
        c.expect(table.size() == 13, "rows: " + std::to_string(table.size()));
        std::map<long, int> by_degree;
        for (const auto& r : table) ++by_degree[r.d];
        const std::map<long, int> expected = {{2, 1}, {4, 3}, {6, 3}, {8, 3}, {10, 2}, {12, 1}};
        std::ostringstream hist;
        for (auto [d, nrec] : by_degree) hist << " d=" << d << ":" << nrec;
        c.expect(by_degree == expected, "degree histogram:" + hist.str());
        c.expect(lookup_known_pairs(8, 5).size() == 3, "three pairs of degree 8 on Q5");
        c.expect(lookup_known_pairs(4, 6).size() == 1 && lookup_known_pairs(4, 6)[0].type_label == "C",
                 "the Segre product is the degree-4 pair on Q6");
        c.finish();
      });

  add("genus.coreasybound",
      "genus cap for curves on a contained surface: g-1 <= d^2/(4k) + (k-3)d/2",
      [](RunReport& rep) {
        Check c{rep};
        c.expect(contained_bound(44, 3) == make_rational(484, 3),
                 "d=44, k=3: bound " + rs(contained_bound(44, 3)));
        c.expect(contained_bound(44, 6) == make_rational(440, 3),
                 "d=44, k=6: bound " + rs(contained_bound(44, 6)));
        const auto lo44 = superbound(44).first;
        const auto lo46 = superbound(46).first;
        c.expect(lo44 <= contained_bound(44, 6) && lo46 > contained_bound(46, 6),
                 "k=6 feasibility flips between d=44 (" + rs(lo44) + " <= " +
                     rs(contained_bound(44, 6)) + ") and d=46");
        c.finish();
      });

  add("genus.boundasep",
      "genus cap without a small containing surface: g-1 <= d^2/(2k) + (k-4)d/2",
      [](RunReport& rep) {
        Check c{rep};
        c.expect(notcontained_bound(98, 11) == make_rational(4802, 11) + 343,
                 "d=98, k=11: bound " + rs(notcontained_bound(98, 11)));
        const auto lo98 = superbound(98).first;
        const auto lo100 = superbound(100).first;
        c.expect(lo98 <= notcontained_bound(98, 11), "feasible at 98: " + rs(lo98));
        c.expect(lo100 > notcontained_bound(100, 11), "infeasible at 100: " + rs(lo100));
        c.finish();
      });

  add("genus.epas",
      "the twisted normal-bundle window 0 <= mu_s <= s^2 d bounds the genus at postulation s",
      [](RunReport& rep) {
        Check c{rep};
        const EpasResult boundary = epas_check(8, 5, 2);
        c.expect(boundary.pass && boundary.mu_s == 0,
                 "(d,g,s) = (8,5,2): mu_2 = " + rs(boundary.mu_s) + " (boundary)");
        // s = 2 forces g-1 >= d^2/8 - 3d/2; compatibility with the genus
        // ceiling ends at d = 42.
        const Rational floor42 = make_rational(42 * 42, 8) - 63;
        const Rational floor44 = make_rational(44 * 44, 8) - 66;
        c.expect(floor42 <= superbound(42).second, "d=42: floor " + rs(floor42) + " <= ceiling " +
                                                       rs(superbound(42).second));
        c.expect(floor44 > superbound(44).second, "d=44: floor " + rs(floor44) + " > ceiling " +
                                                      rs(superbound(44).second));
        c.finish();
      });

  add("numericaldpf.main",
      "a plane divisor with normal O(-1), adjoint-trivial at level two, forces degree 10; "
      "the scroll-plane variant on Q6 forces degree 14",
      [](RunReport& rep) {
        run_preset_case(rep, "numericaldpf_main");
        if (rep.verdict != Verdict::pass) return;
        run_preset_case(rep, "scroll_plane_on_Q6");
      });
  add("numericaldpf.1", "a plane divisor with normal O(-2) at adjoint level one: degree 20",
      [](RunReport& rep) { run_preset_case(rep, "numericaldpf_1"); });
  add("numericaldpf.2", "a plane divisor with normal O(-1) at adjoint level one: degree 14",
      [](RunReport& rep) { run_preset_case(rep, "numericaldpf_2"); });
  add("numericaldpf.3", "a ruled divisor of F2 type polarized by -G: degree 14",
      [](RunReport& rep) { run_preset_case(rep, "numericaldpf_3"); });
  add("numericaldpf.4", "a ruled divisor of F0 type polarized by -G: degree 14",
      [](RunReport& rep) { run_preset_case(rep, "numericaldpf_4"); });

  add("secondreduction.blowup",
      "a fourfold blow-up divisor admits exactly the degree pairs (16,1) and (22,2)",
      [](RunReport& rep) { run_preset_case(rep, "blowup_plane_in_fourfold"); });

  add("mori.divisorial",
      "divisorial contraction scenarios admit exactly the degree pairs recorded for each model",
      [](RunReport& rep) {
        Check c{rep};
        for (const char* name : {"mori_1", "mori_2", "mori_4"}) {
          const FiberPreset& p = find_preset(name);
          const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
          c.expect(sols == p.expected_degrees,
                   std::string(name) + ": " + sols_str(sols) + " matches " +
                       sols_str(p.expected_degrees));
        }
        c.note("the second model's cross term is fixed by its recorded degree list; see "
               "docs/derivations.md for the tension with the naive product value");
        c.finish();
      });

  add("fanod22", "no Fano threefold section exists in even degree 22 through 200",
      [](RunReport& rep) {
        Check c{rep};
        bool all = true;
        for (long d = 22; d <= 200; d += 2) {
          const FanoFeasibilityReport r = fano_threefold_feasible(d);
          if (!r.proven_infeasible || !r.witnesses.empty()) {
            all = false;
            c.expect(false, "d = " + std::to_string(d) + " not excluded");
          }
        }
        c.expect(all, "every even degree in [22, 200] is excluded");
        const FanoFeasibilityReport at20 = fano_threefold_feasible(20);
        bool has_witness = false;
        for (const FanoWitness& w : at20.witnesses)
          if (w.lambda == 9 && w.mu == 34 && w.minus_k3 == 1) has_witness = true;
        c.expect(!at20.proven_infeasible && has_witness,
                 "d = 20 is not excluded: " + std::to_string(at20.witnesses.size()) +
                     " witness tuples, among them (lambda, mu, -K^3) = (9, 34, 1)");
        c.finish();
      });

  add("delpezzo.variety", "the spanned-not-big adjoint forces d^2 - 10d + 24 = 0, so d in {4, 6}",
      [](RunReport& rep) {
        Check c{rep};
        const auto ds = del_pezzo_variety_degrees();
        std::ostringstream got;
        for (long d : ds) got << d << ' ';
        c.expect(ds == std::vector<long>({4, 6}), "roots: " + got.str());
        c.finish();
      });

  add("adjoint.quadricbundle", "the quadric-surface fiber restriction forces degree 6 on Q5",
      [](RunReport& rep) { run_preset_case(rep, "quadric_surface_fiber_n5"); });

  add("mukai.surface",
      "K3-type surface sections force d^2 - 14d + 48 = 0: (d, g) = (6, 4) and (8, 5)",
      [](RunReport& rep) {
        Check c{rep};
        const auto pairs = mukai_degrees();
        c.expect(pairs == std::vector<std::pair<long, long>>({{6, 4}, {8, 5}}),
                 "solutions with g = d/2 + 1: (6,4), (8,5)");
        for (auto [d, g] : pairs)
          c.expect(surface_k2(Surface4Invariants(d, g, 2)) == 0,
                   "d=" + std::to_string(d) + ": section K^2 = 0");
        c.finish();
      });

  add("quadricbundle.surface.d12",
      "a quadric fibration over a surface on Q6 has degree 12",
      [](RunReport& rep) { run_preset_case(rep, "quadric_fiber_over_surface_n6"); });

  add("noveronese",
      "no Veronese-plane fibration: the restriction forces degree 10, but the scenario "
      "requires the degree to be divisible by four",
      [](RunReport& rep) {
        Check c{rep};
        const FiberPreset& p = find_preset("veronese_fiber_n5");
        const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
        c.expect(sols == p.expected_degrees, "restriction solves to " + sols_str(sols));
        c.expect(!veronese_mod4_check(10), "10 is not divisible by 4: scenario excluded");
        c.finish();
      });

  add("delpezzofibr.delta",
      "Del Pezzo surface fibers satisfy Delta(16-d) = 24 with Delta in [3,9]: exactly "
      "(Delta, d) = (3,8), (4,10), (6,12)",
      [](RunReport& rep) {
        Check c{rep};
        const FiberPreset& p = find_preset("delpezzo_surface_fiber");
        const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
        c.expect(sols == p.expected_degrees, "solutions (d, Delta): " + sols_str(sols));
        for (const DegreeSolution& s : sols)
          c.expect(*s.a * (16 - s.d) == 24, "Delta(16-d) = " + std::to_string(*s.a) + "*" +
                                                std::to_string(16 - s.d) + " = 24");
        c.finish();
      });

  add("facts.relvan",
      "for a fibration over a rational curve, chi(O) of the total space is 1 and the section "
      "screens stay consistent",
      [](RunReport& rep) {
        Check c{rep};
        const DelPezzoFibrationSolution sol = resolve_delpezzo_fibration_invariants(12);
        c.expect(sol.base_genus == 0, "base genus = q = " + std::to_string(sol.base_genus));
        Threefold5Invariants inv(12, sol.g, sol.chi_OS, 1);
        const ScreenResult s3 = check_s3_nonneg(inv);
        const ScreenResult hit = check_ghit(inv);
        c.expect(s3.pass, "s3 residual with chi_X = 1: " + rs(s3.residual));
        c.expect(hit.pass, "index margin with chi_X = 1: " + rs(hit.residual));
        c.finish();
      });

  add("facts.socrelle",
      "the double-cover relation 2g - 2 - d = (p_g + q - 1) Delta holds on the fibration "
      "systems and rejects the stray candidates",
      [](RunReport& rep) {
        Check c{rep};
        // Type N: d=10, g=8, p_g=2, q=0, Delta=4.
        c.expect(2 * 8 - 2 - 10 == (2 + 0 - 1) * 4, "type N: 4 = 4");
        const DelPezzoFibrationSolution sol = resolve_delpezzo_fibration_invariants(12);
        c.expect(2 * sol.g - 2 - 12 == (sol.p_g + sol.q - 1) * 6,
                 "resolved d=12 system: " + std::to_string(2 * sol.g - 2 - 12) + " = " +
                     std::to_string((sol.p_g + sol.q - 1) * 6));
        // Candidate (g, chi) = (7, 1) forces 2q = (g-7)/3 + 2 - chi, and q must
        // be a nonnegative integer.
        const Rational q71 = Rational(make_rational(7 - 7, 3) + 2 - 1) / 2;
        c.expect(!is_integer(q71), "candidate (7,1): q = " + rs(q71) + ", not an integer");
        const Rational q135 = Rational(make_rational(13 - 7, 3) + 2 - 5) / 2;
        c.expect(q135 < 0, "candidate (13,5): q = " + rs(q135) + ", negative");
        c.finish();
      });

  add("facts.notinp4",
      "the section surface does not embed in four-dimensional projective space: degrees 8 "
      "and 10 give non-integral invariants, degree 12 gives (g, chi) = (25, 13) and then a "
      "half-integer p_g",
      [](RunReport& rep) {
        Check c{rep};
        for (long d : {8L, 10L, 12L}) {
          const NotInP4Report r = notinp4_check(d);
          c.expect(!r.consistent, "d=" + std::to_string(d) + ": g = " + rs(r.g_value) +
                                      ", chi = " + rs(r.chi_value) + " -> inconsistent");
        }
        const NotInP4Report r12 = notinp4_check(12);
        c.expect(r12.g_value == 25 && r12.chi_value == 13, "d=12 reproduces (25, 13)");
        c.finish();
      });

  add("delpezzofibr.d12",
      "the degree-12 Del Pezzo fibration has (g, chi, p_g, q) = (10, 3, 2, 0), selected from "
      "three candidates",
      [](RunReport& rep) {
        Check c{rep};
        const DelPezzoFibrationSolution sol = resolve_delpezzo_fibration_invariants(12);
        c.expect(sol.candidates ==
                     std::vector<std::pair<long, long>>({{7, 1}, {10, 3}, {13, 5}}),
                 "candidates (g, chi): (7,1), (10,3), (13,5)");
        c.expect(sol.g == 10 && sol.chi_OS == 3 && sol.p_g == 2 && sol.q == 0,
                 "survivor: g=10, chi=3, p_g=2, q=0");
        c.finish();
      });

  add("fano.fibration",
      "Fano fibrations over curves stop at degree 20 on Q5 (degree 24 dies by the index "
      "inequality) and at degree 30 on Q6",
      [](RunReport& rep) {
        Check c{rep};
        c.expect(fano_fibration_max_degree(5) == 20, "max degree on Q5: 20");
        c.expect(fano_fibration_max_degree(6) == 30, "ceiling on Q6: 30");
        // d = 24: the fiber relation reads L^2 = 2K^2 + 5 K.L - 12 with
        // 1 <= K^2 <= 9 and K.L <= -1; only (K^2, K.L, L^2) = (9, -1, 1)
        // clears the positivity constraints, and the index inequality
        // (K.L)^2 >= K^2 L^2 then fails.
        std::vector<std::array<long, 3>> arithmetic_survivors;
        for (long k2 = 1; k2 <= 9; ++k2)
          for (long kl = -1; kl >= -64; --kl) {
            const long l2 = 2 * k2 + 5 * kl - 12;
            if (l2 >= 1) arithmetic_survivors.push_back({k2, kl, l2});
          }
        c.expect(arithmetic_survivors ==
                     std::vector<std::array<long, 3>>({{9, -1, 1}}),
                 "d=24 admits the single arithmetic candidate (K^2, K.L, L^2) = (9, -1, 1)");
        const auto& s = arithmetic_survivors.front();
        c.expect(s[1] * s[1] < s[0] * s[2],
                 "d=24 candidate fails the index inequality: (K.L)^2 = " +
                     std::to_string(s[1] * s[1]) + " < K^2 L^2 = " +
                     std::to_string(s[0] * s[2]));
        c.finish();
      });

  add("quadricfibr.curve",
      "quadric fibrations over curves force degree 6; on Q5 this is the listed double-cover "
      "pair, on Q6 no pair of that kind exists",
      [](RunReport& rep) {
        Check c{rep};
        const FiberPreset& p = find_preset("quadric_surface_fiber_n5");
        const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
        c.expect(sols == p.expected_degrees, "degree: " + sols_str(sols));
        const auto q5 = lookup_known_pairs(6, 5);
        bool has_fibration = false;
        for (const auto& r : q5)
          if (r.type_label == "G") has_fibration = true;
        c.expect(has_fibration, "degree-6 table on Q5 contains the double-cover fibration");
        const auto q6 = lookup_known_pairs(6, 6);
        c.expect(q6.size() == 1 && q6[0].type_label == "E" &&
                     q6[0].description.find("complete intersection") != std::string::npos,
                 "degree-6 table on Q6 holds only the complete intersection");
        c.finish();
      });

  add("conicbundle.system",
      "the conic-bundle constraint system matches the transcribed display except for one "
      "sign in the fourth right-hand entry",
      [](RunReport& rep) {
        Check c{rep};
        const LinearSystem sys = build_system(20, 0, 0);
        c.expect(sys.M.at(0, 0) == -8, "M(1,1) = -8");
        c.expect(sys.M.at(0, 1) == 34 - 2 * 20, "M(1,2) = 34 - 2d");
        c.expect(sys.M.at(4, 4) == -10, "M(5,5) = -10");
        const auto discrepancies = printed_formula_discrepancies();
        bool c4 = false;
        for (const auto& d : discrepancies)
          if (d.subject == "c[4] x-coefficient" && d.printed == "2x" && d.normative == "-2x")
            c4 = true;
        c.expect(c4, "documented finding: fourth entry carries +2x in the display, -2x in "
                     "every consistent solve");
        c.finish(/*documented_discrepancy=*/true);
      });

  add("conicbundle.P",
      "-det(M)/2 equals 3d^3 - 27d^2 - 1520d + 18976 on the whole even grid",
      [](RunReport& rep) {
        Check c{rep};
        bool all = true;
        for (long d = 20; d <= 276; d += 2) {
          const Rational det = determinant(build_system(d, 0, 0).M);
          if (Rational(-det / 2) != P(d)) {
            all = false;
            c.expect(false, "mismatch at d = " + std::to_string(d));
          }
        }
        c.expect(all, "-det(M)/2 = P(d) for every even d in [20, 276]");
        c.expect(P(20) == 1776, "P(20) = " + rs(P(20)));
        c.expect(P(0) == 18976, "P(0) = " + rs(P(0)));
        c.finish();
      });

  add("conicbundle.solution",
      "the exact solve reproduces every transcribed closed-form solution polynomial",
      [](RunReport& rep) {
        Check c{rep};
        const SolutionVector v = solve_point(44, 330, 54);
        const LinearSystem sys = build_system(44, 330, 54);
        const auto prod = sys.M.apply({v.b1R, v.R2, v.Db1, v.D2, v.b2});
        bool residual_zero = true;
        for (std::size_t i = 0; i < 5; ++i) residual_zero = residual_zero && prod[i] == sys.c[i];
        c.expect(residual_zero, "M v = c exactly at (44, 330, 54)");
        c.note("v = (" + rs(v.b1R) + ", " + rs(v.R2) + ", " + rs(v.Db1) + ", " + rs(v.D2) +
               ", " + rs(v.b2) + ")");
        long numeric_mismatches = 0;
        for (const auto& d : printed_formula_discrepancies())
          if (d.subject != "c[4] x-coefficient" && d.subject != "x1 display")
            ++numeric_mismatches;
        c.expect(numeric_mismatches == 0,
                 "closed-form sweep found no disagreements beyond the two documented entries");
        c.finish();
      });

  add("conicbundle.region",
      "the scaled inequalities cut the region: e2 has x-coefficient 896d - 4480 and vanishes "
      "at the first vertex",
      [](RunReport& rep) {
        Check c{rep};
        for (long d : {20L, 44L, 98L, 276L}) {
          const ScaledForms f = scaled_forms(d);
          c.expect(f.e2.cx == 896 * d - 4480,
                   "d=" + std::to_string(d) + ": e2*P x-coefficient " + rs(f.e2.cx));
          const FeasibleTriangle t = triangle(d);
          c.expect(f.e2.cx * t.v1.first + f.e2.c0 == 0, "e2*P vanishes at v1");
          c.expect(f.e1D.cx * t.v2.first + f.e1D.c0 == 0, "e1D*P vanishes at v2");
        }
        c.finish();
      });

  add("conicbundle.triangle",
      "the feasibility region is a triangle: x1 < x2, rising first edge, falling second "
      "edge, on the whole even grid (the transcribed x1 numerator contains a garbled token)",
      [](RunReport& rep) {
        Check c{rep};
        bool all = true;
        for (long d = 20; d <= 276; d += 2) {
          const FeasibleTriangle t = triangle(d);
          const ScaledForms f = scaled_forms(d);
          const Rational slope_e2 = -f.e2.cx / f.e2.cy;
          const Rational slope_e1D = -f.e1D.cx / f.e1D.cy;
          const bool good = t.v1.first < t.v2.first && slope_e2 > 0 && slope_e1D < 0 &&
                            t.v1.first == printed_vertex_x1(d) &&
                            t.v2.first == printed_vertex_x2(d);
          if (!good) {
            all = false;
            c.expect(false, "claims fail at d = " + std::to_string(d));
          }
        }
        c.expect(all, "x1 < x2 and slope signs hold for every even d in [20, 276]");
        bool garble = false;
        for (const auto& d : printed_formula_discrepancies())
          if (d.subject == "x1 display") garble = true;
        c.expect(garble, "documented finding: the x1 display token '(843/)2d^3' is garbled; "
                         "the repaired reading (843/2)d^3 matches the vertex");
        c.finish(/*documented_discrepancy=*/true);
      });

  add("conicbundle.superbound",
      "the genus window endpoints are the genus values at the two base vertices; the upper "
      "endpoint is not the true triangle maximum for even d in [20, 30]",
      [](RunReport& rep) {
        Check c{rep};
        bool all = true;
        for (long d = 20; d <= 276; d += 2) {
          const auto [lo, hi] = superbound(d);
          const auto [plo, phi] = printed_superbound(d);
          const ScaledForms f = scaled_forms(d);
          const FeasibleTriangle t = triangle(d);
          const Rational at_v1 = Rational(f.gm1.cx * t.v1.first + f.gm1.c0) / f.Pd;
          const Rational at_v2 = Rational(f.gm1.cx * t.v2.first + f.gm1.c0) / f.Pd;
          if (lo != plo || hi != phi || lo > hi || lo != at_v1 || hi != at_v2) {
            all = false;
            c.expect(false, "endpoint mismatch at d = " + std::to_string(d));
          }
        }
        c.expect(all, "vertex evaluation equals the transcribed endpoint formulas on the grid");
        std::vector<long> apex_exceeds;
        for (long d = 20; d <= 276; d += 2) {
          const ScaledForms f = scaled_forms(d);
          const FeasibleTriangle t = triangle(d);
          const Rational apex_gm1 =
              (f.gm1.cx * t.v3.first + f.gm1.cy * t.v3.second + f.gm1.c0) / f.Pd;
          if (apex_gm1 > superbound(d).second) apex_exceeds.push_back(d);
        }
        c.expect(apex_exceeds == std::vector<long>({20, 22, 24, 26, 28, 30}),
                 "documented finding: the apex genus exceeds the upper endpoint exactly for "
                 "even d in [20, 30] (the recorded maximum location is wrong there; every "
                 "downstream bound still holds, see docs/derivations.md)");
        c.finish(/*documented_discrepancy=*/true);
      });

  add("conicbundle.cascade",
      "either d <= 98, or the threefold lies on a cubic and d <= 276: the containment "
      "cascade reproduces the recorded bounds 98; 64, 58, 54, 48, 44, 40, 40, 276; 42; and "
      "the final contradiction",
      [](RunReport& rep) {
        Check c{rep};
        const CascadeReport cascade = degree_bound_cascade();
        for (const CascadeRow& row : cascade.rows) {
          std::ostringstream line;
          line << row.route << " k=" << row.k << " -> ";
          if (row.max_even_d)
            line << *row.max_even_d;
          else
            line << "no even d >= 20";
          if (row.printed_d) line << " (recorded: " << *row.printed_d << ")";
          if (row.k == 1 && row.route == "epas") {
            c.expect(!row.max_even_d.has_value(), line.str());
          } else {
            c.expect(row.max_even_d && row.printed_d && *row.max_even_d == *row.printed_d,
                     line.str());
          }
        }
        c.note("documented finding: the recorded intermediate value 16 for the final case is "
               "not reproducible on the bound's domain of validity; its conclusion (no even "
               "d >= 20) is");
        c.finish(/*documented_discrepancy=*/true);
      });

  add("maple.enumeration",
      "the filtered lattice sweep over even d in [20, 276] isolates degree 44 (degree 66 "
      "survives every internal screen and needs the external genus bound)",
      [](RunReport& rep) {
        Check c{rep};
        FilterConfig cfg;
        const SurvivorReport sweep = qcv::enumerate(cfg);
        for (const std::string& line : sweep.trail) c.note(line);
        const auto degrees = sweep.survivor_degrees();
        bool has44 = false;
        for (long d : degrees) has44 = has44 || d == 44;
        c.expect(has44, "degree 44 survives every internal screen");
        c.expect(degrees == std::vector<long>({44, 66}),
                 "without the external bound the survivors are exactly {44, 66}");
        c.expect(known_small_conic_bundles() == std::set<long>({6, 12, 14, 18}),
                 "known flat conic bundles below the sweep range: degrees 6, 12, 14, 18");
        c.note("the stronger statement (44 alone) is certified only with a user-supplied "
               "external bound; the shipped plugin is synthetic and uncertified");
        c.finish();
      });

  return cases;
}

}  // namespace

const std::vector<VerificationCase>& case_registry() {
  static const std::vector<VerificationCase> registry = build_registry();
  return registry;
}

const std::vector<std::string>& claim_ledger() {
  static const std::vector<std::string> ledger = {
      "dpf2.structure",
      "dpf3.delpezzo",
      "dpf2.p4",
      "invariants.kl2",
      "invariants.k2l",
      "invariants.k3",
      "screens.s3ghit",
      "remark.degeven",
      "table.smalld",
      "genus.coreasybound",
      "genus.boundasep",
      "genus.epas",
      "numericaldpf.main",
      "numericaldpf.1",
      "numericaldpf.2",
      "numericaldpf.3",
      "numericaldpf.4",
      "secondreduction.blowup",
      "mori.divisorial",
      "fanod22",
      "delpezzo.variety",
      "adjoint.quadricbundle",
      "mukai.surface",
      "quadricbundle.surface.d12",
      "noveronese",
      "delpezzofibr.delta",
      "facts.relvan",
      "facts.socrelle",
      "facts.notinp4",
      "delpezzofibr.d12",
      "fano.fibration",
      "quadricfibr.curve",
      "conicbundle.system",
      "conicbundle.P",
      "conicbundle.solution",
      "conicbundle.region",
      "conicbundle.triangle",
      "conicbundle.superbound",
      "conicbundle.cascade",
      "maple.enumeration",
  };
  return ledger;
}

}  // namespace qcv
