#include "qcv/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qcv/errors.hpp"

namespace qcv {

const std::vector<Filter>& all_filters() {
  static const std::vector<Filter> fs = {Filter::triangle,   Filter::integrality,
                                         Filter::superbound, Filter::s3_chi,
                                         Filter::hodge_Y,    Filter::k3_tail};
  return fs;
}

std::string filter_name(Filter f) {
  switch (f) {
    case Filter::triangle: return "triangle";
    case Filter::integrality: return "integrality";
    case Filter::superbound: return "superbound";
    case Filter::s3_chi: return "s3-chi";
    case Filter::hodge_Y: return "hodge-Y";
    case Filter::k3_tail: return "k3-tail";
  }
  throw std::logic_error("filter_name: unhandled enumerator");
}

std::optional<Filter> parse_filter_name(const std::string& name) {
  std::string canon = name;
  std::replace(canon.begin(), canon.end(), '_', '-');
  for (Filter f : all_filters())
    if (canon == filter_name(f)) return f;
  return std::nullopt;
}

Rational GrossBound::eval(long d) const {
  const Rational at = den.eval(make_rational(d));
  if (at == 0) throw NoSolution("gross bound '" + name + "' has a pole at d = " + std::to_string(d));
  return num.eval(make_rational(d)) / at;
}

GrossBound parse_gross_bound(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  GrossBound b;
  b.name = j.at("name").get<std::string>();
  b.certified_matches_cited_theorem = j.value("certified_matches_cited_theorem", false);
  const auto& up = j.at("g_minus_1_upper");
  b.num = RationalPoly::from_ints(up.at("num_coeffs").get<std::vector<long>>());
  b.den = RationalPoly::from_ints(up.at("den_coeffs").get<std::vector<long>>());
  if (b.den.is_zero()) throw InconsistentData("gross bound '" + b.name + "': zero denominator");
  return b;
}

GrossBound load_gross_bound(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open gross-bound plugin file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gross_bound(buf.str());
}

void FilterConfig::validate() const {
  if (d_min < 20) throw std::invalid_argument("FilterConfig: d_min must be >= 20");
  if (d_min % 2 != 0 || d_max % 2 != 0)
    throw std::invalid_argument("FilterConfig: range endpoints must be even");
  if (d_max < d_min) throw std::invalid_argument("FilterConfig: empty degree range");
  if (budget <= 0) throw std::invalid_argument("FilterConfig: budget must be positive");
  if (enable_gross_bound && !gross_bound)
    throw std::invalid_argument("FilterConfig: gross bound enabled but no bound supplied");
}

Rational chi_OY(const Rational& x, const Rational& b2) { return (x + b2) / 12; }

Rational chi_OS_from_cover(const Rational& chi_Y, const Rational& R2, const Rational& b1R) {
  return Rational(2) * chi_Y + (R2 - b1R) / 2;
}

bool hodge_Y_checks(const SolutionVector& v, long x, long y) {
  (void)y;  // reserved for additional configured checks
  return v.b1R * v.b1R >= Rational(x) * v.R2;
}

const std::set<long>& known_small_conic_bundles() {
  static const std::set<long> ds = {6, 12, 14, 18};
  return ds;
}

namespace {

// A quantity of the sweep as a genuine (unscaled) linear function of (x, y).
struct ValueForm {
  Rational cx, cy, c0;
  Rational eval(long x, long y) const { return cx * x + cy * y + c0; }
};

ValueForm unscale(const LinearForm& f, const Rational& Pd) {
  return {f.cx / Pd, f.cy / Pd, f.c0 / Pd};
}

// Integrality of cx*x + cy*y + c0, cleared to A x + B y + C == 0 (mod L):
// multiply through by L = lcm of the coefficient denominators. Rows fix y,
// so the solvability data for x is precomputed once per degree:
//   A x == -(B y + C) (mod L)  has solutions iff  g = gcd(A, L) divides the
// right side, and then exactly the class  x == inv * (rhs/g)  (mod L/g).
struct Congruence {
  Integer A, B, C, L;
  Integer g;        // gcd(A, L)
  Integer step;     // L / g
  Integer inv;      // (A/g)^{-1} mod step (1 when step == 1)
};

std::optional<Congruence> make_congruence(const ValueForm& q) {
  Integer L;
  mpz_lcm(L.get_mpz_t(), q.cx.get_den().get_mpz_t(), q.cy.get_den().get_mpz_t());
  mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.c0.get_den().get_mpz_t());
  if (L == 1) return std::nullopt;  // integer-valued everywhere
  Congruence c;
  c.L = L;
  c.A = to_integer(q.cx * Rational(L));
  c.B = to_integer(q.cy * Rational(L));
  c.C = to_integer(q.c0 * Rational(L));
  mpz_gcd(c.g.get_mpz_t(), c.A.get_mpz_t(), c.L.get_mpz_t());
  c.step = c.L / c.g;
  if (c.step == 1) {
    c.inv = 1;
  } else {
    Integer a_red = c.A / c.g;
    if (mpz_invert(c.inv.get_mpz_t(), a_red.get_mpz_t(), c.step.get_mpz_t()) == 0)
      throw std::logic_error("modular inverse must exist after dividing by the gcd");
  }
  return c;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// x == r (mod m); empty when absent.
struct Progression {
  Integer r, m;
};

std::optional<Progression> intersect(const Progression& p, const Progression& q) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.m.get_mpz_t(), q.m.get_mpz_t());
  Integer diff = q.r - p.r;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  Integer m2g = q.m / g;
  Integer t;
  if (m2g == 1) {
    t = 0;
  } else {
    Integer p1g = p.m / g;
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), p1g.get_mpz_t(), m2g.get_mpz_t()) == 0)
      throw std::logic_error("coprime after gcd division, inverse must exist");
    t = mod_nonneg((diff / g) * inv, m2g);
  }
  Progression out;
  out.m = p.m / g * q.m;
  out.r = mod_nonneg(p.r + p.m * t, out.m);
  return out;
}

// The screens a candidate runs through, in reporting order, after the row
// iteration has already established triangle membership and (when the
// integrality screen is on) integrality of all eight quantities.
struct DegreeContext {
  long d;
  Rational Pd;
  ValueForm b1R, R2, Db1, D2, b2, gm1, chiY, chiS;
  std::vector<Congruence> congruences;
  Rational lo, hi;
  std::optional<Rational> gross_cap;
  Rational k3_cap;  // d^2 / 12
};

DegreeContext make_context(long d, const FilterConfig& cfg) {
  const ScaledForms f = scaled_forms(d);
  DegreeContext ctx;
  ctx.d = d;
  ctx.Pd = f.Pd;
  ctx.b1R = unscale(f.b1R, f.Pd);
  ctx.R2 = unscale(f.R2, f.Pd);
  ctx.Db1 = unscale(f.Db1, f.Pd);
  ctx.D2 = unscale(f.D2, f.Pd);
  ctx.b2 = unscale(f.b2, f.Pd);
  ctx.gm1 = unscale(f.gm1, f.Pd);
  ctx.chiY = {(Rational(1) + ctx.b2.cx) / 12, ctx.b2.cy / 12, ctx.b2.c0 / 12};
  ctx.chiS = {Rational(2) * ctx.chiY.cx + (ctx.R2.cx - ctx.b1R.cx) / 2,
              Rational(2) * ctx.chiY.cy + (ctx.R2.cy - ctx.b1R.cy) / 2,
              Rational(2) * ctx.chiY.c0 + (ctx.R2.c0 - ctx.b1R.c0) / 2};
  if (cfg.filters.count(Filter::integrality)) {
    for (const ValueForm* q : {&ctx.b1R, &ctx.R2, &ctx.Db1, &ctx.D2, &ctx.b2, &ctx.gm1,
                               &ctx.chiY, &ctx.chiS})
      if (auto c = make_congruence(*q)) ctx.congruences.push_back(*c);
  }
  const auto [lo, hi] = superbound(d);
  ctx.lo = lo;
  ctx.hi = hi;
  if (cfg.enable_gross_bound) ctx.gross_cap = cfg.gross_bound->eval(d);
  ctx.k3_cap = make_rational(d * d, 12);
  return ctx;
}

// chi(O) of the conic-bundle threefold equals chi(O) of its base surface
// (the fibers are rational curves, so the structure sheaf pushes down with
// no higher direct images).
bool s3_chi_ok(long d, const Rational& gm1, const Rational& chiS, const Rational& chiX) {
  const Rational dd(d);
  const Rational s3 =
      Rational(60) * chiS -
      (Rational(3) * dd * dd / 2 - 12 * dd + (dd - 48) * gm1 + Rational(24) * chiX);
  if (s3 < 0) return false;
  const Rational index_gap =
      Rational(2) * gm1 * gm1 / (3 * dd) - dd * dd / 24 + Rational(5) * dd / 12 - chiS;
  return index_gap >= 0;
}

// Returns the name of the first failing screen, or nullopt for a survivor.
std::optional<std::string> first_failing_screen(const DegreeContext& ctx,
                                                const FilterConfig& cfg, long x, long y) {
  const Rational gm1 = ctx.gm1.eval(x, y);
  if (cfg.filters.count(Filter::superbound)) {
    if (gm1 < ctx.lo || gm1 > ctx.hi) return "superbound";
    if (ctx.gross_cap && gm1 > *ctx.gross_cap) return "gross-bound";
  }
  if (cfg.filters.count(Filter::s3_chi)) {
    const Rational chiY = ctx.chiY.eval(x, y);
    if (!s3_chi_ok(ctx.d, gm1, ctx.chiS.eval(x, y), chiY)) return "s3-chi";
  }
  if (cfg.filters.count(Filter::hodge_Y)) {
    const Rational b1R = ctx.b1R.eval(x, y);
    if (!(b1R * b1R >= Rational(x) * ctx.R2.eval(x, y))) return "hodge-Y";
  }
  if (cfg.filters.count(Filter::k3_tail)) {
    if (ctx.d > 98 && gm1 > ctx.k3_cap) return "k3-tail";
  }
  return std::nullopt;
}

struct RowBounds {
  Integer xlo, xhi;  // inclusive; empty when xlo > xhi
};

RowBounds row_bounds(const ScaledForms& f, long y) {
  // e2 >= 0 has positive x-coefficient (lower bound); e1.D >= 0 negative
  // (upper bound) — both sign facts are checked once per degree upstream.
  RowBounds rb;
  rb.xlo = rational_ceil((-f.e2.c0 - f.e2.cy * y) / f.e2.cx);
  rb.xhi = rational_floor((-f.e1D.c0 - f.e1D.cy * y) / f.e1D.cx);
  return rb;
}

void sweep_degree(long d, const FilterConfig& cfg, SurvivorReport& rep) {
  const ScaledForms f = scaled_forms(d);
  if (!(f.e2.cx > 0) || !(f.e1D.cx < 0))
    throw InconsistentData("triangle edge orientation changed at d = " + std::to_string(d));
  const FeasibleTriangle tri = triangle(d);
  Integer y_top_i = rational_floor(tri.v3.second);
  if (y_top_i < 0) y_top_i = -1;  // empty sweep
  if (!y_top_i.fits_slong_p()) throw RegionOverflow("triangle height overflow at d = " + std::to_string(d));
  const long y_top = y_top_i.get_si();

  DegreeStats stats;

  // Budget gate first: count the raw lattice points of this triangle before
  // touching any of them, so an oversized region aborts rather than truncates.
  for (long y = 0; y <= y_top; ++y) {
    const RowBounds rb = row_bounds(f, y);
    if (rb.xhi < rb.xlo) continue;
    Integer count = rb.xhi - rb.xlo + 1;
    stats.in_triangle += count.get_si();
    if (stats.in_triangle > cfg.budget)
      throw RegionOverflow("triangle at d = " + std::to_string(d) + " holds more than " +
                           std::to_string(cfg.budget) +
                           " lattice points (budget exceeded, nothing enumerated)");
  }

  const DegreeContext ctx = make_context(d, cfg);
  const bool congruent_scan = cfg.filters.count(Filter::integrality) > 0;
  SurvivorRecord record;
  record.d = d;

  for (long y = 0; y <= y_top; ++y) {
    const RowBounds rb = row_bounds(f, y);
    if (rb.xhi < rb.xlo) continue;
    const long long row_count = Integer(rb.xhi - rb.xlo + 1).get_si();

    Progression prog{Integer(0), Integer(1)};
    bool empty = false;
    if (congruent_scan) {
      for (const Congruence& c : ctx.congruences) {
        const Integer rhs = mod_nonneg(-(c.B * y + c.C), c.L);
        if (!mpz_divisible_p(rhs.get_mpz_t(), c.g.get_mpz_t())) {
          empty = true;
          break;
        }
        Progression q{mod_nonneg(c.inv * (rhs / c.g), c.step), c.step};
        if (auto merged = intersect(prog, q)) {
          prog = *merged;
        } else {
          empty = true;
          break;
        }
      }
    }

    long long candidates = 0;
    if (!empty) {
      const Integer first = rb.xlo + mod_nonneg(prog.r - rb.xlo, prog.m);
      for (Integer xi = first; xi <= rb.xhi; xi += prog.m) {
        ++candidates;
        const long x = xi.get_si();
        if (auto fail = first_failing_screen(ctx, cfg, x, y)) {
          ++stats.first_fail[*fail];
          continue;
        }
        Witness w;
        w.d = d;
        w.x = x;
        w.y = y;
        w.v = solve_point(d, x, y);
        w.chi_Y = ctx.chiY.eval(x, y);
        w.chi_S = ctx.chiS.eval(x, y);
        w.g_minus_1 = ctx.gm1.eval(x, y);
        if (w.v.genus_minus_1() != w.g_minus_1)
          throw InconsistentData("per-point and per-degree genus paths disagree");
        record.witnesses.push_back(std::move(w));
        ++stats.survivors;
      }
    }
    if (congruent_scan) stats.first_fail["integrality"] += row_count - candidates;
  }

  if (stats.first_fail.count("integrality") && stats.first_fail["integrality"] == 0)
    stats.first_fail.erase("integrality");
  if (!record.witnesses.empty()) rep.survivors.push_back(std::move(record));
  rep.per_degree[d] = std::move(stats);
}

std::vector<std::string> make_trail(const SurvivorReport& rep) {
  std::vector<std::string> trail;
  {
    std::ostringstream line;
    line << "range: even d in [" << rep.config.d_min << ", " << rep.config.d_max << "]";
    trail.push_back(line.str());
  }
  {
    std::ostringstream line;
    line << "screens:";
    for (Filter fl : all_filters())
      if (rep.config.filters.count(fl)) line << ' ' << filter_name(fl);
    if (rep.config.filters.empty()) line << " none";
    trail.push_back(line.str());
  }
  if (rep.config.enable_gross_bound) {
    const GrossBound& b = *rep.config.gross_bound;
    trail.push_back("gross bound: " + b.name + " (certified: " +
                    (b.certified_matches_cited_theorem ? "yes" : "no") + ")");
  } else {
    trail.push_back("gross bound: off");
  }
  trail.push_back("lattice points in triangles: " + std::to_string(rep.total_in_triangle()));
  {
    std::ostringstream line;
    line << "rejected:";
    bool any = false;
    for (const char* key :
         {"integrality", "superbound", "gross-bound", "s3-chi", "hodge-Y", "k3-tail"}) {
      const long long n = rep.total_first_fail(key);
      if (n == 0) continue;
      line << (any ? ", " : " ") << key << "=" << n;
      any = true;
    }
    if (!any) line << " none";
    trail.push_back(line.str());
  }
  {
    std::ostringstream line;
    line << "survivors:";
    if (rep.survivors.empty()) {
      line << " none";
    } else {
      bool first = true;
      for (const SurvivorRecord& r : rep.survivors) {
        line << (first ? " " : ", ") << "d=" << r.d << " (" << r.witnesses.size()
             << (r.witnesses.size() == 1 ? " point)" : " points)");
        first = false;
      }
    }
    trail.push_back(line.str());
  }
  return trail;
}

}  // namespace

std::vector<long> SurvivorReport::survivor_degrees() const {
  std::vector<long> out;
  out.reserve(survivors.size());
  for (const SurvivorRecord& r : survivors) out.push_back(r.d);
  return out;
}

long long SurvivorReport::total_in_triangle() const {
  long long n = 0;
  for (const auto& [d, stats] : per_degree) n += stats.in_triangle;
  return n;
}

long long SurvivorReport::total_first_fail(const std::string& screen) const {
  long long n = 0;
  for (const auto& [d, stats] : per_degree) {
    auto it = stats.first_fail.find(screen);
    if (it != stats.first_fail.end()) n += it->second;
  }
  return n;
}

SurvivorReport enumerate(const FilterConfig& config) {
  config.validate();
  SurvivorReport rep;
  rep.config = config;
  for (long d = config.d_min; d <= config.d_max; d += 2) sweep_degree(d, config, rep);
  rep.trail = make_trail(rep);
  return rep;
}

SurvivorReport merge_reports(const std::vector<SurvivorReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge_reports: no parts");
  SurvivorReport rep;
  rep.config = parts.front().config;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const SurvivorReport& p = parts[i];
    if (i > 0) {
      const FilterConfig& prev = parts[i - 1].config;
      if (p.config.d_min != prev.d_max + 2)
        throw std::invalid_argument("merge_reports: ranges must be adjacent and ascending");
      if (p.config.filters != rep.config.filters ||
          p.config.enable_gross_bound != rep.config.enable_gross_bound ||
          p.config.budget != rep.config.budget)
        throw std::invalid_argument("merge_reports: parts ran with different screens");
    }
    rep.config.d_max = p.config.d_max;
    rep.survivors.insert(rep.survivors.end(), p.survivors.begin(), p.survivors.end());
    for (const auto& [d, stats] : p.per_degree) rep.per_degree[d] = stats;
  }
  rep.trail = make_trail(rep);
  return rep;
}

}  // namespace qcv
