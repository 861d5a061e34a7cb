#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "gl3/arith.hpp"
#include "gl3/cli.hpp"
#include "gl3/dirichlet.hpp"
#include "gl3/hecke.hpp"
#include "gl3/kl_poly.hpp"
#include "gl3/measures.hpp"
#include "gl3/random.hpp"
#include "gl3/sato_tate.hpp"
#include "gl3/sign_stats.hpp"

namespace gl3::cli {

namespace {

class Checks {
 public:
  void add(const std::string& name, bool pass, Json value, Json bound) {
    Json rec;
    rec["name"] = name;
    rec["status"] = pass ? "pass" : "fail";
    rec["value"] = std::move(value);
    rec["bound"] = std::move(bound);
    list_.push_back(std::move(rec));
    passed_ = passed_ && pass;
  }
  bool passed() const noexcept { return passed_; }
  Json take() { return std::move(list_); }

 private:
  Json list_ = Json::array();
  bool passed_ = true;
};

std::string str(const Rational& r) { return r.str(); }

double tol_or(std::optional<double> tol, double fallback) { return tol ? *tol : fallback; }

std::vector<PrimeLocalData> random_tempered_locals(std::int64_t bound, Rng& rng) {
  std::vector<PrimeLocalData> out;
  for (auto p : primes_up_to(bound)) {
    const double t1 = rng.uniform(0.0, 2 * std::numbers::pi);
    const double t2 = rng.uniform(0.0, 2 * std::numbers::pi);
    out.emplace_back(p, SatakeTriple::from_angles(t1, t2));
  }
  return out;
}

void suite_hecke(Checks& c, Json&, std::optional<double> tol, std::uint64_t seed) {
  const double bound = tol_or(tol, 1e-8);
  constexpr std::int64_t kMax = 50;
  Rng rng(derive_seed(seed, 0));
  const auto locals = random_tempered_locals(kMax * kMax, rng);
  const auto table = extend_multiplicative(locals, kMax * kMax, kMax * kMax);

  Rng pick(derive_seed(seed, 1));
  auto index = [&] { return static_cast<std::int64_t>(1 + pick.next_u64() % kMax); };
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const auto m = index(), m1 = index(), m2 = index();
    worst = std::max(worst, hecke_residual(table, m, m1, m2));
  }
  c.add("hecke_residual_max_200_triples", worst <= bound, worst, bound);

  double worst_mobius = 0;
  for (std::int64_t m1 = 1; m1 <= kMax; ++m1) {
    for (std::int64_t m2 = 1; m2 <= kMax; ++m2) {
      worst_mobius = std::max(worst_mobius, std::abs(mobius_expand(table, m1, m2) - table.at(m1, m2)));
    }
  }
  c.add("mobius_expand_max_deviation", worst_mobius <= bound, worst_mobius, bound);
}

void suite_schur(Checks& c, Json& result, std::optional<double> tol, std::uint64_t) {
  const double bound = tol_or(tol, 1e-9);
  const EPoly f = (EPoly::e1() * EPoly::e2() - EPoly::constant(1)).pow(2);
  const auto expansion = expand_in_schur(f);
  const WInvariantLaurent expected({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}});
  result["expansion"] = expansion.to_string();
  c.add("schur_expansion_exact", expansion == expected, expansion.to_string(), expected.to_string());
  c.add("schur_expansion_roundtrip", to_epoly(expansion) == f, to_epoly(expansion).to_string(), f.to_string());

  const SatakeTriple degenerate(1.0, 1.0, 1.0);
  Json terms = Json::array();
  double total = 0;
  for (const auto& [idx, coeff] : expansion.coeffs()) {
    const double v = coeff.convert_to<double>() * schur_eval({idx.first, idx.second}, degenerate).real();
    terms.push_back(v);
    total += v;
  }
  result["degenerate_terms"] = terms;
  c.add("degenerate_point_sum", std::abs(total - 64.0) <= bound, total, 64.0);
  const double direct = f.eval(degenerate).real();
  c.add("degenerate_point_direct", std::abs(direct - 64.0) <= bound, direct, 64.0);
}

void suite_kato(Checks& c, Json& result, std::optional<double> tol, std::uint64_t) {
  const double bound = tol_or(tol, 1e-6);
  Json rows = Json::array();
  for (int l1 = 0; l1 <= 5; ++l1) {
    for (int l2 = 0; l1 + l2 <= 5; ++l2) {
      for (std::int64_t p : {2, 3, 5, 7}) {
        const auto r = kato_check(l1, l2, p);
        rows.push_back({{"l1", l1}, {"l2", l2}, {"p", p}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"diff", r.diff}});
        c.add("kato_" + std::to_string(l1) + "_" + std::to_string(l2) + "_p" + std::to_string(p), r.diff <= bound,
              r.diff, bound);
      }
    }
  }
  result["records"] = std::move(rows);
  const auto anchor = kato_check(1, 1, 2);
  c.add("kato_anchor_1_1_p2", std::abs(anchor.lhs - 0.75) <= bound && anchor.diff <= bound, anchor.lhs, 0.75);
}

void suite_measures(Checks& c, Json&, std::optional<double> tol, std::uint64_t) {
  const double bound = tol_or(tol, 1e-8);
  const QuadratureGrid grid(64);
  auto one = [](const TorusPoint&) { return cplx(1.0); };
  const double st = integrate(MeasureSpec::sato_tate(), one, grid).real();
  c.add("mass_sato_tate", std::abs(st - 1.0) <= bound, st, 1.0);
  for (std::int64_t p : {2, 3, 5, 7, 101}) {
    const double m = integrate(MeasureSpec::plancherel(p), one, grid).real();
    c.add("mass_plancherel_p" + std::to_string(p), std::abs(m - 1.0) <= bound, m, 1.0);
  }

  const double ortho_bound = 1e-7;
  std::vector<ExponentPair> idx;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) idx.push_back({a, b});
  }
  double worst = 0;
  for (const auto& u : idx) {
    for (const auto& v : idx) {
      const auto g = integrate(
          MeasureSpec::sato_tate(),
          [&](const TorusPoint& t) {
            const auto s = t.satake();
            return schur_eval(u, s) * std::conj(schur_eval(v, s));
          },
          grid);
      const double target = (u.beta1 == v.beta1 && u.beta2 == v.beta2) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g - target));
    }
  }
  c.add("schur_orthonormality_max_deviation", worst <= ortho_bound, worst, ortho_bound);
}

void suite_bernstein(Checks& c, Json&, std::optional<double>, std::uint64_t) {
  for (int l = 0; l <= 10; ++l) {
    const Rational norm = bernstein_coeffs(l).l1_norm();
    c.add("bernstein_l1_norm_l" + std::to_string(l), norm <= 1, str(norm), "1");
  }
}

void suite_satotate(Checks& c, Json& result, std::optional<double> tol, std::uint64_t seed) {
  const double slack = tol_or(tol, 0.01);
  Json rows = Json::array();
  for (std::int64_t p : {2, 5}) {
    const auto dist = sample_adjoint(p, 100000, derive_seed(seed, static_cast<std::uint64_t>(p)));
    for (int cell = 0; cell < 9; ++cell) {
      const double lo = -1.0 + cell, hi = lo + 1.0;
      const auto r = effective_st_compare(dist, lo, hi);
      rows.push_back({{"p", r.p},
                      {"interval", {r.lo, r.hi}},
                      {"samples", r.samples},
                      {"empirical", r.empirical},
                      {"mass", r.mass},
                      {"mass_uncertainty", r.mass_uncertainty},
                      {"diff", r.diff}});
      const double bound = slack + r.mass_uncertainty;
      c.add("st_cell_p" + std::to_string(p) + "_" + std::to_string(cell), r.diff <= bound, r.diff, bound);
    }
  }
  result["records"] = std::move(rows);
}

void suite_signs(Checks& c, Json& result, std::optional<double> tol, std::uint64_t) {
  const double balance_tol = tol_or(tol, 0.1);
  constexpr std::int64_t kX = 100000, kScanX = 10000;
  const auto table = sym2_delta_table(kX);

  const auto seq = coefficient_sequence(table, kX, CoefficientFamily::A_m1);
  const auto changes = count_sign_changes(seq);
  const double change_bound = std::pow(static_cast<double>(kX), 5.0 / 6.0) / 10.0;
  result["sign_changes"] = {{"changes", changes.changes},
                            {"positives", changes.positives},
                            {"negatives", changes.negatives},
                            {"zeros", changes.zeros}};
  c.add("sign_changes_vs_X_5_6", static_cast<double>(changes.changes) >= change_bound, changes.changes, change_bound);

  const auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(kScanX), 1.0 / 6.0) - 1e-12));
  const auto M = std::max<std::int64_t>(
      1, std::min(H - 1, static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(kScanX), 0.1) - 1e-12))));
  const auto scan = interval_change_scan(table, ShortIntervalConfig(kScanX, H, M));
  result["scan"] = {{"X", scan.X},
                    {"H", scan.H},
                    {"M", scan.M},
                    {"total_x", scan.total_x},
                    {"with_change", scan.with_change},
                    {"lower_bound_estimate", scan.lower_bound_estimate},
                    {"strict_comparator", scan.strict_comparator},
                    {"comparator_violations", scan.comparator_violations}};
  c.add("comparator_S1_le_S2", scan.comparator_violations == 0, scan.comparator_violations, 0);
  const double strict = static_cast<double>(scan.strict_comparator) / static_cast<double>(scan.total_x);
  c.add("comparator_strict_fraction", strict >= 0.5, strict, 0.5);

  const double psa = partial_sum_abs(table, kX);
  const double psa_bound = std::pow(static_cast<double>(kX), 0.9);
  c.add("partial_sum_abs", psa >= psa_bound, psa, psa_bound);

  const double rs = rankin_selberg_ratio(table, kX);
  c.add("rankin_selberg_ratio", rs >= 0.1 && rs <= 10.0, rs, Json::array({0.1, 10.0}));

  const auto bal = sign_balance(table, kX, CoefficientFamily::A_m1);
  const double dev = std::max(std::abs(bal.pos_frac - 0.5), std::abs(bal.neg_frac - 0.5));
  result["balance"] = {{"pos_frac", bal.pos_frac}, {"neg_frac", bal.neg_frac}};
  c.add("sign_balance_deviation", dev <= balance_tol, dev, balance_tol);
}

void suite_euler(Checks& c, Json&, std::optional<double> tol, std::uint64_t seed) {
  const double bound = tol_or(tol, 1e-9);
  const auto degenerate = euler_factor_check(PrimeLocalData(2, SatakeTriple(1.0, 1.0, 1.0)), cplx(2.0, 0.0), 60);
  const double ddiff = std::abs(degenerate.series - degenerate.closed);
  c.add("degenerate_series_vs_closed", ddiff <= bound, ddiff, bound);
  c.add("degenerate_ratio_identity", degenerate.ratio_identity_residual <= bound,
        degenerate.ratio_identity_residual, bound);

  Rng rng(derive_seed(seed, 0));
  const auto primes = primes_up_to(100);
  double worst_closed = 0, worst_ratio = 0;
  int warnings = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = primes[rng.next_u64() % primes.size()];
    const PrimeLocalData local(p, SatakeTriple::from_angles(rng.uniform(0.0, 2 * std::numbers::pi), 0.0));
    for (double sigma : {1.2, 1.5, 2.0}) {
      for (double t : {-5.0, 0.0, 5.0}) {
        const auto r = euler_factor_check(local, cplx(sigma, t), 60);
        worst_closed = std::max(worst_closed, std::abs(r.series - r.closed));
        worst_ratio = std::max(worst_ratio, r.ratio_identity_residual);
        warnings += r.tail_warning ? 1 : 0;
      }
    }
  }
  c.add("self_dual_series_vs_closed_max", worst_closed <= bound, worst_closed, bound);
  c.add("self_dual_ratio_identity_max", worst_ratio <= bound, worst_ratio, bound);
  c.add("truncation_tail_warnings", warnings == 0, warnings, 0);
}

void suite_mvt(Checks& c, Json& result, std::optional<double> tol, std::uint64_t seed) {
  const double bound = tol_or(tol, 8.0);
  constexpr std::int64_t kGrid[3] = {64, 256, 1024};
  Json rows = Json::array();
  double worst = 0;
  int warnings = 0;
  for (int i = 0; i < 50; ++i) {
    const std::int64_t N = kGrid[i % 3];
    const double T = static_cast<double>(kGrid[(i / 3) % 3]);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    DirichletPolynomial f;
    for (std::int64_t n = N; n <= 2 * N; ++n) f.add_term(static_cast<DirichletIndex>(n), cplx(rng.sign()));
    const auto r = mvt_ratio(f, N, T);
    rows.push_back({{"N", N}, {"T", T}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}});
    worst = std::max(worst, r.ratio);
    warnings += r.convergence_warning ? 1 : 0;
  }
  result["records"] = std::move(rows);
  c.add("mvt_ratio_max_50_draws", worst <= bound, worst, bound);
  c.add("mvt_convergence_warnings", warnings == 0, warnings, 0);
}

using SuiteFn = std::function<void(Checks&, Json&, std::optional<double>, std::uint64_t)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"hecke", suite_hecke},       {"schur", suite_schur},       {"kato", suite_kato},
      {"measures", suite_measures}, {"bernstein", suite_bernstein}, {"satotate", suite_satotate},
      {"signs", suite_signs},       {"euler", suite_euler},       {"mvt", suite_mvt},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke", "schur",  "kato",  "measures", "bernstein",
                                              "satotate", "signs", "euler", "mvt"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::optional<double> tol, std::uint64_t seed) {
  if (tol && !(*tol > 0)) throw ConfigError("--tol", "must be positive");
  SuiteReport report;
  if (name == "all") {
    Json suites = Json::array();
    for (const auto& n : suite_names()) {
      auto r = run_suite(n, tol, seed);
      report.passed = report.passed && r.passed;
      suites.push_back(std::move(r.json));
    }
    report.json["suite"] = "all";
    report.json["seed"] = seed;
    report.json["suites"] = std::move(suites);
    report.json["status"] = report.passed ? "pass" : "fail";
    return report;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("--suite", "unknown suite '" + name + "'");
  Checks checks;
  Json result = Json::object();
  it->second(checks, result, tol, seed);
  report.passed = checks.passed();
  report.json["suite"] = name;
  report.json["seed"] = seed;
  report.json["tol"] = tol ? Json(*tol) : Json(nullptr);
  report.json["checks"] = checks.take();
  if (!result.empty()) report.json["result"] = std::move(result);
  report.json["status"] = report.passed ? "pass" : "fail";
  return report;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gl3::cli
