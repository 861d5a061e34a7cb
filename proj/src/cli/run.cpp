#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gl3/arith.hpp"
#include "gl3/cli.hpp"
#include "gl3/dirichlet.hpp"
#include "gl3/hecke.hpp"
#include "gl3/io.hpp"
#include "gl3/kl_poly.hpp"
#include "gl3/measures.hpp"
#include "gl3/random.hpp"
#include "gl3/sato_tate.hpp"
#include "gl3/sign_stats.hpp"

namespace gl3::cli {

namespace {

struct Outcome {
  Json report;
  bool passed = true;
};

Json check(const std::string& name, bool pass, Json value, Json bound) {
  Json rec;
  rec["name"] = name;
  rec["status"] = pass ? "pass" : "fail";
  rec["value"] = std::move(value);
  rec["bound"] = std::move(bound);
  return rec;
}

void finish(Outcome& o, Json checks) {
  for (const auto& c : checks) o.passed = o.passed && c["status"] == "pass";
  o.report["checks"] = std::move(checks);
  o.report["status"] = o.passed ? "pass" : "fail";
}

std::int64_t ceil_root(std::int64_t X, double exponent) {
  return static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(X), exponent) - 1e-12));
}

std::int64_t parse_auto(const std::string& field, const std::string& text, std::int64_t automatic) {
  if (text == "auto") return automatic;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected 'auto' or a positive integer, got '" + text + "'");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("--out", "cannot open '" + path + "' for writing");
  return out;
}

Outcome run_verify(const RunConfig& cfg) {
  auto r = run_suite(cfg.suite, cfg.tol, cfg.seed);
  return {std::move(r.json), r.passed};
}

Outcome run_kato(const RunConfig& cfg) {
  if (cfg.l1 < 0 || cfg.l2 < 0) throw ConfigError("--l1/--l2", "must be non-negative");
  if (!is_prime(cfg.p)) throw ConfigError("--p", "must be prime");
  const double bound = cfg.tol.value_or(1e-6);
  const auto r = kato_check(cfg.l1, cfg.l2, cfg.p);
  Outcome o;
  o.report["command"] = "kato";
  o.report["l1"] = cfg.l1;
  o.report["l2"] = cfg.l2;
  o.report["p"] = cfg.p;
  o.report["lhs"] = r.lhs;
  o.report["rhs"] = r.rhs;
  o.report["diff"] = r.diff;
  finish(o, Json::array({check("kato_identity", r.diff <= bound, r.diff, bound)}));
  return o;
}

Outcome run_satotate(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) throw ConfigError("--p", "must be prime");
  if (cfg.samples == 0) throw ConfigError("--samples", "must be positive");
  std::vector<std::pair<double, double>> cells;
  if (cfg.lo || cfg.hi) {
    if (!cfg.lo || !cfg.hi || !(*cfg.lo < *cfg.hi)) throw ConfigError("--lo/--hi", "need both with lo < hi");
    cells.emplace_back(*cfg.lo, *cfg.hi);
  } else {
    for (int k = 0; k < 9; ++k) cells.emplace_back(-1.0 + k, static_cast<double>(k));
  }
  const double slack = cfg.tol.value_or(0.01);
  const auto dist = sample_adjoint(cfg.p, cfg.samples, cfg.seed);
  Outcome o;
  o.report["command"] = "satotate";
  o.report["seed"] = cfg.seed;
  Json rows = Json::array(), checks = Json::array();
  for (const auto& [lo, hi] : cells) {
    const auto r = effective_st_compare(dist, lo, hi);
    rows.push_back({{"p", r.p},
                    {"interval", {r.lo, r.hi}},
                    {"samples", r.samples},
                    {"empirical", r.empirical},
                    {"mass", r.mass},
                    {"mass_uncertainty", r.mass_uncertainty},
                    {"diff", r.diff}});
    const double bound = slack + r.mass_uncertainty;
    std::ostringstream name;
    name << "interval_" << io::format_double(lo) << "_" << io::format_double(hi);
    checks.push_back(check(name.str(), r.diff <= bound, r.diff, bound));
  }
  o.report["records"] = std::move(rows);
  finish(o, std::move(checks));
  return o;
}

CoefficientTable table_from_source(const RunConfig& cfg, std::int64_t bound) {
  if (cfg.source == "sym2-tau") return sym2_delta_table(bound);
  if (cfg.source == "gl2csv") {
    if (cfg.input.empty()) throw ConfigError("--input", "required for --source gl2csv");
    const auto g = io::read_gl2csv(cfg.input);
    const auto locals = sym2_lift(g.data);
    return extend_multiplicative(locals, bound, 1);
  }
  throw ConfigError("--source", "expected sym2-tau, gl2csv or seqcsv, got '" + cfg.source + "'");
}

Json sign_change_json(const SignChangeReport& r) {
  return {{"changes", r.changes}, {"positives", r.positives}, {"negatives", r.negatives}, {"zeros", r.zeros}};
}

Outcome run_signs(const RunConfig& cfg, std::ostream& log) {
  if (cfg.X < 2) throw ConfigError("--X", "must be at least 2");
  Outcome o;
  o.report["command"] = "signs";
  o.report["source"] = cfg.source;
  Json checks = Json::array();

  if (cfg.source == "seqcsv") {
    if (cfg.input.empty()) throw ConfigError("--input", "required for --source seqcsv");
    auto seq = io::read_seqcsv(cfg.input);
    if (static_cast<std::int64_t>(seq.size()) > cfg.X) seq.values.resize(static_cast<std::size_t>(cfg.X));
    const auto r = count_sign_changes(seq);
    o.report["X"] = seq.size();
    o.report["sign_changes"] = sign_change_json(r);
    finish(o, std::move(checks));
    return o;
  }

  const std::int64_t X = cfg.X;
  const std::int64_t H = parse_auto("--H", cfg.H, ceil_root(X, 1.0 / 6.0));
  const std::int64_t M = parse_auto("--M", cfg.M, std::max<std::int64_t>(1, std::min(H - 1, ceil_root(X, 0.1))));
  if (!(M < H && H <= X)) throw ConfigError("--H/--M", "need 1 <= M < H <= X");
  if (cfg.source == "gl2csv" && !cfg.input.empty()) {
    const auto g = io::read_gl2csv(cfg.input);
    for (const auto& w : g.warnings) log << "warning: " << w << "\n";
  }
  const auto table = table_from_source(cfg, 2 * X + H);

  const auto seq = coefficient_sequence(table, X, CoefficientFamily::A_m1);
  const auto changes = count_sign_changes(seq);
  o.report["X"] = X;
  o.report["sign_changes"] = sign_change_json(changes);
  const double change_bound = std::pow(static_cast<double>(X), 5.0 / 6.0) / 10.0;
  checks.push_back(check("sign_changes_vs_X_5_6", static_cast<double>(changes.changes) >= change_bound,
                         changes.changes, change_bound));

  const auto scan = interval_change_scan(table, ShortIntervalConfig(X, H, M));
  o.report["scan"] = {{"X", scan.X},
                      {"H", scan.H},
                      {"M", scan.M},
                      {"total_x", scan.total_x},
                      {"with_change", scan.with_change},
                      {"lower_bound_estimate", scan.lower_bound_estimate},
                      {"strict_comparator", scan.strict_comparator},
                      {"comparator_violations", scan.comparator_violations}};
  checks.push_back(check("comparator_S1_le_S2", scan.comparator_violations == 0, scan.comparator_violations, 0));

  const double psa = partial_sum_abs(table, X);
  const double rs = rankin_selberg_ratio(table, X);
  const auto bal = sign_balance(table, X, CoefficientFamily::A_m1);
  o.report["partial_sum_abs"] = psa;
  o.report["rankin_selberg_ratio"] = rs;
  o.report["balance"] = {{"pos_frac", bal.pos_frac}, {"neg_frac", bal.neg_frac}};
  finish(o, std::move(checks));
  return o;
}

Outcome run_mvt(const RunConfig& cfg) {
  if (cfg.N < 1) throw ConfigError("--N", "must be positive");
  if (!(cfg.T >= 1.0)) throw ConfigError("--T", "must be at least 1");
  DirichletPolynomial f;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw ConfigError("--input", "cannot open '" + cfg.input + "'");
    f = io::read_polynomial_csv(in);
  } else {
    Rng rng(cfg.seed);
    for (std::int64_t n = cfg.N; n <= 2 * cfg.N; ++n) f.add_term(static_cast<DirichletIndex>(n), cplx(rng.sign()));
  }
  MvtResult r;
  try {
    r = mvt_ratio(f, cfg.N, cfg.T);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--N", e.what());
  }
  const double bound = cfg.tol.value_or(8.0);
  Outcome o;
  o.report["command"] = "mvt";
  o.report["N"] = cfg.N;
  o.report["T"] = cfg.T;
  o.report["lhs"] = r.lhs;
  o.report["rhs"] = r.rhs;
  o.report["ratio"] = r.ratio;
  o.report["convergence_warning"] = r.convergence_warning;
  finish(o, Json::array({check("mvt_ratio", r.ratio <= bound, r.ratio, bound)}));
  return o;
}

Outcome run_gen(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("--out", "required for gen");
  if (cfg.N < 1) throw ConfigError("--N", "must be positive");
  auto out = open_output(cfg.out);
  std::size_t rows = 0;
  if (cfg.kind == "gl2") {
    const auto g = delta_gl2_data(ramanujan_tau(cfg.N), cfg.N);
    out << "p,lambda\n";
    for (const auto& [p, lambda] : g.pairs) out << p << ',' << io::format_double(lambda) << '\n';
    rows = g.pairs.size();
  } else if (cfg.kind == "tau") {
    const auto tau = ramanujan_tau(cfg.N);
    out << "m,value\n";
    for (std::int64_t m = 1; m <= cfg.N; ++m) {
      out << m << ',' << io::format_double(tau.normalized[static_cast<std::size_t>(m - 1)]) << '\n';
    }
    rows = static_cast<std::size_t>(cfg.N);
  } else if (cfg.kind == "table") {
    const auto table = table_from_source(cfg, cfg.N);
    io::write_table_csv(out, table);
    rows = static_cast<std::size_t>(table.bound_m() * table.bound_n());
  } else if (cfg.kind == "samples") {
    const auto spec = cfg.p == 0 ? MeasureSpec::sato_tate() : MeasureSpec::plancherel(cfg.p);
    const auto pts = sample(spec, cfg.samples, cfg.seed);
    io::write_samples_csv(out, pts);
    rows = pts.size();
  } else if (cfg.kind == "density") {
    if (cfg.grid < 8) throw ConfigError("--grid", "must be at least 8");
    const auto spec = cfg.p == 0 ? MeasureSpec::sato_tate() : MeasureSpec::plancherel(cfg.p);
    io::write_density_csv(out, spec, cfg.grid);
    rows = static_cast<std::size_t>(cfg.grid) * static_cast<std::size_t>(cfg.grid);
  } else {
    throw ConfigError("--kind", "expected gl2, tau, table, samples or density, got '" + cfg.kind + "'");
  }
  if (!out) throw ConfigError("--out", "write to '" + cfg.out + "' failed");
  Outcome o;
  o.report["command"] = "gen";
  o.report["kind"] = cfg.kind;
  o.report["rows"] = rows;
  o.report["out"] = cfg.out;
  finish(o, Json::array());
  return o;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.tol && !(*cfg.tol > 0)) throw ConfigError("--tol", "must be positive");
    Outcome o;
    switch (cfg.command) {
      case Command::verify: o = run_verify(cfg); break;
      case Command::gen: o = run_gen(cfg); break;
      case Command::kato: o = run_kato(cfg); break;
      case Command::satotate: o = run_satotate(cfg); break;
      case Command::signs: o = run_signs(cfg, err); break;
      case Command::mvt: o = run_mvt(cfg); break;
    }
    const std::string text = dump(o.report);
    if (cfg.command != Command::gen && !cfg.out.empty()) {
      auto file = open_output(cfg.out);
      file << text;
      if (!file) throw ConfigError("--out", "write to '" + cfg.out + "' failed");
    } else {
      out << text;
    }
    return o.passed ? 0 : 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: --input: " << e.what() << "\n";
    return 2;
  } catch (const MissingPrimeError& e) {
    err << "error: --input: " << e.what() << "\n";
    return 2;
  } catch (const NonTemperedError& e) {
    err << "error: --input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gl3::cli
