#include <CLI11.hpp>
#include <iostream>

#include "gl3/cli.hpp"

int main(int argc, char** argv) {
  using gl3::cli::Command;
  gl3::cli::RunConfig cfg;
  CLI::App app{"GL(3) Hecke coefficient toolkit"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", cfg.tol, "tolerance override");
    sub->add_option("--out", cfg.out, "output path (report JSON, or CSV for gen)");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", cfg.suite, "hecke|schur|kato|measures|bernstein|satotate|signs|euler|mvt|all");

  auto* gen = app.add_subcommand("gen", "generate CSV data");
  common(gen);
  gen->add_option("--kind", cfg.kind, "gl2|tau|table|samples|density");
  gen->add_option("--N", cfg.N, "bound on primes or indices");
  gen->add_option("--p", cfg.p, "prime for Plancherel measure, 0 for Sato-Tate");
  gen->add_option("--samples", cfg.samples, "sample count");
  gen->add_option("--grid", cfg.grid, "density grid resolution");
  gen->add_option("--source", cfg.source, "sym2-tau|gl2csv (for --kind table)");
  gen->add_option("--input", cfg.input, "input CSV");

  auto* kato = app.add_subcommand("kato", "Kato identity at one (l1, l2, p)");
  common(kato);
  kato->add_option("--l1", cfg.l1);
  kato->add_option("--l2", cfg.l2);
  kato->add_option("--p", cfg.p);

  auto* st = app.add_subcommand("satotate", "empirical vs quadrature A(p,p) interval masses");
  common(st);
  st->add_option("--p", cfg.p);
  st->add_option("--samples", cfg.samples);
  st->add_option("--lo", cfg.lo);
  st->add_option("--hi", cfg.hi);

  auto* signs = app.add_subcommand("signs", "sign-change pipeline");
  common(signs);
  signs->add_option("--source", cfg.source, "sym2-tau|gl2csv|seqcsv");
  signs->add_option("--input", cfg.input, "input CSV");
  signs->add_option("--X", cfg.X);
  signs->add_option("--H", cfg.H, "interval length or auto");
  signs->add_option("--M", cfg.M, "dyadic m-range or auto");

  auto* mvt = app.add_subcommand("mvt", "mean value theorem calibration");
  common(mvt);
  mvt->add_option("--N", cfg.N);
  mvt->add_option("--T", cfg.T);
  mvt->add_option("--input", cfg.input, "polynomial CSV n,re,im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (verify->parsed()) cfg.command = Command::verify;
  else if (gen->parsed()) cfg.command = Command::gen;
  else if (kato->parsed()) cfg.command = Command::kato;
  else if (st->parsed()) cfg.command = Command::satotate;
  else if (signs->parsed()) cfg.command = Command::signs;
  else cfg.command = Command::mvt;

  return gl3::cli::run(cfg, std::cout, std::cerr);
}
