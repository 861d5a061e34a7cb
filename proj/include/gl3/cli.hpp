#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl3/errors.hpp"

namespace gl3::cli {

using Json = nlohmann::ordered_json;

enum class Command { verify, gen, kato, satotate, signs, mvt };

/// Bad flag values or unreadable inputs; maps to exit code 2.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  Command command = Command::verify;
  std::uint64_t seed = 0;
  std::optional<double> tol;

  std::string suite = "all";
  std::string input;
  std::string out;
  std::string source = "sym2-tau";
  std::string kind = "gl2";

  int l1 = 1, l2 = 1;
  std::int64_t p = 2;
  std::int64_t X = 10000;
  std::string H = "auto";
  std::string M = "auto";
  std::int64_t N = 512;
  double T = 512;
  std::size_t samples = 100000;
  std::optional<double> lo, hi;
  int grid = 64;
};

/// One suite report: {suite, seed, tol, checks: [{name, status, value, bound}], status}.
struct SuiteReport {
  Json json;
  bool passed = true;
};

const std::vector<std::string>& suite_names();

/// Runs a named verification suite. Throws ConfigError for unknown names.
SuiteReport run_suite(const std::string& name, std::optional<double> tol, std::uint64_t seed);

/// Executes the command and writes its report to --out or `out`; returns the
/// process exit code (0 pass, 1 assertion failure, 2 I/O or config error).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string dump(const Json& j);

}  // namespace gl3::cli
