#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcx/report.hpp"
#include "hcx/transport.hpp"
#include "json.hpp"

namespace hcx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitInputError = 3;

struct Config {
  std::string suite = "all";
  std::string format = "text";
  std::string out;  // empty: stdout
  std::size_t loops = 200;
  double scale = 0.1;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
};

/// Suites in execution order.
const std::vector<std::string>& suite_names();

/// Reads a plain key=value file (keys: suite, format, out, loops, scale,
/// seed, tolerance; '#' starts a comment) on top of `base`.
Config load_config_file(const std::string& path, Config base = {});

/// Applies one key=value setting; throws InputError on unknown keys or
/// unparsable values.
void apply_setting(Config& cfg, const std::string& key, const std::string& value);

/// Throws InputError if the configuration is out of range.
void validate(const Config& cfg);

nlohmann::json echo(const Config& cfg);

/// Objects shared between suites, built on first use.
class Context {
 public:
  explicit Context(Config cfg);

  const Config& config() const { return cfg_; }
  const hyper::HypercomplexLieAlgebra& joyce();
  const hyper::HypercomplexLieAlgebra& hopf();
  const obata::Connection& joyce_connection();
  const obata::Connection& hopf_connection();
  const holonomy::EndoSubspace& joyce_holonomy();

 private:
  Config cfg_;
  std::optional<hyper::HypercomplexLieAlgebra> joyce_, hopf_;
  std::optional<obata::Connection> joyce_conn_, hopf_conn_;
  std::optional<holonomy::EndoSubspace> joyce_hol_;
};

Report run_algebra_suite(Context& ctx);
Report run_hypercomplex_suite(Context& ctx);
Report run_connection_suite(Context& ctx);
Report run_curvature_suite(Context& ctx);
Report run_holonomy_suite(Context& ctx);
Report run_transport_suite(Context& ctx);

/// Runs the configured suite ("all" runs every suite in order). Throws
/// InputError for an unknown suite.
Report run_suite(const Config& cfg);

/// Exit code for a finished report: 0 when nothing failed, 2 otherwise.
int exit_code(const Report& rep);

std::string render(const Report& rep, const std::string& format);

/// dump targets: structure-constants, ijk, lambda, curvature, holonomy-basis.
nlohmann::json dump(const std::string& what, Context& ctx);

/// Summary of the holonomy identification plus its report.
nlohmann::json holonomy_summary(Context& ctx, const Report& rep);

/// Invariant tensors of the su(3) holonomy algebra for "K,M", "0,2s", "top".
nlohmann::json invariants(const std::string& valence, Context& ctx);

/// Writes text to cfg.out, or stdout when it is empty.
void emit(const Config& cfg, const std::string& text);

}  // namespace hcx::cli
