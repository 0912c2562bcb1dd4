#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hcx/cli.hpp"
#include "hcx/errors.hpp"

using namespace hcx;
namespace fs = std::filesystem;

namespace {

int run_hcx(const std::string& args, const std::string& out_file = "") {
  std::string cmd = std::string(HCX_BINARY) + " " + args;
  cmd += out_file.empty() ? " > /dev/null 2>&1" : " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "hcx_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json strip_timing(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  Report r;
  r.expect_eq("b.two", "x", "1", "1");
  r.record("a.one", "x", "1", "2", false);
  r.skip("c.three", "x", "n/a");
  CHECK_THROWS(r.record("a.one", "x", "1", "1", true));
  const auto s = r.summary();
  CHECK(s.total == 3);
  CHECK(s.passed == 1);
  CHECK(s.failed == 1);
  CHECK(s.skipped == 1);
  CHECK_FALSE(r.all_passed());
  const auto j = r.to_json();
  CHECK(j["checks"][0]["id"] == "a.one");
  CHECK(j["checks"][2]["id"] == "c.three");
  Report other;
  other.expect_eq("a.one", "x", "1", "1");
  CHECK_THROWS(r.merge(other));
}

TEST_CASE("config parsing") {
  const auto path = scratch("cfg.txt");
  std::ofstream(path) << "# transport settings\nloops = 25\nscale=0.2  # coarse\n\nseed=7\n";
  const auto cfg = cli::load_config_file(path.string());
  CHECK(cfg.loops == 25);
  CHECK(cfg.scale == doctest::Approx(0.2));
  CHECK(cfg.seed == 7);
  CHECK(cfg.tolerance == doctest::Approx(1e-6));

  std::ofstream(path) << "colour=blue\n";
  CHECK_THROWS_AS(cli::load_config_file(path.string()), InputError);
  std::ofstream(path) << "loops=ten\n";
  CHECK_THROWS_AS(cli::load_config_file(path.string()), InputError);
  std::ofstream(path) << "no equals sign\n";
  CHECK_THROWS_AS(cli::load_config_file(path.string()), InputError);
  CHECK_THROWS_AS(cli::load_config_file("/nonexistent/cfg"), InputError);
}

TEST_CASE("config validation") {
  cli::Config c;
  CHECK_NOTHROW(cli::validate(c));
  c.loops = 0;
  CHECK_THROWS_AS(cli::validate(c), InputError);
  c = {};
  c.suite = "nope";
  CHECK_THROWS_AS(cli::validate(c), InputError);
  c = {};
  c.scale = 0.7;
  CHECK_THROWS_AS(cli::validate(c), InputError);
  c = {};
  c.format = "xml";
  CHECK_THROWS_AS(cli::validate(c), InputError);
}

TEST_CASE("holonomy suite reports dimension 16 and echoes the config") {
  cli::Config cfg;
  cfg.suite = "holonomy";
  const Report rep = cli::run_suite(cfg);
  CHECK(rep.all_passed());
  REQUIRE(rep.find("holonomy.dim") != nullptr);
  CHECK(rep.find("holonomy.dim")->actual == "16");
  CHECK(rep.to_json()["config_echo"]["suite"] == "holonomy");
}

TEST_CASE("full run is deterministic apart from timings") {
  cli::Config cfg;
  cfg.seed = 42;
  const Report a = cli::run_suite(cfg);
  const Report b = cli::run_suite(cfg);
  CHECK(a.summary().failed == 0);
  CHECK(strip_timing(a.to_json()).dump() == strip_timing(b.to_json()).dump());
}

TEST_CASE("dump targets") {
  cli::Context ctx(cli::Config{});
  const auto sc = cli::dump("structure-constants", ctx);
  CHECK(sc["structure_constants"].size() == 8);
  const auto ijk = cli::dump("ijk", ctx);
  CHECK(ijk.contains("alpha"));
  CHECK(ijk.contains("sign_choices"));
  const auto lambda = cli::dump("lambda", ctx);
  CHECK(lambda.size() == 8);
  CHECK(lambda[0].size() == 8);
  const auto hb = cli::dump("holonomy-basis", ctx);
  REQUIRE(hb["basis"].size() == 16);
  for (const auto& v : hb["basis"]) CHECK(v.size() == 64);
  CHECK_THROWS_AS(cli::dump("everything", ctx), InputError);
  CHECK(cli::invariants("1,1", ctx)["dim"] == 4);
  CHECK(cli::invariants("0,2s", ctx)["dim"] == 0);
}

TEST_CASE("binary exit codes") {
  CHECK(run_hcx("verify --suite transport --loops 0") == cli::kExitInputError);
  CHECK(run_hcx("verify --suite bogus") == cli::kExitInputError);
  CHECK(run_hcx("verify --scale 2") == cli::kExitInputError);
  CHECK(run_hcx("verify --format yaml") == cli::kExitInputError);
  CHECK(run_hcx("frobnicate") == cli::kExitInputError);
  CHECK(run_hcx("invariants --valence 5,5") == cli::kExitInputError);
  CHECK(run_hcx("dump --what nothing") == cli::kExitInputError);
  CHECK(run_hcx("verify --suite algebra") == cli::kExitOk);
  CHECK(run_hcx("holonomy --method nomizu") == cli::kExitOk);
  // too few loops cannot reach dimension 16: a check failure, not an input error
  CHECK(run_hcx("transport --loops 5") == cli::kExitCheckFailed);
}

TEST_CASE("flags win over the config file") {
  const auto cfg = scratch("loops0.txt");
  std::ofstream(cfg) << "loops=0\n";
  CHECK(run_hcx("verify --suite transport --config " + cfg.string()) == cli::kExitInputError);
  const auto out = scratch("out.json");
  CHECK(run_hcx("verify --suite transport --format json --config " + cfg.string() + " --loops 200") == cli::kExitOk);
  CHECK(run_hcx("verify --suite holonomy --format json --out " + out.string()) == cli::kExitOk);
  const auto j = nlohmann::json::parse(slurp(out));
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["id"] == "holonomy.dim") {
      found = true;
      CHECK(c["actual"] == "16");
    }
  CHECK(found);
}

TEST_CASE("binary JSON output is reproducible") {
  const auto a = scratch("run_a.json"), b = scratch("run_b.json");
  REQUIRE(run_hcx("verify --suite all --seed 42 --format json", a.string()) == cli::kExitOk);
  REQUIRE(run_hcx("verify --suite all --seed 42 --format json", b.string()) == cli::kExitOk);
  CHECK(strip_timing(nlohmann::json::parse(slurp(a))).dump() == strip_timing(nlohmann::json::parse(slurp(b))).dump());
}
