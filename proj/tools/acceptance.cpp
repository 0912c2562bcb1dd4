// Acceptance run: one PASS/FAIL line per criterion, with the pinned
// tolerances and the measured runtime. Exit 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hcx/cli.hpp"

using namespace hcx;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::size_t failures(const Report& rep) { return rep.summary().failed; }

bool passed(const Report& rep, const std::string& id) {
  const auto* c = rep.find(id);
  return c && c->status == Status::pass;
}

std::string actual(const Report& rep, const std::string& id) {
  const auto* c = rep.find(id);
  return c ? c->actual : "missing";
}

nlohmann::json strip_timing(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

}  // namespace

int main() {
  cli::Context ctx(cli::Config{});
  int failed = 0;

  auto run = [&](int number, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = budget_s <= 0 || secs < budget_s;
    const bool ok = out.ok && in_time;
    if (!ok) ++failed;
    std::printf("[%s] %d. %s: %s; %.3f s", ok ? "PASS" : "FAIL", number, title, out.detail.c_str(), secs);
    if (budget_s > 0) std::printf(" (limit %.0f s)", budget_s);
    std::printf("\n");
  };

  run(1, "hypercomplex construction", 1.0, [&] {
    const auto H = hyper::build_joyce_su3();
    const Report rep = hyper::verify_hypercomplex(H);
    const auto s = rep.summary();
    return Outcome{s.failed == 0 && s.skipped == 0,
                   std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
                       std::to_string(s.skipped) + " skipped; exact"};
  });

  run(2, "connection uniqueness", 10.0, [&] {
    const auto U = obata::solve_unique_connection(ctx.joyce());
    return Outcome{U.matches_formula && U.rank == U.unknowns,
                   std::to_string(U.unknowns) + " unknowns, rank " + std::to_string(U.rank) +
                       ", equals closed form: " + (U.matches_formula ? "yes" : "no") + "; exact"};
  });

  run(3, "Euler field package", 0, [&] {
    const Report rep = obata::euler_report(ctx.joyce(), ctx.joyce_connection(), "euler");
    const auto s = rep.summary();
    return Outcome{s.failed == 0 && s.skipped == 0,
                   std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
                       std::to_string(s.skipped) + " skipped; parallel fields " +
                       actual(rep, "euler.parallel_fields") + "; exact"};
  });

  run(4, "flat quaternion case", 0, [&] {
    const auto& H = ctx.hopf();
    const auto R = curvature::curvature_tensor(H.algebra, ctx.hopf_connection());
    bool flat = true;
    for (const auto& [key, m] : R.r)
      if (!m.is_zero()) flat = false;
    const auto dim = holonomy::nomizu_closure(H.algebra, ctx.hopf_connection()).dim();
    return Outcome{flat && dim == 0,
                   std::string("curvature ") + (flat ? "zero" : "nonzero") + ", holonomy dim " +
                       std::to_string(dim) + "; exact"};
  });

  run(5, "curvature identities", 0, [&] {
    const Report rep = curvature::verify_curvature(ctx.joyce(), ctx.joyce_connection(), {42, 50}, "curvature");
    const auto s = rep.summary();
    return Outcome{s.failed == 0 && s.skipped == 0,
                   std::to_string(s.passed) + " passed, " + std::to_string(s.failed) +
                       " failed over basis tuples and 50 seeded vectors; exact"};
  });

  run(6, "holonomy is gl(2,H)", 60.0, [&] {
    const auto hol = holonomy::nomizu_closure(ctx.joyce().algebra, ctx.joyce_connection());
    const Report rep = holonomy::identify_gl2h(hol, ctx.joyce(), "holonomy");
    return Outcome{failures(rep) == 0 && rep.summary().skipped == 0,
                   "dim " + actual(rep, "holonomy.dim") + ", commutant " + actual(rep, "holonomy.commutant_dim") +
                       ", double commutant " + actual(rep, "holonomy.double_commutant_dim") + ", endos " +
                       actual(rep, "holonomy.invariant_tensors.1_1") + ", " + std::to_string(failures(rep)) +
                       " failed; exact"};
  });

  run(7, "eliminations", 0, [&] {
    const auto c = holonomy::sl2c_s3c2_commutant_dim();
    std::size_t good = 0, total = 0;
    for (std::size_t n : {1, 2, 4})
      for (std::uint64_t k = 0; k < 10; ++k) {
        const auto t = holonomy::random_complementary_triple(n, 42000 + n * 100 + k);
        const auto r = holonomy::projection_algebra_dim(t[0], t[1], t[2]);
        ++total;
        if (r.dim == 4 && r.mat2_iso) ++good;
      }
    return Outcome{c == 2 && good == total, "sl2c commutant " + std::to_string(c) + ", projection algebra " +
                                                std::to_string(good) + "/" + std::to_string(total) +
                                                " give (4, true); exact"};
  });

  run(8, "numerical transport", 30.0, [&] {
    const Report rep = cli::run_transport_suite(ctx);
    const bool ok = passed(rep, "transport.dim") && passed(rep, "transport.principal_angle") &&
                    passed(rep, "transport.hopf.dim");
    return Outcome{ok, "dim " + actual(rep, "transport.dim") + " (200 loops, scale 0.1, tol 1e-6), angle " +
                           actual(rep, "transport.principal_angle") + " (limit 1e-6, scale 0.05), Hopf dim " +
                           actual(rep, "transport.hopf.dim")};
  });

  run(9, "determinism", 0, [&] {
    cli::Config cfg;
    cfg.seed = 42;
    const auto a = strip_timing(cli::run_suite(cfg).to_json()).dump();
    const auto b = strip_timing(cli::run_suite(cfg).to_json()).dump();
    return Outcome{a == b, std::string("two seeded full runs ") + (a == b ? "identical" : "differ") +
                               " apart from elapsed_ms"};
  });

  std::printf("%s: %d of 9 criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
