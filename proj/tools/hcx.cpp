#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hcx/cli.hpp"
#include "hcx/errors.hpp"

using namespace hcx;

namespace {

struct Flags {
  std::string suite, format, out, loops, scale, seed, tolerance, config;
};

void add_common(CLI::App& cmd, Flags& f) {
  cmd.add_option("--suite", f.suite, "all, algebra, hypercomplex, connection, curvature, holonomy, transport");
  cmd.add_option("--format", f.format, "json or text");
  cmd.add_option("--out", f.out, "output path (default stdout)");
  cmd.add_option("--loops", f.loops, "number of sampled loops");
  cmd.add_option("--scale", f.scale, "loop scale in (0, 0.5]");
  cmd.add_option("--seed", f.seed, "random seed");
  cmd.add_option("--tolerance", f.tolerance, "relative rank threshold");
  cmd.add_option("--config", f.config, "key=value file; flags win over it");
}

cli::Config resolve(const CLI::App& cmd, const Flags& f) {
  cli::Config cfg;
  if (cmd.count("--config")) cfg = cli::load_config_file(f.config, cfg);
  const std::pair<const char*, const std::string*> keys[] = {
      {"suite", &f.suite}, {"format", &f.format}, {"out", &f.out},       {"loops", &f.loops},
      {"scale", &f.scale}, {"seed", &f.seed},     {"tolerance", &f.tolerance}};
  for (const auto& [key, value] : keys)
    if (cmd.count(std::string("--") + key)) cli::apply_setting(cfg, key, *value);
  cli::validate(cfg);
  return cfg;
}

std::string text_of_holonomy(const nlohmann::json& s, const Report& rep) {
  std::ostringstream os;
  os << "holonomy dim " << s["dim"].get<std::size_t>() << "\n";
  os << "commutant dim " << s["commutant_dim"].get<std::string>() << ", equals commutant "
     << s["equals_commutant"].get<std::string>() << "\n";
  os << "invariant tensors:";
  for (const auto& [k, v] : s["invariant_tensors"].items()) os << " (" << k << ") " << v.get<std::size_t>();
  os << "\n\n" << rep.to_text();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcx: exact holonomy checks for the hypercomplex structure on SU(3)"};
  app.require_subcommand(1);

  Flags f;
  std::string valence, what, method = "nomizu";
  auto* verify = app.add_subcommand("verify", "run check suites");
  auto* hol = app.add_subcommand("holonomy", "identify the holonomy algebra");
  auto* trans = app.add_subcommand("transport", "numerical loop-transport cross-check");
  auto* inv = app.add_subcommand("invariants", "dimension of invariant tensors of a valence");
  auto* dmp = app.add_subcommand("dump", "dump an exact object as JSON");
  for (auto* c : {verify, hol, trans, inv, dmp}) add_common(*c, f);
  hol->add_option("--method", method, "only nomizu is supported");
  inv->add_option("--valence", valence, "K,M with K,M in {0,1,2}, 0,2s, or top")->required();
  dmp->add_option("--what", what, "structure-constants, ijk, lambda, curvature, holonomy-basis")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInputError;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    cli::Config cfg = resolve(*cmd, f);
    if (cmd == verify) {
      const Report rep = cli::run_suite(cfg);
      cli::emit(cfg, cli::render(rep, cfg.format));
      return cli::exit_code(rep);
    }
    if (cmd == trans) {
      cfg.suite = "transport";
      const Report rep = cli::run_suite(cfg);
      cli::emit(cfg, cli::render(rep, cfg.format));
      return cli::exit_code(rep);
    }
    cli::Context ctx(cfg);
    if (cmd == hol) {
      if (method != "nomizu") throw InputError("unsupported method: " + method);
      Report rep = cli::run_holonomy_suite(ctx);
      rep.config_echo = cli::echo(cfg);
      const auto summary = cli::holonomy_summary(ctx, rep);
      cli::emit(cfg, cfg.format == "json" ? summary.dump(2) + "\n" : text_of_holonomy(summary, rep));
      return cli::exit_code(rep);
    }
    if (cmd == inv) {
      const auto j = cli::invariants(valence, ctx);
      cli::emit(cfg, cfg.format == "json" ? j.dump(2) + "\n"
                                          : "(" + j["valence"].get<std::string>() + ") " +
                                                std::to_string(j["dim"].get<std::size_t>()) + "\n");
      return cli::kExitOk;
    }
    cli::emit(cfg, cli::dump(what, ctx).dump(2) + "\n");
    return cli::kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return cli::kExitCheckFailed;
  }
}
