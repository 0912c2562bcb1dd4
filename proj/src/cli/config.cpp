#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hcx/cli.hpp"
#include "hcx/errors.hpp"

namespace hcx::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_integer(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw InputError("invalid integer for " + key + ": '" + value + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw InputError("invalid number for " + key + ": '" + value + "'");
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "hypercomplex", "connection",
                                              "curvature", "holonomy", "transport"};
  return names;
}

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "suite")
    cfg.suite = value;
  else if (key == "format")
    cfg.format = value;
  else if (key == "out")
    cfg.out = value;
  else if (key == "loops")
    cfg.loops = parse_integer<std::size_t>(key, value);
  else if (key == "scale")
    cfg.scale = parse_double(key, value);
  else if (key == "seed")
    cfg.seed = parse_integer<std::uint64_t>(key, value);
  else if (key == "tolerance")
    cfg.tolerance = parse_double(key, value);
  else
    throw InputError("unknown config key: " + key);
}

Config load_config_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

void validate(const Config& cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw InputError("unknown suite: " + cfg.suite);
  if (cfg.format != "json" && cfg.format != "text") throw InputError("format must be json or text");
  if (cfg.loops == 0) throw InputError("loops must be at least 1");
  if (!(cfg.scale > 0.0 && cfg.scale <= 0.5)) throw InputError("scale must lie in (0, 0.5]");
  if (!(cfg.tolerance > 0.0 && cfg.tolerance < 1.0)) throw InputError("tolerance must lie in (0, 1)");
}

nlohmann::json echo(const Config& cfg) {
  return {{"suite", cfg.suite}, {"format", cfg.format}, {"out", cfg.out},
          {"loops", cfg.loops}, {"scale", cfg.scale},   {"seed", cfg.seed},
          {"tolerance", cfg.tolerance}};
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  return rep.to_text();
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InputError("cannot write output file: " + cfg.out);
  out << text;
}

int exit_code(const Report& rep) { return rep.all_passed() ? kExitOk : kExitCheckFailed; }

}  // namespace hcx::cli
