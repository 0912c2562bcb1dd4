#include "hcx/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcx {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Report::Report() : lap_(std::chrono::steady_clock::now()) {}

void Report::push(Check c) {
  if (find(c.id) != nullptr) throw std::logic_error("duplicate check id: " + c.id);
  auto now = std::chrono::steady_clock::now();
  c.elapsed_ms = std::chrono::duration<double, std::milli>(now - lap_).count();
  lap_ = now;
  checks_.push_back(std::move(c));
}

const Check& Report::record(std::string id, std::string anchor, std::string expected,
                            std::string actual, bool ok) {
  // A failing check must show a discrepancy.
  if (!ok && expected == actual) actual += " (check failed)";
  push(Check{std::move(id), std::move(anchor), ok ? Status::pass : Status::fail,
             std::move(expected), std::move(actual), 0.0});
  return checks_.back();
}

const Check& Report::expect_eq(std::string id, std::string anchor, std::string expected,
                               std::string actual) {
  const bool ok = expected == actual;
  return record(std::move(id), std::move(anchor), std::move(expected), std::move(actual), ok);
}

const Check& Report::skip(std::string id, std::string anchor, std::string reason) {
  push(Check{std::move(id), std::move(anchor), Status::skipped, "n/a", std::move(reason), 0.0});
  return checks_.back();
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    if (find(c.id) != nullptr) throw std::logic_error("duplicate check id: " + c.id);
    checks_.push_back(c);
  }
  lap_ = std::chrono::steady_clock::now();
}

const Check* Report::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

Summary Report::summary() const {
  Summary s;
  s.total = checks_.size();
  for (const auto& c : checks_) {
    switch (c.status) {
      case Status::pass: ++s.passed; break;
      case Status::fail: ++s.failed; break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

nlohmann::json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks_) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });

  nlohmann::json checks = nlohmann::json::array();
  for (const Check* c : sorted) {
    checks.push_back({{"id", c->id},
                      {"anchor", c->anchor},
                      {"status", to_string(c->status)},
                      {"expected", c->expected},
                      {"actual", c->actual},
                      {"elapsed_ms", c->elapsed_ms}});
  }
  const Summary s = summary();
  return {{"checks", std::move(checks)},
          {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}},
          {"config_echo", config_echo}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << "[" << to_string(c.status) << "] " << c.id << "  expected=" << c.expected
        << "  actual=" << c.actual << "  (" << c.anchor << ")\n";
  }
  const Summary s = summary();
  out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", skipped "
      << s.skipped << "\n";
  return out.str();
}

}  // namespace hcx
