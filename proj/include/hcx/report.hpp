#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace hcx {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Check {
  std::string id;
  std::string anchor;  // topic slug tying the check to the result it certifies
  Status status = Status::pass;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0.0;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

/// Ordered collection of named checks. Each check's elapsed_ms is the wall
/// time since the previous check was recorded (or since construction).
class Report {
 public:
  Report();

  /// Records a pass/fail check. Ids must be unique within the report.
  const Check& record(std::string id, std::string anchor, std::string expected,
                      std::string actual, bool ok);
  /// Convenience: pass iff expected == actual.
  const Check& expect_eq(std::string id, std::string anchor, std::string expected,
                         std::string actual);
  const Check& skip(std::string id, std::string anchor, std::string reason);

  /// Appends every check of `other`; duplicate ids throw.
  void merge(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  Summary summary() const;
  bool all_passed() const { return summary().failed == 0; }

  nlohmann::json config_echo = nlohmann::json::object();

  /// Machine form; checks sorted by id.
  nlohmann::json to_json() const;
  /// Human form; checks in recording order.
  std::string to_text() const;

 private:
  void push(Check c);

  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point lap_;
};

}  // namespace hcx
