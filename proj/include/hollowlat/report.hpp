#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hollowlat {

enum class Verdict { pass, fail, hypothesis_unmet };

std::string_view to_string(Verdict verdict);

struct Finding {
  std::string claim;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> witnesses;
};

/// Ordered findings of one analysis plus the interpretive readings it used.
struct Report {
  std::string subject;
  std::vector<Finding> findings;
  std::vector<std::string> flags;

  Finding& add(std::string claim, Verdict verdict, std::vector<std::string> witnesses = {});
  /// Adds a flag once; repeated flags are ignored.
  void flag(const std::string& text);
  /// Appends another report's findings and flags.
  void merge(const Report& other);

  std::size_t count(Verdict verdict) const;
  const Finding* find(std::string_view claim) const;
};

/// Exit-code contract: 1 on any fail, 0 when nothing failed and at least one
/// claim passed (or there are no claims), 2 when every claim was gated off.
int exit_code(const Report& report);

/// Line-oriented machine format:
///   hollowlat-report 1
///   subject <text>
///   flag <text>
///   claim <id> <verdict> [witness...]
std::string to_machine_text(const Report& report);
std::string to_human_text(const Report& report);

inline constexpr int kReportSchemaVersion = 1;

}  // namespace hollowlat
