#include "hollowlat/report.hpp"

#include <algorithm>
#include <sstream>

namespace hollowlat {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_unmet: return "hypothesis-unmet";
  }
  return "fail";
}

Finding& Report::add(std::string claim, Verdict verdict, std::vector<std::string> witnesses) {
  findings.push_back(Finding{std::move(claim), verdict, std::move(witnesses)});
  return findings.back();
}

void Report::flag(const std::string& text) {
  if (std::find(flags.begin(), flags.end(), text) == flags.end()) flags.push_back(text);
}

void Report::merge(const Report& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  for (const auto& f : other.flags) flag(f);
}

std::size_t Report::count(Verdict verdict) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.verdict == verdict; }));
}

const Finding* Report::find(std::string_view claim) const {
  auto it = std::find_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.claim == claim; });
  return it == findings.end() ? nullptr : &*it;
}

int exit_code(const Report& report) {
  if (report.count(Verdict::fail) > 0) return 1;
  if (report.count(Verdict::pass) == 0 && report.count(Verdict::hypothesis_unmet) > 0) return 2;
  return 0;
}

std::string to_machine_text(const Report& report) {
  std::ostringstream out;
  out << "hollowlat-report " << kReportSchemaVersion << '\n';
  out << "subject " << report.subject << '\n';
  for (const auto& f : report.flags) out << "flag " << f << '\n';
  for (const auto& f : report.findings) {
    out << "claim " << f.claim << ' ' << to_string(f.verdict);
    for (const auto& w : f.witnesses) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

std::string to_human_text(const Report& report) {
  std::ostringstream out;
  out << "subject: " << report.subject << '\n';
  for (const auto& f : report.flags) out << "  note: " << f << '\n';
  for (const auto& f : report.findings) {
    out << "  [" << to_string(f.verdict) << "] " << f.claim;
    if (!f.witnesses.empty()) {
      out << ':';
      for (const auto& w : f.witnesses) out << ' ' << w;
    }
    out << '\n';
  }
  out << "summary: " << report.count(Verdict::pass) << " pass, " << report.count(Verdict::fail) << " fail, "
      << report.count(Verdict::hypothesis_unmet) << " hypothesis-unmet\n";
  return out.str();
}

}  // namespace hollowlat
