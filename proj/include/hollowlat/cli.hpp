#pragma once

// Front end shared by the executable and the tests: spec-file parsing,
// canonical emitters, DOT output and command dispatch.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hollowlat/action.hpp"
#include "hollowlat/module.hpp"
#include "hollowlat/report.hpp"
#include "hollowlat/spectra.hpp"

namespace hollowlat {

/// A module spec ("ring n" / "module d1 ... dk") or a lattice spec with its
/// acting poset and action table.
using ParsedSpec = std::variant<FiniteModule, PosetAction>;

/// Throws ParseError (with the line number) on malformed text and
/// ValidationError when the described structure violates its axioms.
ParsedSpec parse_spec_text(std::string_view text);
ParsedSpec parse_spec(const std::string& path);

std::string emit_module_spec(const FiniteModule& module);
/// Covering pairs, poset covers and the full action table.
std::string emit_lattice_spec(const PosetAction& action);

/// Hasse diagram, covering edges only, bottom at the bottom. Highlighted
/// nodes are filled and carry `class="<highlight_class>"`.
std::string emit_dot(const FiniteLattice& lattice, const Labels& labels, std::span<const ElementId> highlights,
                     std::string_view highlight_class);

inline constexpr std::string_view kCommands[] = {"submodules", "spectra", "pshollow", "represent",
                                                 "minimize",   "verify",  "hasse"};

struct AnalysisRequest {
  std::string command;
  std::string input_path;
  std::size_t max_terms = 0;  // 0: no limit
  std::optional<std::size_t> bound;
  std::optional<std::string> dot_path;
  std::optional<std::string> report_path;
  std::optional<std::string> representation;  // minimize: "(3);(4);(6)"
  SpectrumKind highlight = SpectrumKind::second;
};

struct RunResult {
  Report report;
  int exit_code = 0;
  std::string output;  // what the executable prints on stdout
  std::string error;   // input error message when exit_code is 3
};

inline constexpr int kInputErrorExit = 3;

/// Runs one command. Input errors (unreadable file, ParseError,
/// ValidationError, BoundExceeded, unknown command) give exit code 3.
RunResult run(const AnalysisRequest& request);

}  // namespace hollowlat
