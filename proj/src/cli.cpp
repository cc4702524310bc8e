#include "hollowlat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hollowlat/error.hpp"
#include "hollowlat/module_classes.hpp"
#include "hollowlat/pshollow.hpp"

namespace hollowlat {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(token);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t number_at(const Line& line, std::size_t i) {
  const auto& token = line.tokens[i];
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_error(line.number, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity + 1) {
    parse_error(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(arity) + " argument(s)");
  }
}

FiniteModule parse_module(const std::vector<Line>& lines) {
  const auto& ring_line = lines[0];
  expect_arity(ring_line, 1);
  const auto n = number_at(ring_line, 1);
  if (lines.size() < 2) parse_error(ring_line.number, "missing 'module' line");
  const auto& module_line = lines[1];
  if (module_line.tokens[0] != "module") parse_error(module_line.number, "expected 'module'");
  if (module_line.tokens.size() < 2) parse_error(module_line.number, "'module' needs at least one factor");
  if (lines.size() > 2) parse_error(lines[2].number, "unexpected content after 'module'");
  if (n > 1'000'000) throw Error(ErrorKind::ValidationError, "ring modulus too large");
  std::vector<std::uint32_t> factors;
  for (std::size_t i = 1; i < module_line.tokens.size(); ++i) {
    const auto d = number_at(module_line, i);
    if (d > n) throw Error(ErrorKind::ValidationError, "factor " + std::to_string(d) + " does not divide " + std::to_string(n));
    factors.push_back(static_cast<std::uint32_t>(d));
  }
  return FiniteModule(Ring(static_cast<std::uint32_t>(n)), std::move(factors));
}

PosetAction parse_lattice(const std::vector<Line>& lines) {
  constexpr std::uint64_t kMaxSize = 4096;
  const auto& head = lines[0];
  expect_arity(head, 1);
  const auto size = number_at(head, 1);
  if (size == 0 || size > kMaxSize) parse_error(head.number, "lattice size must be in [1, 4096]");

  std::vector<OrderPair> leq;
  std::optional<std::uint64_t> poset_size;
  std::size_t poset_line = 0;
  std::vector<OrderPair> sleq;
  std::map<std::pair<std::uint64_t, std::uint64_t>, ElementId> act;
  std::size_t last_line = head.number;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    last_line = line.number;
    const auto& key = line.tokens[0];
    if (key == "leq") {
      expect_arity(line, 2);
      const auto a = number_at(line, 1);
      const auto b = number_at(line, 2);
      if (a >= size || b >= size) parse_error(line.number, "element index out of range");
      leq.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
    } else if (key == "poset") {
      expect_arity(line, 1);
      if (poset_size) parse_error(line.number, "duplicate 'poset' line");
      poset_size = number_at(line, 1);
      poset_line = line.number;
      if (*poset_size == 0 || *poset_size > kMaxSize) parse_error(line.number, "poset size must be in [1, 4096]");
    } else if (key == "sleq" || key == "act") {
      if (!poset_size) parse_error(line.number, "'" + key + "' before 'poset'");
      if (key == "sleq") {
        expect_arity(line, 2);
        const auto a = number_at(line, 1);
        const auto b = number_at(line, 2);
        if (a >= *poset_size || b >= *poset_size) parse_error(line.number, "poset index out of range");
        sleq.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
      } else {
        expect_arity(line, 3);
        const auto s = number_at(line, 1);
        const auto x = number_at(line, 2);
        const auto y = number_at(line, 3);
        if (s >= *poset_size || x >= size || y >= size) parse_error(line.number, "action index out of range");
        const auto [it, inserted] = act.emplace(std::pair{s, x}, static_cast<ElementId>(y));
        if (!inserted && it->second != y) parse_error(line.number, "conflicting 'act' entries");
      }
    } else {
      parse_error(line.number, "unknown keyword '" + key + "'");
    }
  }

  try {
    auto lattice = FiniteLattice::build(size, leq);
    if (!poset_size) {
      if (!act.empty()) parse_error(last_line, "'act' without 'poset'");
      return PosetAction::identity(std::move(lattice), FinitePoset::antichain(1));
    }
    auto poset = FinitePoset::from_pairs(*poset_size, sleq);
    std::vector<ElementId> table(*poset_size * size);
    for (std::uint64_t s = 0; s < *poset_size; ++s) {
      for (std::uint64_t x = 0; x < size; ++x) {
        auto it = act.find({s, x});
        if (it == act.end()) {
          parse_error(poset_line, "missing 'act " + std::to_string(s) + " " + std::to_string(x) + " _'");
        }
        table[s * size + x] = it->second;
      }
    }
    return PosetAction(std::move(lattice), std::move(poset), std::move(table));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

}  // namespace

ParsedSpec parse_spec_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) parse_error(1, "empty spec");
  const auto& key = lines[0].tokens[0];
  if (key == "ring") return parse_module(lines);
  if (key == "lattice") return parse_lattice(lines);
  parse_error(lines[0].number, "expected 'ring' or 'lattice', got '" + key + "'");
}

ParsedSpec parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

std::string emit_module_spec(const FiniteModule& module) {
  std::string out = "ring " + std::to_string(module.ring().modulus()) + "\nmodule";
  for (auto d : module.factors()) out += " " + std::to_string(d);
  return out + "\n";
}

std::string emit_lattice_spec(const PosetAction& action) {
  const auto& L = action.lattice();
  const auto& S = action.poset();
  std::ostringstream out;
  out << "lattice " << L.size() << '\n';
  for (const auto& [a, b] : L.covers()) out << "leq " << a << ' ' << b << '\n';
  out << "poset " << S.size() << '\n';
  for (const auto& [a, b] : S.covers()) out << "sleq " << a << ' ' << b << '\n';
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t x = 0; x < L.size(); ++x) {
      out << "act " << s << ' ' << x << ' ' << action.apply(static_cast<ElementId>(s), static_cast<ElementId>(x))
          << '\n';
    }
  }
  return out.str();
}

std::string emit_dot(const FiniteLattice& lattice, const Labels& labels, std::span<const ElementId> highlights,
                     std::string_view highlight_class) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (ElementId x = 0; x < lattice.size(); ++x) {
    out << "  n" << x << " [label=\"" << label_of(labels, x) << '"';
    if (std::find(highlights.begin(), highlights.end(), x) != highlights.end()) {
      out << ", style=filled, fillcolor=\"lightblue\", class=\"" << highlight_class << '"';
    }
    out << "];\n";
  }
  for (const auto& [a, b] : lattice.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::size_t> parse_representation(const SubmoduleLattice& sub, std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(';', pos), text.size());
    auto name = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (!name.empty()) {
      if (std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; })) name = "(" + name + ")";
      const auto& labels = sub.labels();
      const auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw Error(ErrorKind::ValidationError, "unknown submodule '" + name + "'");
      out.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    if (end == text.size()) break;
  }
  if (out.empty()) throw Error(ErrorKind::ValidationError, "empty representation");
  return out;
}

std::string lattice_subject(const PosetAction& action) {
  return "lattice " + std::to_string(action.lattice().size()) + " with poset " + std::to_string(action.acting_size());
}

void add_spectra(Report& report, const PosetAction& action, const Labels& labels) {
  for (auto kind : kAllSpectrumKinds) {
    report.add("spectrum." + std::string(to_string(kind)), Verdict::pass,
               {format_set(labels, spectrum(action, kind))});
  }
  report.flag(ps_hollow_reading_flag());
  report.flag(coprime_domain_flag());
}

std::string profile_witness(const SubmoduleLattice& sub, const HollowProfile& p) {
  return sub.name(p.submodule) + ":A=" + ideal_set_name(sub.ring(), p.covering) +
         ":H=" + ideal_set_name(sub.ring(), p.minimal) + ":In=" + sub.name(p.hull);
}

Report module_command(const AnalysisRequest& request, const SubmoduleLattice& sub) {
  Report report;
  report.subject = sub.module().description();
  const auto& cmd = request.command;
  if (cmd == "submodules") {
    report.add("submodules.count", Verdict::pass, {std::to_string(sub.size())});
    report.add("submodules.list", Verdict::pass, sub.labels());
  } else if (cmd == "spectra") {
    add_spectra(report, sub.action(), sub.labels());
    report.add("module.second-submodules", Verdict::pass, {sub.names(second_submodules(sub))});
  } else if (cmd == "pshollow") {
    report.flag(ps_hollow_reading_flag());
    const auto ps = ps_hollow_submodules(sub);
    std::vector<std::string> names;
    for (auto n : ps) names.push_back(sub.name(n));
    report.add("pshollow.list", Verdict::pass, names);
    for (auto n : ps) report.add("pshollow.profile", Verdict::pass, {profile_witness(sub, profile(sub, n))});
  } else if (cmd == "represent") {
    const auto reps = enumerate_minimal_representations(sub, request.max_terms);
    if (reps.empty()) report.add("represent.minimal", Verdict::hypothesis_unmet, {"no-minimal-representation"});
    for (const auto& r : reps) {
      std::vector<std::string> w{sub.names(r.summands)};
      for (const auto& p : r.profiles) {
        w.push_back(sub.name(p.submodule) + ":H=" + ideal_set_name(sub.ring(), p.minimal) + ":In=" + sub.name(p.hull));
      }
      report.add("represent.minimal", Verdict::pass, std::move(w));
    }
    if (const auto seconds = minimal_second_representation(sub)) {
      report.add("represent.second", Verdict::pass,
                 {sub.names(*seconds), "att=" + ideal_set_name(sub.ring(), attached_primes(sub, *seconds))});
    } else {
      report.add("represent.second", Verdict::hypothesis_unmet, {"not-second-representable"});
    }
  } else if (cmd == "minimize") {
    const auto summands = request.representation ? parse_representation(sub, *request.representation)
                                                 : ps_hollow_submodules(sub);
    try {
      const auto input = make_representation(sub, summands);
      const auto out = minimize(sub, input);
      std::vector<std::string> w{"input=" + sub.names(input.summands), "output=" + sub.names(out.summands)};
      for (const auto& p : out.profiles) w.push_back(profile_witness(sub, p));
      report.add("minimize.result", Verdict::pass, std::move(w));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::HypothesisUnmet) {
        report.add("minimize.result", Verdict::hypothesis_unmet, {"input-not-a-ps-hollow-representation"});
      } else if (e.kind() == ErrorKind::StepFailed) {
        const std::string msg = e.what();
        const auto at = msg.find("step ");
        report.add("minimize.result", Verdict::fail,
                   {"step-failed:" + (at == std::string::npos ? std::string("?") : msg.substr(at + 5, 1))});
      } else {
        throw;
      }
    }
  } else if (cmd == "verify") {
    report = check_module_battery(sub, request.max_terms);
  } else if (cmd == "hasse") {
    report.add("hasse.highlight", Verdict::pass,
               {std::string(to_string(request.highlight)),
                format_set(sub.labels(), spectrum(sub.action(), request.highlight))});
  }
  return report;
}

Report lattice_command(const AnalysisRequest& request, const PosetAction& action) {
  Report report;
  report.subject = lattice_subject(action);
  const auto& cmd = request.command;
  if (cmd == "spectra") {
    add_spectra(report, action, {});
  } else if (cmd == "verify") {
    report = check_lattice_battery(action);
    report.subject = lattice_subject(action);
  } else if (cmd == "hasse") {
    report.add("hasse.highlight", Verdict::pass,
               {std::string(to_string(request.highlight)), format_set({}, spectrum(action, request.highlight))});
  } else {
    throw Error(ErrorKind::ValidationError, "'" + cmd + "' needs a module spec");
  }
  return report;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ValidationError, "cannot write " + path);
  out << text;
}

}  // namespace

RunResult run(const AnalysisRequest& request) {
  RunResult result;
  try {
    if (std::find(std::begin(kCommands), std::end(kCommands), request.command) == std::end(kCommands)) {
      throw Error(ErrorKind::ValidationError, "unknown command '" + request.command + "'");
    }
    const auto spec = parse_spec(request.input_path);
    std::string dot;
    if (const auto* module = std::get_if<FiniteModule>(&spec)) {
      const SubmoduleLattice sub(*module, request.bound.value_or(default_module_bound()));
      result.report = module_command(request, sub);
      if (request.command == "hasse" || request.dot_path) {
        const auto ids = spectrum(sub.action(), request.highlight);
        dot = emit_dot(sub.lattice(), sub.labels(), ids, to_string(request.highlight));
      }
    } else {
      const auto& action = std::get<PosetAction>(spec);
      result.report = lattice_command(request, action);
      if (request.command == "hasse" || request.dot_path) {
        const auto ids = spectrum(action, request.highlight);
        dot = emit_dot(action.lattice(), {}, ids, to_string(request.highlight));
      }
    }
    result.exit_code = exit_code(result.report);
    if (request.dot_path) {
      write_file(*request.dot_path, dot);
    }
    if (request.command == "hasse" && !request.dot_path) {
      result.output = dot;
    } else {
      result.output = to_human_text(result.report);
    }
    if (request.report_path) write_file(*request.report_path, to_machine_text(result.report));
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::ValidationError:
      case ErrorKind::BoundExceeded:
        result = RunResult{};
        result.exit_code = kInputErrorExit;
        result.error = e.what();
        break;
      default:
        throw;
    }
  }
  return result;
}

}  // namespace hollowlat
