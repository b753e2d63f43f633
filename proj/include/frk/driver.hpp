#pragma once

#include <map>
#include <string>
#include <vector>

#include "frk/json_io.hpp"

namespace frk {

/// Named problem inputs parsed from one JSON document.
struct ProblemDocument {
  std::map<std::string, FgaGroup> groups;
  std::map<std::string, AdditiveSet> sets;
  std::map<std::string, FreimanMap> maps;
  int default_order = 2;
};

ProblemDocument parse_document(const json& doc);

struct RunOptions {
  std::vector<std::string> sets;
  std::vector<std::string> maps;
  std::optional<int> order;  // overrides the document default
  bool preserve_zero = false;
  std::uint64_t budget = kDefaultHomBudget;
};

// Exit codes of the batch front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyViolated = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudgetExceeded = 3;

struct RunResult {
  json report;
  int exit_code = kExitOk;
};

const std::vector<std::string>& subcommand_names();

/// Structural diagnostics for a document against one subcommand; never
/// throws, problems come back as strings.
std::vector<std::string> validate(const json& doc, const std::string& subcommand,
                                  const RunOptions& opts);

RunResult run(const std::string& subcommand, const ProblemDocument& doc,
              const RunOptions& opts);

/// Canonical serialization: sorted keys, stable element order, byte-stable
/// across runs.
std::string emit_report(const json& report, bool as_json);

}  // namespace frk
