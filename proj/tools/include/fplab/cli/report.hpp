#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fplab/config.hpp"
#include "fplab/oracle.hpp"
#include "fplab/typevec.hpp"

namespace fplab::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "fplab-1";

enum class Verdict { Match, Mismatch, NotApplicable, ExpectedNonunique };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Process exit codes.
enum ExitCode : int {
  kExitMatch = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitDegenerate = 3,
};

/// One compared quantity. A soft check may deviate without failing the run
/// (it turns the verdict into expected-nonunique instead).
struct Check {
  std::string name;
  json expected;
  json actual;
  bool ok = false;
  bool soft = false;

  friend bool operator==(const Check&, const Check&) = default;
};

struct OracleSection {
  HFRecord hf;
  std::optional<BettiTable> betti;

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct RunReport {
  std::string command;
  json inputs = json::object();
  std::optional<json> predictions;
  std::optional<OracleSection> oracle_results;
  Verdict verdict = Verdict::NotApplicable;
  ArithmeticMode arithmetic_mode = ArithmeticMode::Modular;
  std::vector<Check> checks;
  json details = json::object();

  /// Adds a check and returns its outcome.
  bool check(std::string name, const json& expected, const json& actual, bool soft = false);

  /// Verdict from the checks: mismatch if a hard check failed, expected-nonunique
  /// if only soft checks deviated, match otherwise, not-applicable when empty.
  void settle();

  [[nodiscard]] int exit_code() const noexcept { return verdict == Verdict::Mismatch ? kExitMismatch : kExitMatch; }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// --- JSON conversions ----------------------------------------------------------

json to_json(const OSequence& s);
OSequence osequence_from_json(const json& j);

json to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);

json to_json(const HFRecord& h);
HFRecord hf_record_from_json(const json& j);

json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

json to_json(const PseudoPrediction& p);
json to_json(const DoubleSchemeClassification& c);

json to_json(const RunReport& r);
RunReport report_from_json(const json& j);

std::string emit(const RunReport& r, int indent = 2);
RunReport parse_report(const std::string& text);

}  // namespace fplab::cli
