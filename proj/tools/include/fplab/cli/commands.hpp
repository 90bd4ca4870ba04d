#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fplab/cli/report.hpp"

namespace fplab::cli {

/// "2,4,5" -> {2,4,5}. Throws ValidationError on anything else.
std::vector<int> parse_int_list(const std::string& s);

struct Target {
  std::optional<TypeVector2> type;
  std::optional<PseudoTypeVector> pseudo;
  std::optional<std::pair<int, int>> ct;  // (t, r)
  bool double_points = false;
};

struct PredictOptions {
  Target target;
};

struct VerifyOptions {
  Target target;
  /// standard | spread-out | standard-pseudo | generic | ct | ctr | ch | lattice | cubic;
  /// empty picks the construction the prediction is stated for.
  std::string config;
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::Modular;
  bool generic_lines = false;
  long lattice_width = 0;
  bool lattice_scatter = false;
  int cubic_points = 10;
  std::ostream* dump = nullptr;
};

struct ScanOptions {
  int max_sigma = 12;
  std::string what = "hf";  // hf | betti
  int trials = 2;           // seeds per confirmed vector and family
  int confirm_max = 6;      // vectors with n_r <= confirm_max get oracle runs
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::Modular;
  unsigned jobs = 1;
};

struct ScanResult {
  std::vector<RunReport> items;
  RunReport summary;
};

struct ExtremalOptions {
  int t = 4;
  int r = 0;
  int trials = 50;
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::Modular;
  unsigned jobs = 1;
  /// Support samplers used in rotation: free, line-heavy, perturbed, conic-heavy.
  /// Empty means all four.
  std::vector<std::string> strategies;
};

struct ReproduceOptions {
  std::string id;
  std::uint64_t seed = 0;
  int trials = 128;  // seed search budget where a witness has to be found
  unsigned jobs = 1;
};

/// Configuration requested by the options, validated.
Configuration build_configuration(const VerifyOptions& o);

RunReport cmd_predict(const PredictOptions& o);
RunReport cmd_verify(const VerifyOptions& o);
ScanResult cmd_scan(const ScanOptions& o);
RunReport cmd_extremal(const ExtremalOptions& o);
RunReport cmd_reproduce(const ReproduceOptions& o);

/// (t, r) from a first difference of the form (1, 2, ..., t-1) or (1, ..., t-1, r).
std::pair<int, int> ct_shape_from_delta_h(const std::vector<int>& delta_h);

std::vector<std::string> reproduce_ids();

/// Human-readable rendering of a report, as printed by the tool.
std::string render(const RunReport& r);

/// Entire command line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fplab::cli
