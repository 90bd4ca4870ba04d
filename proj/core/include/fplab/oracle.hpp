#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fplab/config.hpp"
#include "fplab/linalg.hpp"
#include "fplab/sequence.hpp"
#include "fplab/typevec.hpp"

namespace fplab {

enum class ArithmeticMode { Modular, Exact };

std::string to_string(ArithmeticMode m);
ArithmeticMode arithmetic_mode_from_string(const std::string& s);

struct OracleOptions {
  ArithmeticMode mode = ArithmeticMode::Modular;
  /// Seeds the choice of the two primes in modular mode.
  std::uint64_t prime_seed = 0x9e3779b97f4a7c15ULL;
  /// When set, every condition matrix that is built is written here.
  std::ostream* dump = nullptr;
};

struct HFRecord {
  std::vector<std::int64_t> h;  // h(0..sigma); h(sigma) = degree
  OSequence delta_h;
  int alpha = 0;
  int sigma = 0;
  int regularity = 0;
  long degree = 0;

  friend bool operator==(const HFRecord&, const HFRecord&) = default;
};

struct OracleResult {
  HFRecord hf;
  BettiTable betti;
  ArithmeticMode mode = ArithmeticMode::Modular;
  /// Degrees in which the modular path disagreed with itself and was redone exactly.
  int escalations = 0;
};

/// Exponent triples of degree d in graded lex order, x > y > z.
std::vector<std::array<int, 3>> monomials(int d);

/// Position of x^i y^j z^(d-i-j) in monomials(d).
std::size_t monomial_index(int d, int i, int j);

/// Integer condition matrix in degree d: one row per simple point, three
/// (the partials) per double point, columns ordered as monomials(d).
IntMatrix condition_matrix(const Configuration& c, int d);

/// Rows as "num/den" separated by single spaces, one row per line.
void write_matrix(std::ostream& os, const IntMatrix& m);

HFRecord hilbert_function(const Configuration& c, const OracleOptions& opts = {});
std::vector<int> generator_degrees(const Configuration& c, const OracleOptions& opts = {});
BettiTable betti_table(const Configuration& c, const OracleOptions& opts = {});

/// HF and Betti table together, sharing the rank computations.
OracleResult analyze(const Configuration& c, const OracleOptions& opts = {});

/// Betti table from generator degrees and the h-vector via the Hilbert series.
/// Throws InconsistencyError when a syzygy count comes out negative or the
/// counts do not fit a height-2 resolution.
BettiTable betti_from_generators(const std::vector<int>& beta1, const OSequence& delta_h);

}  // namespace fplab
