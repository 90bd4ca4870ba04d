#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fplab/sequence.hpp"

namespace fplab {

/// Strictly increasing vector of positive integers (d_1 < ... < d_r).
///
/// Encodes the row sizes of a linear configuration, and is in bijection with
/// the Hilbert functions of reduced point sets in the plane.
class TypeVector2 {
 public:
  TypeVector2(std::initializer_list<int> entries);
  explicit TypeVector2(std::vector<int> entries);

  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  [[nodiscard]] int operator[](std::size_t i) const { return entries_.at(i); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] int alpha() const noexcept { return static_cast<int>(entries_.size()); }
  [[nodiscard]] int sigma() const noexcept { return entries_.back(); }
  [[nodiscard]] int max() const noexcept { return entries_.back(); }
  [[nodiscard]] int total() const noexcept;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const TypeVector2&, const TypeVector2&) = default;
  friend auto operator<=>(const TypeVector2&, const TypeVector2&) = default;

 private:
  std::vector<int> entries_;
};

/// Weakly increasing vector of positive integers in which no value occurs
/// three times.
class PseudoTypeVector {
 public:
  PseudoTypeVector(std::initializer_list<int> entries);
  explicit PseudoTypeVector(std::vector<int> entries);
  explicit PseudoTypeVector(const TypeVector2& t);

  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  [[nodiscard]] int operator[](std::size_t i) const { return entries_.at(i); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] int max() const noexcept { return entries_.back(); }
  [[nodiscard]] int total() const noexcept;

  /// True when no entry repeats, i.e. the vector is also a 2-type vector.
  [[nodiscard]] bool is_strict() const noexcept;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const PseudoTypeVector&, const PseudoTypeVector&) = default;

 private:
  std::vector<int> entries_;
};

/// First difference (m_1 - 0, m_2 - m_1, ...) of a pseudo type vector.
struct DiffVector {
  std::vector<int> entries;

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
  [[nodiscard]] int zero_count() const noexcept;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const DiffVector&, const DiffVector&) = default;
};

/// Degrees of the minimal generators (beta1) and first syzygies (beta2) of a
/// height-2 ideal in three variables, each kept sorted.
struct BettiTable {
  std::vector<int> beta1;
  std::vector<int> beta2;

  BettiTable() = default;
  BettiTable(std::vector<int> generators, std::vector<int> syzygies);

  /// Resolution of the unit ideal: one generator of degree 0. This is the
  /// starting state of a linkage run from the empty scheme.
  static BettiTable unit_ideal();

  [[nodiscard]] int generator_count() const noexcept { return static_cast<int>(beta1.size()); }

  /// Coefficients of 1 - sum t^beta1 + sum t^beta2 (index = degree).
  [[nodiscard]] std::vector<long long> numerator() const;

  /// True when 1 - sum t^beta1 + sum t^beta2 == (1-t)^2 * sum delta_h(d) t^d.
  [[nodiscard]] bool consistent_with(const OSequence& delta_h) const;

  /// Structural invariants: |beta1| = |beta2| + 1 and min beta2 > min beta1.
  [[nodiscard]] bool well_formed() const noexcept;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Coefficients of (1-t)^2 * sum delta_h(d) t^d.
std::vector<long long> hilbert_numerator(const OSequence& delta_h);

// --- reduced points and type vectors -------------------------------------

/// Delta h of the Hilbert function corresponding to T: a shifted sum of the
/// row indicators, row i (of d_i ones) shifted by r - i.
OSequence hf_from_type_vector(const TypeVector2& t);

/// Inverse of hf_from_type_vector. Throws NotAnHVectorError when delta_h is
/// not the first difference of the Hilbert function of points in the plane.
TypeVector2 type_vector_from_hf(const OSequence& delta_h);

// --- pseudo type vectors ---------------------------------------------------

DiffVector first_difference(const PseudoTypeVector& t);

/// Half-open index range [first, last) into a DiffVector.
using Segment = std::pair<std::size_t, std::size_t>;

/// First contiguous segment (0, 1, ..., 1, 0), or nullopt.
std::optional<Segment> find_condition_violation(const DiffVector& d);

/// True iff between any two zero entries there is an entry > 1.
bool condition_holds(const DiffVector& d);

/// First contiguous segment 1, 0, (2, 0)*, 1, or nullopt.
std::optional<Segment> find_bad_segment(const DiffVector& d);

/// True iff d contains one of (1,0,1), (1,0,2,0,1), (1,0,2,0,2,0,1), ...
bool bad_list_hit(const DiffVector& d);

/// Shifted-sum O-sequence attached to a pseudo type vector.
OSequence standard_osequence(const PseudoTypeVector& t);

/// First difference of the Hilbert function of the complete intersection of
/// forms of degrees a and b.
OSequence complete_intersection_delta_h(int a, int b);

/// Delta h after a basic double link G * I_X + (F) with deg F = d1 and
/// deg G = d2 in {1, 2}. An empty delta_h_x stands for the empty scheme.
OSequence bdl_hf_step(const OSequence& delta_h_x, int d1, int d2);

/// Betti table after the same link; with f_is_minimal_generator the
/// cancelling pair in degree d1 + d2 splits off.
BettiTable bdl_betti_step(const BettiTable& b, int d1, int d2, bool f_is_minimal_generator);

/// One basic double link of a run along a pseudo type vector.
struct LinkStep {
  int f_degree;  // deg F = m_i
  int g_degree;  // 1 for a single row, 2 for a repeated pair
};

/// Steps of the linkage run along t, grouping each repeated pair into one
/// quadric step.
std::vector<LinkStep> link_steps(const PseudoTypeVector& t);

/// Iterate bdl_hf_step along t starting from the empty scheme (quadric step
/// for each repeated pair).
OSequence bdl_hf_run(const PseudoTypeVector& t);

/// Same, but each repeated pair is done as two linear steps with the same F.
OSequence bdl_hf_run_linear_only(const PseudoTypeVector& t);

/// Betti table of the all-no-split linkage run along t.
BettiTable bdl_betti_run(const PseudoTypeVector& t);

/// Linkage run with an explicit split flag per step (size must match
/// link_steps(t)).
BettiTable bdl_betti_run(const PseudoTypeVector& t, const std::vector<bool>& splits);

struct PseudoPrediction {
  bool hf_unique = false;
  /// Always the standard O-sequence. When hf_unique is false this is realized
  /// by the standard pseudo configuration but is not universal for the type.
  OSequence delta_h;
  std::optional<int> regularity;
  std::optional<bool> betti_unique;
  std::optional<BettiTable> betti;
  std::optional<int> min_gen_count;
};

PseudoPrediction predict_pseudo(const PseudoTypeVector& t);

// --- double point schemes ---------------------------------------------------

/// Sorted merge of {n_i} and {2 n_i}.
PseudoTypeVector associated_pseudo_type(const TypeVector2& t);

struct DoubleSchemeClassification {
  bool hf_unique = false;
  bool betti_unique = false;
  OSequence predicted_delta_h;
  std::optional<BettiTable> predicted_betti;
  int regularity = 0;
  PseudoTypeVector pseudo_type{1};
};

DoubleSchemeClassification classify_double_scheme(const TypeVector2& t);

/// Pseudo type of a linear configuration of type t with one point removed
/// from line line_index (1-based).
PseudoTypeVector removed_point_type(const TypeVector2& t, std::size_t line_index);

// --- pairwise intersections of generic lines --------------------------------

/// Delta h of the pairwise intersections of t general lines: (1, 2, ..., t-1).
OSequence ct_delta_h(int t);

/// Delta h of the double scheme on C_{t,r}. The r = 0 case is the closed
/// form (1, ..., t, t, ..., t) with t - 1 copies of t; r = t is Z_{t+1};
/// otherwise only the tabulated values for t in {4, 5} are known and other
/// arguments throw UnsupportedError.
OSequence ztr_delta_h(int t, int r);

}  // namespace fplab
