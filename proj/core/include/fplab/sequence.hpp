#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fplab {

/// Finitely supported sequence of nonnegative integers indexed from degree 0.
///
/// Used for first differences of Hilbert functions (h-vectors), the partial
/// sums of those, and the row sequences that make up a shifted sum. Trailing
/// zeros are always trimmed, so two sequences compare equal exactly when they
/// agree in every degree.
class OSequence {
 public:
  using value_type = std::int64_t;

  OSequence() = default;
  OSequence(std::initializer_list<value_type> values);
  explicit OSequence(std::vector<value_type> values);

  /// Sequence that is 1 in degrees 0..length-1.
  static OSequence ones(std::size_t length);

  /// Value in degree t; zero outside the support.
  [[nodiscard]] value_type operator[](std::size_t t) const noexcept {
    return t < values_.size() ? values_[t] : 0;
  }
  [[nodiscard]] value_type at(long long t) const noexcept {
    return t < 0 ? 0 : (*this)[static_cast<std::size_t>(t)];
  }

  [[nodiscard]] std::span<const value_type> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }

  [[nodiscard]] value_type sum() const noexcept;

  /// Least t with values[t] == 0, i.e. the index after the last nonzero entry
  /// for an h-vector.
  [[nodiscard]] std::size_t sigma() const noexcept;

  /// Least t with values[t] < t + 1. For the first difference of a Hilbert
  /// function this is the initial degree of the ideal.
  [[nodiscard]] std::size_t alpha() const noexcept;

  /// Rightward shift by k places.
  [[nodiscard]] OSequence shifted(std::size_t k) const;

  /// Partial sums in degrees 0..upto (inclusive).
  [[nodiscard]] std::vector<value_type> partial_sums(std::size_t upto) const;

  /// True when the sequence is non-increasing from degree alpha() on.
  [[nodiscard]] bool non_increasing_from_alpha() const noexcept;

  OSequence& operator+=(const OSequence& other);
  friend OSequence operator+(OSequence lhs, const OSequence& rhs) { return lhs += rhs; }
  friend bool operator==(const OSequence&, const OSequence&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<value_type> values_;
};

std::ostream& operator<<(std::ostream& os, const OSequence& seq);

/// First difference of a finite function: out[t] = f[t] - f[t-1], f[-1] = 0.
/// Throws ValidationError if a difference is negative.
OSequence first_difference_of(std::span<const std::int64_t> f);

}  // namespace fplab
