#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace fplab {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" with den > 0; integers keep the "/1" so the format is uniform.
std::string format_rational(const Rational& q);

/// Accepts "a/b" or "a". Throws ValidationError on malformed input or b == 0.
Rational parse_rational(const std::string& s);

/// Point of the projective plane with exact rational coordinates, stored with
/// its last nonzero coordinate scaled to 1 so that == is projective equality.
class ProjPoint {
 public:
  ProjPoint(Rational x, Rational y, Rational z);
  ProjPoint(long x, long y, long z);

  [[nodiscard]] const std::array<Rational, 3>& coords() const noexcept { return c_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_.at(i); }

  /// Coordinates scaled to coprime integers (sign of the normalized form).
  [[nodiscard]] std::array<Integer, 3> integer_coords() const;

  [[nodiscard]] std::string to_string() const;  // "[x:y:z]"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  std::array<Rational, 3> c_;
};

/// Linear form aX + bY + cZ, normalized the same way as ProjPoint.
class LineForm {
 public:
  LineForm(Rational a, Rational b, Rational c);
  LineForm(long a, long b, long c);

  /// Line through two distinct points (their cross product).
  static LineForm through(const ProjPoint& p, const ProjPoint& q);

  [[nodiscard]] const std::array<Rational, 3>& coeffs() const noexcept { return c_; }
  [[nodiscard]] Rational evaluate(const ProjPoint& p) const;
  [[nodiscard]] bool contains(const ProjPoint& p) const { return evaluate(p) == 0; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LineForm& a, const LineForm& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, 3> c_;
};

/// Intersection of two distinct lines.
ProjPoint intersect(const LineForm& a, const LineForm& b);

/// True when the three lines pass through one point.
bool concurrent(const LineForm& a, const LineForm& b, const LineForm& c);

}  // namespace fplab
