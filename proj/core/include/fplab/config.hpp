#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fplab/rational.hpp"
#include "fplab/typevec.hpp"

namespace fplab {

enum class ConfigKind {
  StandardLinear,
  SpreadOut,
  StandardPseudo,
  GenericPseudo,
  Ct,
  Ctr,
  Ch,
  Free,
};

std::string to_string(ConfigKind k);
ConfigKind config_kind_from_string(const std::string& s);

struct ConfigPoint {
  ProjPoint point;
  int multiplicity = 1;                // 1 (reduced) or 2 (double point)
  std::optional<std::size_t> line;     // index into Configuration::lines

  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

struct Configuration {
  ConfigKind kind = ConfigKind::Free;
  std::vector<ConfigPoint> points;
  std::vector<LineForm> lines;

  /// Length of the scheme: 1 per simple point, 3 per double point.
  [[nodiscard]] long degree() const noexcept;
  [[nodiscard]] bool reduced() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Explicitly seeded stream. Bounded draws use rejection sampling on the raw
/// 64-bit output so results do not depend on the standard library's
/// distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

  template <class It>
  void shuffle(It first, It last) {
    const auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      const auto j = uniform(0, static_cast<long>(i));
      std::swap(first[i], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Coordinate bound for pseudo-random integer data.
inline constexpr long kCoordBound = 10000;
/// Resamples allowed before giving up with DegeneracyError.
inline constexpr int kRetryBudget = 64;

/// Lines with random integer coefficients, no two equal and no three through
/// a common point. The first k lines drawn from a seed do not depend on how
/// many are requested.
std::vector<LineForm> random_lines_general_position(std::size_t count, SeededRng& rng);

/// Random point on the line with a random integer parameter.
ProjPoint random_point_on_line(const LineForm& line, SeededRng& rng);

Configuration standard_linear_config(const TypeVector2& t);
Configuration spread_out_config(const TypeVector2& t);
Configuration standard_pseudo_config(const PseudoTypeVector& t);

/// Row of m_i points with distinct random integer x on y = p - i (or on a
/// random line when generic_lines is set).
Configuration generic_pseudo_config(const PseudoTypeVector& t, std::uint64_t seed,
                                    bool generic_lines = false);

/// Generic linear configuration: generic_pseudo_config of a strict type.
Configuration generic_linear_config(const TypeVector2& t, std::uint64_t seed,
                                    bool generic_lines = false);

/// Rows x = 0..m_i-1 as in the standard configuration, placed on distinct
/// random heights from [0, width). Both the standard and the spread-out
/// layouts are members, so seeds sweep through special positions. With
/// scatter, each row instead takes m_i distinct random x from [0, width).
/// A width of 0 picks max(m_p, p) + 1.
Configuration lattice_pseudo_config(const PseudoTypeVector& t, std::uint64_t seed, long width = 0,
                                    bool scatter = false);

/// Same points with multiplicity 2. Throws ValidationError when some point
/// already has multiplicity 2.
Configuration doubled(const Configuration& c);

Configuration ct_config(int t, std::uint64_t seed);
Configuration ctr_config(int t, int r, std::uint64_t seed);
Configuration ch_config(const TypeVector2& t, std::uint64_t seed);

/// n rational points of the smooth cubic y^2 z = x^3 + 17 z^3.
Configuration points_on_cubic(int n, std::uint64_t seed);

/// n distinct random points [x : y : 1].
Configuration free_config(int n, std::uint64_t seed);

/// Wraps explicit points as a reduced Free configuration.
Configuration config_from_points(const std::vector<ProjPoint>& pts);

}  // namespace fplab
