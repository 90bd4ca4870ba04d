#include "fplab/config.hpp"

#include <algorithm>
#include <set>

#include "fplab/errors.hpp"

namespace fplab {

std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::StandardLinear: return "standard-linear";
    case ConfigKind::SpreadOut: return "spread-out";
    case ConfigKind::StandardPseudo: return "standard-pseudo";
    case ConfigKind::GenericPseudo: return "generic-pseudo";
    case ConfigKind::Ct: return "Ct";
    case ConfigKind::Ctr: return "Ctr";
    case ConfigKind::Ch: return "Ch";
    case ConfigKind::Free: return "free";
  }
  fail_internal("unknown ConfigKind");
}

ConfigKind config_kind_from_string(const std::string& s) {
  for (auto k : {ConfigKind::StandardLinear, ConfigKind::SpreadOut, ConfigKind::StandardPseudo,
                 ConfigKind::GenericPseudo, ConfigKind::Ct, ConfigKind::Ctr, ConfigKind::Ch,
                 ConfigKind::Free}) {
    if (to_string(k) == s) return k;
  }
  throw ValidationError("unknown configuration kind '" + s + "'");
}

long Configuration::degree() const noexcept {
  long d = 0;
  for (const auto& p : points) d += p.multiplicity == 2 ? 3 : 1;
  return d;
}

bool Configuration::reduced() const noexcept {
  return std::all_of(points.begin(), points.end(), [](const ConfigPoint& p) { return p.multiplicity == 1; });
}

namespace {

bool linear_kind(ConfigKind k) {
  return k == ConfigKind::StandardLinear || k == ConfigKind::SpreadOut ||
         k == ConfigKind::StandardPseudo || k == ConfigKind::GenericPseudo;
}

}  // namespace

void Configuration::validate() const {
  std::set<ProjPoint> seen;
  for (const auto& p : points) {
    if (p.multiplicity != 1 && p.multiplicity != 2) {
      throw ValidationError("multiplicity must be 1 or 2 at " + p.point.to_string());
    }
    if (!seen.insert(p.point).second) throw ValidationError("repeated point " + p.point.to_string());
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) throw ValidationError("repeated line " + lines[i].to_string());
    }
  }
  for (const auto& p : points) {
    if (!p.line) {
      if (linear_kind(kind) || kind == ConfigKind::Ch) {
        throw ValidationError("unlabeled point " + p.point.to_string() + " in a line configuration");
      }
      continue;
    }
    if (*p.line >= lines.size()) throw ValidationError("line label out of range");
    if (!lines[*p.line].contains(p.point)) {
      throw ValidationError(p.point.to_string() + " is not on its line " + lines[*p.line].to_string());
    }
    // linear configurations forbid every foreign line; k-configurations only later ones
    const std::size_t from = kind == ConfigKind::Ch ? *p.line + 1 : 0;
    if (linear_kind(kind) || kind == ConfigKind::Ch) {
      for (std::size_t j = from; j < lines.size(); ++j) {
        if (j != *p.line && lines[j].contains(p.point)) {
          throw ValidationError(p.point.to_string() + " also lies on line " + lines[j].to_string());
        }
      }
    }
  }
  if (kind == ConfigKind::Ct || kind == ConfigKind::Ctr || kind == ConfigKind::Ch) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        for (std::size_t k = j + 1; k < lines.size(); ++k) {
          if (concurrent(lines[i], lines[j], lines[k])) {
            throw ValidationError("three concurrent lines in a C_t skeleton");
          }
        }
      }
    }
  }
}

long SeededRng::uniform(long lo, long hi) {
  if (hi < lo) fail_internal("SeededRng::uniform with empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);  // reject the biased tail
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

namespace {

LineForm horizontal(long height) { return LineForm(0L, 1L, -height); }

LineForm random_line(SeededRng& rng) {
  for (;;) {
    long a = rng.uniform(-kCoordBound, kCoordBound);
    long b = rng.uniform(-kCoordBound, kCoordBound);
    long c = rng.uniform(-kCoordBound, kCoordBound);
    if (a != 0 || b != 0) return LineForm(a, b, c);
  }
}

[[noreturn]] void degenerate(const std::string& what, std::uint64_t seed) {
  throw DegeneracyError(what + " (seed " + std::to_string(seed) + ")");
}

}  // namespace

std::vector<LineForm> random_lines_general_position(std::size_t count, SeededRng& rng) {
  std::vector<LineForm> lines;
  std::vector<ProjPoint> crossings;
  while (lines.size() < count) {
    bool placed = false;
    for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
      LineForm cand = random_line(rng);
      bool ok = std::none_of(lines.begin(), lines.end(), [&](const LineForm& l) { return l == cand; }) &&
                std::none_of(crossings.begin(), crossings.end(),
                             [&](const ProjPoint& q) { return cand.contains(q); });
      if (!ok) continue;
      for (const auto& l : lines) crossings.push_back(intersect(l, cand));
      lines.push_back(std::move(cand));
      placed = true;
    }
    if (!placed) throw DegeneracyError("could not place a line in general position");
  }
  return lines;
}

ProjPoint random_point_on_line(const LineForm& line, SeededRng& rng) {
  const auto& c = line.coeffs();
  const long u = rng.uniform(-kCoordBound, kCoordBound);
  if (c[1] != 0) return ProjPoint(Rational(u), Rational(-(c[0] * u + c[2]) / c[1]), Rational(1));
  if (c[0] != 0) return ProjPoint(Rational(-c[2] / c[0]), Rational(u), Rational(1));
  // line at infinity
  return ProjPoint(Rational(u), Rational(1), Rational(0));
}

namespace {

Configuration rows_at_heights(const std::vector<int>& sizes, const std::vector<long>& heights,
                              ConfigKind kind) {
  Configuration c;
  c.kind = kind;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    c.lines.push_back(horizontal(heights[i]));
    for (int j = 0; j < sizes[i]; ++j) {
      c.points.push_back({ProjPoint(static_cast<long>(j), heights[i], 1L), 1, i});
    }
  }
  return c;
}

}  // namespace

Configuration standard_linear_config(const TypeVector2& t) {
  const auto r = static_cast<long>(t.size());
  std::vector<int> sizes(t.entries().begin(), t.entries().end());
  std::vector<long> heights;
  for (long i = 1; i <= r; ++i) heights.push_back(r - i);
  return rows_at_heights(sizes, heights, ConfigKind::StandardLinear);
}

Configuration spread_out_config(const TypeVector2& t) {
  std::vector<int> sizes(t.entries().begin(), t.entries().end());
  std::vector<long> heights;
  for (int d : sizes) heights.push_back(t.max() - d);
  return rows_at_heights(sizes, heights, ConfigKind::SpreadOut);
}

Configuration standard_pseudo_config(const PseudoTypeVector& t) {
  const auto p = static_cast<long>(t.size());
  std::vector<int> sizes(t.entries().begin(), t.entries().end());
  std::vector<long> heights;
  for (long i = 1; i <= p; ++i) heights.push_back(p - i);
  return rows_at_heights(sizes, heights, ConfigKind::StandardPseudo);
}

Configuration generic_pseudo_config(const PseudoTypeVector& t, std::uint64_t seed, bool generic_lines) {
  SeededRng rng(seed);
  Configuration c;
  c.kind = ConfigKind::GenericPseudo;
  const std::size_t p = t.size();
  if (generic_lines) {
    for (std::size_t i = 0; i < p; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
        LineForm l = random_line(rng);
        if (std::find(c.lines.begin(), c.lines.end(), l) == c.lines.end()) {
          c.lines.push_back(std::move(l));
          placed = true;
        }
      }
      if (!placed) degenerate("could not draw distinct lines", seed);
    }
  } else {
    for (std::size_t i = 1; i <= p; ++i) c.lines.push_back(horizontal(static_cast<long>(p - i)));
  }
  std::set<ProjPoint> used;
  for (std::size_t i = 0; i < p; ++i) {
    for (int j = 0; j < t[i]; ++j) {
      bool placed = false;
      for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
        ProjPoint q = random_point_on_line(c.lines[i], rng);
        if (used.count(q)) continue;
        bool foreign = false;
        for (std::size_t k = 0; k < p && !foreign; ++k) foreign = k != i && c.lines[k].contains(q);
        if (foreign) continue;
        used.insert(q);
        c.points.push_back({std::move(q), 1, i});
        placed = true;
      }
      if (!placed) degenerate("could not place a point on row " + std::to_string(i + 1), seed);
    }
  }
  c.validate();
  return c;
}

Configuration generic_linear_config(const TypeVector2& t, std::uint64_t seed, bool generic_lines) {
  return generic_pseudo_config(PseudoTypeVector(t), seed, generic_lines);
}

Configuration lattice_pseudo_config(const PseudoTypeVector& t, std::uint64_t seed, long width,
                                    bool scatter) {
  const auto p = static_cast<long>(t.size());
  if (width == 0) width = std::max<long>(t.max(), p) + 1;
  if (width < p || width < t.max()) throw ValidationError("lattice width too small for the type");
  SeededRng rng(seed);
  std::vector<long> slots(static_cast<std::size_t>(width));
  for (long i = 0; i < width; ++i) slots[static_cast<std::size_t>(i)] = i;
  rng.shuffle(slots.begin(), slots.end());
  std::vector<long> heights(slots.begin(), slots.begin() + p);
  Configuration c = rows_at_heights(std::vector<int>(t.entries().begin(), t.entries().end()), heights,
                                    ConfigKind::GenericPseudo);
  if (scatter) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      rng.shuffle(slots.begin(), slots.end());
      for (int j = 0; j < t[i]; ++j, ++k) {
        c.points[k].point = ProjPoint(slots[static_cast<std::size_t>(j)], heights[i], 1L);
      }
    }
  }
  c.validate();
  return c;
}

Configuration doubled(const Configuration& c) {
  if (!c.reduced()) throw ValidationError("configuration already has double points");
  Configuration out = c;
  for (auto& p : out.points) p.multiplicity = 2;
  return out;
}

Configuration ct_config(int t, std::uint64_t seed) {
  if (t < 2) throw ValidationError("C_t needs t >= 2");
  SeededRng rng(seed);
  Configuration c;
  c.kind = ConfigKind::Ct;
  try {
    c.lines = random_lines_general_position(static_cast<std::size_t>(t), rng);
  } catch (const DegeneracyError& e) {
    degenerate(e.what(), seed);
  }
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < c.lines.size(); ++j) {
      c.points.push_back({intersect(c.lines[i], c.lines[j]), 1, std::nullopt});
    }
  }
  c.validate();
  return c;
}

Configuration ctr_config(int t, int r, std::uint64_t seed) {
  if (t < 2 || r < 0 || r > t) throw ValidationError("C_{t,r} needs t >= 2 and 0 <= r <= t");
  SeededRng rng(seed);
  Configuration c;
  c.kind = ConfigKind::Ctr;
  try {
    c.lines = random_lines_general_position(static_cast<std::size_t>(t) + 1, rng);
  } catch (const DegeneracyError& e) {
    degenerate(e.what(), seed);
  }
  const auto tt = static_cast<std::size_t>(t);
  for (std::size_t i = 0; i < tt; ++i) {
    for (std::size_t j = i + 1; j < tt; ++j) {
      c.points.push_back({intersect(c.lines[i], c.lines[j]), 1, std::nullopt});
    }
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
    c.points.push_back({intersect(c.lines[tt], c.lines[j]), 1, std::nullopt});
  }
  c.validate();
  return c;
}

Configuration ch_config(const TypeVector2& t, std::uint64_t seed) {
  const std::size_t r = t.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (t[i] < static_cast<int>(i + 1)) {
      throw ValidationError("C_h skeleton needs n_i >= i; fails at row " + std::to_string(i + 1));
    }
  }
  SeededRng rng(seed);
  std::vector<LineForm> all;
  try {
    all = random_lines_general_position(r + 1, rng);
  } catch (const DegeneracyError& e) {
    degenerate(e.what(), seed);
  }
  Configuration c;
  c.kind = ConfigKind::Ch;
  c.lines.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r));
  std::set<ProjPoint> used;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto q = intersect(all[i], all[j]);
      used.insert(q);
      c.points.push_back({std::move(q), 1, i});
    }
    auto q = intersect(all[i], all[r]);
    used.insert(q);
    c.points.push_back({std::move(q), 1, i});
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (int extra = 0; extra < t[i] - static_cast<int>(i + 1); ++extra) {
      bool placed = false;
      for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
        ProjPoint q = random_point_on_line(all[i], rng);
        if (used.count(q)) continue;
        bool foreign = false;
        for (std::size_t k = 0; k <= r && !foreign; ++k) foreign = k != i && all[k].contains(q);
        if (foreign) continue;
        used.insert(q);
        c.points.push_back({std::move(q), 1, i});
        placed = true;
      }
      if (!placed) degenerate("could not place an extra point on line " + std::to_string(i + 1), seed);
    }
  }
  c.validate();
  return c;
}

namespace {

struct AffinePoint {
  Rational x, y;
};

// Integral points of y^2 = x^3 + 17 found by direct search; the curve is smooth
// since its discriminant -27 * 17^2 is nonzero.
std::vector<AffinePoint> cubic_integral_points() {
  std::vector<AffinePoint> out;
  for (long x = -2; x <= 6000; ++x) {
    Integer rhs = Integer(x) * x * x + 17;
    if (rhs < 0) continue;
    if (mpz_perfect_square_p(rhs.get_mpz_t())) {
      Integer y = sqrt(rhs);
      out.push_back({Rational(x), Rational(y)});
      if (y != 0) out.push_back({Rational(x), Rational(-y)});
    }
  }
  return out;
}

// Third intersection of the chord through p and q (p.x != q.x), reflected so
// the result is p + q in the group law.
AffinePoint chord_sum(const AffinePoint& p, const AffinePoint& q) {
  Rational lambda = (q.y - p.y) / (q.x - p.x);
  Rational x3 = lambda * lambda - p.x - q.x;
  Rational y3 = lambda * (p.x - x3) - p.y;
  return {x3, y3};
}

}  // namespace

Configuration points_on_cubic(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("points_on_cubic needs n >= 1");
  SeededRng rng(seed);
  std::vector<AffinePoint> pool = cubic_integral_points();
  auto key = [](const AffinePoint& a) { return ProjPoint(a.x, a.y, Rational(1)); };
  std::set<ProjPoint> have;
  for (const auto& a : pool) have.insert(key(a));
  for (int attempt = 0; static_cast<int>(pool.size()) < n; ++attempt) {
    if (attempt > kRetryBudget * n) throw DegeneracyError("not enough rational points on the cubic");
    const auto& p = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    const auto& q = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    if (p.x == q.x) continue;
    AffinePoint s = chord_sum(p, q);
    if (have.insert(key(s)).second) pool.push_back(s);
  }
  rng.shuffle(pool.begin(), pool.end());
  Configuration c;
  c.kind = ConfigKind::Free;
  for (int i = 0; i < n; ++i) {
    const auto& a = pool[static_cast<std::size_t>(i)];
    c.points.push_back({key(a), 1, std::nullopt});
  }
  c.validate();
  return c;
}

Configuration free_config(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("free_config needs n >= 1");
  SeededRng rng(seed);
  Configuration c;
  c.kind = ConfigKind::Free;
  std::set<ProjPoint> used;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
      ProjPoint q(rng.uniform(-kCoordBound, kCoordBound), rng.uniform(-kCoordBound, kCoordBound), 1L);
      if (!used.insert(q).second) continue;
      c.points.push_back({std::move(q), 1, std::nullopt});
      placed = true;
    }
    if (!placed) degenerate("could not draw distinct points", seed);
  }
  return c;
}

Configuration config_from_points(const std::vector<ProjPoint>& pts) {
  Configuration c;
  c.kind = ConfigKind::Free;
  for (const auto& p : pts) c.points.push_back({p, 1, std::nullopt});
  c.validate();
  return c;
}

}  // namespace fplab
