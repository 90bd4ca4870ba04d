#include "fplab/oracle.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "fplab/errors.hpp"

namespace fplab {

std::string to_string(ArithmeticMode m) { return m == ArithmeticMode::Exact ? "exact" : "modular"; }

ArithmeticMode arithmetic_mode_from_string(const std::string& s) {
  if (s == "exact") return ArithmeticMode::Exact;
  if (s == "modular") return ArithmeticMode::Modular;
  throw ValidationError("unknown arithmetic mode '" + s + "'");
}

std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

std::size_t monomial_index(int d, int i, int j) {
  const auto a = static_cast<std::size_t>(d - i);
  return a * (a + 1) / 2 + static_cast<std::size_t>(d - i - j);
}

namespace {

std::size_t monomial_count(int d) {
  const auto n = static_cast<std::size_t>(d);
  return (n + 1) * (n + 2) / 2;
}

struct PointData {
  std::array<Integer, 3> z;
  bool fat;
};

std::vector<PointData> point_data(const Configuration& c) {
  std::vector<PointData> out;
  out.reserve(c.points.size());
  for (const auto& p : c.points) out.push_back({p.point.integer_coords(), p.multiplicity == 2});
  return out;
}

template <class T, class Mul>
std::vector<T> powers(const T& base, int d, const T& one, Mul mul) {
  std::vector<T> v(static_cast<std::size_t>(d) + 1);
  v[0] = one;
  for (int e = 1; e <= d; ++e) v[static_cast<std::size_t>(e)] = mul(v[static_cast<std::size_t>(e - 1)], base);
  return v;
}

IntMatrix build_int(const std::vector<PointData>& pts, int d) {
  const auto mons = monomials(d);
  IntMatrix m;
  auto mul = [](const Integer& a, const Integer& b) { return Integer(a * b); };
  const Integer one = 1;
  for (const auto& p : pts) {
    std::array<std::vector<Integer>, 3> pw;
    for (std::size_t v = 0; v < 3; ++v) pw[v] = powers(p.z[v], d, one, mul);
    auto pwr = [&](std::size_t v, int e) -> Integer { return e < 0 ? Integer(0) : pw[v][static_cast<std::size_t>(e)]; };
    if (!p.fat) {
      std::vector<Integer> row(mons.size());
      for (std::size_t k = 0; k < mons.size(); ++k) {
        row[k] = pwr(0, mons[k][0]) * pwr(1, mons[k][1]) * pwr(2, mons[k][2]);
      }
      m.push_back(std::move(row));
      continue;
    }
    for (std::size_t v = 0; v < 3; ++v) {
      std::vector<Integer> row(mons.size());
      for (std::size_t k = 0; k < mons.size(); ++k) {
        auto e = mons[k];
        if (e[v] == 0) continue;
        const int coef = e[v];
        e[v] -= 1;
        row[k] = coef * pwr(0, e[0]) * pwr(1, e[1]) * pwr(2, e[2]);
      }
      m.push_back(std::move(row));
    }
  }
  return m;
}

ModMatrix build_mod(const std::vector<PointData>& pts, int d, const PrimeField& f) {
  const auto mons = monomials(d);
  std::size_t rows = 0;
  for (const auto& p : pts) rows += p.fat ? 3 : 1;
  ModMatrix m(rows, mons.size());
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return f.mul(a, b); };
  std::size_t r = 0;
  for (const auto& p : pts) {
    std::array<std::vector<std::uint64_t>, 3> pw;
    for (std::size_t v = 0; v < 3; ++v) pw[v] = powers(f.from_integer(p.z[v]), d, f.one(), mul);
    auto pwr = [&](std::size_t v, int e) { return pw[v][static_cast<std::size_t>(e)]; };
    if (!p.fat) {
      auto* row = m.row(r++);
      for (std::size_t k = 0; k < mons.size(); ++k) {
        row[k] = f.mul(f.mul(pwr(0, mons[k][0]), pwr(1, mons[k][1])), pwr(2, mons[k][2]));
      }
      continue;
    }
    for (std::size_t v = 0; v < 3; ++v) {
      auto* row = m.row(r++);
      for (std::size_t k = 0; k < mons.size(); ++k) {
        auto e = mons[k];
        if (e[v] == 0) continue;
        const auto coef = f.from_signed(e[v]);
        e[v] -= 1;
        row[k] = f.mul(coef, f.mul(f.mul(pwr(0, e[0]), pwr(1, e[1])), pwr(2, e[2])));
      }
    }
  }
  return m;
}

// Rows x*v, y*v, z*v for each v in a degree-(d-1) basis, expressed in degree d.
template <class Vec, class Zero>
std::vector<Vec> shifts(const std::vector<Vec>& basis, int d, Zero zero) {
  const auto lower = monomials(d - 1);
  std::vector<Vec> out;
  out.reserve(basis.size() * 3);
  for (const auto& v : basis) {
    for (int var = 0; var < 3; ++var) {
      Vec row(monomial_count(d), zero);
      for (std::size_t k = 0; k < lower.size(); ++k) {
        if (v[k] == 0) continue;
        auto e = lower[k];
        e[static_cast<std::size_t>(var)] += 1;
        row[monomial_index(d, e[0], e[1])] = v[k];
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

class Engine {
 public:
  Engine(const Configuration& c, const OracleOptions& opts) : opts_(opts), pts_(point_data(c)) {
    if (c.points.empty()) throw ValidationError("oracle needs a nonempty configuration");
    c.validate();
    degree_ = c.degree();
    SeededRng rng(opts.prime_seed);
    const auto p1 = random_prime_near_2_62(rng);
    auto p2 = random_prime_near_2_62(rng);
    while (p2 == p1) p2 = random_prime_near_2_62(rng);
    f1_.emplace(p1);
    f2_.emplace(p2);
  }

  HFRecord hilbert() {
    HFRecord rec;
    rec.degree = degree_;
    rec.h.push_back(1);
    int d = 0;
    while (rec.h.back() < degree_) {
      ++d;
      if (d > degree_ + 1) fail_internal("Hilbert function did not stabilize by the length bound");
      rec.h.push_back(static_cast<std::int64_t>(hf_rank(d)));
    }
    rec.h.push_back(degree_);
    rec.delta_h = first_difference_of(rec.h);
    rec.sigma = static_cast<int>(rec.delta_h.sigma());
    rec.regularity = rec.sigma;
    rec.alpha = 0;
    while (rec.alpha < static_cast<int>(rec.h.size()) &&
           rec.h[static_cast<std::size_t>(rec.alpha)] == static_cast<std::int64_t>(monomial_count(rec.alpha))) {
      ++rec.alpha;
    }
    return rec;
  }

  std::vector<int> generators(const HFRecord& hf) {
    if (opts_.mode == ArithmeticMode::Exact) return generators_exact(hf);
    auto g1 = generators_mod(hf, *f1_);
    auto g2 = generators_mod(hf, *f2_);
    if (g1 && g2 && *g1 == *g2) return *g1;
    ++escalations_;
    return generators_exact(hf);
  }

  OracleResult run() {
    OracleResult out;
    out.mode = opts_.mode;
    out.hf = hilbert();
    auto beta1 = generators(out.hf);
    try {
      out.betti = betti_from_generators(beta1, out.hf.delta_h);
    } catch (const InconsistencyError&) {
      if (opts_.mode == ArithmeticMode::Exact) throw;
      ++escalations_;
      out.betti = betti_from_generators(generators_exact(out.hf), out.hf.delta_h);
    }
    out.escalations = escalations_;
    return out;
  }

 private:
  std::size_t hf_rank(int d) {
    const std::size_t cols = monomial_count(d);
    const std::size_t bound = std::min<std::size_t>(static_cast<std::size_t>(degree_), cols);
    if (opts_.dump) {
      *opts_.dump << "# degree " << d << "\n";
      write_matrix(*opts_.dump, build_int(pts_, d));
    }
    const std::size_t r1 = rank_mod(build_mod(pts_, d, *f1_), *f1_);
    if (r1 == bound) return r1;  // a nonzero minor mod p is nonzero over Z
    if (opts_.mode == ArithmeticMode::Modular) {
      const std::size_t r2 = rank_mod(build_mod(pts_, d, *f2_), *f2_);
      if (r1 == r2) return r1;
      ++escalations_;
    }
    return rank_bareiss(build_int(pts_, d), cols);
  }

  static long long dim_ideal(const HFRecord& hf, int d) {
    const std::int64_t h = d < static_cast<int>(hf.h.size()) ? hf.h[static_cast<std::size_t>(d)] : hf.degree;
    return static_cast<long long>(monomial_count(d)) - h;
  }

  std::optional<std::vector<int>> generators_mod(const HFRecord& hf, const PrimeField& f) {
    std::vector<int> out;
    for (int d = std::max(hf.alpha, 1); d <= hf.sigma; ++d) {
      const long long dim_d = dim_ideal(hf, d);
      const long long dim_prev = dim_ideal(hf, d - 1);
      long long fresh = dim_d;
      if (dim_prev > 0) {
        auto basis = kernel_mod(build_mod(pts_, d - 1, f), f);
        if (static_cast<long long>(basis.size()) != dim_prev) return std::nullopt;
        auto rows = shifts(basis, d, std::uint64_t{0});
        ModMatrix s(rows.size(), monomial_count(d));
        for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), s.row(i));
        fresh -= static_cast<long long>(rank_mod(std::move(s), f));
      }
      if (fresh < 0) return std::nullopt;
      out.insert(out.end(), static_cast<std::size_t>(fresh), d);
    }
    return out;
  }

  std::vector<int> generators_exact(const HFRecord& hf) {
    std::vector<int> out;
    for (int d = std::max(hf.alpha, 1); d <= hf.sigma; ++d) {
      const long long dim_d = dim_ideal(hf, d);
      const long long dim_prev = dim_ideal(hf, d - 1);
      long long fresh = dim_d;
      if (dim_prev > 0) {
        const std::size_t cols_prev = monomial_count(d - 1);
        auto basis = kernel_integer(build_int(pts_, d - 1), cols_prev);
        if (static_cast<long long>(basis.size()) != dim_prev) {
          throw InconsistencyError("kernel dimension disagrees with the Hilbert function in degree " +
                                   std::to_string(d - 1));
        }
        IntMatrix s = shifts(basis, d, Integer(0));
        const std::size_t cols = monomial_count(d);
        // the shifted rows lie in I_d, so rank <= dim I_d certifies a modular hit
        const std::size_t bound = std::min<std::size_t>({static_cast<std::size_t>(dim_d), s.size(), cols});
        std::size_t r = rank_mod(reduce_mod(s, cols, *f1_), *f1_);
        if (r != bound) r = rank_bareiss(std::move(s), cols);
        fresh -= static_cast<long long>(r);
      }
      if (fresh < 0) throw InconsistencyError("negative generator count in degree " + std::to_string(d));
      out.insert(out.end(), static_cast<std::size_t>(fresh), d);
    }
    return out;
  }

  OracleOptions opts_;
  std::vector<PointData> pts_;
  long degree_ = 0;
  std::optional<PrimeField> f1_;
  std::optional<PrimeField> f2_;
  int escalations_ = 0;
};

}  // namespace

IntMatrix condition_matrix(const Configuration& c, int d) {
  if (d < 0) throw ValidationError("negative degree");
  return build_int(point_data(c), d);
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j].get_str() << "/1";
    }
    os << '\n';
  }
}

BettiTable betti_from_generators(const std::vector<int>& beta1, const OSequence& delta_h) {
  auto k = hilbert_numerator(delta_h);
  int top = static_cast<int>(k.size());
  for (int d : beta1) top = std::max(top, d + 1);
  std::vector<long long> b1(static_cast<std::size_t>(top), 0);
  for (int d : beta1) b1[static_cast<std::size_t>(d)] += 1;
  k.resize(static_cast<std::size_t>(top), 0);
  std::vector<int> beta2;
  for (int j = 1; j < top; ++j) {
    const long long b2 = k[static_cast<std::size_t>(j)] + b1[static_cast<std::size_t>(j)];
    if (b2 < 0) {
      throw InconsistencyError("negative syzygy count in degree " + std::to_string(j));
    }
    beta2.insert(beta2.end(), static_cast<std::size_t>(b2), j);
  }
  if (beta2.size() + 1 != beta1.size()) {
    throw InconsistencyError("syzygy count does not fit a height-2 resolution");
  }
  BettiTable out(beta1, std::move(beta2));
  if (!out.well_formed()) throw InconsistencyError("syzygy degree not above the lowest generator: " + out.to_string());
  return out;
}

HFRecord hilbert_function(const Configuration& c, const OracleOptions& opts) {
  return Engine(c, opts).hilbert();
}

std::vector<int> generator_degrees(const Configuration& c, const OracleOptions& opts) {
  Engine e(c, opts);
  return e.generators(e.hilbert());
}

BettiTable betti_table(const Configuration& c, const OracleOptions& opts) { return analyze(c, opts).betti; }

OracleResult analyze(const Configuration& c, const OracleOptions& opts) { return Engine(c, opts).run(); }

}  // namespace fplab
