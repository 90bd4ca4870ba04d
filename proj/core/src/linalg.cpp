#include "fplab/linalg.hpp"

#include <algorithm>

#include "fplab/config.hpp"
#include "fplab/errors.hpp"

namespace fplab {

namespace {

using u64 = std::uint64_t;
using u128 = uint128_t;

u64 powmod_plain(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * a % n);
    a = static_cast<u64>(static_cast<u128>(a) * a % n);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || p >= (u64{1} << 63)) fail_internal("PrimeField needs an odd p < 2^63");
  u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  pinv_ = ~inv + 1;
  one_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
  r2_ = static_cast<u64>(static_cast<u128>(one_) * one_ % p);
}

u64 PrimeField::from_integer(const Integer& z) const {
  return to_mont(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

u64 PrimeField::from_signed(long long v) const noexcept {
  if (v >= 0) return to_mont(static_cast<u64>(v) % p_);
  const u64 m = static_cast<u64>(-(v + 1)) % p_;  // avoids overflow at LLONG_MIN
  return neg(to_mont((m + 1) % p_));
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_plain(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 random_prime_near_2_62(SeededRng& rng) {
  const u64 base = u64{1} << 62;
  for (;;) {
    u64 c = base + (static_cast<u64>(rng.uniform(0, (1L << 40) - 1)) | 1);
    if (is_prime_u64(c)) return c;
  }
}

ModMatrix reduce_mod(const IntMatrix& m, std::size_t cols, const PrimeField& f) {
  ModMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = f.from_integer(m[i][j]);
  }
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns. With full set, also clears
// above each pivot and scales pivots to one (reduced form).
std::vector<std::size_t> echelon_mod(ModMatrix& m, const PrimeField& f, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t n = m.cols;
  for (std::size_t c = 0; c < n && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + n, m.row(r));
    u64* pr = m.row(r);
    const u64 inv = f.inv(pr[c]);
    if (full) {
      for (std::size_t j = c; j < n; ++j) pr[j] = f.mul(pr[j], inv);
    }
    const std::size_t first = full ? 0 : r + 1;
    for (std::size_t i = first; i < m.rows; ++i) {
      if (i == r) continue;
      u64* ri = m.row(i);
      if (ri[c] == 0) continue;
      const u64 factor = full ? ri[c] : f.mul(ri[c], inv);
      for (std::size_t j = c; j < n; ++j) {
        if (pr[j]) ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod(ModMatrix m, const PrimeField& f) { return echelon_mod(m, f, false).size(); }

std::vector<std::vector<u64>> kernel_mod(ModMatrix m, const PrimeField& f) {
  const auto pivots = echelon_mod(m, f, true);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(m.cols, 0);
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(m.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_bareiss(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Integer& p = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& ri = m[i];
      const Integer lead = ri[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), ri[j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(ri[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      ri[c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::vector<std::vector<Integer>> kernel_integer(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  Integer prev = 1;
  Integer tmp;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Integer p = m[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& ri = m[i];
      const Integer lead = ri[c];
      // rows below r are zero left of c; rows above also carry earlier free columns
      const std::size_t from = i < r ? 0 : c + 1;
      for (std::size_t j = from; j < cols; ++j) {
        if (j == c) continue;
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), ri[j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(ri[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      ri[c] = 0;
    }
    prev = p;
    pivots.push_back(c);
    ++r;
  }
  // every pivot entry now equals prev
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Integer> v(cols, 0);
    v[free] = prev;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  IntMatrix z(m.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw ValidationError("ragged matrix");
    Integer l = 1;
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) z[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  return rank_bareiss(std::move(z), cols);
}

}  // namespace fplab
