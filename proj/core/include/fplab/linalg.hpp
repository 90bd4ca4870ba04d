#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fplab/rational.hpp"

namespace fplab {

class SeededRng;

__extension__ typedef unsigned __int128 uint128_t;

/// Arithmetic modulo an odd prime p < 2^63 in Montgomery form (R = 2^64).
/// Values handed to mul/add/sub/inv must already be in Montgomery form.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }

  [[nodiscard]] std::uint64_t to_mont(std::uint64_t a) const noexcept { return mul(a % p_, r2_); }
  [[nodiscard]] std::uint64_t from_mont(std::uint64_t a) const noexcept { return reduce(a); }
  [[nodiscard]] std::uint64_t from_integer(const Integer& z) const;
  [[nodiscard]] std::uint64_t from_signed(long long v) const noexcept;
  [[nodiscard]] std::uint64_t one() const noexcept { return one_; }

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return reduce(static_cast<uint128_t>(a) * b);
  }
  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  [[nodiscard]] std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

 private:
  [[nodiscard]] std::uint64_t reduce(uint128_t t) const noexcept {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_;
    const uint128_t u = (t + static_cast<uint128_t>(m) * p_) >> 64;
    const auto r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t pinv_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;    // 2^128 mod p
  std::uint64_t one_;   // 2^64 mod p
};

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Random prime in [2^62, 2^62 + 2^40).
std::uint64_t random_prime_near_2_62(SeededRng& rng);

/// Dense row-major matrix over a PrimeField, entries in Montgomery form.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t* row(std::size_t i) noexcept { return a.data() + i * cols; }
  const std::uint64_t* row(std::size_t i) const noexcept { return a.data() + i * cols; }
  std::uint64_t& at(std::size_t i, std::size_t j) noexcept { return a[i * cols + j]; }
};

using IntMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

ModMatrix reduce_mod(const IntMatrix& m, std::size_t cols, const PrimeField& f);

std::size_t rank_mod(ModMatrix m, const PrimeField& f);

/// Basis of the right kernel, one free column per vector (Montgomery form).
std::vector<std::vector<std::uint64_t>> kernel_mod(ModMatrix m, const PrimeField& f);

/// Exact rank by fraction-free (Bareiss) elimination over Z.
std::size_t rank_bareiss(IntMatrix m, std::size_t cols);

/// Integer basis of the right kernel over Q, each vector primitive.
/// Uses fraction-free Gauss-Jordan so no rationals appear.
std::vector<std::vector<Integer>> kernel_integer(IntMatrix m, std::size_t cols);

/// Exact rank of a rational matrix: rows are scaled to integers, then Bareiss.
std::size_t rank(const RationalMatrix& m);

}  // namespace fplab
