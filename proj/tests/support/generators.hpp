#pragma once

#include <cstdint>
#include <vector>

#include "fplab/config.hpp"
#include "fplab/typevec.hpp"

namespace fplab::testing {

// Random strictly increasing vector with entries in 1..max_entry.
inline TypeVector2 random_type_vector(SeededRng& rng, int max_entry) {
  std::vector<int> v;
  for (int k = 1; k <= max_entry; ++k) {
    if (rng.uniform(0, 2) == 0) v.push_back(k);
  }
  if (v.empty()) v.push_back(static_cast<int>(rng.uniform(1, max_entry)));
  return TypeVector2(std::move(v));
}

// Random weakly increasing vector, no value three times, entries in 1..max_entry.
inline PseudoTypeVector random_pseudo_type_vector(SeededRng& rng, int max_entry) {
  std::vector<int> v;
  for (int k = 1; k <= max_entry; ++k) {
    const long copies = rng.uniform(0, 4);  // 0,1 -> absent; 2,3 -> once; 4 -> twice
    if (copies >= 2) v.push_back(k);
    if (copies == 4) v.push_back(k);
  }
  if (v.empty()) v.push_back(static_cast<int>(rng.uniform(1, max_entry)));
  return PseudoTypeVector(std::move(v));
}

// Every strictly increasing vector with n_r <= max_entry.
inline std::vector<TypeVector2> all_type_vectors(int max_entry) {
  std::vector<TypeVector2> out;
  for (std::uint32_t mask = 1; mask < (1u << max_entry); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < max_entry; ++i) {
      if (mask & (1u << i)) v.push_back(i + 1);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace fplab::testing
