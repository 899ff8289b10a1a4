#pragma once

#include <cstdint>

#include "foldtrack/automorphism.hpp"

namespace foldtrack {

std::uint64_t splitmix64(std::uint64_t x);

// Counter-based generator: output k of stream s depends only on (seed, s, k),
// so parallel trials reproduce bit-for-bit regardless of scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  int uniform_int(int lo, int hi);  // inclusive
  double uniform();                 // [0, 1)

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Product of `length` random Nielsen moves: x_i -> x_i x_j^{+-1},
// x_i -> x_j^{+-1} x_i, transpositions and inversions.
Automorphism random_nielsen(int rank, int length, CounterRng& rng);

}  // namespace foldtrack
