#include "foldtrack/random.hpp"

#include <utility>

#include "foldtrack/error.hpp"

namespace foldtrack {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * counter_++); }

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw ArgumentError("below(0)");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

int CounterRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Automorphism random_nielsen(int rank, int length, CounterRng& rng) {
  if (rank < 1) throw ArgumentError("rank must be positive");
  std::vector<Word> imgs = Automorphism::identity(rank).images();
  for (int step = 0; step < length; ++step) {
    int kind = rank == 1 ? 9 : static_cast<int>(rng.below(10));
    int i = rng.uniform_int(0, rank - 1);
    if (kind < 7) {
      int j = rng.uniform_int(0, rank - 2);
      if (j >= i) ++j;
      Word other = imgs[static_cast<std::size_t>(j)];
      if (rng.below(2)) other = inverse(other);
      Word& target = imgs[static_cast<std::size_t>(i)];
      target = (kind % 2 == 0) ? multiply(target, other) : multiply(other, target);
    } else if (kind < 9 && rank > 1) {
      int j = rng.uniform_int(0, rank - 2);
      if (j >= i) ++j;
      std::swap(imgs[static_cast<std::size_t>(i)], imgs[static_cast<std::size_t>(j)]);
    } else {
      imgs[static_cast<std::size_t>(i)] = inverse(imgs[static_cast<std::size_t>(i)]);
    }
  }
  return Automorphism(std::move(imgs));
}

}  // namespace foldtrack
