#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldtrack/graph_map.hpp"
#include "foldtrack/matrix.hpp"
#include "foldtrack/random.hpp"

namespace foldtrack::cli {

struct SuiteResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  // Failures here are reported but do not fail the audit.
  bool advisory = false;
  bool passed() const { return failed == 0; }
};

IntMatrix random_matrix(CounterRng& rng, int rows, int cols, int max_entry);
// Random matrix made irreducible by overlaying a random cyclic permutation.
IntMatrix random_irreducible(CounterRng& rng, int max_size, int max_entry);

// LC(M1 M2) <= a LC(M1) LC(M2) and LC(M) <= L(M) <= a^2 LC(M).
SuiteResult lc_bounds_suite(std::uint64_t seed, int pairs = 1000, int max_size = 8, int max_entry = 9);
// lambda <= a LC(M) and lambda^a >= LC(M), with a the size of M.
SuiteResult pf_bounds_suite(std::uint64_t seed, int count = 200, int max_size = 8, int max_entry = 9);
// Every nonzero entry of M^a is >= LC(M).
SuiteResult power_entries_suite(std::uint64_t seed, int count = 200, int max_size = 8, int max_entry = 9);
// valence(v) >= T(f,v) and T(f2 f1, v) <= min(T(f1,v), T(f2,f1(v))) on rose maps.
SuiteResult gates_suite(std::uint64_t seed, int pairs = 200);

// A rank-3 map with a two-level filtration that factors as Case-1 folds
// into the lower stratum: the lower stratum is a cycle and every upper
// edge is pulled back along a path in it.
GraphMap lower_strata_chain(CounterRng& rng);

struct LowerStrataCheck {
  bool all_case1_lower = true;
  bool equal = false;
  int folds = 0;
  IntMatrix forward;
  IntMatrix inverse;
};
LowerStrataCheck check_lower_strata_chain(const GraphMap& f);
SuiteResult lower_strata_suite(std::uint64_t seed, int chains = 50);

}  // namespace foldtrack::cli
