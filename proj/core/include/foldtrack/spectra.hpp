#pragma once

#include <vector>

#include "foldtrack/graph_map.hpp"
#include "foldtrack/matrix.hpp"

namespace foldtrack {

struct Block {
  std::vector<int> indices;  // matrix indices, increasing
  bool zero = false;         // 1x1 zero block
};

// Diagonal blocks after a simultaneous permutation, invariant (lower) blocks
// first: no entry feeds from an earlier block into a later one.
struct BlockStructure {
  std::vector<Block> blocks;
};

// Strongly connected components of the digraph k -> j whenever M(j,k) > 0.
BlockStructure block_structure(const IntMatrix& m);
bool is_irreducible(const IntMatrix& m);
// gcd of cycle lengths; ArgumentError for reducible input.
int period(const IntMatrix& m);

struct PfOptions {
  double tolerance = 1e-12;
  long max_iterations = 100000;
  int oracle_max_size = 6;  // bisection cross-check up to this size
};

// Perron-Frobenius eigenvalue of an irreducible matrix.
double pf_value(const IntMatrix& m, const PfOptions& options = {}, long* iterations = nullptr);

// Characteristic polynomial det(xI - M), highest degree first.
std::vector<long double> characteristic_polynomial(const IntMatrix& m);
// Largest real root of the characteristic polynomial by bisection.
double pf_by_bisection(const IntMatrix& m);

struct SpectrumEntry {
  int stratum = 0;  // 1-based position of the block in the invariant filtration
  double lambda = 0.0;
  int multiplicity = 1;
  std::vector<EdgeId> block_edges;
};

struct ExpansionSpectrum {
  std::vector<SpectrumEntry> entries;  // decreasing lambda
  // Maximal invariant weak filtration as edge levels.
  std::vector<int> filtration_levels;

  std::vector<double> gamma() const;
  // Each value repeated by its multiplicity.
  std::vector<double> gamma_hat() const;
  double top() const { return entries.empty() ? 0.0 : entries.front().lambda; }
};

ExpansionSpectrum expansion_spectrum(const GraphMap& f, const PfOptions& options = {});
std::vector<double> gamma(const GraphMap& f);
std::vector<double> gamma_hat(const GraphMap& f);
// Same values obtained by forming f^p literally and taking p-th roots.
std::vector<double> gamma_hat_by_power(const GraphMap& f);

// Weak filtration whose strata are the blocks of M(f).
Filtration invariant_filtration(const GraphMap& f);

// f composed with itself k times, untightened.
GraphMap power_literal(const GraphMap& f, int k);

}  // namespace foldtrack
