#pragma once

#include <optional>

#include "foldtrack/graph_map.hpp"

namespace foldtrack {

struct ReducibilityVerdict {
  bool reducible = false;
  std::optional<EdgeMask> witness;  // the refinement G-hat_j
  long subsets_checked = 0;
};

struct ReducibilityOptions {
  int budget = 16;  // maximum number of stratum-j edges searched exhaustively
};

// Candidate refinements X with G_{j-1} < X < G_j are enumerated by the
// bitmask of their stratum-j edges in increasing order.
ReducibilityVerdict is_reducible(const GraphMap& f, int j, ReducibilityOptions options = {});

// The three witness conditions for a single candidate.
bool is_reduction_witness(const GraphMap& f, const EdgeMask& x);

enum class HomologyChange { RankUp, ComponentsDown, Neither };

const char* to_string(HomologyChange change);

// Compares X with f(X). ArgumentError unless G_{j-1} < X < G_j properly and
// T(f|X, v) >= 2 at every vertex of X.
HomologyChange homology_change(const GraphMap& f, int j, const EdgeMask& x);

// Gate count of the restriction f|X at v.
int restricted_gate_count(const GraphMap& f, const EdgeMask& x, VertexId v);

}  // namespace foldtrack
