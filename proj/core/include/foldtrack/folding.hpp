#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foldtrack/graph_map.hpp"

namespace foldtrack {

// Two directions at `vertex` whose images share a maximal common initial
// subpath of `common_length` edges. After normalization, when exactly one
// segment is a whole edge it is `second`.
struct FoldSpec {
  VertexId vertex = 0;
  OrientedEdge first;
  OrientedEdge second;
  int common_length = 0;
  bool first_full = false;
  bool second_full = false;
};

enum class FoldCase { Case1 = 1, Case2 = 2, Case3 = 3 };

struct FoldRecord {
  FoldSpec spec;
  FoldCase fold_case = FoldCase::Case1;
  GraphMap quotient;  // p : G -> G*
  GraphMap inverse;   // q : G* -> G
  // Edges of G cut at the fold point before quotienting.
  std::vector<EdgeId> subdivided;
  // A level of the pushed-forward filtration became empty.
  bool filtration_degenerate = false;
};

struct FoldStrategy {
  bool prefer_lower_strata = false;
  int stratum = 0;  // j, used when prefer_lower_strata is set
  static FoldStrategy plain() { return {}; }
  static FoldStrategy lower_strata(int j) { return {true, j}; }
};

struct FoldFactorization {
  std::vector<FoldRecord> stages;
  GraphMap terminal;          // theta : K^k -> G'
  GraphMap terminal_inverse;  // theta' : G' -> K^k
  // Total edge length of the stage maps f_0, f_1, ..., f_k.
  std::vector<long> edgelets;
};

std::optional<FoldSpec> find_fold(const GraphMap& f, FoldStrategy strategy = {});
// Applies the fold; returns the record and the induced map f1 with f = f1 p.
std::pair<FoldRecord, GraphMap> apply_fold(const GraphMap& f, const FoldSpec& spec);
FoldCase classify_fold(const FoldRecord& record);
// The explicit inverse q; the span (b,a) only affects support_widened.
GraphMap invert_fold(const FoldRecord& record, int b, int a);
// Case 3 with v1 in Fr(G,b,a).
bool support_widened(const FoldRecord& record, int b, int a);
bool folds_into_lower_strata(const FoldRecord& record, int a);

// Subdivision followed by a simplicial isomorphism.
bool is_homeomorphism(const GraphMap& theta);
GraphMap invert_homeomorphism(const GraphMap& theta);

FoldFactorization factorize(const GraphMap& f, FoldStrategy strategy = {});

struct InverseStats {
  int folds = 0;
  long lc_inverse = 0;            // LC(M(g))
  std::vector<long> lc_stages;    // LC(M(q_i)) and LC(M(theta'))
  double log_bound = 0.0;         // log of the product bound
  bool bound_holds = true;
  long edge_constant = 0;         // Edge_n used in the bound
};

// g = q_1 ... q_k theta', tightened after every composition.
GraphMap controlled_inverse(const FoldFactorization& fact, InverseStats* stats = nullptr);

// Map between the subgraphs spanned by the masks; StructuralError when some
// edge image leaves the target.
GraphMap restrict_map(const GraphMap& f, const EdgeMask& dom, const EdgeMask& cod);
// f|dom : dom -> cod is a homotopy equivalence (componentwise, certified by
// folding to a homeomorphism).
bool restriction_is_equivalence(const GraphMap& f, const EdgeMask& dom, const EdgeMask& cod);
// Edges crossed by the images of the masked edges.
EdgeMask image_mask(const GraphMap& f, const EdgeMask& dom);

}  // namespace foldtrack
