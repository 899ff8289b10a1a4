#include "foldtrack/reducibility.hpp"

#include <set>

#include "foldtrack/error.hpp"
#include "foldtrack/folding.hpp"

namespace foldtrack {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool contains(const EdgeMask& big, const EdgeMask& small) {
  for (std::size_t e = 0; e < small.size(); ++e)
    if (small[e] && !big[e]) return false;
  return true;
}

bool min_gates_ok(const GraphMap& f, const EdgeMask& x) {
  auto in = vertices_of(*f.domain(), x);
  for (VertexId v = 0; v < f.domain()->vertex_count(); ++v) {
    if (in[ix(v)] && restricted_gate_count(f, x, v) < 2) return false;
  }
  return true;
}

}  // namespace

int restricted_gate_count(const GraphMap& f, const EdgeMask& x, VertexId v) {
  std::set<OrientedEdge> gates;
  for (const auto& d : f.domain()->link(v)) {
    if (!x[ix(d.edge)]) continue;
    if (auto g = derivative(f, d)) gates.insert(*g);
  }
  return static_cast<int>(gates.size());
}

bool is_reduction_witness(const GraphMap& f, const EdgeMask& x) {
  const MarkedGraph& g = *f.domain();
  if (has_valence_one_vertex(g, x)) return false;
  if (!min_gates_ok(f, x)) return false;
  return restriction_is_equivalence(f, x, image_mask(f, x));
}

ReducibilityVerdict is_reducible(const GraphMap& f, int j, ReducibilityOptions options) {
  const MarkedGraph& g = *f.domain();
  const Filtration& fl = g.filtration();
  if (j < 1 || j > fl.length()) throw ArgumentError("stratum index out of range");
  EdgeMask lower = fl.level_mask(j - 1);
  std::vector<EdgeId> stratum;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (fl.level(e) == j) stratum.push_back(e);
  }
  int s = static_cast<int>(stratum.size());
  if (s > options.budget) {
    throw CapacityError("stratum " + std::to_string(j) + " has " + std::to_string(s) + " edges, over the budget of " +
                        std::to_string(options.budget));
  }
  ReducibilityVerdict verdict;
  if (s < 2) return verdict;
  const unsigned long long full = (1ULL << s) - 1;
  for (unsigned long long bits = 1; bits < full; ++bits) {
    EdgeMask x = lower;
    for (int i = 0; i < s; ++i) {
      if (bits & (1ULL << i)) x[ix(stratum[ix(i)])] = true;
    }
    ++verdict.subsets_checked;
    if (is_reduction_witness(f, x)) {
      verdict.reducible = true;
      verdict.witness = std::move(x);
      return verdict;
    }
  }
  return verdict;
}

const char* to_string(HomologyChange change) {
  switch (change) {
    case HomologyChange::RankUp:
      return "rank_up";
    case HomologyChange::ComponentsDown:
      return "components_down";
    case HomologyChange::Neither:
      return "neither";
  }
  return "neither";
}

HomologyChange homology_change(const GraphMap& f, int j, const EdgeMask& x) {
  const MarkedGraph& g = *f.domain();
  const Filtration& fl = g.filtration();
  if (j < 1 || j > fl.length()) throw ArgumentError("stratum index out of range");
  EdgeMask lower = fl.level_mask(j - 1);
  EdgeMask upper = fl.level_mask(j);
  if (!contains(x, lower) || !contains(upper, x) || x == lower || x == upper) {
    throw ArgumentError("X must lie strictly between G_{j-1} and G_j");
  }
  if (!min_gates_ok(f, x)) throw ArgumentError("X has a vertex with fewer than two gates");
  EdgeMask fx = image_mask(f, x);
  const MarkedGraph& h = *f.codomain();
  if (subgraph_rank(h, fx) > subgraph_rank(g, x)) return HomologyChange::RankUp;
  if (subgraph_components(h, fx) < subgraph_components(g, x)) return HomologyChange::ComponentsDown;
  return HomologyChange::Neither;
}

}  // namespace foldtrack
