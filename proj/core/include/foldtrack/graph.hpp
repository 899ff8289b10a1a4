#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foldtrack {

using VertexId = int;
using EdgeId = int;

// An edge together with a direction of travel. Edges are stored
// unoriented; the bar involution only flips the flag.
struct OrientedEdge {
  EdgeId edge = 0;
  bool reversed = false;

  constexpr OrientedEdge reverse() const { return {edge, !reversed}; }

  // Signed serialization id: +(edge+1) forward, -(edge+1) backward.
  constexpr int signed_id() const { return reversed ? -(edge + 1) : edge + 1; }
  static OrientedEdge from_signed(int signed_id);

  constexpr auto operator<=>(const OrientedEdge&) const = default;
};

using EdgePath = std::vector<OrientedEdge>;

EdgePath reverse_path(const EdgePath& path);
EdgePath concat(const EdgePath& lhs, const EdgePath& rhs);

// Free reduction of a path, without any endpoint checks.
EdgePath free_reduce(const EdgePath& path);
bool is_reduced(const EdgePath& path);

// One entry per edge, true when the edge belongs to the subgraph.
using EdgeMask = std::vector<bool>;

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
};

// Properly nested sequence G_1 < ... < G_N = G, stored as the level at
// which each edge first appears (1-based).
class Filtration {
 public:
  Filtration() = default;
  Filtration(std::vector<int> edge_level, bool weak = false);

  static Filtration trivial(int edge_count);

  int length() const { return length_; }
  bool weak() const { return weak_; }
  int level(EdgeId e) const { return edge_level_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& edge_levels() const { return edge_level_; }

  // Edges of G_i (i in 0..N; G_0 is empty).
  EdgeMask level_mask(int i) const;
  // Edges of G_b \ G_{a-1}.
  EdgeMask span_mask(int b, int a) const;
  // Edge ids of G_i in increasing order.
  std::vector<EdgeId> level_edges(int i) const;
  bool nonempty_levels() const;

  bool operator==(const Filtration&) const = default;

 private:
  std::vector<int> edge_level_;
  int length_ = 0;
  bool weak_ = false;
};

struct SpanningTree {
  EdgeMask tree;
  // Reduced tree path from the basepoint to each vertex.
  std::vector<EdgePath> path_to;
  // Non-tree edges in increasing id order; generator k is generators[k].
  std::vector<EdgeId> generators;
  // Generator index of an edge, or -1 for tree edges.
  std::vector<int> generator_of;
};

// A finite graph with basepoint, marking and filtration. Values are
// immutable after construction and shared through GraphPtr.
class MarkedGraph {
 public:
  MarkedGraph(int vertex_count, std::vector<Edge> edges, VertexId basepoint = 0,
              std::vector<EdgePath> marking = {},
              std::optional<Filtration> filtration = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  VertexId basepoint() const { return basepoint_; }
  const std::vector<EdgePath>& marking() const { return marking_; }
  bool marked() const { return !marking_.empty(); }
  const Filtration& filtration() const { return filtration_; }

  VertexId initial(OrientedEdge d) const;
  VertexId terminal(OrientedEdge d) const;
  // Oriented edges with initial vertex v, sorted.
  const std::vector<OrientedEdge>& link(VertexId v) const { return links_.at(static_cast<std::size_t>(v)); }
  int valence(VertexId v) const { return static_cast<int>(link(v).size()); }

  // First Betti number of the whole graph.
  int rank() const;
  int component_count() const;
  bool connected() const { return component_count() == 1; }

  // Lowest-edge-id-first spanning tree grown from the basepoint.
  const SpanningTree& spanning_tree() const;

  // Throws StructuralError unless the path is endpoint-compatible.
  void check_path(const EdgePath& path) const;
  bool path_compatible(const EdgePath& path) const;

  // Same graph and marking with a different filtration.
  std::shared_ptr<const MarkedGraph> with_filtration(Filtration filtration) const;
  std::shared_ptr<const MarkedGraph> with_marking(std::vector<EdgePath> marking) const;

  // Structural problems of a marked graph (connectivity, marking loops,
  // filtration nesting); empty when everything checks out.
  std::vector<std::string> marked_graph_issues(int expected_rank = -1) const;
  std::vector<std::string> filtration_issues() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  VertexId basepoint_;
  std::vector<EdgePath> marking_;
  Filtration filtration_;
  std::vector<std::vector<OrientedEdge>> links_;
  mutable std::shared_ptr<const SpanningTree> tree_;
};

using GraphPtr = std::shared_ptr<const MarkedGraph>;

GraphPtr make_graph(int vertex_count, std::vector<Edge> edges, VertexId basepoint = 0,
                    std::vector<EdgePath> marking = {},
                    std::optional<Filtration> filtration = std::nullopt);

// Rose with n petals, identity marking and trivial filtration.
GraphPtr make_rose(int n);

// Reduced path homotopic rel endpoints; StructuralError on malformed paths.
EdgePath tighten(const MarkedGraph& g, const EdgePath& path);

EdgeMask full_mask(const MarkedGraph& g);
std::vector<bool> vertices_of(const MarkedGraph& g, const EdgeMask& mask);
// Component label per vertex of the subgraph (-1 for vertices outside it).
std::vector<int> component_labels(const MarkedGraph& g, const EdgeMask& mask, int* count = nullptr);
int subgraph_components(const MarkedGraph& g, const EdgeMask& mask);
// #edges - #vertices + #components of the subgraph spanned by the mask.
int subgraph_rank(const MarkedGraph& g, const EdgeMask& mask);
int rank(const MarkedGraph& g);
// Valence of v counting only edges in the mask.
int subgraph_valence(const MarkedGraph& g, const EdgeMask& mask, VertexId v);
bool has_valence_one_vertex(const MarkedGraph& g, const EdgeMask& mask);

struct Subgraph {
  EdgeMask edges;
  std::vector<bool> vertices;
};

// closure(G_b \ G_{a-1}); ArgumentError unless 1 <= a <= b <= N.
Subgraph stratum(const MarkedGraph& g, int b, int a);
// Fr(G,b,a): vertices of G_b meeting an edge above level b, not in G_{a-1}.
std::vector<VertexId> frontier(const MarkedGraph& g, int b, int a);

// Closed path at the basepoint read as a word in the spanning-tree
// generators: +(k+1) / -(k+1) for generator k.
std::vector<int> loop_coordinates(const MarkedGraph& g, const EdgePath& loop);
// The loop tau(init e) e tau(term e)^-1 for a generator edge.
EdgePath generator_loop(const MarkedGraph& g, int generator);

}  // namespace foldtrack
