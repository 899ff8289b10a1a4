#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldtrack/graph.hpp"
#include "foldtrack/matrix.hpp"

namespace foldtrack {

// Combinatorial map between marked graphs: a vertex map plus an edge path
// for every edge. An empty edge path collapses the edge to a vertex.
class GraphMap {
 public:
  GraphMap(GraphPtr domain, GraphPtr codomain, std::vector<VertexId> vertex_images,
           std::vector<EdgePath> edge_images);

  static GraphMap identity(GraphPtr g);

  const GraphPtr& domain() const { return domain_; }
  const GraphPtr& codomain() const { return codomain_; }
  const std::vector<VertexId>& vertex_images() const { return vertex_images_; }
  const std::vector<EdgePath>& edge_images() const { return edge_images_; }
  VertexId vertex_image(VertexId v) const { return vertex_images_.at(static_cast<std::size_t>(v)); }
  const EdgePath& edge_image(EdgeId e) const { return edge_images_.at(static_cast<std::size_t>(e)); }
  // Image of an oriented edge (reversed path for backward edges).
  EdgePath image(OrientedEdge d) const;

  // Sum of |f(e)| over the edges of the domain.
  long total_length() const;
  bool is_self_map() const;
  bool tightened() const;

 private:
  GraphPtr domain_;
  GraphPtr codomain_;
  std::vector<VertexId> vertex_images_;
  std::vector<EdgePath> edge_images_;
};

// Same vertex count, edge list and basepoint.
bool same_graph(const MarkedGraph& a, const MarkedGraph& b);

// Concatenation of edge images along p; not tightened.
EdgePath apply(const GraphMap& f, const EdgePath& p);
// f2 after f1, untightened.
GraphMap compose(const GraphMap& f2, const GraphMap& f1);
GraphMap tighten_map(const GraphMap& f);

// Edge ids ordered by (filtration level, id): row/column order of M(f).
std::vector<EdgeId> edge_order(const MarkedGraph& g);
// M(f)(j,k) = occurrences of E'_j or its reverse in f(E_k), in edge_order.
IntMatrix transition_matrix(const GraphMap& f);
// M_rs(f): rows and columns restricted to the edges of G(s,r).
IntMatrix submatrix(const GraphMap& f, int r, int s);
// Positions in edge_order(g) of the edges of G(s,r).
std::vector<int> span_indices(const MarkedGraph& g, int r, int s);

// Df: first oriented edge of the image of d, empty for collapsed edges.
std::optional<OrientedEdge> derivative(const GraphMap& f, OrientedEdge d);
// T(f,v) = |Df(lk(v))|.
int gate_count(const GraphMap& f, VertexId v);

// f(G_i) lies in G'_i and f|G_i is a homotopy equivalence onto G'_i for all i.
bool respects_filtration(const GraphMap& f);
// Conditions (s1) and (s2) for the span G(b,a).
bool is_supported_on(const GraphMap& f, int b, int a);

// L(f) = log(sum_e |f(e)|), natural log.
double map_length(const GraphMap& f);

// Chain subdivision of edge e into k pieces with the canonical homeomorphism.
std::pair<GraphPtr, GraphMap> subdivide(const GraphPtr& g, EdgeId e, int k);

// Image of every marking loop, tightened, compared with the codomain marking
// up to one common basepoint-change path.
bool marking_respecting(const GraphMap& f);

struct ValenceTwoAudit {
  int count = 0;      // vertices with T(f,v) = 2
  int threshold = 0;  // V_n / 2
  bool warn = false;
};
ValenceTwoAudit valence_two_audit(const GraphMap& f, int rank);

// V_n = 2(6n-6) and Edge_n = V_n + n - 1.
long vertex_bound(int rank);
long edge_bound(int rank);

std::string describe(const GraphMap& f);

}  // namespace foldtrack
