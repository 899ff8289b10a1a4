#include "foldtrack/graph_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "foldtrack/error.hpp"
#include "foldtrack/folding.hpp"

namespace foldtrack {

GraphMap::GraphMap(GraphPtr domain, GraphPtr codomain, std::vector<VertexId> vertex_images,
                   std::vector<EdgePath> edge_images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)) {
  if (!domain_ || !codomain_) throw StructuralError("graph map needs a domain and a codomain");
  if (static_cast<int>(vertex_images_.size()) != domain_->vertex_count()) {
    throw StructuralError("vertex map size does not match the domain");
  }
  if (static_cast<int>(edge_images_.size()) != domain_->edge_count()) {
    throw StructuralError("edge map size does not match the domain");
  }
  for (VertexId w : vertex_images_) {
    if (w < 0 || w >= codomain_->vertex_count()) throw StructuralError("vertex image out of range");
  }
  for (EdgeId e = 0; e < domain_->edge_count(); ++e) {
    const EdgePath& img = edge_images_[static_cast<std::size_t>(e)];
    codomain_->check_path(img);
    VertexId a = vertex_images_[static_cast<std::size_t>(domain_->edge(e).from)];
    VertexId b = vertex_images_[static_cast<std::size_t>(domain_->edge(e).to)];
    bool ok = img.empty() ? a == b
                          : codomain_->initial(img.front()) == a && codomain_->terminal(img.back()) == b;
    if (!ok) {
      throw StructuralError("image of edge " + std::to_string(e + 1) +
                            " is not compatible with the vertex map");
    }
  }
}

GraphMap GraphMap::identity(GraphPtr g) {
  std::vector<VertexId> verts(static_cast<std::size_t>(g->vertex_count()));
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<EdgePath> imgs;
  for (EdgeId e = 0; e < g->edge_count(); ++e) imgs.push_back({OrientedEdge{e, false}});
  return GraphMap(g, g, std::move(verts), std::move(imgs));
}

EdgePath GraphMap::image(OrientedEdge d) const {
  const EdgePath& img = edge_image(d.edge);
  return d.reversed ? reverse_path(img) : img;
}

long GraphMap::total_length() const {
  long total = 0;
  for (const auto& p : edge_images_) total += static_cast<long>(p.size());
  return total;
}

bool GraphMap::is_self_map() const { return domain_ == codomain_ || same_graph(*domain_, *codomain_); }

bool GraphMap::tightened() const {
  return std::all_of(edge_images_.begin(), edge_images_.end(), [](const EdgePath& p) { return is_reduced(p); });
}

bool same_graph(const MarkedGraph& a, const MarkedGraph& b) {
  if (&a == &b) return true;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.basepoint() != b.basepoint()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    if (a.edge(e).from != b.edge(e).from || a.edge(e).to != b.edge(e).to) return false;
  }
  return true;
}

EdgePath apply(const GraphMap& f, const EdgePath& p) {
  f.domain()->check_path(p);
  EdgePath out;
  for (const auto& d : p) {
    EdgePath img = f.image(d);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

GraphMap compose(const GraphMap& f2, const GraphMap& f1) {
  if (!same_graph(*f1.codomain(), *f2.domain())) {
    throw StructuralError("compose: codomain of the first map is not the domain of the second");
  }
  std::vector<VertexId> verts;
  verts.reserve(f1.vertex_images().size());
  for (VertexId w : f1.vertex_images()) verts.push_back(f2.vertex_image(w));
  std::vector<EdgePath> imgs;
  imgs.reserve(f1.edge_images().size());
  for (const auto& p : f1.edge_images()) imgs.push_back(apply(f2, p));
  return GraphMap(f1.domain(), f2.codomain(), std::move(verts), std::move(imgs));
}

GraphMap tighten_map(const GraphMap& f) {
  std::vector<EdgePath> imgs;
  imgs.reserve(f.edge_images().size());
  for (const auto& p : f.edge_images()) imgs.push_back(free_reduce(p));
  return GraphMap(f.domain(), f.codomain(), f.vertex_images(), std::move(imgs));
}

std::vector<EdgeId> edge_order(const MarkedGraph& g) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  const Filtration& f = g.filtration();
  std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return f.level(x) < f.level(y); });
  return order;
}

namespace {

std::vector<int> positions(const std::vector<EdgeId>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

}  // namespace

IntMatrix transition_matrix(const GraphMap& f) {
  auto dom_order = edge_order(*f.domain());
  auto cod_pos = positions(edge_order(*f.codomain()));
  IntMatrix m(f.codomain()->edge_count(), f.domain()->edge_count());
  for (std::size_t k = 0; k < dom_order.size(); ++k) {
    for (const auto& d : f.edge_image(dom_order[k])) {
      m(cod_pos[static_cast<std::size_t>(d.edge)], static_cast<int>(k)) += 1;
    }
  }
  return m;
}

std::vector<int> span_indices(const MarkedGraph& g, int r, int s) {
  const Filtration& fl = g.filtration();
  if (r < 1 || s < r || s > fl.length()) {
    throw ArgumentError("stratum span (" + std::to_string(r) + ", " + std::to_string(s) + ") out of range");
  }
  auto order = edge_order(g);
  std::vector<int> idx;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int lv = fl.level(order[i]);
    if (lv >= r && lv <= s) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

IntMatrix submatrix(const GraphMap& f, int r, int s) {
  if (f.domain()->filtration().length() != f.codomain()->filtration().length()) {
    throw ArgumentError("submatrix needs filtrations of equal length on both sides");
  }
  return transition_matrix(f).select(span_indices(*f.codomain(), r, s), span_indices(*f.domain(), r, s));
}

std::optional<OrientedEdge> derivative(const GraphMap& f, OrientedEdge d) {
  const EdgePath& img = f.edge_image(d.edge);
  if (img.empty()) return std::nullopt;
  return d.reversed ? img.back().reverse() : img.front();
}

int gate_count(const GraphMap& f, VertexId v) {
  std::set<OrientedEdge> gates;
  for (const auto& d : f.domain()->link(v)) {
    if (auto g = derivative(f, d)) gates.insert(*g);
  }
  return static_cast<int>(gates.size());
}

bool respects_filtration(const GraphMap& f) {
  const Filtration& fd = f.domain()->filtration();
  const Filtration& fc = f.codomain()->filtration();
  if (fd.length() != fc.length()) throw ArgumentError("filtrations have different lengths");
  for (int i = 1; i <= fd.length(); ++i) {
    if (!restriction_is_equivalence(f, fd.level_mask(i), fc.level_mask(i))) return false;
  }
  return true;
}

namespace {

// f restricted to the masked edges is a simplicial isomorphism onto the
// target edges. Vertex injectivity is only required on `strict_vertices`.
bool simplicial_bijection(const GraphMap& f, const EdgeMask& dom, const EdgeMask& cod,
                          const std::vector<bool>& strict_vertices, const std::vector<bool>& target_vertices) {
  std::vector<int> hit(cod.size(), 0);
  for (EdgeId e = 0; e < f.domain()->edge_count(); ++e) {
    if (!dom[static_cast<std::size_t>(e)]) continue;
    const EdgePath& img = f.edge_image(e);
    if (img.size() != 1) return false;
    if (!cod[static_cast<std::size_t>(img[0].edge)]) return false;
    if (++hit[static_cast<std::size_t>(img[0].edge)] > 1) return false;
  }
  for (std::size_t k = 0; k < cod.size(); ++k) {
    if (cod[k] && hit[k] != 1) return false;
  }
  std::vector<int> owner(static_cast<std::size_t>(f.codomain()->vertex_count()), -1);
  for (VertexId v = 0; v < f.domain()->vertex_count(); ++v) {
    if (!strict_vertices[static_cast<std::size_t>(v)]) continue;
    VertexId w = f.vertex_image(v);
    if (!target_vertices[static_cast<std::size_t>(w)]) return false;
    if (owner[static_cast<std::size_t>(w)] >= 0) return false;
    owner[static_cast<std::size_t>(w)] = v;
  }
  return true;
}

}  // namespace

bool is_supported_on(const GraphMap& f, int b, int a) {
  const MarkedGraph& g = *f.domain();
  const MarkedGraph& h = *f.codomain();
  int n = g.filtration().length();
  if (a < 1 || b < a || b > n || h.filtration().length() != n) {
    throw ArgumentError("support span out of range");
  }
  // (s1): below a, a simplicial homeomorphism onto G'_{a-1}.
  EdgeMask low = g.filtration().level_mask(a - 1);
  EdgeMask low_c = h.filtration().level_mask(a - 1);
  auto low_v = vertices_of(g, low);
  auto low_cv = vertices_of(h, low_c);
  if (!simplicial_bijection(f, low, low_c, low_v, low_cv)) return false;
  // (s2): above b, a simplicial homeomorphism except that vertices of G_b
  // may be identified; vertices outside G_b go outside G'_b.
  EdgeMask high(static_cast<std::size_t>(g.edge_count()));
  EdgeMask high_c(static_cast<std::size_t>(h.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) high[static_cast<std::size_t>(e)] = g.filtration().level(e) > b;
  for (EdgeId e = 0; e < h.edge_count(); ++e) high_c[static_cast<std::size_t>(e)] = h.filtration().level(e) > b;
  auto in_gb = vertices_of(g, g.filtration().level_mask(b));
  auto in_hb = vertices_of(h, h.filtration().level_mask(b));
  std::vector<bool> outside(in_gb.size());
  std::vector<bool> outside_c(in_hb.size());
  for (std::size_t v = 0; v < in_gb.size(); ++v) outside[v] = !in_gb[v];
  for (std::size_t v = 0; v < in_hb.size(); ++v) outside_c[v] = !in_hb[v];
  return simplicial_bijection(f, high, high_c, outside, outside_c);
}

double map_length(const GraphMap& f) {
  long total = f.total_length();
  if (total <= 0) throw ArgumentError("L(f) is undefined: every edge is collapsed");
  return std::log(static_cast<double>(total));
}

std::pair<GraphPtr, GraphMap> subdivide(const GraphPtr& g, EdgeId e, int k) {
  if (e < 0 || e >= g->edge_count()) throw ArgumentError("subdivide: unknown edge");
  if (k < 2) throw ArgumentError("subdivide: need k >= 2");
  std::vector<Edge> edges = g->edges();
  std::vector<int> levels = g->filtration().edge_levels();
  int nv = g->vertex_count();
  int ne = g->edge_count();
  VertexId end = edges[static_cast<std::size_t>(e)].to;
  // Piece 0 keeps the id of e; pieces 1..k-1 are appended.
  EdgePath chain{OrientedEdge{e, false}};
  VertexId prev = nv;
  edges[static_cast<std::size_t>(e)].to = nv;
  for (int i = 1; i < k; ++i) {
    VertexId next = (i == k - 1) ? end : nv + i;
    edges.push_back(Edge{prev, next});
    levels.push_back(levels[static_cast<std::size_t>(e)]);
    chain.push_back(OrientedEdge{ne + i - 1, false});
    prev = next;
  }
  std::vector<VertexId> verts(static_cast<std::size_t>(nv));
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<EdgePath> imgs;
  for (EdgeId x = 0; x < ne; ++x) imgs.push_back(x == e ? chain : EdgePath{OrientedEdge{x, false}});
  // Marking transported through the homeomorphism.
  auto transport = [&](const EdgePath& p) {
    EdgePath out;
    for (const auto& d : p) {
      EdgePath img = d.edge == e ? chain : EdgePath{OrientedEdge{d.edge, false}};
      if (d.reversed) img = reverse_path(img);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  };
  std::vector<EdgePath> marking;
  for (const auto& loop : g->marking()) marking.push_back(transport(loop));
  auto sub = make_graph(nv + k - 1, std::move(edges), g->basepoint(), std::move(marking),
                        Filtration(std::move(levels), g->filtration().weak()));
  GraphMap h(g, sub, std::move(verts), std::move(imgs));
  return {sub, std::move(h)};
}

ValenceTwoAudit valence_two_audit(const GraphMap& f, int rank) {
  ValenceTwoAudit audit;
  audit.threshold = static_cast<int>(vertex_bound(rank) / 2);
  for (VertexId v = 0; v < f.domain()->vertex_count(); ++v) {
    if (gate_count(f, v) == 2) ++audit.count;
  }
  audit.warn = audit.count > audit.threshold;
  return audit;
}

long vertex_bound(int rank) { return 2L * (6L * rank - 6L); }

long edge_bound(int rank) { return vertex_bound(rank) + rank - 1; }

std::string describe(const GraphMap& f) {
  std::ostringstream os;
  for (EdgeId e = 0; e < f.domain()->edge_count(); ++e) {
    if (e) os << "; ";
    os << (e + 1) << " -> [";
    const EdgePath& p = f.edge_image(e);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << p[i].signed_id();
    }
    os << ']';
  }
  return os.str();
}

}  // namespace foldtrack
