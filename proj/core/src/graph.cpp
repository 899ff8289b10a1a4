#include "foldtrack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "foldtrack/error.hpp"

namespace foldtrack {

OrientedEdge OrientedEdge::from_signed(int signed_id) {
  if (signed_id == 0) throw StructuralError("signed edge id 0 is not allowed");
  return signed_id > 0 ? OrientedEdge{signed_id - 1, false} : OrientedEdge{-signed_id - 1, true};
}

EdgePath reverse_path(const EdgePath& path) {
  EdgePath out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(it->reverse());
  return out;
}

EdgePath concat(const EdgePath& lhs, const EdgePath& rhs) {
  EdgePath out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

EdgePath free_reduce(const EdgePath& path) {
  EdgePath out;
  out.reserve(path.size());
  for (const auto& step : path) {
    if (!out.empty() && out.back() == step.reverse()) {
      out.pop_back();
    } else {
      out.push_back(step);
    }
  }
  return out;
}

bool is_reduced(const EdgePath& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i] == path[i - 1].reverse()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Filtration

Filtration::Filtration(std::vector<int> edge_level, bool weak)
    : edge_level_(std::move(edge_level)), weak_(weak) {
  for (int lv : edge_level_) {
    if (lv < 1) throw StructuralError("filtration levels start at 1");
    length_ = std::max(length_, lv);
  }
}

Filtration Filtration::trivial(int edge_count) {
  return Filtration(std::vector<int>(static_cast<std::size_t>(edge_count), 1));
}

EdgeMask Filtration::level_mask(int i) const {
  EdgeMask mask(edge_level_.size(), false);
  for (std::size_t e = 0; e < edge_level_.size(); ++e) mask[e] = edge_level_[e] <= i;
  return mask;
}

EdgeMask Filtration::span_mask(int b, int a) const {
  EdgeMask mask(edge_level_.size(), false);
  for (std::size_t e = 0; e < edge_level_.size(); ++e) {
    mask[e] = edge_level_[e] <= b && edge_level_[e] >= a;
  }
  return mask;
}

std::vector<EdgeId> Filtration::level_edges(int i) const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < edge_level_.size(); ++e) {
    if (edge_level_[e] <= i) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

bool Filtration::nonempty_levels() const {
  std::vector<bool> seen(static_cast<std::size_t>(length_) + 1, false);
  for (int lv : edge_level_) seen[static_cast<std::size_t>(lv)] = true;
  for (int i = 1; i <= length_; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MarkedGraph

MarkedGraph::MarkedGraph(int vertex_count, std::vector<Edge> edges, VertexId basepoint,
                         std::vector<EdgePath> marking, std::optional<Filtration> filtration)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      basepoint_(basepoint),
      marking_(std::move(marking)) {
  if (vertex_count_ < 1) throw StructuralError("graph needs at least one vertex");
  if (basepoint_ < 0 || basepoint_ >= vertex_count_) throw StructuralError("basepoint out of range");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= vertex_count_ || e.to < 0 || e.to >= vertex_count_) {
      throw StructuralError("edge endpoint out of range");
    }
  }
  filtration_ = filtration ? std::move(*filtration) : Filtration::trivial(edge_count());
  if (static_cast<int>(filtration_.edge_levels().size()) != edge_count()) {
    throw StructuralError("filtration does not cover every edge");
  }
  links_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    links_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].from)].push_back({e, false});
    links_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].to)].push_back({e, true});
  }
  for (auto& l : links_) std::sort(l.begin(), l.end());
  for (const auto& loop : marking_) {
    check_path(loop);
    VertexId start = loop.empty() ? basepoint_ : initial(loop.front());
    VertexId end = loop.empty() ? basepoint_ : terminal(loop.back());
    if (start != basepoint_ || end != basepoint_) {
      throw StructuralError("marking path is not a loop at the basepoint");
    }
  }
}

VertexId MarkedGraph::initial(OrientedEdge d) const {
  const Edge& e = edge(d.edge);
  return d.reversed ? e.to : e.from;
}

VertexId MarkedGraph::terminal(OrientedEdge d) const {
  const Edge& e = edge(d.edge);
  return d.reversed ? e.from : e.to;
}

int MarkedGraph::rank() const { return edge_count() - vertex_count() + component_count(); }

int MarkedGraph::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int comps = vertex_count_;
  for (const auto& e : edges_) {
    int a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

const SpanningTree& MarkedGraph::spanning_tree() const {
  if (tree_) return *tree_;
  auto tree = std::make_shared<SpanningTree>();
  tree->tree.assign(edges_.size(), false);
  tree->path_to.assign(static_cast<std::size_t>(vertex_count_), {});
  std::vector<bool> reached(static_cast<std::size_t>(vertex_count_), false);
  reached[static_cast<std::size_t>(basepoint_)] = true;
  // Repeatedly attach the lowest-id edge joining the tree to a new vertex.
  bool grew = true;
  while (grew) {
    grew = false;
    for (EdgeId e = 0; e < edge_count(); ++e) {
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      bool from_in = reached[static_cast<std::size_t>(ed.from)];
      bool to_in = reached[static_cast<std::size_t>(ed.to)];
      if (from_in == to_in) continue;
      OrientedEdge step{e, !from_in};
      VertexId src = initial(step), dst = terminal(step);
      tree->tree[static_cast<std::size_t>(e)] = true;
      reached[static_cast<std::size_t>(dst)] = true;
      tree->path_to[static_cast<std::size_t>(dst)] = tree->path_to[static_cast<std::size_t>(src)];
      tree->path_to[static_cast<std::size_t>(dst)].push_back(step);
      grew = true;
      break;
    }
  }
  tree->generator_of.assign(edges_.size(), -1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (!tree->tree[static_cast<std::size_t>(e)] && reached[static_cast<std::size_t>(ed.from)]) {
      tree->generator_of[static_cast<std::size_t>(e)] = static_cast<int>(tree->generators.size());
      tree->generators.push_back(e);
    }
  }
  tree_ = std::move(tree);
  return *tree_;
}

bool MarkedGraph::path_compatible(const EdgePath& path) const {
  for (const auto& d : path) {
    if (d.edge < 0 || d.edge >= edge_count()) return false;
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (terminal(path[i - 1]) != initial(path[i])) return false;
  }
  return true;
}

void MarkedGraph::check_path(const EdgePath& path) const {
  for (const auto& d : path) {
    if (d.edge < 0 || d.edge >= edge_count()) {
      throw StructuralError("path uses unknown edge " + std::to_string(d.signed_id()));
    }
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (terminal(path[i - 1]) != initial(path[i])) {
      throw StructuralError("path steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " do not share an endpoint");
    }
  }
}

GraphPtr MarkedGraph::with_filtration(Filtration filtration) const {
  return std::make_shared<const MarkedGraph>(vertex_count_, edges_, basepoint_, marking_,
                                             std::move(filtration));
}

GraphPtr MarkedGraph::with_marking(std::vector<EdgePath> marking) const {
  return std::make_shared<const MarkedGraph>(vertex_count_, edges_, basepoint_, std::move(marking),
                                             filtration_);
}

std::vector<std::string> MarkedGraph::filtration_issues() const {
  std::vector<std::string> issues;
  const Filtration& f = filtration_;
  if (!f.nonempty_levels()) issues.push_back("filtration is not properly nested (empty level)");
  if (!f.weak()) {
    for (int i = 1; i <= f.length(); ++i) {
      if (has_valence_one_vertex(*this, f.level_mask(i))) {
        issues.push_back("level " + std::to_string(i) + " has a valence-one vertex");
      }
    }
    if (rank() >= 1 && f.length() > 2 * rank() - 1) {
      issues.push_back("filtration length exceeds 2n-1");
    }
    // Consecutive levels either gain rank or lose components.
    for (int i = 1; i < f.length(); ++i) {
      EdgeMask lo = f.level_mask(i), hi = f.level_mask(i + 1);
      bool rank_up = subgraph_rank(*this, hi) > subgraph_rank(*this, lo);
      bool comps_down = subgraph_components(*this, hi) < subgraph_components(*this, lo);
      if (!rank_up && !comps_down) {
        issues.push_back("levels " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " have equal rank and component count");
      }
    }
  }
  return issues;
}

std::vector<std::string> MarkedGraph::marked_graph_issues(int expected_rank) const {
  std::vector<std::string> issues;
  if (!connected()) issues.push_back("graph is not connected");
  int n = rank();
  if (expected_rank >= 0 && n != expected_rank) {
    issues.push_back("rank " + std::to_string(n) + " differs from declared rank " +
                     std::to_string(expected_rank));
  }
  if (static_cast<int>(marking_.size()) != n) {
    issues.push_back("marking has " + std::to_string(marking_.size()) + " loops for rank " +
                     std::to_string(n));
  }
  auto more = filtration_issues();
  issues.insert(issues.end(), more.begin(), more.end());
  return issues;
}

GraphPtr make_graph(int vertex_count, std::vector<Edge> edges, VertexId basepoint,
                    std::vector<EdgePath> marking, std::optional<Filtration> filtration) {
  return std::make_shared<const MarkedGraph>(vertex_count, std::move(edges), basepoint,
                                             std::move(marking), std::move(filtration));
}

GraphPtr make_rose(int n) {
  std::vector<Edge> edges(static_cast<std::size_t>(n), Edge{0, 0});
  std::vector<EdgePath> marking;
  for (int i = 0; i < n; ++i) marking.push_back({OrientedEdge{i, false}});
  return make_graph(1, std::move(edges), 0, std::move(marking));
}

EdgePath tighten(const MarkedGraph& g, const EdgePath& path) {
  g.check_path(path);
  return free_reduce(path);
}

EdgeMask full_mask(const MarkedGraph& g) { return EdgeMask(static_cast<std::size_t>(g.edge_count()), true); }

std::vector<bool> vertices_of(const MarkedGraph& g, const EdgeMask& mask) {
  std::vector<bool> out(static_cast<std::size_t>(g.vertex_count()), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask[static_cast<std::size_t>(e)]) continue;
    out[static_cast<std::size_t>(g.edge(e).from)] = true;
    out[static_cast<std::size_t>(g.edge(e).to)] = true;
  }
  return out;
}

std::vector<int> component_labels(const MarkedGraph& g, const EdgeMask& mask, int* count) {
  auto in = vertices_of(g, mask);
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!in[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<VertexId> q;
    q.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (const auto& d : g.link(v)) {
        if (!mask[static_cast<std::size_t>(d.edge)]) continue;
        VertexId w = g.terminal(d);
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

int subgraph_components(const MarkedGraph& g, const EdgeMask& mask) {
  int count = 0;
  component_labels(g, mask, &count);
  return count;
}

int subgraph_rank(const MarkedGraph& g, const EdgeMask& mask) {
  int edges = static_cast<int>(std::count(mask.begin(), mask.end(), true));
  auto in = vertices_of(g, mask);
  int verts = static_cast<int>(std::count(in.begin(), in.end(), true));
  return edges - verts + subgraph_components(g, mask);
}

int rank(const MarkedGraph& g) { return g.rank(); }

int subgraph_valence(const MarkedGraph& g, const EdgeMask& mask, VertexId v) {
  int val = 0;
  for (const auto& d : g.link(v)) {
    if (mask[static_cast<std::size_t>(d.edge)]) ++val;
  }
  return val;
}

bool has_valence_one_vertex(const MarkedGraph& g, const EdgeMask& mask) {
  auto in = vertices_of(g, mask);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[static_cast<std::size_t>(v)] && subgraph_valence(g, mask, v) == 1) return true;
  }
  return false;
}

namespace {

void check_levels(const MarkedGraph& g, int b, int a) {
  int n = g.filtration().length();
  if (a < 1 || b < a || b > n) {
    std::ostringstream os;
    os << "levels (b=" << b << ", a=" << a << ") out of range for filtration of length " << n;
    throw ArgumentError(os.str());
  }
}

}  // namespace

Subgraph stratum(const MarkedGraph& g, int b, int a) {
  check_levels(g, b, a);
  Subgraph s;
  s.edges = g.filtration().span_mask(b, a);
  s.vertices = vertices_of(g, s.edges);
  return s;
}

std::vector<VertexId> frontier(const MarkedGraph& g, int b, int a) {
  check_levels(g, b, a);
  const Filtration& f = g.filtration();
  auto in_b = vertices_of(g, f.level_mask(b));
  auto in_lower = vertices_of(g, f.level_mask(a - 1));
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_b[static_cast<std::size_t>(v)] || in_lower[static_cast<std::size_t>(v)]) continue;
    bool meets_higher = std::any_of(g.link(v).begin(), g.link(v).end(),
                                    [&](const OrientedEdge& d) { return f.level(d.edge) > b; });
    if (meets_higher) out.push_back(v);
  }
  return out;
}

std::vector<int> loop_coordinates(const MarkedGraph& g, const EdgePath& loop) {
  g.check_path(loop);
  const SpanningTree& t = g.spanning_tree();
  std::vector<int> word;
  for (const auto& d : loop) {
    int gen = t.generator_of[static_cast<std::size_t>(d.edge)];
    if (gen < 0) continue;
    int letter = d.reversed ? -(gen + 1) : gen + 1;
    if (!word.empty() && word.back() == -letter) {
      word.pop_back();
    } else {
      word.push_back(letter);
    }
  }
  return word;
}

EdgePath generator_loop(const MarkedGraph& g, int generator) {
  const SpanningTree& t = g.spanning_tree();
  EdgeId e = t.generators.at(static_cast<std::size_t>(generator));
  OrientedEdge d{e, false};
  EdgePath path = t.path_to[static_cast<std::size_t>(g.initial(d))];
  path.push_back(d);
  auto back = reverse_path(t.path_to[static_cast<std::size_t>(g.terminal(d))]);
  path.insert(path.end(), back.begin(), back.end());
  return free_reduce(path);
}

}  // namespace foldtrack
