#include "foldtrack/metric.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

EdgePath realize(const MarkedGraph& h, const Word& w) {
  EdgePath out;
  auto push = [&out](OrientedEdge d) {
    if (!out.empty() && out.back() == d.reverse()) {
      out.pop_back();
    } else {
      out.push_back(d);
    }
  };
  for (int x : w) {
    const EdgePath& loop = h.marking().at(ix(std::abs(x) - 1));
    if (x > 0) {
      for (const auto& d : loop) push(d);
    } else {
      for (auto it = loop.rbegin(); it != loop.rend(); ++it) push(it->reverse());
    }
  }
  return out;
}

}  // namespace

Automorphism marking_automorphism(const MarkedGraph& g) {
  std::vector<Word> words;
  for (const auto& loop : g.marking()) words.push_back(loop_coordinates(g, loop));
  return Automorphism(std::move(words));
}

GraphMap difference_map(const GraphPtr& g, const GraphPtr& h, const std::optional<Automorphism>& source_marking_inverse) {
  if (!g->marked() || !h->marked()) throw ArgumentError("difference map needs two marked graphs");
  if (g->rank() != h->rank() || g->marking().size() != h->marking().size()) {
    throw ArgumentError("difference map needs graphs of equal rank");
  }
  Automorphism inv;
  if (source_marking_inverse) {
    inv = *source_marking_inverse;
  } else {
    Automorphism mu = marking_automorphism(*g);
    inv = mu == Automorphism::identity(mu.rank()) ? mu : exact_inverse(mu);
  }
  const SpanningTree& tree = g->spanning_tree();
  std::vector<VertexId> verts(ix(g->vertex_count()), h->basepoint());
  std::vector<EdgePath> imgs(ix(g->edge_count()));
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    int k = tree.generator_of[ix(e)];
    if (k < 0) continue;
    imgs[ix(e)] = realize(*h, inv.image(k));
  }
  return GraphMap(g, h, std::move(verts), std::move(imgs));
}

GraphMap slide_normalize(const GraphMap& f, int* slides) {
  GraphMap cur = tighten_map(f);
  const MarkedGraph& g = *cur.domain();
  const MarkedGraph& h = *cur.codomain();
  int cap = 10 * g.edge_count();
  int done = 0;
  bool progress = true;
  while (progress && done < cap) {
    progress = false;
    for (VertexId v = 0; v < g.vertex_count() && done < cap; ++v) {
      if (gate_count(cur, v) != 1) continue;
      std::optional<OrientedEdge> lead;
      for (const auto& d : g.link(v)) {
        if (auto x = derivative(cur, d)) lead = x;
      }
      OrientedEdge ep = *lead;
      // New image of each direction at v: e'-bar followed by the old image.
      std::vector<EdgePath> imgs = cur.edge_images();
      for (const auto& d : g.link(v)) {
        EdgePath path = cur.image(d);
        path.insert(path.begin(), ep.reverse());
        path = free_reduce(path);
        imgs[ix(d.edge)] = d.reversed ? reverse_path(path) : path;
      }
      // A loop at v is listed twice in the link; redo it from the original.
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).from == v && g.edge(e).to == v) {
          EdgePath path = cur.edge_image(e);
          path.insert(path.begin(), ep.reverse());
          path.push_back(ep);
          imgs[ix(e)] = free_reduce(path);
        }
      }
      long before = cur.total_length();
      long after = 0;
      for (const auto& p : imgs) after += static_cast<long>(p.size());
      if (after >= before) continue;
      std::vector<VertexId> verts = cur.vertex_images();
      verts[ix(v)] = h.terminal(ep);
      cur = GraphMap(cur.domain(), cur.codomain(), std::move(verts), std::move(imgs));
      ++done;
      progress = true;
    }
  }
  if (slides) *slides = done;
  return cur;
}

MetricEstimate estimate_d(const GraphPtr& g, const GraphPtr& h, const std::optional<Automorphism>& source_marking_inverse) {
  GraphMap canonical = tighten_map(difference_map(g, h, source_marking_inverse));
  int slides = 0;
  GraphMap slid = slide_normalize(canonical, &slides);
  MetricEstimate est;
  if (slides > 0 && slid.total_length() < canonical.total_length()) {
    est.method = "fold-normalized";
    est.witness = slid;
  } else {
    est.method = "canonical";
    est.witness = canonical;
  }
  est.witness_total_length = est.witness->total_length();
  est.value = map_length(*est.witness);
  return est;
}

GraphPtr remarked_rose(const Automorphism& phi) {
  std::vector<EdgePath> marking;
  for (const auto& w : phi.images()) {
    EdgePath p;
    for (int x : w) p.push_back(OrientedEdge::from_signed(x));
    marking.push_back(std::move(p));
  }
  std::vector<Edge> edges(ix(phi.rank()), Edge{0, 0});
  return make_graph(1, std::move(edges), 0, std::move(marking));
}

Automorphism power_by_squaring(const Automorphism& phi, long m) {
  if (m < 0) throw ArgumentError("negative power");
  Automorphism result = Automorphism::identity(phi.rank());
  Automorphism base = phi;
  while (m > 0) {
    if (m & 1) result = compose(base, result);
    m >>= 1;
    if (m > 0) base = compose(base, base);
  }
  return result;
}

Automorphism twist(int rank) {
  if (rank < 2) throw ArgumentError("twist needs rank >= 2");
  Automorphism id = Automorphism::identity(rank);
  std::vector<Word> imgs = id.images();
  imgs[1] = {2, 1};
  return Automorphism(std::move(imgs));
}

Automorphism twist_inverse(int rank) {
  if (rank < 2) throw ArgumentError("twist needs rank >= 2");
  std::vector<Word> imgs = Automorphism::identity(rank).images();
  imgs[1] = {2, -1};
  return Automorphism(std::move(imgs));
}

TwistMember twist_member(int rank, long m) {
  TwistMember t;
  t.m = m;
  t.marking = power_by_squaring(twist(rank), m);
  t.marking_inverse = power_by_squaring(twist_inverse(rank), m);
  t.graph = remarked_rose(t.marking);
  return t;
}

QuasiMetricAudit quasi_metric_audit(const std::vector<GraphPtr>& samples,
                                    const std::vector<std::optional<Automorphism>>& marking_inverses) {
  if (samples.size() < 3) throw ArgumentError("quasi-metric audit needs at least three samples");
  std::size_t n = samples.size();
  auto hint = [&](std::size_t i) -> std::optional<Automorphism> {
    return i < marking_inverses.size() ? marking_inverses[i] : std::nullopt;
  };
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  QuasiMetricAudit audit;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto est = estimate_d(samples[i], samples[j], hint(i));
      d[i][j] = est.value;
      audit.rows.push_back({static_cast<int>(i), static_cast<int>(j), est.value, est.witness_total_length, est.method});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    audit.max_self = std::max(audit.max_self, d[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d[j][i] > 0) audit.max_asymmetry = std::max(audit.max_asymmetry, d[i][j] / d[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        audit.max_triangle_defect = std::max(audit.max_triangle_defect, d[i][k] - d[i][j] - d[j][k]);
      }
    }
  }
  return audit;
}

std::string audit_tsv(const QuasiMetricAudit& audit) {
  std::ostringstream os;
  os << "src\tdst\td_upper\twitness_total_length\tmethod\n";
  os << std::fixed << std::setprecision(9);
  for (const auto& r : audit.rows) {
    os << r.src << '\t' << r.dst << '\t' << r.d_upper << '\t' << r.witness_total_length << '\t' << r.method << '\n';
  }
  return os.str();
}

}  // namespace foldtrack
