#include "foldtrack/folding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

int common_prefix(const EdgePath& x, const EdgePath& y) {
  std::size_t n = std::min(x.size(), y.size());
  std::size_t c = 0;
  while (c < n && x[c] == y[c]) ++c;
  return static_cast<int>(c);
}

void set_oriented(std::vector<EdgePath>& images, OrientedEdge d, EdgePath path) {
  images[ix(d.edge)] = d.reversed ? reverse_path(path) : std::move(path);
}

EdgePath slice(const EdgePath& p, std::size_t from, std::size_t to) {
  return EdgePath(p.begin() + static_cast<std::ptrdiff_t>(from), p.begin() + static_cast<std::ptrdiff_t>(to));
}

bool has_loop_at(const MarkedGraph& g, VertexId v) {
  for (const auto& d : g.link(v)) {
    if (g.terminal(d) == v) return true;
  }
  return false;
}

// Orientation score for a full/full fold that removes `first`: lower is
// better. Keeps the lower-level edge, keeps v1 out of G_{a-1}, and avoids
// loops at v1 so the inverse stays LC-one.
int case3_penalty(const MarkedGraph& g, OrientedEdge first, OrientedEdge second, int a) {
  const Filtration& fl = g.filtration();
  VertexId v1 = g.terminal(first);
  int penalty = 0;
  if (fl.level(first.edge) < fl.level(second.edge)) penalty += 8;
  if (a > 1 && vertices_of(g, fl.level_mask(a - 1))[ix(v1)]) penalty += 4;
  if (v1 == g.initial(first) || has_loop_at(g, v1)) penalty += 2;
  return penalty;
}

FoldSpec make_spec(const GraphMap& f, VertexId v, OrientedEdge d1, OrientedEdge d2, int a) {
  EdgePath i1 = f.image(d1), i2 = f.image(d2);
  FoldSpec s;
  s.vertex = v;
  s.first = d1;
  s.second = d2;
  s.common_length = common_prefix(i1, i2);
  s.first_full = s.common_length == static_cast<int>(i1.size());
  s.second_full = s.common_length == static_cast<int>(i2.size());
  if (s.first_full && !s.second_full) {
    std::swap(s.first, s.second);
    std::swap(s.first_full, s.second_full);
  } else if (s.first_full && s.second_full) {
    const MarkedGraph& g = *f.domain();
    if (case3_penalty(g, s.second, s.first, a) < case3_penalty(g, s.first, s.second, a)) {
      std::swap(s.first, s.second);
    }
  } else if (!s.first_full && !s.second_full) {
    const Filtration& fl = f.domain()->filtration();
    if (fl.level(s.first.edge) < fl.level(s.second.edge)) std::swap(s.first, s.second);
  }
  return s;
}

struct Candidate {
  VertexId v;
  OrientedEdge d1, d2;
};

std::vector<Candidate> candidates(const GraphMap& f) {
  std::vector<Candidate> out;
  const MarkedGraph& g = *f.domain();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& link = g.link(v);
    for (std::size_t i = 0; i < link.size(); ++i) {
      auto di = derivative(f, link[i]);
      if (!di) continue;
      for (std::size_t j = i + 1; j < link.size(); ++j) {
        auto dj = derivative(f, link[j]);
        if (dj && *di == *dj) out.push_back({v, link[i], link[j]});
      }
    }
  }
  return out;
}

GraphPtr rebuild(const MarkedGraph& old, int vertex_count, std::vector<Edge> edges, VertexId basepoint,
                 std::vector<int> levels, const std::vector<EdgePath>& pushed_marking) {
  Filtration fl(std::move(levels), old.filtration().weak());
  return make_graph(vertex_count, std::move(edges), basepoint, pushed_marking, std::move(fl));
}

std::vector<EdgePath> push_marking(const MarkedGraph& g, const std::vector<EdgePath>& imgs) {
  std::vector<EdgePath> out;
  for (const auto& loop : g.marking()) {
    EdgePath path;
    for (const auto& d : loop) {
      const EdgePath& img = imgs[ix(d.edge)];
      if (d.reversed) {
        auto r = reverse_path(img);
        path.insert(path.end(), r.begin(), r.end());
      } else {
        path.insert(path.end(), img.begin(), img.end());
      }
    }
    out.push_back(free_reduce(path));
  }
  return out;
}

std::vector<VertexId> iota_vertices(int n) {
  std::vector<VertexId> v(ix(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<EdgePath> identity_images(int edge_count) {
  std::vector<EdgePath> imgs;
  for (EdgeId e = 0; e < edge_count; ++e) imgs.push_back({OrientedEdge{e, false}});
  return imgs;
}

}  // namespace

std::optional<FoldSpec> find_fold(const GraphMap& f, FoldStrategy strategy) {
  auto cands = candidates(f);
  if (cands.empty()) return std::nullopt;
  const Filtration& fl = f.domain()->filtration();
  int a = 1;
  if (strategy.prefer_lower_strata) {
    int j = strategy.stratum;
    a = std::max(1, j);
    const Candidate* partial = nullptr;
    for (const auto& c : cands) {
      int l1 = fl.level(c.d1.edge), l2 = fl.level(c.d2.edge);
      OrientedEdge upper = c.d1, lower = c.d2;
      if (l1 < l2) std::swap(upper, lower);
      if (fl.level(upper.edge) != j || fl.level(lower.edge) >= j) continue;
      auto common = common_prefix(f.image(upper), f.image(lower));
      if (common == static_cast<int>(f.edge_image(lower.edge).size())) {
        return make_spec(f, c.v, upper, lower, a);
      }
      if (!partial) partial = &c;
    }
    if (partial) return make_spec(f, partial->v, partial->d1, partial->d2, a);
  }
  return make_spec(f, cands.front().v, cands.front().d1, cands.front().d2, a);
}

std::pair<FoldRecord, GraphMap> apply_fold(const GraphMap& f, const FoldSpec& spec) {
  const GraphPtr& gp = f.domain();
  const MarkedGraph& g = *gp;
  OrientedEdge d1 = spec.first, d2 = spec.second;
  if (d1 == d2 || g.initial(d1) != spec.vertex || g.initial(d2) != spec.vertex) {
    throw ArgumentError("fold directions must be distinct and start at the fold vertex");
  }
  EdgePath i1 = f.image(d1), i2 = f.image(d2);
  int c = spec.common_length;
  if (c < 1 || c > common_prefix(i1, i2) || spec.first_full != (c == static_cast<int>(i1.size())) ||
      spec.second_full != (c == static_cast<int>(i2.size()))) {
    throw ArgumentError("fold segment lengths do not match the images");
  }
  if (spec.first_full && !spec.second_full) throw ArgumentError("fold spec is not normalized");

  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  const std::vector<int>& old_levels = g.filtration().edge_levels();
  std::vector<int> levels = old_levels;
  std::vector<Edge> edges = g.edges();
  const EdgeId k1 = d1.edge, k2 = d2.edge;
  const VertexId v0 = spec.vertex;

  auto set_initial = [&](OrientedEdge d, VertexId w) {
    if (d.reversed) {
      edges[ix(d.edge)].to = w;
    } else {
      edges[ix(d.edge)].from = w;
    }
  };

  FoldCase kind;
  std::vector<EdgeId> cut;
  GraphPtr star;
  std::vector<VertexId> p_verts, q_verts, f1_verts;
  std::vector<EdgePath> p_imgs, q_imgs, f1_imgs;

  if (!spec.first_full && spec.second_full) {
    kind = FoldCase::Case1;
    VertexId v2 = g.terminal(d2);
    set_initial(d1, v2);
    p_verts = iota_vertices(nv);
    p_imgs = identity_images(ne);
    set_oriented(p_imgs, d1, {d2, d1});
    levels[ix(k2)] = std::min(old_levels[ix(k2)], old_levels[ix(k1)]);
    star = rebuild(g, nv, edges, g.basepoint(), levels, push_marking(g, p_imgs));
    f1_verts = f.vertex_images();
    f1_imgs = f.edge_images();
    set_oriented(f1_imgs, d1, slice(i1, ix(c), i1.size()));
    q_verts = iota_vertices(nv);
    q_imgs = identity_images(ne);
    set_oriented(q_imgs, d1, {d2.reverse(), d1});
    cut = {k1};
  } else if (!spec.first_full && !spec.second_full) {
    kind = FoldCase::Case2;
    const VertexId w = nv;
    const EdgeId es = ne;
    const OrientedEdge estar{es, false};
    set_initial(d1, w);
    set_initial(d2, w);
    edges.push_back(Edge{v0, w});
    levels.push_back(std::min(old_levels[ix(k1)], old_levels[ix(k2)]));
    p_verts = iota_vertices(nv);
    p_imgs = identity_images(ne);
    f1_verts = f.vertex_images();
    EdgePath prefix = slice(i1, 0, ix(c));
    f1_verts.push_back(prefix.empty() ? f.vertex_image(v0) : f.codomain()->terminal(prefix.back()));
    f1_imgs = f.edge_images();
    f1_imgs.push_back(prefix);
    if (k1 == k2) {
      // A loop folded against its own reverse: both ends move to w.
      OrientedEdge fwd{k1, false};
      p_imgs[ix(k1)] = {estar, fwd, estar.reverse()};
      const EdgePath& img = f.edge_image(k1);
      f1_imgs[ix(k1)] = slice(img, ix(c), img.size() - ix(c));
    } else {
      set_oriented(p_imgs, d1, {estar, d1});
      set_oriented(p_imgs, d2, {estar, d2});
      set_oriented(f1_imgs, d1, slice(i1, ix(c), i1.size()));
      set_oriented(f1_imgs, d2, slice(i2, ix(c), i2.size()));
    }
    star = rebuild(g, nv + 1, edges, g.basepoint(), levels, push_marking(g, p_imgs));
    q_verts = iota_vertices(nv);
    q_verts.push_back(v0);
    q_imgs = identity_images(ne);
    q_imgs.push_back({});
    cut = k1 == k2 ? std::vector<EdgeId>{k1} : std::vector<EdgeId>{std::min(k1, k2), std::max(k1, k2)};
  } else {
    kind = FoldCase::Case3;
    VertexId v1 = g.terminal(d1), v2 = g.terminal(d2);
    if (v1 == v2) {
      throw CertificationError("edges " + std::to_string(d1.signed_id()) + " and " +
                               std::to_string(d2.signed_id()) +
                               " have equal images and equal endpoints: the map is not injective on pi_1");
    }
    auto vmap = [&](VertexId v) {
      if (v == v1) v = v2;
      return v > v1 ? v - 1 : v;
    };
    auto emap = [&](EdgeId e) { return e > k1 ? e - 1 : e; };
    std::vector<Edge> new_edges;
    std::vector<int> new_levels;
    for (EdgeId e = 0; e < ne; ++e) {
      if (e == k1) continue;
      new_edges.push_back(Edge{vmap(edges[ix(e)].from), vmap(edges[ix(e)].to)});
      int lv = old_levels[ix(e)];
      if (e == k2) lv = std::min(lv, old_levels[ix(k1)]);
      new_levels.push_back(lv);
    }
    p_verts.resize(ix(nv));
    for (VertexId v = 0; v < nv; ++v) p_verts[ix(v)] = vmap(v);
    p_imgs.resize(ix(ne));
    for (EdgeId e = 0; e < ne; ++e) {
      if (e != k1) p_imgs[ix(e)] = {OrientedEdge{emap(e), false}};
    }
    set_oriented(p_imgs, d1, {OrientedEdge{emap(k2), d2.reversed}});
    star = rebuild(g, nv - 1, new_edges, vmap(g.basepoint()), new_levels, push_marking(g, p_imgs));
    f1_verts.assign(ix(nv - 1), 0);
    for (VertexId v = 0; v < nv; ++v) f1_verts[ix(vmap(v))] = f.vertex_image(v);
    for (EdgeId e = 0; e < ne; ++e) {
      if (e != k1) f1_imgs.push_back(f.edge_image(e));
    }
    q_verts.assign(ix(nv - 1), 0);
    for (VertexId v = 0; v < nv; ++v) {
      if (v != v1) q_verts[ix(vmap(v))] = v;
    }
    const EdgePath pre{d2.reverse(), d1};
    const EdgePath post{d1.reverse(), d2};
    for (EdgeId e = 0; e < ne; ++e) {
      if (e == k1) continue;
      EdgePath img;
      if (g.edge(e).from == v1) img = pre;
      img.push_back(OrientedEdge{e, false});
      if (g.edge(e).to == v1) img.insert(img.end(), post.begin(), post.end());
      q_imgs.push_back(std::move(img));
    }
  }

  GraphMap p(gp, star, std::move(p_verts), std::move(p_imgs));
  GraphMap q(star, gp, std::move(q_verts), std::move(q_imgs));
  GraphMap f1(star, f.codomain(), std::move(f1_verts), std::move(f1_imgs));
  const Filtration& nf = star->filtration();
  bool degenerate = nf.length() != g.filtration().length() || !nf.nonempty_levels();
  FoldRecord rec{spec, kind, std::move(p), std::move(q), std::move(cut), degenerate};
  return {std::move(rec), std::move(f1)};
}

FoldCase classify_fold(const FoldRecord& record) {
  const FoldSpec& s = record.spec;
  if (s.first_full && s.second_full) return FoldCase::Case3;
  if (!s.first_full && s.second_full) return FoldCase::Case1;
  return FoldCase::Case2;
}

bool support_widened(const FoldRecord& record, int b, int a) {
  if (classify_fold(record) != FoldCase::Case3) return false;
  const MarkedGraph& g = *record.quotient.domain();
  VertexId v1 = g.terminal(record.spec.first);
  auto fr = frontier(g, b, a);
  return std::find(fr.begin(), fr.end(), v1) != fr.end();
}

GraphMap invert_fold(const FoldRecord& record, int b, int a) {
  // Validates the span even though q does not depend on it.
  frontier(*record.quotient.domain(), b, a);
  return record.inverse;
}

bool folds_into_lower_strata(const FoldRecord& record, int a) {
  const MarkedGraph& g = *record.quotient.domain();
  return g.filtration().level(record.spec.second.edge) <= a - 1;
}

bool is_homeomorphism(const GraphMap& theta) {
  const MarkedGraph& g = *theta.domain();
  const MarkedGraph& h = *theta.codomain();
  std::vector<int> owner(ix(h.vertex_count()), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId w = theta.vertex_image(v);
    if (owner[ix(w)] >= 0) return false;
    owner[ix(w)] = v;
  }
  std::vector<int> covered(ix(h.edge_count()), 0);
  std::vector<int> interior(ix(h.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgePath& img = theta.edge_image(e);
    if (img.empty()) return false;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (++covered[ix(img[i].edge)] > 1) return false;
      if (i + 1 < img.size()) ++interior[ix(h.terminal(img[i]))];
    }
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (covered[ix(e)] != 1) return false;
  }
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    bool image = owner[ix(w)] >= 0;
    if (image && interior[ix(w)] > 0) return false;
    if (!image && (interior[ix(w)] != 1 || h.valence(w) != 2)) return false;
  }
  return true;
}

GraphMap invert_homeomorphism(const GraphMap& theta) {
  if (!is_homeomorphism(theta)) throw ArgumentError("map is not a homeomorphism: " + describe(theta));
  const MarkedGraph& g = *theta.domain();
  const MarkedGraph& h = *theta.codomain();
  std::vector<VertexId> verts(ix(h.vertex_count()), 0);
  std::vector<EdgePath> imgs(ix(h.edge_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) verts[ix(theta.vertex_image(v))] = v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgePath& img = theta.edge_image(e);
    set_oriented(imgs, img.front(), {OrientedEdge{e, false}});
    for (std::size_t i = 0; i + 1 < img.size(); ++i) verts[ix(h.terminal(img[i]))] = g.edge(e).to;
  }
  return GraphMap(theta.codomain(), theta.domain(), std::move(verts), std::move(imgs));
}

FoldFactorization factorize(const GraphMap& f, FoldStrategy strategy) {
  GraphMap cur = tighten_map(f);
  for (EdgeId e = 0; e < cur.domain()->edge_count(); ++e) {
    if (cur.edge_image(e).empty()) {
      throw CertificationError("edge " + std::to_string(e + 1) +
                               " has trivial image; collapsing maps are not factorized");
    }
  }
  std::vector<FoldRecord> stages;
  std::vector<long> edgelets{cur.total_length()};
  while (auto spec = find_fold(cur, strategy)) {
    auto [rec, next] = apply_fold(cur, *spec);
    if (next.total_length() >= cur.total_length()) {
      throw InvariantError("fold did not decrease the edgelet count");
    }
    stages.push_back(std::move(rec));
    edgelets.push_back(next.total_length());
    cur = std::move(next);
  }
  if (!is_homeomorphism(cur)) {
    throw CertificationError("residual immersion is not a homeomorphism: " + describe(cur));
  }
  GraphMap inv = invert_homeomorphism(cur);
  return FoldFactorization{std::move(stages), std::move(cur), std::move(inv), std::move(edgelets)};
}

GraphMap controlled_inverse(const FoldFactorization& fact, InverseStats* stats) {
  GraphMap g = fact.terminal_inverse;
  std::vector<long> lcs{static_cast<long>(lc(transition_matrix(g)))};
  long max_edges = std::max(g.domain()->edge_count(), g.codomain()->edge_count());
  for (auto it = fact.stages.rbegin(); it != fact.stages.rend(); ++it) {
    lcs.push_back(static_cast<long>(lc(transition_matrix(it->inverse))));
    max_edges = std::max<long>(max_edges, it->inverse.domain()->edge_count());
    g = tighten_map(compose(it->inverse, g));
  }
  if (stats) {
    int rank = g.codomain()->rank();
    stats->folds = static_cast<int>(fact.stages.size());
    stats->lc_inverse = static_cast<long>(lc(transition_matrix(g)));
    stats->lc_stages.assign(lcs.rbegin(), lcs.rend());
    stats->edge_constant = std::max(edge_bound(rank), max_edges);
    double bound = static_cast<double>(lcs.size() - 1) * std::log(static_cast<double>(stats->edge_constant));
    for (long x : lcs) bound += std::log(static_cast<double>(std::max<long>(x, 1)));
    stats->log_bound = bound;
    stats->bound_holds =
        stats->lc_inverse <= 1 || std::log(static_cast<double>(stats->lc_inverse)) <= bound + 1e-9;
  }
  return g;
}

EdgeMask image_mask(const GraphMap& f, const EdgeMask& dom) {
  EdgeMask out(ix(f.codomain()->edge_count()), false);
  for (EdgeId e = 0; e < f.domain()->edge_count(); ++e) {
    if (!dom[ix(e)]) continue;
    for (const auto& d : f.edge_image(e)) out[ix(d.edge)] = true;
  }
  return out;
}

GraphMap restrict_map(const GraphMap& f, const EdgeMask& dom, const EdgeMask& cod) {
  const MarkedGraph& g = *f.domain();
  const MarkedGraph& h = *f.codomain();
  auto build = [](const MarkedGraph& src, const EdgeMask& mask, std::vector<int>& vid, std::vector<int>& eid) {
    auto in = vertices_of(src, mask);
    vid.assign(ix(src.vertex_count()), -1);
    eid.assign(ix(src.edge_count()), -1);
    int nv = 0;
    for (VertexId v = 0; v < src.vertex_count(); ++v) {
      if (in[ix(v)]) vid[ix(v)] = nv++;
    }
    std::vector<Edge> edges;
    std::vector<int> levels;
    for (EdgeId e = 0; e < src.edge_count(); ++e) {
      if (!mask[ix(e)]) continue;
      eid[ix(e)] = static_cast<int>(edges.size());
      edges.push_back(Edge{vid[ix(src.edge(e).from)], vid[ix(src.edge(e).to)]});
      levels.push_back(src.filtration().level(e));
    }
    if (nv == 0) throw ArgumentError("restriction to an empty subgraph");
    return make_graph(nv, std::move(edges), 0, {}, Filtration(std::move(levels), true));
  };
  std::vector<int> gv, ge, hv, he;
  GraphPtr sub_g = build(g, dom, gv, ge);
  GraphPtr sub_h = build(h, cod, hv, he);
  std::vector<VertexId> verts(ix(sub_g->vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (gv[ix(v)] < 0) continue;
    int w = hv[ix(f.vertex_image(v))];
    if (w < 0) throw StructuralError("vertex image leaves the target subgraph");
    verts[ix(gv[ix(v)])] = w;
  }
  std::vector<EdgePath> imgs(ix(sub_g->edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (ge[ix(e)] < 0) continue;
    EdgePath path;
    for (const auto& d : f.edge_image(e)) {
      int x = he[ix(d.edge)];
      if (x < 0) throw StructuralError("edge image leaves the target subgraph");
      path.push_back(OrientedEdge{x, d.reversed});
    }
    imgs[ix(ge[ix(e)])] = std::move(path);
  }
  return GraphMap(sub_g, sub_h, std::move(verts), std::move(imgs));
}

bool restriction_is_equivalence(const GraphMap& f, const EdgeMask& dom, const EdgeMask& cod) {
  bool dom_empty = std::none_of(dom.begin(), dom.end(), [](bool x) { return x; });
  bool cod_empty = std::none_of(cod.begin(), cod.end(), [](bool x) { return x; });
  if (dom_empty || cod_empty) return dom_empty && cod_empty;
  try {
    factorize(restrict_map(f, dom, cod));
    return true;
  } catch (const StructuralError&) {
    return false;
  } catch (const CertificationError&) {
    return false;
  }
}

}  // namespace foldtrack
