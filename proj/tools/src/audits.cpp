#include "foldtrack_cli/audits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/folding.hpp"
#include "foldtrack/spectra.hpp"

namespace foldtrack::cli {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

void fail(SuiteResult& r, const std::string& what) {
  if (r.failed++ == 0) r.first_failure = what;
}

// Reduced path of `steps` edges around the cycle 0 -> 1 -> ... -> c-1 -> 0,
// starting at `from`, forwards when dir > 0.
EdgePath cycle_path(int c, int from, int steps, int dir) {
  EdgePath p;
  int v = from;
  for (int s = 0; s < steps; ++s) {
    if (dir > 0) {
      p.push_back(OrientedEdge{v, false});
      v = (v + 1) % c;
    } else {
      int prev = (v + c - 1) % c;
      p.push_back(OrientedEdge{prev, true});
      v = prev;
    }
  }
  return p;
}

}  // namespace

IntMatrix random_matrix(CounterRng& rng, int rows, int cols, int max_entry) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(0, max_entry);
  return m;
}

IntMatrix random_irreducible(CounterRng& rng, int max_size, int max_entry) {
  int n = rng.uniform_int(1, max_size);
  IntMatrix m(n, n);
  int density = rng.uniform_int(0, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.uniform_int(0, 3) < density) m(i, j) = rng.uniform_int(0, max_entry);
  std::vector<int> order(ix(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[ix(i)], order[ix(rng.uniform_int(0, i))]);
  for (int i = 0; i < n; ++i) {
    auto& cell = m(order[ix(i)], order[ix((i + 1) % n)]);
    if (cell == 0) cell = rng.uniform_int(1, max_entry);
  }
  return m;
}

SuiteResult lc_bounds_suite(std::uint64_t seed, int pairs, int max_size, int max_entry) {
  SuiteResult r;
  r.name = "lc_product_and_sum_bounds";
  CounterRng rng(seed, 0x2201);
  for (int t = 0; t < pairs; ++t) {
    int a = rng.uniform_int(1, max_size), b = rng.uniform_int(1, max_size), c = rng.uniform_int(1, max_size);
    IntMatrix m1 = random_matrix(rng, a, b, max_entry);
    IntMatrix m2 = random_matrix(rng, b, c, max_entry);
    std::int64_t alpha = std::max({a, b, c});
    ++r.checked;
    if (lc(m1 * m2) > alpha * lc(m1) * lc(m2)) fail(r, "LC(M1M2) bound at trial " + std::to_string(t));
    for (const IntMatrix* m : {&m1, &m2}) {
      std::int64_t am = std::max(m->rows(), m->cols());
      if (lc(*m) > l_total(*m) || l_total(*m) > am * am * lc(*m)) {
        fail(r, "LC <= L <= a^2 LC at trial " + std::to_string(t) + ": " + m->to_string());
      }
    }
  }
  return r;
}

SuiteResult pf_bounds_suite(std::uint64_t seed, int count, int max_size, int max_entry) {
  SuiteResult r;
  r.name = "pf_value_bounds";
  CounterRng rng(seed, 0x2301);
  for (int t = 0; t < count; ++t) {
    IntMatrix m = random_irreducible(rng, max_size, max_entry);
    double lambda = pf_value(m);
    double alpha = m.rows();
    double l = static_cast<double>(lc(m));
    ++r.checked;
    if (lambda > alpha * l * (1 + 1e-12)) fail(r, "lambda > a LC for " + m.to_string());
    if (std::pow(lambda, alpha) < l * (1 - 1e-12)) fail(r, "lambda^a < LC for " + m.to_string());
  }
  return r;
}

SuiteResult power_entries_suite(std::uint64_t seed, int count, int max_size, int max_entry) {
  SuiteResult r;
  r.name = "power_entries_at_least_lc";
  r.advisory = true;
  CounterRng rng(seed, 0x2302);
  for (int t = 0; t < count; ++t) {
    IntMatrix m = random_irreducible(rng, max_size, max_entry);
    IntMatrix p = m.power(m.rows());
    std::int64_t l = lc(m);
    ++r.checked;
    bool ok = true;
    for (int i = 0; i < p.rows() && ok; ++i)
      for (int j = 0; j < p.cols() && ok; ++j) ok = p(i, j) == 0 || p(i, j) >= l;
    if (!ok) fail(r, "M^a has a nonzero entry below LC(M) for " + m.to_string());
  }
  return r;
}

SuiteResult gates_suite(std::uint64_t seed, int pairs) {
  SuiteResult r;
  r.name = "gate_count_bounds";
  for (int t = 0; t < pairs; ++t) {
    CounterRng rng(seed, 0x2100 + static_cast<std::uint64_t>(t));
    int n = rng.uniform_int(2, 4);
    GraphMap f1 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    GraphMap f2 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    GraphMap h = compose(f2, f1);
    const MarkedGraph& g = *f1.domain();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      ++r.checked;
      int valence = static_cast<int>(g.link(v).size());
      if (gate_count(f1, v) > valence) fail(r, "T(f,v) exceeds the valence at trial " + std::to_string(t));
      int th = gate_count(h, v);
      if (th > gate_count(f1, v) || th > gate_count(f2, f1.vertex_image(v))) {
        fail(r, "T(f2 f1, v) exceeds a factor at trial " + std::to_string(t));
      }
    }
  }
  return r;
}

GraphMap lower_strata_chain(CounterRng& rng) {
  const int c = rng.uniform_int(2, 4);
  std::vector<Edge> lower;
  for (int i = 0; i < c; ++i) lower.push_back(Edge{i, (i + 1) % c});
  std::vector<Edge> h_edges = lower, g_edges = lower;
  std::vector<EdgePath> imgs;
  for (int i = 0; i < c; ++i) imgs.push_back({OrientedEdge{i, false}});
  bool pulled = false;
  for (int u = 0; u < 2; ++u) {
    EdgeId id = c + u;
    VertexId s = rng.uniform_int(0, c - 1), t = rng.uniform_int(0, c - 1);
    h_edges.push_back(Edge{s, t});
    int k0 = rng.uniform_int(0, 4), k1 = rng.uniform_int(0, 4);
    if (u == 1 && !pulled && k0 == 0 && k1 == 0) k0 = 1;
    int d0 = rng.uniform_int(0, 1) ? 1 : -1, d1 = rng.uniform_int(0, 1) ? 1 : -1;
    EdgePath pre = reverse_path(cycle_path(c, s, k0, -d0));
    EdgePath post = cycle_path(c, t, k1, d1);
    VertexId gs = ((s - d0 * k0) % c + c) % c;
    VertexId gt = ((t + d1 * k1) % c + c) % c;
    g_edges.push_back(Edge{gs, gt});
    EdgePath img = pre;
    img.push_back(OrientedEdge{id, false});
    img.insert(img.end(), post.begin(), post.end());
    imgs.push_back(img);
    pulled = pulled || k0 > 0 || k1 > 0;
  }
  std::vector<int> levels(ix(c), 1);
  levels.push_back(2);
  levels.push_back(2);
  GraphPtr g = make_graph(c, g_edges, 0, {}, Filtration(levels));
  GraphPtr h = make_graph(c, h_edges, 0, {}, Filtration(levels));
  std::vector<VertexId> verts(ix(c));
  std::iota(verts.begin(), verts.end(), 0);
  return GraphMap(g, h, verts, imgs);
}

LowerStrataCheck check_lower_strata_chain(const GraphMap& f) {
  LowerStrataCheck out;
  FoldFactorization fact = factorize(f, FoldStrategy::lower_strata(2));
  out.folds = static_cast<int>(fact.stages.size());
  for (const auto& rec : fact.stages) {
    if (classify_fold(rec) != FoldCase::Case1 || !folds_into_lower_strata(rec, 2)) out.all_case1_lower = false;
  }
  GraphMap g = controlled_inverse(fact);
  out.forward = transition_matrix(f);
  out.inverse = transition_matrix(g);
  out.equal = out.forward == out.inverse;
  return out;
}

SuiteResult lower_strata_suite(std::uint64_t seed, int chains) {
  SuiteResult r;
  r.name = "lower_strata_matrix_equality";
  for (int t = 0; t < chains; ++t) {
    CounterRng rng(seed, 0x6001 + static_cast<std::uint64_t>(t));
    LowerStrataCheck c = check_lower_strata_chain(lower_strata_chain(rng));
    ++r.checked;
    if (!c.all_case1_lower) fail(r, "chain " + std::to_string(t) + " used a fold outside the hypothesis");
    if (!c.equal) {
      fail(r, "chain " + std::to_string(t) + ": M(f) = " + c.forward.to_string() + " but M(g) = " + c.inverse.to_string());
    }
  }
  return r;
}

}  // namespace foldtrack::cli
