#include <gtest/gtest.h>

#include <cmath>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/error.hpp"
#include "foldtrack/folding.hpp"
#include "foldtrack/graph_map.hpp"
#include "generators.hpp"

using namespace foldtrack;

namespace {

OrientedEdge fwd(EdgeId e) { return {e, false}; }
OrientedEdge bwd(EdgeId e) { return {e, true}; }

GraphMap rose_map(std::vector<EdgePath> imgs, std::optional<Filtration> fl = std::nullopt) {
  auto g = make_rose(static_cast<int>(imgs.size()));
  if (fl) g = g->with_filtration(*fl);
  return GraphMap(g, g, {0}, std::move(imgs));
}

GraphMap fibonacci() { return rose_map({{fwd(0), fwd(1)}, {fwd(0)}}); }

}  // namespace

TEST(GraphMap, RejectsIncompatibleImages) {
  auto g = make_graph(2, {{0, 1}, {1, 0}});
  EXPECT_THROW(GraphMap(g, g, {0, 1}, {{fwd(1)}, {fwd(0)}}), StructuralError);
}

TEST(Apply, Examples) {
  GraphMap f = fibonacci();
  EXPECT_EQ(foldtrack::apply(f, EdgePath{fwd(0), fwd(1)}), (EdgePath{fwd(0), fwd(1), fwd(0)}));
  GraphMap id = GraphMap::identity(make_rose(2));
  EdgePath p{fwd(0), bwd(1), fwd(1)};
  EXPECT_EQ(foldtrack::apply(id, p), p);
  EXPECT_EQ(foldtrack::apply(f, reverse_path(p)), reverse_path(foldtrack::apply(f, p)));
}

TEST(Compose, Examples) {
  GraphMap f = fibonacci();
  GraphMap id = GraphMap::identity(f.domain());
  EXPECT_EQ(compose(f, id).edge_images(), f.edge_images());
  EXPECT_EQ(compose(id, f).edge_images(), f.edge_images());
  GraphMap ff = compose(f, f);
  EXPECT_EQ(ff.edge_image(0), (EdgePath{fwd(0), fwd(1), fwd(0)}));
  EXPECT_EQ(ff.edge_image(1), (EdgePath{fwd(0), fwd(1)}));
  EXPECT_THROW(compose(GraphMap::identity(make_rose(3)), f), StructuralError);
}

TEST(Compose, TransitionMatrixIsSubmultiplicative) {
  CounterRng rng(21, 0);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform_int(2, 4);
    GraphMap f1 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    GraphMap f2 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    IntMatrix product = transition_matrix(f2) * transition_matrix(f1);
    EXPECT_TRUE(transition_matrix(compose(f2, f1)).leq(product));
    EXPECT_TRUE(transition_matrix(tighten_map(compose(f2, f1))).leq(transition_matrix(compose(f2, f1))));
  }
}

TEST(TightenMap, Examples) {
  GraphMap f = rose_map({{fwd(0), bwd(0), fwd(1)}, {fwd(0)}});
  GraphMap t = tighten_map(f);
  EXPECT_EQ(t.edge_image(0), (EdgePath{fwd(1)}));
  EXPECT_TRUE(t.tightened());
  EXPECT_EQ(tighten_map(fibonacci()).edge_images(), fibonacci().edge_images());
  EXPECT_LE(map_length(t), map_length(f));
}

TEST(TransitionMatrix, Examples) {
  EXPECT_EQ(transition_matrix(fibonacci()), (IntMatrix{{1, 1}, {1, 0}}));
  EXPECT_EQ(transition_matrix(GraphMap::identity(make_rose(3))), IntMatrix::identity(3));
  auto g = make_graph(2, {{0, 1}, {0, 0}, {1, 1}});
  auto h = make_rose(2);
  GraphMap collapse(g, h, {0, 0}, {{}, {fwd(0)}, {fwd(1)}});
  IntMatrix m = transition_matrix(collapse);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(m(1, 0), 0);
}

TEST(TransitionMatrix, OrderedByLevelThenId) {
  auto g = make_rose(2)->with_filtration(Filtration({2, 1}));
  EXPECT_EQ(edge_order(*g), (std::vector<EdgeId>{1, 0}));
  GraphMap f(g, g, {0}, {{fwd(0), fwd(1)}, {fwd(1)}});
  EXPECT_EQ(transition_matrix(f), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(submatrix(f, 2, 2), (IntMatrix{{1}}));
  EXPECT_THROW(submatrix(f, 2, 1), ArgumentError);
}

TEST(GateCount, Examples) {
  EXPECT_EQ(gate_count(fibonacci(), 0), 3);
  EXPECT_EQ(derivative(fibonacci(), bwd(0)), bwd(1));
  auto theta = make_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  GraphMap id = GraphMap::identity(theta);
  EXPECT_EQ(gate_count(id, 0), theta->valence(0));
}

TEST(GateCount, CompositionNeverGainsGates) {
  CounterRng rng(22, 0);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform_int(2, 4);
    GraphMap f1 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    GraphMap f2 = rose_representative(random_nielsen(n, rng.uniform_int(1, 8), rng));
    int t12 = gate_count(compose(f2, f1), 0);
    EXPECT_LE(gate_count(f1, 0), f1.domain()->valence(0));
    EXPECT_LE(t12, gate_count(f1, 0));
    EXPECT_LE(t12, gate_count(f2, f1.vertex_image(0)));
  }
}

TEST(RespectsFiltration, Examples) {
  EXPECT_TRUE(respects_filtration(fibonacci()));
  Filtration two({1, 2});
  EXPECT_TRUE(respects_filtration(rose_map({{fwd(0)}, {fwd(1), fwd(0)}}, two)));
  // G_1 = {a} sent onto the rank-2 image a b: not an equivalence onto G'_1.
  EXPECT_FALSE(respects_filtration(rose_map({{fwd(0), fwd(1)}, {fwd(1)}}, two)));
}

TEST(SupportedOn, Examples) {
  Filtration two({1, 2});
  GraphMap f = rose_map({{fwd(0)}, {fwd(1), fwd(0)}}, two);
  EXPECT_TRUE(is_supported_on(f, 2, 1));
  EXPECT_TRUE(is_supported_on(f, 2, 2));
  // a -> aa is not a homeomorphism of G_1, so (s1) fails for a = 2.
  GraphMap g = rose_map({{fwd(0), fwd(0)}, {fwd(1)}}, two);
  EXPECT_FALSE(is_supported_on(g, 2, 2));
}

TEST(MapLength, Examples) {
  EXPECT_DOUBLE_EQ(map_length(fibonacci()), std::log(3.0));
  auto theta = make_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_DOUBLE_EQ(map_length(GraphMap::identity(theta)), std::log(3.0));
  for (long m : {10L, 100L}) {
    EdgePath b{fwd(1)};
    for (long i = 0; i < m; ++i) b.push_back(fwd(0));
    EXPECT_DOUBLE_EQ(map_length(rose_map({{fwd(0)}, b})), std::log(2.0 + static_cast<double>(m)));
  }
  auto g = make_rose(1);
  auto pt = make_graph(1, {});
  EXPECT_THROW(map_length(GraphMap(g, pt, {0}, {{}})), ArgumentError);
}

TEST(ValenceTwo, Bounds) {
  EXPECT_EQ(vertex_bound(2), 12);
  EXPECT_EQ(edge_bound(2), 13);
  auto audit = valence_two_audit(GraphMap::identity(make_rose(2)), 2);
  EXPECT_EQ(audit.count, 0);
}
