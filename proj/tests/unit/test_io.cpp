#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "foldtrack/error.hpp"
#include "foldtrack/io.hpp"
#include "generators.hpp"

using namespace foldtrack;

namespace {

std::string fixture_text(const std::string& name) { return read_text_file(std::string(FIXTURE_DIR) + "/" + name); }

}  // namespace

TEST(GraphJson, RoundTrip) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}, 0, {}, Filtration({1, 1, 1, 2}));
  auto back = graph_from_json(graph_to_json(*g));
  EXPECT_EQ(back->vertex_count(), 3);
  EXPECT_EQ(back->edge_count(), 4);
  EXPECT_EQ(back->filtration().edge_levels(), g->filtration().edge_levels());
  EXPECT_EQ(graph_to_json(*back), graph_to_json(*g));
}

TEST(GraphJson, SparseIdsAreRenumbered) {
  auto g = graph_from_json(R"({"vertices":[7,3],"edges":[{"id":40,"from":3,"to":7},{"id":5,"from":7,"to":7}]})");
  EXPECT_EQ(g->vertex_count(), 2);
  EXPECT_EQ(g->edge(0).from, g->edge(0).to);
  EXPECT_EQ(g->rank(), 1);
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(graph_from_json("{"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"vertices":[0]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"vertices":[0],"edges":[{"id":1,"from":0,"to":9}]})"), StructuralError);
  EXPECT_THROW(graph_from_json(R"({"vertices":[0],"edges":[{"id":1,"from":0,"to":0},{"id":1,"from":0,"to":0}]})"),
               StructuralError);
  EXPECT_THROW(graph_from_json(R"({"rank":2,"vertices":[0],"edges":[{"id":1,"from":0,"to":0}]})"), StructuralError);
}

TEST(MapJson, RoundTripFixtures) {
  for (const char* name : {"fibonacci.json", "two_circles.json", "filtered_eg_top.json"}) {
    GraphMap f = map_from_json(fixture_text(name));
    GraphMap back = map_from_json(map_to_json(f));
    EXPECT_EQ(back.edge_images(), f.edge_images()) << name;
    EXPECT_EQ(map_to_json(back), map_to_json(f)) << name;
  }
}

TEST(MapJson, RandomRoundTrip) {
  CounterRng rng(101, 0);
  for (int t = 0; t < 50; ++t) {
    GraphMap f = rose_representative(gen::automorphism(rng));
    EXPECT_EQ(map_from_json(map_to_json(f)).edge_images(), f.edge_images());
  }
}

TEST(MapJson, Errors) {
  std::string rose = R"({"vertices":[0],"edges":[{"id":1,"from":0,"to":0}]})";
  EXPECT_THROW(map_from_json(R"({"domain":)" + rose + R"(,"vertex_map":{"0":0},"edge_map":{}})"), StructuralError);
  EXPECT_THROW(map_from_json(R"({"domain":)" + rose + R"(,"vertex_map":{"x":0},"edge_map":{"1":[1]}})"), ParseError);
  EXPECT_THROW(map_from_json(R"({"domain":)" + rose + R"(,"vertex_map":{"0":0},"edge_map":{"1":[2]}})"),
               StructuralError);
}

TEST(SpectrumJson, Fields) {
  auto f = rose_representative(parse_automorphism("a->ab, b->a"));
  auto j = nlohmann::json::parse(spectrum_to_json(expansion_spectrum(f), true));
  EXPECT_TRUE(j.at("certified").get<bool>());
  ASSERT_EQ(j.at("gamma").size(), 1u);
  EXPECT_NEAR(j.at("gamma")[0].get<double>(), 1.6180339887498949, 1e-12);
  EXPECT_EQ(j.at("gamma_hat")[0].at("multiplicity").get<int>(), 1);
}

TEST(ReportJson, UndefinedRatioIsNull) {
  auto j = nlohmann::json::parse(report_to_json(expansion_report(parse_automorphism("a->a, b->ba"))));
  EXPECT_TRUE(j.at("ratio").is_null());
  auto k = nlohmann::json::parse(report_to_json(expansion_report(parse_automorphism("a->ab, b->a"))));
  EXPECT_EQ(k.at("inverse").get<std::string>(), "a->b, b->b^-1 a");
}

TEST(ReadTextFile, MissingFile) { EXPECT_THROW(read_text_file("/nonexistent/file.json"), ArgumentError); }
