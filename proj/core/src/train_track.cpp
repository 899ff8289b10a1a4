#include <numeric>
#include <optional>
#include <vector>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

int dir_index(OrientedEdge d) { return 2 * d.edge + (d.reversed ? 1 : 0); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool check_train_track(const GraphMap& f) {
  if (!f.is_self_map()) throw ArgumentError("train track test needs a self-map");
  const MarkedGraph& g = *f.domain();
  const int nd = 2 * g.edge_count();
  std::vector<std::optional<OrientedEdge>> df(static_cast<std::size_t>(nd));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (bool rev : {false, true}) {
      OrientedEdge d{e, rev};
      df[static_cast<std::size_t>(dir_index(d))] = derivative(f, d);
    }
  }
  // Directions d, d' lie in one gate when Df^m(d) = Df^m(d') for some m.
  UnionFind gates(nd);
  std::vector<std::optional<OrientedEdge>> cur = df;
  for (int m = 1; m <= nd + 1; ++m) {
    std::vector<int> first_with(static_cast<std::size_t>(nd), -1);
    for (int i = 0; i < nd; ++i) {
      if (!cur[static_cast<std::size_t>(i)]) continue;
      int target = dir_index(*cur[static_cast<std::size_t>(i)]);
      int& owner = first_with[static_cast<std::size_t>(target)];
      if (owner < 0) {
        owner = i;
      } else {
        gates.join(owner, i);
      }
    }
    for (auto& c : cur) {
      if (c) c = df[static_cast<std::size_t>(dir_index(*c))];
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgePath& img = f.edge_image(e);
    for (std::size_t i = 1; i < img.size(); ++i) {
      OrientedEdge in = img[i - 1].reverse();
      OrientedEdge out = img[i];
      if (in == out) return false;
      if (gates.find(dir_index(in)) == gates.find(dir_index(out))) return false;
    }
  }
  return true;
}

}  // namespace foldtrack
