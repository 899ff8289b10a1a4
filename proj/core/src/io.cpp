#include "foldtrack/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

using json = nlohmann::json;

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

struct IdMaps {
  std::map<long, int> vertex;
  std::map<long, int> edge;
};

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

OrientedEdge signed_edge(const IdMaps& ids, long s) {
  auto it = ids.edge.find(s < 0 ? -s : s);
  if (s == 0 || it == ids.edge.end()) throw StructuralError("unknown edge id " + std::to_string(s));
  return OrientedEdge{it->second, s < 0};
}

int vertex_id(const IdMaps& ids, long v) {
  auto it = ids.vertex.find(v);
  if (it == ids.vertex.end()) throw StructuralError("unknown vertex id " + std::to_string(v));
  return it->second;
}

GraphPtr graph_from(const json& j, IdMaps& ids) {
  try {
    for (const auto& v : j.at("vertices")) ids.vertex.emplace(v.get<long>(), 0);
    int n = 0;
    for (auto& [k, v] : ids.vertex) v = n++;
    std::map<long, std::pair<long, long>> raw;
    for (const auto& e : j.at("edges")) {
      long id = e.at("id").get<long>();
      if (id <= 0) throw StructuralError("edge ids must be positive");
      if (!raw.emplace(id, std::make_pair(e.at("from").get<long>(), e.at("to").get<long>())).second) {
        throw StructuralError("duplicate edge id " + std::to_string(id));
      }
    }
    std::vector<Edge> edges;
    for (const auto& [id, ends] : raw) {
      ids.edge[id] = static_cast<int>(edges.size());
      edges.push_back(Edge{vertex_id(ids, ends.first), vertex_id(ids, ends.second)});
    }
    VertexId bp = j.contains("basepoint") ? vertex_id(ids, j.at("basepoint").get<long>()) : 0;
    std::vector<EdgePath> marking;
    if (j.contains("marking")) {
      for (const auto& loop : j.at("marking")) {
        EdgePath p;
        for (const auto& s : loop) p.push_back(signed_edge(ids, s.get<long>()));
        marking.push_back(std::move(p));
      }
    }
    std::optional<Filtration> filtration;
    if (j.contains("filtration") && !j.at("filtration").empty()) {
      std::vector<int> level(edges.size(), 0);
      int i = 0;
      for (const auto& lvl : j.at("filtration")) {
        ++i;
        for (const auto& e : lvl) {
          OrientedEdge d = signed_edge(ids, e.get<long>());
          if (level[ix(d.edge)] == 0) level[ix(d.edge)] = i;
        }
      }
      if (std::find(level.begin(), level.end(), 0) != level.end()) {
        throw StructuralError("the top filtration level must contain every edge");
      }
      filtration = Filtration(std::move(level), j.value("weak", false));
    }
    auto g = make_graph(n, std::move(edges), bp, std::move(marking), std::move(filtration));
    if (j.contains("rank") && j.at("rank").get<int>() != g->rank()) {
      throw StructuralError("declared rank " + std::to_string(j.at("rank").get<int>()) + " but the graph has rank " +
                            std::to_string(g->rank()));
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph: ") + e.what());
  }
}

json graph_json(const MarkedGraph& g) {
  json j;
  j["rank"] = g.rank();
  j["vertices"] = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    j["edges"].push_back({{"id", e + 1}, {"from", g.edge(e).from}, {"to", g.edge(e).to}});
  }
  j["basepoint"] = g.basepoint();
  j["marking"] = json::array();
  for (const auto& loop : g.marking()) {
    json p = json::array();
    for (const auto& d : loop) p.push_back(d.signed_id());
    j["marking"].push_back(p);
  }
  j["filtration"] = json::array();
  const Filtration& fl = g.filtration();
  for (int i = 1; i <= fl.length(); ++i) {
    json lvl = json::array();
    for (EdgeId e : fl.level_edges(i)) lvl.push_back(e + 1);
    j["filtration"].push_back(lvl);
  }
  if (fl.weak()) j["weak"] = true;
  return j;
}

json path_json(const EdgePath& p) {
  json a = json::array();
  for (const auto& d : p) a.push_back(d.signed_id());
  return a;
}

json map_json(const GraphMap& f) {
  json j;
  j["domain"] = graph_json(*f.domain());
  j["codomain"] = graph_json(*f.codomain());
  j["vertex_map"] = json::object();
  for (VertexId v = 0; v < f.domain()->vertex_count(); ++v) j["vertex_map"][std::to_string(v)] = f.vertex_image(v);
  j["edge_map"] = json::object();
  for (EdgeId e = 0; e < f.domain()->edge_count(); ++e) j["edge_map"][std::to_string(e + 1)] = path_json(f.edge_image(e));
  return j;
}

json spectrum_json(const ExpansionSpectrum& s) {
  json j;
  j["gamma"] = s.gamma();
  j["gamma_hat"] = json::array();
  for (const auto& e : s.entries) {
    json block = json::array();
    for (EdgeId x : e.block_edges) block.push_back(x + 1);
    j["gamma_hat"].push_back({{"lambda", e.lambda}, {"multiplicity", e.multiplicity}, {"block_edges", block}});
  }
  int levels = 0;
  for (int l : s.filtration_levels) levels = std::max(levels, l);
  j["filtration"] = json::array();
  for (int i = 1; i <= levels; ++i) {
    json lvl = json::array();
    for (std::size_t e = 0; e < s.filtration_levels.size(); ++e) {
      if (s.filtration_levels[e] <= i) lvl.push_back(e + 1);
    }
    j["filtration"].push_back(lvl);
  }
  return j;
}

}  // namespace

GraphPtr graph_from_json(const std::string& text) {
  IdMaps ids;
  return graph_from(parse(text), ids);
}

std::string graph_to_json(const MarkedGraph& g) { return graph_json(g).dump(2); }

GraphMap map_from_json(const std::string& text) {
  json j = parse(text);
  try {
    IdMaps dom_ids;
    GraphPtr dom = graph_from(j.at("domain"), dom_ids);
    IdMaps cod_ids;
    GraphPtr cod;
    if (j.contains("codomain")) {
      cod = graph_from(j.at("codomain"), cod_ids);
    } else {
      cod = dom;
      cod_ids = dom_ids;
    }
    std::vector<VertexId> verts(ix(dom->vertex_count()), -1);
    for (auto& [k, v] : j.at("vertex_map").items()) {
      verts[ix(vertex_id(dom_ids, std::stol(k)))] = vertex_id(cod_ids, v.get<long>());
    }
    if (std::find(verts.begin(), verts.end(), -1) != verts.end()) {
      throw StructuralError("vertex_map does not cover every vertex");
    }
    std::vector<EdgePath> imgs(ix(dom->edge_count()));
    std::vector<bool> seen(imgs.size(), false);
    for (auto& [k, v] : j.at("edge_map").items()) {
      OrientedEdge d = signed_edge(dom_ids, std::stol(k));
      EdgePath p;
      for (const auto& s : v) p.push_back(signed_edge(cod_ids, s.get<long>()));
      imgs[ix(d.edge)] = d.reversed ? reverse_path(p) : p;
      seen[ix(d.edge)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw StructuralError("edge_map does not cover every edge");
    }
    return GraphMap(dom, cod, std::move(verts), std::move(imgs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed map: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("map keys must be integer ids");
  }
}

std::string map_to_json(const GraphMap& f) { return map_json(f).dump(2); }

std::string spectrum_to_json(const ExpansionSpectrum& spectrum, bool certified) {
  json j = spectrum_json(spectrum);
  j["certified"] = certified;
  return j.dump(2);
}

std::string report_to_json(const ExpansionReport& r) {
  json j;
  j["automorphism"] = format_automorphism(r.forward);
  j["inverse"] = format_automorphism(r.inverse);
  j["lambda"] = r.lambda;
  j["mu"] = r.mu;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["lambda_certified"] = r.lambda_certified;
  j["mu_certified"] = r.mu_certified;
  j["gamma_hat_forward"] = r.forward_spectrum.gamma_hat();
  j["gamma_hat_inverse"] = r.inverse_spectrum.gamma_hat();
  j["growth_estimates"] = {{"forward", r.growth_forward}, {"inverse", r.growth_inverse}};
  j["folds"] = r.folds;
  j["bound"] = r.lambda_certified && r.mu_certified ? "sharp" : "upper";
  return j.dump(2);
}

std::string factorization_to_json(const FoldFactorization& fact) {
  json stages = json::array();
  int i = 0;
  for (const auto& rec : fact.stages) {
    json s;
    s["stage"] = ++i;
    s["case"] = static_cast<int>(rec.fold_case);
    s["folded_edges"] = {rec.spec.first.signed_id(), rec.spec.second.signed_id()};
    s["common_length"] = rec.spec.common_length;
    s["new_graph"] = graph_json(*rec.quotient.codomain());
    json p = json::object(), q = json::object();
    for (EdgeId e = 0; e < rec.quotient.domain()->edge_count(); ++e) {
      p[std::to_string(e + 1)] = path_json(rec.quotient.edge_image(e));
    }
    for (EdgeId e = 0; e < rec.inverse.domain()->edge_count(); ++e) {
      q[std::to_string(e + 1)] = path_json(rec.inverse.edge_image(e));
    }
    s["quotient_edge_map"] = p;
    s["inverse_edge_map"] = q;
    stages.push_back(s);
  }
  json j;
  j["stages"] = stages;
  j["terminal"] = map_json(fact.terminal);
  j["edgelets"] = fact.edgelets;
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace foldtrack
