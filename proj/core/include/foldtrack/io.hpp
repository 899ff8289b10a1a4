#pragma once

#include <string>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/folding.hpp"
#include "foldtrack/graph.hpp"
#include "foldtrack/graph_map.hpp"
#include "foldtrack/spectra.hpp"

namespace foldtrack {

// Graph files: {"rank", "vertices", "edges": [{"id","from","to"}], "basepoint",
// "marking": [[signed edge ids]], "filtration": [[edge ids of G_i]]}.
// Ids may be arbitrary; they are renumbered densely in increasing order.
GraphPtr graph_from_json(const std::string& text);
std::string graph_to_json(const MarkedGraph& g);

// Map files: {"domain", "codomain", "vertex_map": {"id": id},
// "edge_map": {"id": [signed ids]}}. A missing codomain means a self-map.
GraphMap map_from_json(const std::string& text);
std::string map_to_json(const GraphMap& f);

std::string spectrum_to_json(const ExpansionSpectrum& spectrum, bool certified);
std::string report_to_json(const ExpansionReport& report);
std::string factorization_to_json(const FoldFactorization& fact);

std::string read_text_file(const std::string& path);

}  // namespace foldtrack
