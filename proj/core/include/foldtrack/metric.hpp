#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/graph_map.hpp"

namespace foldtrack {

// Words of the marking loops in the spanning-tree basis of g.
Automorphism marking_automorphism(const MarkedGraph& g);

// Marking-respecting map G -> G': tree edges collapse to the basepoint of G',
// each generator edge goes to the tightened G'-image of its rose word.
// `source_marking_inverse` may supply the inverse of marking_automorphism(G)
// when it is already known.
GraphMap difference_map(const GraphPtr& g, const GraphPtr& h,
                        const std::optional<Automorphism>& source_marking_inverse = std::nullopt);

// Slides f(v) across e' while every direction at v starts with e' and the
// slide shortens the map; at most 10 * #edges slides.
GraphMap slide_normalize(const GraphMap& f, int* slides = nullptr);

struct MetricEstimate {
  double value = 0.0;  // upper bound for d(G,G')
  long witness_total_length = 0;
  std::string method;  // "canonical" or "fold-normalized"
  std::optional<GraphMap> witness;
};

MetricEstimate estimate_d(const GraphPtr& g, const GraphPtr& h,
                          const std::optional<Automorphism>& source_marking_inverse = std::nullopt);

// Rose R_n whose marking sends petal i to phi(x_i).
GraphPtr remarked_rose(const Automorphism& phi);
// phi^m by repeated squaring.
Automorphism power_by_squaring(const Automorphism& phi, long m);
// x_2 -> x_2 x_1, other generators fixed.
Automorphism twist(int rank);
Automorphism twist_inverse(int rank);

struct TwistMember {
  long m = 0;
  GraphPtr graph;
  Automorphism marking;          // twist^m
  Automorphism marking_inverse;  // twist^-m
};
TwistMember twist_member(int rank, long m);

struct AuditRow {
  int src = 0;
  int dst = 0;
  double d_upper = 0.0;
  long witness_total_length = 0;
  std::string method;
};

struct QuasiMetricAudit {
  std::vector<AuditRow> rows;
  double max_self = 0.0;             // max d(G,G)
  double max_triangle_defect = 0.0;  // max d(G,G'') - d(G,G') - d(G',G'')
  double max_asymmetry = 1.0;        // max d(G,G') / d(G',G)
};

QuasiMetricAudit quasi_metric_audit(const std::vector<GraphPtr>& samples,
                                    const std::vector<std::optional<Automorphism>>& marking_inverses = {});
std::string audit_tsv(const QuasiMetricAudit& audit);

}  // namespace foldtrack
