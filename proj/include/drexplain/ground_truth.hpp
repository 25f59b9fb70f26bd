#pragma once

#include <string>
#include <vector>

#include "drexplain/explain.hpp"
#include "drexplain/graph.hpp"

namespace drx {

// One Fig.-2-style support pattern: 'a' routes through a similar cell and a
// similar drug, 'b' through a similar cell only, 'c' through a similar drug
// only. Edges are canonical and exist in the graph the builder saw.
struct GroundTruthEntry {
  char method = 'a';
  std::vector<Edge> edges;
};

struct GroundTruthSet {
  Triple target;
  std::vector<GroundTruthEntry> entries;

  bool empty() const { return entries.empty(); }
  // sorted unique union of entry edges; the matching universe for RG/TG
  std::vector<Edge> union_edges() const;
};

// Patterns for target (c, r, d), same relation r throughout:
//   a: cell c2 ~ c, drug d2 ~ d, response (c2, r, d2) observed
//   b: cell c2 ~ c, response (c2, r, d) observed
//   c: drug d2 ~ d, response (c, r, d2) observed
// The target edge itself never appears in an entry. Throws unless r is a
// response relation.
std::vector<GroundTruthEntry> ground_truth_a(const RelationalGraph& g,
                                             const Triple& target);
std::vector<GroundTruthEntry> ground_truth_b(const RelationalGraph& g,
                                             const Triple& target);
std::vector<GroundTruthEntry> ground_truth_c(const RelationalGraph& g,
                                             const Triple& target);
GroundTruthSet build_ground_truth(const RelationalGraph& g,
                                  const Triple& target);

struct AtK {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int relevant_retrieved = 0;  // RG
  int total_relevant = 0;      // TG
  bool defined = false;        // false when the ground truth is empty
};

// precision@k = RG/k, recall@k = RG/TG, f1 their harmonic mean (0 when
// p+r=0). RG counts top-k explanation edges inside the gt union.
AtK evaluate_at_k(const ExplanationSubgraph& ex, const GroundTruthSet& gt,
                  int k);

struct BenchmarkRow {
  std::string method;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int evaluated = 0;       // targets that entered the averages
  int skipped_empty = 0;   // targets without ground truth
  int skipped_negative = 0;  // targets not predicted positive
  int nonconverged = 0;    // mask runs that kept the best iterate
};

// Runs both explainers over the targets and averages Eq. 9-11 per method.
// Targets with empty ground truth or predicted negative are skipped and
// counted. Per-target explainer seeds derive from cfg.seed and the target
// index. global_tg switches recall to the micro average sum(RG)/sum(TG)
// (precision and f1 follow suit).
std::vector<BenchmarkRow> benchmark_explainers(ModelState& model,
                                               const Dataset& data,
                                               const RelationalGraph& g,
                                               const std::vector<Triple>& targets,
                                               const ExplainConfig& cfg,
                                               bool global_tg = false);

}  // namespace drx
