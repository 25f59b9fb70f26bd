#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "drexplain/dataset.hpp"
#include "drexplain/graph.hpp"
#include "drexplain/model.hpp"

namespace drx {

struct ExplainConfig {
  int hops = 1;
  double lr = 1.0;
  int iters = 300;
  double lambda_sparsity = 0.005;
  double lambda_entropy = 0.1;
  double tau = 0.5;
  int k = 5;
  std::uint64_t seed = 1;
};

struct RankedEdge {
  Edge edge;
  double weight = 0.0;  // ranking key (mask value or gradient magnitude)
  double value = 0.0;   // signed quantity behind the weight
};

struct ExplanationSubgraph {
  Triple target;
  std::string method;
  std::vector<RankedEdge> edges;  // weight descending, ties by edge order
  bool converged = true;

  std::vector<Edge> top_edges(int k) const;
};

// Canonical edges with at least one endpoint within hops-1 steps of the
// target endpoints (any relation, either direction). The target edge itself
// is excluded: it would trivially explain its own prediction. Ordered by
// (relation, endpoints).
std::vector<Edge> computational_neighborhood(const RelationalGraph& g,
                                             const Triple& target, int hops);

// Differentiable score of one target under per-edge weights. A weight scales
// the edge's trained row-normalized adjacency entries, so turning an edge
// down never redistributes its mass onto surviving edges. The receptive
// field of a 2-layer model reaches the 1-hop neighbors of s and o, so layer 1
// is evaluated only on those rows; layer 2 only on s and o. With all weights
// at 1 the result equals the full forward pass exactly.
class MaskedScorer {
 public:
  MaskedScorer(ModelState& model, const Dataset& data,
               const RelationalGraph& g, const Triple& target,
               std::vector<Edge> candidates);

  // w holds one weight per candidate edge (k x 1); every adjacency
  // incarnation of a candidate (forward, inverse, symmetric mirror) takes
  // the same weight, and their gradients sum into w.
  Tensor* score(Tape& t, Tensor* w);

  const std::vector<Edge>& candidates() const { return candidates_; }

 private:
  ModelState& model_;
  std::vector<Edge> candidates_;
  Triple target_;
  int n_ = 0;
  std::vector<int> hood_;          // sorted 1-hop node set, contains s and o
  int s_pos_ = 0, o_pos_ = 0;      // positions of s, o within hood_
  Tensor x_;                       // encoder output, frozen
  Tensor x_hood_;                  // rows of x_ for hood_
  // normalized adjacency with candidate cells zeroed
  std::array<Tensor, kNumRelations> base_;
  std::array<std::vector<EdgeSlot>, kNumRelations> slots_;
};

// Mask learning: logits init N(0, 0.1), plain gradient descent on the
// cross-entropy of the target prediction under the weighted adjacency plus
// sparsity and entropy penalties. Requires the target to be predicted
// positive. If the loss rose over the final 50 iterations the best iterate
// is returned and converged is cleared.
ExplanationSubgraph explain_mask(ModelState& model, const Dataset& data,
                                 const RelationalGraph& g,
                                 const Triple& target,
                                 const ExplainConfig& cfg);

// Eq.-7 baseline: d score / d a for every candidate edge through the
// unrolled forward pass, ranked by gradient magnitude; the signed gradient
// is kept in `value`.
ExplanationSubgraph explaine_scores(ModelState& model, const Dataset& data,
                                    const RelationalGraph& g,
                                    const Triple& target, int hops = 1);

// Independent reference: score drop from zeroing each candidate's normalized
// adjacency entries (all incarnations), full re-prediction per edge, no
// renormalization of survivors. Same counterfactual the mask optimizes.
// Descending drop.
std::vector<RankedEdge> deletion_oracle(ModelState& model, const Dataset& data,
                                        const RelationalGraph& g,
                                        const Triple& target,
                                        const std::vector<Edge>& candidates);

// Ablates every neighborhood edge outside `kept` (normalized entries zeroed,
// survivors untouched) and re-predicts; true when the positive label
// survives (score stays >= 0.5).
bool label_preserved_with_top_edges(ModelState& model, const Dataset& data,
                                    const RelationalGraph& g,
                                    const Triple& target,
                                    const std::vector<Edge>& kept,
                                    const std::vector<Edge>& neighborhood);

std::string explanation_to_dot(const RelationalGraph& g,
                               const ExplanationSubgraph& ex);

}  // namespace drx
