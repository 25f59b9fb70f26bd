#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "drexplain/dataset.hpp"
#include "drexplain/encoders.hpp"
#include "drexplain/graph.hpp"
#include "drexplain/rng.hpp"
#include "drexplain/tensor.hpp"

namespace drx {

struct ModelConfig {
  int embed_dim = 64;
  int omics_hidden = 100;
  int drug_layers = 2;
  double lr = 1e-3;
  int batch_size = 256;
  int epochs = 500;
  double neg_ratio = 1.0;
  bool decode_similarity = false;
  std::uint64_t seed = 1;
};

// Per-relation weights plus the self-loop weight of one propagation layer.
struct DgcnLayer {
  std::array<Tensor, kNumRelations> w_rel;
  Tensor w_self;
};

struct ModelState {
  ModelConfig cfg;
  CellEncoder cell_enc;
  DrugEncoder drug_enc;
  DgcnLayer layer1;
  DgcnLayer layer2;
  // DistMult diagonals indexed by forward relation id; response relations
  // always present, similarity relations only under decode_similarity
  std::array<Tensor, kNumForwardRelations> decoder;
  std::vector<double> loss_history;  // one mean loss per epoch

  static ModelState create(const ModelConfig& cfg, int expr_dim, int mut_dim,
                           int cnv_dim);
  bool decodes(int r) const;
  void for_each_param(
      const std::function<void(const std::string&, Tensor&)>& fn);
};

// Row-normalized adjacency per relation, fixed for a frozen graph.
struct GraphTensors {
  std::array<Tensor, kNumRelations> norm_adj;
};
GraphTensors normalize_adjacency(const RelationalGraph& g);

// Encoder pass over every node: cell block rows first, then drugs.
Tensor* encode_nodes(Tape& t, ModelState& m, const Dataset& data);

// Two propagation layers (Eq.-4 shape): per layer
//   Z' = sigmoid(sum_r rownorm(A_r) Z W_r + Z W_self)
// adj entries may be tape tensors (masked) or external constants.
// linear_mode skips the sigmoid; it exists only for linearity tests.
Tensor* dgcn_forward(Tape& t, ModelState& m,
                     const std::array<Tensor*, kNumRelations>& adj, Tensor* x,
                     bool linear_mode = false);

// sigma(z_s . diag_r . z_o) for each triple, grouped by relation internally;
// row i of the result corresponds to triples[i].
Tensor* triple_scores(Tape& t, ModelState& m, Tensor* z,
                      const std::vector<Triple>& triples);

// Value-only passes; no tape involved. Written against the kernels directly
// so they double-check the tape path.
Tensor encode_nodes_plain(ModelState& m, const Dataset& data);
Tensor embed_nodes_plain(ModelState& m, const Dataset& data,
                         const GraphTensors& gt);
double score_triple_plain(const ModelState& m, const Tensor& z,
                          const Triple& t);
double predict_score(ModelState& m, const Dataset& data,
                     const RelationalGraph& g, const Triple& t);
// Same, against already-normalized adjacency; counterfactuals that ablate
// entries without renormalizing the survivors go through here.
double predict_score(ModelState& m, const Dataset& data,
                     const GraphTensors& gt, const Triple& t);

using PairKey = std::pair<int, int>;  // (cell node, drug node)

// Uniform draw without replacement from (cell,drug) pairs carrying no
// response edge in `g`, skipping `excluded`. Relations are copied from the
// positives round-robin so the draw matches their class mix. If the pool is
// smaller than requested the whole pool is returned and *truncated set.
std::vector<Triple> sample_negatives(const RelationalGraph& g,
                                     const std::vector<Triple>& positives,
                                     double ratio, Rng& rng,
                                     const std::set<PairKey>& excluded = {},
                                     bool* truncated = nullptr);

struct TrainOptions {
  // pairs reserved for evaluation; never drawn as training negatives
  std::set<PairKey> excluded_pairs;
  // pool for negative sampling; defaults to the training graph when null
  const RelationalGraph* negative_pool_graph = nullptr;
};

// Eq.-6 training: per-epoch resampled 1:1 negatives, shuffled minibatches,
// Adam. Throws on non-finite loss.
ModelState train(const Dataset& data, const RelationalGraph& train_graph,
                 const std::vector<Triple>& train_triples,
                 const ModelConfig& cfg, const TrainOptions& opts = {});

struct ScoredPair {
  int rank = 0;
  int relation = 0;
  std::string cell_id;
  std::string drug_id;
  double score = 0.0;
};

// Scores for every given pair under each decodable relation, sorted by
// descending score within the relation.
std::vector<ScoredPair> predict_all(ModelState& m, const Dataset& data,
                                    const RelationalGraph& g,
                                    const std::vector<PairKey>& pairs);

// Checkpoint: versioned text format, hexfloat payload for exact round trips.
struct Checkpoint {
  ModelState model;
  RelationalGraph graph;  // training graph the model was fitted on
  std::vector<Triple> test_triples;
};

void save_checkpoint(const std::string& path, ModelState& model,
                     const RelationalGraph& graph,
                     const std::vector<Triple>& test_triples);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace drx
