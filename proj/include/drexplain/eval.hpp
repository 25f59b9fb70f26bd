#pragma once

#include <string>
#include <vector>

#include "drexplain/config.hpp"
#include "drexplain/dataset.hpp"
#include "drexplain/graph.hpp"
#include "drexplain/metrics.hpp"
#include "drexplain/model.hpp"

namespace drx {

struct FoldResult {
  double auc = 0.0;
  double aupr = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double specificity = 0.0;
  int test_positives = 0;
  int test_negatives = 0;
};

struct EvalReport {
  char task = 'A';
  int folds = 0;
  std::vector<FoldResult> fold_results;
  FoldResult mean;
  FoldResult stddev;
  int best_fold = 0;  // by AUC
  std::string interpolation = "step";
  std::vector<std::pair<std::string, std::string>> config;
  double wall_clock_sec = 0.0;  // reported in the manifest, not the JSON
};

// Per-fold evaluation negatives, reserved before training so they are never
// drawn as training negatives: 1:1 with the fold's test positives, sampled
// from pairs with no response edge in the full graph. Negatives match the
// task's cold regime so positives are ranked against comparable pairs: any
// pair for task A, held-out-cell pairs for B, held-out-drug pairs for C,
// held-out x held-out for D. When the regime pool cannot fill the quota it
// is topped up from the remaining non-edge pairs.
std::vector<Triple> reserve_eval_negatives(const RelationalGraph& full_graph,
                                           const std::vector<Triple>& test,
                                           char task,
                                           std::uint64_t master_seed,
                                           int fold);

struct FoldArtifacts {
  ModelState model;
  RelationalGraph train_graph;
  std::vector<Triple> test_triples;
};

constexpr int kKeepBestFold = -1;

// Trains on the fold's train split over the similarity backbone, scores test
// positives against the reserved negatives. When artifacts is given, the
// fitted model and graph of fold keep_fold (or of the best-AUC fold under
// kKeepBestFold) are returned through it.
EvalReport run_cv(const Dataset& data, const RelationalGraph& full_graph,
                  const RunConfig& cfg, FoldArtifacts* artifacts = nullptr,
                  int keep_fold = kKeepBestFold);

}  // namespace drx
