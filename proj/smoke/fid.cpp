// Throwaway: measures top-k fidelity and mask-vs-deletion-oracle top-1
// agreement on a trained checkpoint.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "drexplain/explain.hpp"
#include "drexplain/ground_truth.hpp"
#include "drexplain/io.hpp"
#include "drexplain/model.hpp"

using namespace drx;

int main(int argc, char** argv) {
  if (argc < 5) {
    std::fprintf(stderr, "usage: fid omics drugs responses checkpoint [max_hood]\n");
    return 2;
  }
  const Dataset data = load_dataset(argv[1], argv[2], argv[3]);
  Checkpoint ck = load_checkpoint(argv[4]);
  const int max_hood = argc > 5 ? std::atoi(argv[5]) : 12;

  ExplainConfig cfg;
  cfg.k = 5;
  if (argc > 6) cfg.lambda_sparsity = std::atof(argv[6]);
  if (argc > 7) cfg.lambda_entropy = std::atof(argv[7]);
  if (argc > 8) cfg.iters = std::atoi(argv[8]);

  int explained = 0, preserved = 0;
  int oracle_pool = 0, oracle_match = 0;
  int skipped_neg = 0;
  for (std::size_t i = 0; i < ck.test_triples.size(); ++i) {
    const Triple& t = ck.test_triples[i];
    cfg.seed = 1000 + i;
    ExplanationSubgraph ex;
    try {
      ex = explain_mask(ck.model, data, ck.graph, t, cfg);
    } catch (const std::exception&) {
      ++skipped_neg;
      continue;
    }
    const std::vector<Edge> hood =
        computational_neighborhood(ck.graph, t, 1);
    ++explained;
    if (label_preserved_with_top_edges(ck.model, data, ck.graph, t,
                                       ex.top_edges(5), hood)) {
      ++preserved;
    }
    if (static_cast<int>(hood.size()) <= max_hood && !ex.edges.empty()) {
      const auto del = deletion_oracle(ck.model, data, ck.graph, t, hood);
      if (!del.empty()) {
        ++oracle_pool;
        if (del[0].edge == ex.edges[0].edge) ++oracle_match;
      }
    }
  }
  std::printf("explained=%d skipped_negative=%d\n", explained, skipped_neg);
  std::printf("fidelity@5: %d/%d = %.3f\n", preserved, explained,
              explained ? double(preserved) / explained : 0.0);
  std::printf("oracle(top1, hood<=%d): %d/%d = %.3f\n", max_hood,
              oracle_match, oracle_pool,
              oracle_pool ? double(oracle_match) / oracle_pool : 0.0);
  return 0;
}
