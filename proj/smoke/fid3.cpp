#include <cstdio>
#include <cstdlib>
#include "drexplain/explain.hpp"
#include "drexplain/io.hpp"
#include "drexplain/model.hpp"
using namespace drx;
int main(int argc, char** argv) {
  const Dataset data = load_dataset(argv[1], argv[2], argv[3]);
  Checkpoint ck = load_checkpoint(argv[4]);
  ExplainConfig cfg;
  cfg.lambda_sparsity = std::atof(argv[5]);
  std::printf("lambda_sparsity=%g lambda_entropy=%g lr=%g iters=%d\n",
              cfg.lambda_sparsity, cfg.lambda_entropy, cfg.lr, cfg.iters);
  const Triple& t = ck.test_triples[0];
  cfg.seed = 1000;
  ExplanationSubgraph ex = explain_mask(ck.model, data, ck.graph, t, cfg);
  for (int j = 0; j < int(ex.edges.size()); ++j) {
    const auto& e = ex.edges[j];
    std::printf("[r%d %d-%d w=%.4f] ", e.edge.r, e.edge.a, e.edge.b, e.weight);
  }
  std::printf("\n");
  return 0;
}
