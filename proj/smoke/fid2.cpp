// Throwaway: dump mask vs deletion-oracle rankings for the first triples.
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
  for (std::size_t i = 0; i < ck.test_triples.size() && i < 4; ++i) {
    const Triple& t = ck.test_triples[i];
    cfg.seed = 1000 + i;
    ExplanationSubgraph ex;
    try {
      ex = explain_mask(ck.model, data, ck.graph, t, cfg);
    } catch (const std::exception& e) {
      std::printf("triple %zu skipped: %s\n", i, e.what());
      continue;
    }
    const auto hood = computational_neighborhood(ck.graph, t, 1);
    const auto del = deletion_oracle(ck.model, data, ck.graph, t, hood);
    std::printf("triple %zu: (%d -[%d]-> %d) hood=%zu converged=%d\n", i, t.s,
                t.r, t.o, hood.size(), int(ex.converged));
    std::printf("  mask:   ");
    for (int j = 0; j < 5 && j < int(ex.edges.size()); ++j) {
      const auto& e = ex.edges[j];
      std::printf("[r%d %d-%d w=%.3f v=%.3f] ", e.edge.r, e.edge.a, e.edge.b,
                  e.weight, e.value);
    }
    std::printf("\n  oracle: ");
    for (int j = 0; j < 5 && j < int(del.size()); ++j) {
      const auto& e = del[j];
      std::printf("[r%d %d-%d drop=%.4f] ", e.edge.r, e.edge.a, e.edge.b,
                  e.weight);
    }
    std::printf("\n");
  }
  return 0;
}
