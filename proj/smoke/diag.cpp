#include <cstdio>

#include "drexplain/commands.hpp"
#include "drexplain/config.hpp"
#include "drexplain/graph.hpp"
#include "drexplain/io.hpp"
#include "drexplain/model.hpp"

using namespace drx;

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.omics_dir = argv[1];
  cfg.drugs_file = std::string(argv[1]) + "/drugs.tsv";
  cfg.responses_file = std::string(argv[1]) + "/responses.tsv";
  cfg.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
  if (argc > 3) cfg.embed_dim = std::atoi(argv[3]);
  Dataset data = load_dataset(cfg.omics_dir, cfg.drugs_file,
                              cfg.responses_file);
  ModelState init = ModelState::create(cfg.model_config(),
                                       data.cells.expr.cols,
                                       data.cells.mut.cols,
                                       data.cells.cnv.cols);
  const Tensor x = encode_nodes_plain(init, data);
  const int nc = data.cells.count();
  const int nd = static_cast<int>(data.drugs.size());
  const Tensor ds = cosine_matrix(x, nc, nc + nd);
  // mean cosine per drug-group pair, groups of 7 by id construction
  double sum[3][3] = {};
  int cnt[3][3] = {};
  double min_within[3] = {2, 2, 2};
  double max_cross = 0;
  for (int i = 0; i < nd; ++i) {
    for (int j = i + 1; j < nd; ++j) {
      const int gi = i / 7, gj = j / 7;
      sum[gi][gj] += ds.at(i, j);
      cnt[gi][gj] += 1;
      if (gi == gj && ds.at(i, j) < min_within[gi]) {
        min_within[gi] = ds.at(i, j);
      }
      if (gi != gj && ds.at(i, j) > max_cross) max_cross = ds.at(i, j);
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      std::printf("group %d-%d: mean cos %.4f over %d pairs\n", a, b,
                  sum[a][b] / cnt[a][b], cnt[a][b]);
    }
  }
  std::printf("min within-group: %.4f %.4f %.4f  max cross: %.4f\n",
              min_within[0], min_within[1], min_within[2], max_cross);
  return 0;
}
