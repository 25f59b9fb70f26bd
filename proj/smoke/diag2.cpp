#include <cstdio>
#include <map>

#include "drexplain/commands.hpp"
#include "drexplain/config.hpp"
#include "drexplain/eval.hpp"
#include "drexplain/graph.hpp"
#include "drexplain/io.hpp"
#include "drexplain/model.hpp"

using namespace drx;

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.omics_dir = argv[1];
  cfg.drugs_file = std::string(argv[1]) + "/drugs.tsv";
  cfg.responses_file = std::string(argv[1]) + "/responses.tsv";
  cfg.seed = std::strtoull(argv[2], nullptr, 10);
  cfg.task = 'C';
  cfg.embed_dim = 32;
  cfg.omics_hidden = 32;
  cfg.epochs = 300;
  cfg.batch_size = 4096;
  cfg.lr = 0.005;

  Dataset data = load_dataset(cfg.omics_dir, cfg.drugs_file,
                              cfg.responses_file);
  ModelState init = ModelState::create(cfg.model_config(),
                                       data.cells.expr.cols,
                                       data.cells.mut.cols,
                                       data.cells.cnv.cols);
  const Tensor x = encode_nodes_plain(init, data);
  std::vector<std::string> drug_ids;
  for (const DrugEntry& d : data.drugs) drug_ids.push_back(d.id);
  RelationalGraph g = assemble(data.cells.ids, drug_ids,
                               data.classified_responses(), x, cfg.phi_cell,
                               cfg.phi_drug);

  const auto splits = split_tasks(g, 'C', cfg.folds, cfg.cv_seed);
  for (int f = 0; f < cfg.folds; ++f) {
    const FoldSplit& split = splits[f];
    const auto eval_negs =
        reserve_eval_negatives(g, split.test, 'C', cfg.seed, f);
    TrainOptions opts;
    opts.negative_pool_graph = &g;
    for (const Triple& t : eval_negs) opts.excluded_pairs.insert({t.s, t.o});
    for (int d : split.held_drugs) {
      for (int c = 0; c < g.n_cells; ++c) opts.excluded_pairs.insert({c, d});
    }
    ModelConfig mc = cfg.model_config();
    mc.seed = substream(cfg.seed, "fold", static_cast<std::uint64_t>(f)).u64();
    RelationalGraph train_graph = g;
    train_graph.set_responses(split.train);
    ModelState model = train(data, train_graph, split.train, mc, opts);
    const GraphTensors gt = normalize_adjacency(train_graph);
    const Tensor z = embed_nodes_plain(model, data, gt);

    struct Acc { double pos = 0, neg = 0; int np = 0, nn = 0; };
    std::map<int, Acc> per_drug;
    for (const Triple& t : split.test) {
      Acc& a = per_drug[t.o];
      a.pos += score_triple_plain(model, z, t);
      a.np += 1;
    }
    for (const Triple& t : eval_negs) {
      Acc& a = per_drug[t.o];
      a.neg += score_triple_plain(model, z, t);
      a.nn += 1;
    }
    std::printf("fold %d held drugs:", f);
    for (int d : split.held_drugs) std::printf(" %s", g.node_id(d).c_str());
    std::printf("\n");
    for (const auto& [d, a] : per_drug) {
      // sim degree of the held drug
      int simdeg = 0;
      for (int j = g.n_cells; j < g.n_nodes(); ++j) {
        if (g.adjacency[kDrugSim].at(d, j) != 0.0) ++simdeg;
      }
      std::printf("  %s simdeg %d mean_pos %.3f (%d) mean_neg %.3f (%d)\n",
                  g.node_id(d).c_str(), simdeg,
                  a.np ? a.pos / a.np : -1, a.np,
                  a.nn ? a.neg / a.nn : -1, a.nn);
    }
  }
  return 0;
}
