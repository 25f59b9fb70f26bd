#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drexplain/tensor.hpp"

namespace drx {

enum class RuleLabel { kNone, kSensitive, kResistant };

const char* rule_label_name(RuleLabel r);

// Planted-structure benchmark: cells cluster into feature groups, drugs into
// template families, and the rule table decides which (cell group, drug
// group) combinations respond. Recoverable structure at desk scale.
struct SyntheticSpec {
  int n_cell_groups = 3;
  int n_drug_groups = 3;
  int cells_per_group = 20;
  int drugs_per_group = 7;
  int expr_dim = 40;
  int mut_dim = 30;
  int cnv_dim = 20;
  double feature_noise = 0.05;
  // per-cell multiplicative scale on all omics blocks, drawn from
  // [1 - jitter, 1 + jitter]; cosine similarity is scale-free so the cell
  // similarity graph is unaffected, but score calibration across cells is
  // not, which keeps folds with held-out cells measurably harder than
  // transductive ones
  double cell_scale_jitter = 0.3;
  // chance that one (cell, drug group) combination drops its rule for that
  // cell only; such per-cell deviations are learnable for cells seen in
  // training but irreducible for held-out cells, so tasks with cold cells
  // sit strictly below the transductive and cold-drug tasks
  double cell_exception_rate = 0.1;
  // fraction of ruled (cell,drug) pairs that emit a response row; the
  // unplanted remainder is indistinguishable from held-out positives, so it
  // caps attainable AUC at roughly 1 - unplanted_share_of_negatives / 2
  double planting_rate = 0.95;
  // chance that an unruled pair emits a mid-band IC50 row, exercising the
  // exclusion path downstream
  double nonsignificant_rate = 0.02;
  std::vector<std::vector<RuleLabel>> rule_table;  // cell group x drug group

  static SyntheticSpec defaults();
  // shape and range checks plus class richness (at least one sensitive and
  // one resistant rule)
  void validate() const;
  std::string to_json() const;
  static SyntheticSpec from_json_text(const std::string& text);
};

struct SyntheticData {
  std::vector<std::string> cell_ids;
  std::vector<std::string> drug_ids;
  std::vector<int> cell_group;
  std::vector<int> drug_group;
  Tensor expr, mut, cnv;
  std::vector<std::string> smiles;

  struct Response {
    int cell = 0;
    int drug = 0;
    double ic50 = 0.0;
  };
  std::vector<Response> responses;

  struct Planted {
    int cell = 0;
    int drug = 0;
    RuleLabel label = RuleLabel::kNone;
    bool observed = false;  // false: ruled pair left out by the planting rate
  };
  std::vector<Planted> planted;
};

// Only shape validity is required here, so an all-none table legitimately
// produces zero responses.
SyntheticData generate_synthetic(const SyntheticSpec& spec,
                                 std::uint64_t seed);

// Writes expr/mut/cnv/drugs/responses TSVs plus planted_truth.tsv,
// planted_support.jsonl and meta.json into out_dir; returns the file names.
// Byte-identical for equal (spec, seed).
std::vector<std::string> write_synthetic(const SyntheticData& d,
                                         const SyntheticSpec& spec,
                                         std::uint64_t seed,
                                         const std::string& out_dir);

}  // namespace drx
