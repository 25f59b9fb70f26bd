#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drexplain/model.hpp"

namespace drx {

// Flat key=value run configuration. File values are overridden by CLI flags
// (flags win). validate() enforces the documented ranges; the parser rejects
// unknown keys.
struct RunConfig {
  std::string omics_dir;
  std::string drugs_file;
  std::string responses_file;
  std::string out_dir = "out";
  std::string checkpoint_file;

  int batch_size = 256;
  double lr = 0.001;
  int embed_dim = 64;
  int epochs = 500;  // desk-scale default; paper preset uses 5000
  int omics_hidden = 100;
  int drug_layers = 2;
  double phi_cell = 0.9;
  double phi_drug = 0.88;
  double neg_ratio = 1.0;
  double lambda_sparsity = 0.005;
  double lambda_entropy = 0.1;
  double tau_mask = 0.5;
  double mask_lr = 1.0;
  int mask_iters = 300;
  int k = 5;
  int hops = 1;
  char task = 'A';
  int folds = 5;
  std::uint64_t seed = 1;
  std::uint64_t cv_seed = 1;
  std::string sim_scope = "global";     // global | train_only
  std::string tg_scope = "per_target";  // per_target | global
  bool decode_similarity = false;

  static RunConfig paper_defaults();
  void validate() const;
  ModelConfig model_config() const;
};

RunConfig load_config(const std::string& path);

// Applies one key=value assignment; throws on unknown key or bad value.
void apply_setting(RunConfig& cfg, const std::string& key,
                   const std::string& value);

// Ordered key/value echo for manifests and reports.
std::vector<std::pair<std::string, std::string>> config_echo(
    const RunConfig& cfg);

}  // namespace drx
