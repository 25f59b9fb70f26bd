#pragma once

#include <string>

#include "drexplain/config.hpp"

namespace drx {

// Command arguments that are not RunConfig keys.
struct CommandArgs {
  std::string triple;           // "CELL_ID,relation,DRUG_ID"
  std::string method = "both";  // mask | explaine | both
  std::string synth_spec;       // SyntheticSpec json path; empty = defaults
  std::string grid;             // "lr=a,b;embed_dim=c,d" cross product
};

// Each command returns 0 on success and reports failures by throwing:
// std::invalid_argument for validation problems (exit 1 at the CLI),
// anything else for runtime failures (exit 2).
int cmd_ingest(const RunConfig& cfg);
int cmd_train(const RunConfig& cfg, const CommandArgs& args);
int cmd_predict(const RunConfig& cfg);
int cmd_explain(const RunConfig& cfg, const CommandArgs& args);
int cmd_ground_truth(const RunConfig& cfg, const CommandArgs& args);
int cmd_eval_explain(const RunConfig& cfg);
int cmd_synth(const RunConfig& cfg, const CommandArgs& args);
int cmd_report(const RunConfig& cfg);

}  // namespace drx
