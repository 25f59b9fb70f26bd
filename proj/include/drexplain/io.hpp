#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drexplain/config.hpp"
#include "drexplain/dataset.hpp"
#include "drexplain/eval.hpp"
#include "drexplain/explain.hpp"
#include "drexplain/ground_truth.hpp"

namespace drx {

// Parsed TSV with per-row source line numbers for diagnostics. '#' lines and
// blank lines are skipped. All rows must match the header width; violations
// throw std::invalid_argument with a path:line[:col] prefix.
struct TsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;
};

TsvTable read_tsv(const std::string& path, std::size_t min_cols);
// strict full-token numeric parse; diagnostics carry line and column
double parse_numeric_field(const TsvTable& t, std::size_t row,
                           std::size_t col);

// expr.tsv / mut.tsv / cnv.tsv under dir; cells present in all three files
// form the usable set, ordered by their appearance in expr.tsv.
CellTable read_omics(const std::string& dir, int* dropped_cells = nullptr);
std::vector<std::pair<std::string, std::string>> read_drug_table(
    const std::string& path);
std::vector<RawResponse> read_responses(const std::string& path);
Dataset load_dataset(const std::string& omics_dir,
                     const std::string& drugs_file,
                     const std::string& responses_file);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::uint64_t hash_file(const std::string& path);

// Single-owner guard over an output directory; holds dir/.lock exclusively
// for the process lifetime and removes it on destruction.
class DirLock {
 public:
  explicit DirLock(const std::string& dir);
  ~DirLock();
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  std::string path_;
};

// manifest.json: command, version, seed, wall clock, ordered config echo,
// input fingerprints, output file list.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const RunConfig& cfg,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    double wall_clock_sec);

std::string eval_report_json(const EvalReport& r);
std::string eval_report_tsv(const EvalReport& r);
std::string explanations_json(const RelationalGraph& g,
                              const std::vector<ExplanationSubgraph>& exs);
std::string ground_truth_jsonl(const RelationalGraph& g,
                               const std::vector<GroundTruthSet>& gts);
std::string benchmark_tsv(const std::vector<BenchmarkRow>& rows);

}  // namespace drx
