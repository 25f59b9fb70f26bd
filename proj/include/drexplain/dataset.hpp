#pragma once

#include <string>
#include <vector>

#include "drexplain/graph.hpp"
#include "drexplain/smiles.hpp"
#include "drexplain/tensor.hpp"

namespace drx {

// Omics tables share row order with ids.
struct CellTable {
  std::vector<std::string> ids;
  Tensor expr;
  Tensor mut;
  Tensor cnv;

  int count() const { return static_cast<int>(ids.size()); }
};

struct DrugEntry {
  std::string id;
  std::string smiles;
  MolecularGraph mol;
  Tensor features;  // n_atoms x 75
  Tensor norm_adj;  // n_atoms x n_atoms, row normalized
};

struct RawResponse {
  std::string cell_id;
  std::string drug_id;
  double log_ic50 = 0.0;
};

struct Dataset {
  CellTable cells;
  std::vector<DrugEntry> drugs;
  std::vector<RawResponse> responses;

  int cell_index(const std::string& id) const;  // -1 when absent
  int drug_index(const std::string& id) const;
  // IC50-thresholded edges; rows in the excluded band are dropped
  std::vector<ResponseRecord> classified_responses() const;
};

// Parses SMILES and fills per-drug feature and adjacency tensors.
DrugEntry make_drug_entry(const std::string& id, const std::string& smiles);

}  // namespace drx
