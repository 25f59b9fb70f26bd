#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drexplain/tensor.hpp"

namespace drx {

// Forward relations 0..3, inverses 4..7 (r+4). adjacency[inverse(r)] is
// always the transpose of adjacency[r].
enum Relation : int {
  kResistant = 0,
  kSensitive = 1,
  kCellSim = 2,
  kDrugSim = 3,
  kInvResistant = 4,
  kInvSensitive = 5,
  kInvCellSim = 6,
  kInvDrugSim = 7,
};
constexpr int kNumRelations = 8;
constexpr int kNumForwardRelations = 4;

constexpr int inverse(int r) { return r < 4 ? r + 4 : r - 4; }
constexpr int forward_form(int r) { return r < 4 ? r : r - 4; }
constexpr bool is_response(int r) {
  return forward_form(r) == kResistant || forward_form(r) == kSensitive;
}
const char* relation_name(int r);
std::optional<int> relation_from_name(const std::string& name);

// s and o are node indices; cells occupy [0, n_cells), drugs
// [n_cells, n_cells+n_drugs). y is the binary training label.
struct Triple {
  int s = 0;
  int r = 0;
  int o = 0;
  int y = 1;

  bool operator==(const Triple& t) const {
    return s == t.s && r == t.r && o == t.o && y == t.y;
  }
};

// Relation-tagged undirected identity of an edge: responses stored cell->drug,
// similarities with a < b. Inverse incarnations canonicalize to this form.
struct Edge {
  int r = 0;
  int a = 0;
  int b = 0;

  bool operator==(const Edge& e) const {
    return r == e.r && a == e.a && b == e.b;
  }
  bool operator<(const Edge& e) const {
    if (r != e.r) return r < e.r;
    if (a != e.a) return a < e.a;
    return b < e.b;
  }
};

Edge canonical_edge(int r, int i, int j);

struct RelationalGraph {
  int n_cells = 0;
  int n_drugs = 0;
  std::vector<std::string> cell_ids;
  std::vector<std::string> drug_ids;
  Tensor features;                            // (n_cells+n_drugs) x F
  std::array<Tensor, kNumRelations> adjacency;  // N x N binary

  int n_nodes() const { return n_cells + n_drugs; }
  bool is_cell(int node) const { return node < n_cells; }
  bool has_edge(int r, int i, int j) const {
    return adjacency[r].at(i, j) != 0.0;
  }
  const std::string& node_id(int node) const {
    return is_cell(node) ? cell_ids[node] : drug_ids[node - n_cells];
  }

  void init_adjacency();
  void add_edge(int forward_r, int i, int j);
  void remove_edge(int forward_r, int i, int j);
  // drops all response edges, then installs the given triples
  void set_responses(const std::vector<Triple>& triples);
  std::vector<Triple> response_triples() const;
  // every edge in canonical form, sorted by (relation, endpoints)
  std::vector<Edge> all_edges() const;
  void check_invariants() const;
};

// Eq-2 cosine; zero-norm input yields 0. zero_norm_seen, when given, is set
// if either vector had zero norm.
double cosine_similarity(const std::vector<double>& x,
                         const std::vector<double>& y,
                         bool* zero_norm_seen = nullptr);

// Pairwise cosine over rows [row_begin, row_end) of X.
Tensor cosine_matrix(const Tensor& x, int row_begin, int row_end,
                     int* zero_norm_rows = nullptr);

// Eq-3 thresholding: out_ij = 1 iff s_ij >= phi and i != j. Throws if phi
// lies outside [-1, 1] or S is not square.
Tensor threshold_similarity(const Tensor& s, double phi);

struct ResponseRecord {
  int cell = 0;
  int drug = 0;  // dataset-local drug index, not node index
  int relation = kSensitive;
};

// IC50 rule: < -3 sensitive, > 3 resistant, otherwise no edge.
std::optional<int> classify_ic50(double log_ic50);

// Builds similarity edges by thresholded cosine over the embedding rows of X
// and installs response edges with their inverses. Duplicate (cell,drug)
// pairs with conflicting labels throw.
RelationalGraph assemble(const std::vector<std::string>& cell_ids,
                         const std::vector<std::string>& drug_ids,
                         const std::vector<ResponseRecord>& responses,
                         const Tensor& x, double phi_cell, double phi_drug);

struct FoldSplit {
  std::vector<Triple> train;
  std::vector<Triple> test;
  // entities held out by inductive tasks (node indices); training must not
  // touch their pairs at all, not even as sampled negatives
  std::vector<int> held_cells;
  std::vector<int> held_drugs;
};

// Task A partitions response triples; B holds out cell folds; C drug folds;
// D pairs cell fold i with drug fold i and keeps only test triples whose two
// endpoints are both held out. Train/test triples are disjoint in every task.
std::vector<FoldSplit> split_tasks(const RelationalGraph& g, char task,
                                   int folds, std::uint64_t seed);

}  // namespace drx
