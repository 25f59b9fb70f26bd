#pragma once

#include <functional>
#include <string>
#include <vector>

#include "drexplain/rng.hpp"
#include "drexplain/smiles.hpp"
#include "drexplain/tensor.hpp"

namespace drx {

// Atom feature layout, 75 columns:
//   [0,44)   element one-hot over kAtomElements + trailing "other"
//   [44,55)  degree one-hot 0..10 (clamped above)
//   [55,61)  formal charge one-hot -2..+2 + "other"
//   [61]     aromatic flag
//   [62,67)  bracket hydrogen count one-hot 0..4 (clamped above);
//            all zero when the atom carried no H field
//   [67]     ring membership
//   [68,75)  zero padding
constexpr int kAtomFeatureDim = 75;
extern const std::vector<std::string> kAtomElements;  // 43 named symbols

std::vector<double> featurize_atom(const MolecularGraph& m, int atom);
// n_atoms x 75
Tensor featurize_atoms(const MolecularGraph& m);

// y = act(x W + b), weights Glorot-uniform, biases zero.
struct Affine {
  Tensor W;
  Tensor b;

  static Affine create(int in, int out, Rng& rng);
  // non-const: the tape registers gradient hooks into W and b
  Tensor* forward(Tape& t, Tensor* x);
};

// Eq-1-style fusion: three omics-specific hidden layers, concatenated, fused
// to the embedding width. ReLU throughout.
struct CellEncoder {
  int expr_dim = 0, mut_dim = 0, cnv_dim = 0;
  int hidden = 100;
  int out = 64;
  Affine g_expr, g_mut, g_cnv, fuse;

  static CellEncoder create(int expr_dim, int mut_dim, int cnv_dim, int hidden,
                            int out, Rng& rng);
  // expr (n x E), mut (n x M), cnv (n x V) -> embeddings (n x out)
  Tensor* forward(Tape& t, Tensor* expr, Tensor* mut, Tensor* cnv);
  void for_each_param(
      const std::function<void(const std::string&, Tensor&)>& fn);
};

// Message passing over the molecular graph: per layer
//   H' = relu(rownorm(A) H W_n + b_n + H W_s + b_s)
// followed by a mean-pool readout. Atoms with no bonds see only the self
// term. Mean aggregation and mean pooling make the readout permutation
// invariant.
struct DrugEncoder {
  struct Layer {
    Affine neigh;
    Affine self;
  };
  int in = kAtomFeatureDim;
  int out = 64;
  std::vector<Layer> layers;

  static DrugEncoder create(int out, int n_layers, Rng& rng);
  // features (n_atoms x 75), norm_adj (n_atoms x n_atoms, rows normalized)
  // -> 1 x out readout
  Tensor* forward(Tape& t, Tensor* features, Tensor* norm_adj);
  void for_each_param(
      const std::function<void(const std::string&, Tensor&)>& fn);
};

// Convenience single-sample entry points (no gradients kept).
std::vector<double> encode_cell(const std::vector<double>& expr,
                                const std::vector<double>& mut,
                                const std::vector<double>& cnv,
                                CellEncoder& enc);
std::vector<double> encode_drug(const MolecularGraph& m, DrugEncoder& enc);

// Row-normalized bond adjacency (no self loops) for the drug encoder.
Tensor normalized_bond_adjacency(const MolecularGraph& m);

}  // namespace drx
