#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace drx {

// Dense row-major matrix. grad is allocated lazily and always accumulated
// into, never overwritten, so shared inputs collect contributions from every
// consumer. All arithmetic is double precision.
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<double> val;
  std::vector<double> grad;
  bool requires_grad = false;

  Tensor() = default;
  Tensor(int r, int c, bool rg = false)
      : rows(r), cols(c), val(static_cast<std::size_t>(r) * c, 0.0),
        requires_grad(rg) {
    if (rg) grad.assign(val.size(), 0.0);
  }

  std::size_t size() const { return val.size(); }
  double& at(int i, int j) { return val[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const {
    return val[static_cast<std::size_t>(i) * cols + j];
  }
  double& gat(int i, int j) {
    return grad[static_cast<std::size_t>(i) * cols + j];
  }

  void ensure_grad() {
    if (grad.size() != val.size()) grad.assign(val.size(), 0.0);
  }
  void zero_grad() { grad.assign(val.size(), 0.0); }
};

// One adjacency cell fed by a shared weight: entry (i,j) takes
// coeff * weights[widx]. A single weight may appear in several cells
// (forward copy, inverse copy, symmetric mirror); their gradients sum.
struct EdgeSlot {
  int i = 0;
  int j = 0;
  int widx = 0;
  double coeff = 1.0;
};

// Records the forward graph and replays it in exact reverse order.
// Rules checked at runtime:
//   - shapes must match per op contract;
//   - backward() runs once per tape, a second call throws;
//   - gradient accumulation adds, op order in backward is the strict reverse
//     of the op order in forward.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Tape-owned constant (no gradient).
  Tensor* constant(int rows, int cols, const std::vector<double>& v);
  Tensor* zeros(int rows, int cols);

  Tensor* matmul(Tensor* a, Tensor* b);
  Tensor* add(Tensor* a, Tensor* b);
  Tensor* hadamard(Tensor* a, Tensor* b);
  // out = mul * x + shift, elementwise
  Tensor* affine(Tensor* x, double mul, double shift);
  Tensor* scale(Tensor* x, double s) { return affine(x, s, 0.0); }
  // b is 1 x m, added to every row of x
  Tensor* add_row_broadcast(Tensor* x, Tensor* b);
  // v is 1 x m, multiplied into every row of x
  Tensor* mul_row_broadcast(Tensor* x, Tensor* v);
  Tensor* concat_cols(const std::vector<Tensor*>& xs);
  Tensor* concat_rows(const std::vector<Tensor*>& xs);
  // out row t = x row idx[t]; duplicate indices allowed
  Tensor* row_gather(Tensor* x, const std::vector<int>& idx);
  // out has out_rows rows, out[idx[t]] += x[t]
  Tensor* row_scatter_add(Tensor* x, const std::vector<int>& idx,
                          int out_rows);
  Tensor* sigmoid(Tensor* x);
  Tensor* relu(Tensor* x);
  // natural log; inputs are clamped below at 1e-300 to keep the value finite
  Tensor* log(Tensor* x);
  // n x m -> 1 x m column means (used for pooled readouts)
  Tensor* mean_rows(Tensor* x);
  // n x m -> n x 1 per-row sums
  Tensor* sum_cols(Tensor* x);
  Tensor* sum_all(Tensor* x);
  // out_ij = x_ij / row_sum_i; rows summing to zero map to zero rows
  Tensor* row_normalize(Tensor* x);
  // out = base with slot.coeff * w[slot.widx] added at (slot.i, slot.j);
  // base may be null for an all-zero base. w must be k x 1.
  Tensor* scatter_edges(Tensor* w, const std::vector<EdgeSlot>& slots, int n,
                        const Tensor* base);
  // mean of -[y log p + (1-y) log(1-p)]; p clamped to [1e-12, 1-1e-12].
  // Throws if any p lies outside [0,1] by more than 1e-9.
  Tensor* bce_loss(Tensor* p, const std::vector<double>& y);

  void backward(Tensor* loss);
  std::size_t num_ops() const { return back_.size(); }

 private:
  Tensor* make(int rows, int cols, bool rg);
  void record(std::function<void()> fn) { back_.push_back(std::move(fn)); }

  std::vector<std::unique_ptr<Tensor>> owned_;
  std::vector<std::function<void()>> back_;
  bool backward_done_ = false;
};

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  long t = 0;
};

// One bias-corrected Adam update from p.grad. Returns false and leaves p and
// the state untouched if any gradient entry is non-finite.
bool adam_step(Tensor& p, AdamState& st, const AdamConfig& cfg);

}  // namespace drx
