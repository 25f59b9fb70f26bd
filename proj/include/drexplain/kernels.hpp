#pragma once

#include <cstddef>

// Dense double-precision kernels behind the tensor layer. The parallel
// versions split work across rows; each output element is produced by one
// thread with a fixed summation order, so results are identical for any
// thread count. kernels::reference holds plain serial loops used to
// cross-check the parallel versions and as a benchmark baseline.

namespace drx::kernels {

// Worker count respects OMP_NUM_THREADS and the DREXPLAIN_THREADS cap.
int thread_count();

// c(n x m) = a(n x k) * b(k x m); accumulates into c when acc is set.
void matmul_nn(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);
// c(n x m) = a(k x n)^T * b(k x m)
void matmul_tn(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);
// c(n x m) = a(n x k) * b(m x k)^T
void matmul_nt(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);

// out_ij = a_ij / max(row_sum_i, eps-free: rows summing to zero map to zero)
// row_sums receives the raw sums (length n) for the backward pass.
void row_normalize(const double* a, double* out, double* row_sums, int n,
                   int m);

void sigmoid(const double* x, double* y, std::size_t n);
void relu(const double* x, double* y, std::size_t n);

namespace reference {
void matmul_nn(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);
void matmul_tn(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);
void matmul_nt(const double* a, const double* b, double* c, int n, int k,
               int m, bool acc = false);
void row_normalize(const double* a, double* out, double* row_sums, int n,
                   int m);
void sigmoid(const double* x, double* y, std::size_t n);
void relu(const double* x, double* y, std::size_t n);
}  // namespace reference

}  // namespace drx::kernels
