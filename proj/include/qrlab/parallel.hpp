#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrlab {

// Thread count used by the OpenMP kernels; 0 means the OpenMP default.
// Kernel results never depend on this: work items carry index-derived seeds
// and reductions run over fixed index blocks.
void set_thread_count(int k);
int thread_count();

// OpenMP-parallel loop over [0, count). body(i) must only write state owned
// by item i.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

inline constexpr std::int64_t kReductionBlock = 4096;

// Sum of f(i) over [0, count) with a fixed blocking scheme: each block is
// summed serially in index order, block sums are combined in block order.
// Bit-identical for every thread count.
double blocked_sum(std::int64_t count, const std::function<double(std::int64_t)>& f);

// Max of f(i) over [0, count); -inf when count == 0.
double blocked_max(std::int64_t count, const std::function<double(std::int64_t)>& f);

// Serial reference implementations, kept for testing the kernels above.
double blocked_sum_serial(std::int64_t count, const std::function<double(std::int64_t)>& f);
double max_serial(std::int64_t count, const std::function<double(std::int64_t)>& f);

}  // namespace qrlab
