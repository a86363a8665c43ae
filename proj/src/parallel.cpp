#include "qrlab/parallel.hpp"

#include <atomic>
#include <limits>

namespace qrlab {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int k) { g_threads.store(k < 0 ? 0 : k); }
int thread_count() { return g_threads.load(); }

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
#ifdef _OPENMP
    const int k = thread_count();
    if (k == 1) {
        for (std::int64_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (k > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(k)
        for (std::int64_t i = 0; i < count; ++i) body(i);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) body(i);
    }
#else
    for (std::int64_t i = 0; i < count; ++i) body(i);
#endif
}

double blocked_sum(std::int64_t count, const std::function<double(std::int64_t)>& f) {
    const std::int64_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(static_cast<size_t>(blocks), 0.0);
    parallel_for(blocks, [&](std::int64_t b) {
        const std::int64_t lo = b * kReductionBlock;
        const std::int64_t hi = std::min(count, lo + kReductionBlock);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += f(i);
        partial[static_cast<size_t>(b)] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

double blocked_max(std::int64_t count, const std::function<double(std::int64_t)>& f) {
    const std::int64_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(static_cast<size_t>(blocks),
                                -std::numeric_limits<double>::infinity());
    parallel_for(blocks, [&](std::int64_t b) {
        const std::int64_t lo = b * kReductionBlock;
        const std::int64_t hi = std::min(count, lo + kReductionBlock);
        double m = -std::numeric_limits<double>::infinity();
        for (std::int64_t i = lo; i < hi; ++i) m = std::max(m, f(i));
        partial[static_cast<size_t>(b)] = m;
    });
    double total = -std::numeric_limits<double>::infinity();
    for (double m : partial) total = std::max(total, m);
    return total;
}

double blocked_sum_serial(std::int64_t count, const std::function<double(std::int64_t)>& f) {
    // Same blocking as blocked_sum so results agree bit for bit.
    double total = 0.0;
    for (std::int64_t lo = 0; lo < count; lo += kReductionBlock) {
        const std::int64_t hi = std::min(count, lo + kReductionBlock);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += f(i);
        total += s;
    }
    return total;
}

double max_serial(std::int64_t count, const std::function<double(std::int64_t)>& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < count; ++i) m = std::max(m, f(i));
    return m;
}

}  // namespace qrlab
