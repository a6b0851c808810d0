#pragma once

#include <algorithm>
#include <atomic>
#include <vector>

#include "pfc/budget.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfc::par {

enum class Mode { serial, openmp };

inline bool openmp_compiled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

// Global execution mode for the enumeration kernels. The OpenMP kernels and
// the serial reference produce identical, index-sorted results; tests pin the
// mode and compare both paths.
inline Mode& mode() {
    static Mode m = openmp_compiled() ? Mode::openmp : Mode::serial;
    return m;
}

// Serial reference kernels. These define the contract: scan [0, n) in order
// and keep the indices where pred holds.

template <class Pred>
std::vector<Int> filter_indices_serial(Int n, Pred&& pred) {
    std::vector<Int> hits;
    for (Int i = 0; i < n; ++i)
        if (pred(i)) hits.push_back(i);
    return hits;
}

template <class Pred>
bool all_indices_serial(Int n, Pred&& pred) {
    for (Int i = 0; i < n; ++i)
        if (!pred(i)) return false;
    return true;
}

template <class Pred>
Int count_indices_serial(Int n, Pred&& pred) {
    Int c = 0;
    for (Int i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
}

// OpenMP kernels. Static scheduling hands each thread one contiguous block,
// so concatenating the per-thread hit lists in thread order preserves the
// global index order.

template <class Pred>
std::vector<Int> filter_indices_openmp(Int n, Pred&& pred) {
#ifdef _OPENMP
    int nthreads = 1;
#pragma omp parallel
    {
#pragma omp single
        nthreads = omp_get_num_threads();
    }
    std::vector<std::vector<Int>> local(static_cast<size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        const int t = omp_get_thread_num();
        auto& mine = local[static_cast<size_t>(t)];
#pragma omp for schedule(static)
        for (Int i = 0; i < n; ++i)
            if (pred(i)) mine.push_back(i);
    }
    std::vector<Int> hits;
    for (auto& chunk : local) {
        hits.insert(hits.end(), chunk.begin(), chunk.end());
    }
    return hits;
#else
    return filter_indices_serial(n, std::forward<Pred>(pred));
#endif
}

template <class Pred>
bool all_indices_openmp(Int n, Pred&& pred) {
#ifdef _OPENMP
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
    for (Int i = 0; i < n; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (!pred(i)) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
#else
    return all_indices_serial(n, std::forward<Pred>(pred));
#endif
}

template <class Pred>
Int count_indices_openmp(Int n, Pred&& pred) {
#ifdef _OPENMP
    Int c = 0;
#pragma omp parallel for schedule(static) reduction(+ : c)
    for (Int i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
#else
    return count_indices_serial(n, std::forward<Pred>(pred));
#endif
}

// Dispatchers used by the library kernels.

template <class Pred>
std::vector<Int> filter_indices(Int n, Pred&& pred) {
    return mode() == Mode::openmp ? filter_indices_openmp(n, std::forward<Pred>(pred))
                                  : filter_indices_serial(n, std::forward<Pred>(pred));
}

template <class Pred>
bool all_indices(Int n, Pred&& pred) {
    return mode() == Mode::openmp ? all_indices_openmp(n, std::forward<Pred>(pred))
                                  : all_indices_serial(n, std::forward<Pred>(pred));
}

template <class Pred>
Int count_indices(Int n, Pred&& pred) {
    return mode() == Mode::openmp ? count_indices_openmp(n, std::forward<Pred>(pred))
                                  : count_indices_serial(n, std::forward<Pred>(pred));
}

}  // namespace pfc::par
