#include "modcurv/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcurv {

namespace {
std::atomic<bool> g_parallel{true};

bool better(double res, std::size_t idx, const SweepOutcome& cur) {
    if (res > cur.max_residual) return true;
    return res == cur.max_residual && idx < cur.argmax;
}
} // namespace

void set_parallel_enabled(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

int effective_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MODCURV_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) return cap;
    }
    return hw;
}

SweepOutcome sweep_serial(std::size_t n, const ResidualFn& f) {
    SweepOutcome out;
    if (n == 0) return out;
    out.max_residual = f(0);
    out.argmax = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double r = f(i);
        if (better(r, i, out)) out = {r, i};
    }
    return out;
}

SweepOutcome sweep_parallel(std::size_t n, const ResidualFn& f) {
    SweepOutcome out;
    if (n == 0) return out;
#ifdef _OPENMP
    const int nthreads = effective_threads();
    std::vector<SweepOutcome> partial(static_cast<std::size_t>(nthreads),
                                      SweepOutcome{-1.0, n});
#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        SweepOutcome local{-1.0, n};
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            const double r = f(static_cast<std::size_t>(i));
            if (r > local.max_residual ||
                (r == local.max_residual && static_cast<std::size_t>(i) < local.argmax))
                local = {r, static_cast<std::size_t>(i)};
        }
        partial[static_cast<std::size_t>(tid)] = local;
    }
    out = {partial[0].max_residual, partial[0].argmax};
    for (const auto& p : partial)
        if (p.argmax < n && (p.max_residual > out.max_residual ||
                             (p.max_residual == out.max_residual && p.argmax < out.argmax)))
            out = p;
    if (out.argmax >= n) out = sweep_serial(n, f); // all slots empty (n < threads)
    return out;
#else
    return sweep_serial(n, f);
#endif
}

SweepOutcome sweep(std::size_t n, const ResidualFn& f) {
    return parallel_enabled() ? sweep_parallel(n, f) : sweep_serial(n, f);
}

std::vector<double> residual_map(std::size_t n, const ResidualFn& f) {
    std::vector<double> out(n, 0.0);
#ifdef _OPENMP
    if (parallel_enabled()) {
        const int nthreads = effective_threads();
        std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic, 2) num_threads(nthreads)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return out;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

} // namespace modcurv
