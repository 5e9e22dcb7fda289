#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace modcurv {

// Max-|residual| reduction over an index range. The OpenMP kernel and the
// serial reference must produce identical results for pure residual
// functions; ties break toward the smaller index.
struct SweepOutcome {
    double max_residual = 0.0;
    std::size_t argmax = 0;
};

using ResidualFn = std::function<double(std::size_t)>;

SweepOutcome sweep_serial(std::size_t n, const ResidualFn& f);
SweepOutcome sweep_parallel(std::size_t n, const ResidualFn& f);

// dispatches to the parallel kernel unless disabled
SweepOutcome sweep(std::size_t n, const ResidualFn& f);

// evaluates f over 0..n-1 into a vector (slot-per-index, so the parallel and
// serial paths are bitwise identical)
std::vector<double> residual_map(std::size_t n, const ResidualFn& f);

void set_parallel_enabled(bool on);
bool parallel_enabled();

// thread budget: min(hardware, MODCURV_THREADS if set)
int effective_threads();

} // namespace modcurv
