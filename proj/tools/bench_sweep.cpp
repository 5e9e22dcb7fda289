// Times the serial reference sweep against the OpenMP kernel on a
// representative verification workload (H-family vs oracle residuals) and
// checks that both reductions agree exactly.

#include <chrono>
#include <cstdio>
#include <vector>

#include "modcurv/quadrature.hpp"
#include "modcurv/spectral.hpp"
#include "modcurv/sweep.hpp"

using namespace modcurv;

namespace {

struct Point {
    int a, b, c;
    double y1, y2, m;
};

double residual(const Point& p) {
    const double oracle = spectral_h_oracle(p.a, p.b, p.c, p.y1, p.y2, p.m);
    const double fam = h_family(SpectralIndex{p.a, p.b, p.c, p.m}, p.y1, p.y2);
    return std::abs(oracle - fam) / std::max(1.0, std::abs(fam));
}

double time_ms(const std::function<SweepOutcome()>& run, SweepOutcome& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = run();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    std::vector<Point> pts;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (double y1 : {0.4, 0.9, 1.7})
                    for (double y2 : {0.6, 1.3})
                        for (double m : {2.5, 3.0, 4.0, 5.0, 6.25, 8.0})
                            pts.push_back({a, b, c, y1, y2, m});
    std::printf("sweep size: %zu points, threads: %d\n", pts.size(), effective_threads());

    const ResidualFn f = [&](std::size_t i) { return residual(pts[i]); };
    SweepOutcome serial{}, parallel{};
    const double warm = residual(pts[0]);
    (void)warm;
    const double t_serial = time_ms([&] { return sweep_serial(pts.size(), f); }, serial);
    const double t_parallel = time_ms([&] { return sweep_parallel(pts.size(), f); }, parallel);

    std::printf("serial   : %8.1f ms  max_residual=%.3e at %zu\n", t_serial, serial.max_residual,
                serial.argmax);
    std::printf("parallel : %8.1f ms  max_residual=%.3e at %zu\n", t_parallel,
                parallel.max_residual, parallel.argmax);
    std::printf("speedup  : %.2fx\n", t_serial / t_parallel);

    const bool same = serial.max_residual == parallel.max_residual && serial.argmax == parallel.argmax;
    std::printf("reductions identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
