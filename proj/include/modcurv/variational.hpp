#pragma once

#include <functional>
#include <span>
#include <vector>

#include "modcurv/report.hpp"

namespace modcurv {

// Evaluatable real function of one positive real variable, with an optional
// analytic derivative (5-point stencil fallback otherwise).
struct ScalarFn {
    std::function<double(double)> f;
    std::function<double(double)> df; // may be empty

    double operator()(double u) const { return f(u); }
    bool has_deriv() const { return static_cast<bool>(df); }
    double deriv(double u) const;
};

// [x,y](T) = (T(x)-T(y))/(x-y); confluent fallback to T'((x+y)/2) when
// |x-y| < 1e-8.
double divided_difference(const ScalarFn& T, double x, double y);

// D(T)(y1,y2) = (T(y1 y2) - T(y1))/(y2 - 1); limit y1 T'(y1) at y2 = 1.
double d_op(const ScalarFn& T, double y1, double y2);

// I(T;j)(u) = u^j T(1/u)
ScalarFn inversion_op(const ScalarFn& T, double j);

// (I1+I2)(T;j)(u) = -T(u) - u^j T(1/u)
double op_I_sum(const ScalarFn& T, double j, double u);

// II^(which)(T;j)(u,v), which in 1..4; removable singularities at
// u=1, v=1, uv=1 are evaluated as limits.
double op_II(const ScalarFn& T, double j, double u, double v, int which);
double op_II_sum(const ScalarFn& T, double j, double u, double v);

// T_{Delta_phi}(.;m) as a ScalarFn with analytic derivative
ScalarFn t_delta_fn(double m);

struct Thm410Options {
    double u0 = 2.0;          // reference point for the scale fit
    double rel_tol = 1e-7;    // argument-independence of the fitted constant
    double exclusion = 1e-3;  // distance kept from singular loci
    double degenerate_floor = 1e-10;
};

// Fits one scale constant c with T = T_{Delta_phi} and j~ = -m/2-1, then
// checks K_delta = c * sum(I) and H_delta = c * sum(II) on the grids with the
// same c. Returns the K-relation and H-relation reports (shared constants:
// c_fit, candidate_1, candidate_(2-m)/2; degenerate=1 when both sides vanish
// identically, as happens at m=4).
std::vector<RelationReport> verify_theorem_4_10(double m, std::span<const double> grid_u,
                                                std::span<const double> grid_v,
                                                const Thm410Options& opt = {});

} // namespace modcurv
