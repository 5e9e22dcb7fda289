#pragma once

#include <array>
#include <span>
#include <vector>

#include "modcurv/quadrature.hpp"

namespace modcurv {

enum class EvalPath { series, quadrature, closed_form, reduction, continued_fraction };

struct EvalResult {
    double value = 0.0;
    double est_error = 0.0;
    long n_used = 0; // series terms or quadrature nodes
    EvalPath path = EvalPath::series;
};

struct GaussParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    void validate() const; // c must not be (close to) a non-positive integer
};

struct AppellF1Params {
    double a = 0.0;
    double b = 0.0;
    double b2 = 0.0; // the b' slot
    double c = 1.0;
    void validate() const;
};

struct AppellF2Params {
    double a = 0.0;
    double b = 0.0;
    double b2 = 0.0;
    double c = 1.0;
    double c2 = 1.0;
    void validate() const;
};

struct LauricellaParams {
    double a = 0.0;
    std::vector<double> alphas; // n <= 4
    double c = 1.0;
    void validate() const;
};

// Gauss 2F1 on the real axis, z < 1. Direct series for |z| <= 0.5 and for
// z in (0.5, 1) (all-positive terms for positive parameters); Pfaff
// transform for z < -0.5 (maps to a positive argument in (0,1)).
EvalResult gauss_2f1(const GaussParams& p, double z);

// Series-only evaluation (used to keep the two sides of transform residual
// checks on genuinely independent paths). Requires |z| < 1.
double gauss_2f1_series(const GaussParams& p, double z);

EvalResult kummer_1f1(double a, double b, double z);

// Appell F1: double series for |x|+|y| < 0.98, otherwise the 2-simplex
// integral representation (needs b, b' > 0 and c-b-b' > 0). x,y < 1.
EvalResult appell_f1(const AppellF1Params& p, double x, double y);
double appell_f1_series(const AppellF1Params& p, double x, double y);
double appell_f1_quad(const AppellF1Params& p, double x, double y, const QuadConfig& cfg = {});

// Appell F2: double series for |x|+|y| < 1 (0.98 guard), otherwise the
// unit-square integral (needs b,b'>0, c-b>0, c'-b'>0 and max(x,0)+max(y,0)<1).
EvalResult appell_f2(const AppellF2Params& p, double x, double y);
double appell_f2_series(const AppellF2Params& p, double x, double y);
double appell_f2_quad(const AppellF2Params& p, double x, double y, const QuadConfig& cfg = {});

// Lauricella F_D^(n), n <= 4. Series for sum|x_j| < 0.98; n-simplex
// quadrature fallback for n <= 3 (needs alphas > 0, c - sum(alphas) > 0).
EvalResult lauricella_fd(const LauricellaParams& p, std::span<const double> xs);
double lauricella_fd_series(const LauricellaParams& p, std::span<const double> xs);
double lauricella_fd_quad(const LauricellaParams& p, std::span<const double> xs,
                          const QuadConfig& cfg = {});

// The 15 pairwise residuals between the six one-parameter-shift expressions
// for z dF/dz (a+, b+, c-, a-, b-, c+). Order: lexicographic pairs.
std::array<double, 15> contiguous_residuals(const GaussParams& p, double z);

enum class Transform { pfaff_a, pfaff_b, euler };

// |LHS - RHS| of the selected transform, both sides by direct series.
double pfaff_euler_residual(const GaussParams& p, double z, Transform which);

// Residuals of the derivative-shift relations F(a+), F(b+), F(c-) with
// dF/dz taken in the parameter-shift form (ab/c) F(a+,b+,c+).
std::array<double, 3> gauss_diff_residuals(const GaussParams& p, double z);

// Residuals of the F1 differential system: the a+, b+, b'+ raising relations
// and the c+ lowering relation, partials from parameter-shifted series.
std::array<double, 4> f1_diff_residuals(const AppellF1Params& p, double x, double y);

// F1(a;1,1;c;x,y) as the divided difference [x,y](z 2F1(a,1;c;z));
// confluent fallback to the analytic derivative when |x-y| <= 1e-8.
double f1_divided_difference(double a, double c, double x, double y);

// F1(a;1,2;c;x,y) by the explicit four-term 2F1 combination.
double f1_c2_reduction(double a, double c, double x, double y);

// F1(a;1,2;c;x,y) = (c-1)/(a-1) [x,y,y](z 2F1(a-1,1;c-1;z)); stable at x ~ y.
double f1_one_two_dd(double a, double c, double x, double y);

// F2(q+1; a, p+1; b, p+2; x, y) via the finite 2F1 sum (p < q, |x|+|y| < 1).
double f2_to_2f1(int q, double a, int p, double b, double x, double y);

// 2F1(a,1;c;z) for positive integer c by descending c to the closed base
// case 2F1(a,1;1;z) = (1-z)^{-a}.
double symbolic_2f1_a1c(double a, int c, double z);

// Gauss continued fraction for 2F1(alpha+1,beta;gamma+1;z)/2F1(alpha,beta;gamma;z)
// (p.a = alpha, p.b = beta, p.c = gamma), backward recurrence at the given depth.
double gauss_cf_ratio(const GaussParams& p, double z, int depth);

// d/dz [2F1(a,b;c;z)] = (ab/c) 2F1(a+1,b+1;c+1;z)
double gauss_2f1_deriv(const GaussParams& p, double z);

} // namespace modcurv
