#pragma once

#include <functional>
#include <span>

namespace modcurv {

struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_levels = 12;          // tanh-sinh refinement levels, in [3,14]
    double truncation_radius = 1e4; // oscillatory line integral
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    long n_evals = 0;
};

// Integrand over (0,1); receives t and 1-t so endpoint-singular factors
// like t^{b-1}, (1-t)^{a-1} can be formed without cancellation.
using Integrand01 = std::function<double(double t, double one_minus_t)>;

// Tanh-sinh (double-exponential) rule on [0,1], level doubling until the
// estimate settles below max(abs_tol, rel_tol * |value|).
QuadResult tanh_sinh_01(const Integrand01& f, const QuadConfig& cfg = {});

// Same rule on [0, upper] for a smooth/decaying integrand (plain argument).
QuadResult tanh_sinh_interval(const std::function<double(double)>& f, double lo, double hi,
                              const QuadConfig& cfg = {});

// Exp-sinh rule on (0, inf) for integrands decaying at both ends.
QuadResult exp_sinh_0inf(const std::function<double(double)>& f, const QuadConfig& cfg = {});

// ---- oracle integrals (Lemma 2.1 family, positive-order convention) ----

// (1/(G(a)G(b))) \int_0^1 (1-t)^{a-1} t^{b-1} e^{-(A-(A-B)t)} dt
double contour_ab_rhs(double A, double B, double a, double b, const QuadConfig& cfg = {});

// 2-simplex version with exponents a,b,c and shifts (A-B)t, (A-C)u.
double contour_abc_rhs(double A, double B, double C, double a, double b, double c,
                       const QuadConfig& cfg = {});

// Quasi-Monte-Carlo (Halton) evaluation of the same 2-simplex integral;
// an independent cross-check route, accuracy ~1e-6 at n ~ 4e6.
double contour_abc_rhs_qmc(double A, double B, double C, double a, double b, double c,
                           long n_points);

// Truncated real-axis evaluation of
//   (2*pi)^-1 \int_-R^R e^{-ix} (A-ix)^{-a} (B-ix)^{-b} dx ,
// a,b positive integers, a+b >= 2. Truncation error is O(R^{1-(a+b)});
// documented accuracy only ~1e-3..1e-4.
double oscillatory_lhs_ab(double A, double B, int a, int b, double R);

// (1/Gamma(a)) \int_0^inf s^{a-1} e^{-sA} ds  (equals A^-a)
double mellin_power(double A, double a, const QuadConfig& cfg = {});

// ---- scalar-spectrum spectral-family oracles ----

// Gamma(d+1)/(G(a)G(b)) \int_0^1 (1-t)^{a-1} t^{b-1} (1-t(1-y))^{-(d+1)} dt,
// d = a+b-2+(m-2)/2. Large-d concentration at t=1 (y<1) is handled by an
// exponential substitution.
double spectral_k_oracle(int a, int b, double y, double m, const QuadConfig& cfg = {});

// Gamma(d+1)/(G(a)G(b)G(c)) * 2-simplex integral with kernel
// (1-t-u)^{a-1} t^{b-1} u^{c-1} (1 - t(1-y1) - u(1-y1*y2))^{-(d+1)},
// d = a+b+c-2+(m-2)/2.
double spectral_h_oracle(int a, int b, int c, double y1, double y2, double m,
                         const QuadConfig& cfg = {});

// n-variable version (n = ys.size() <= 3, alphas.size() == n+1):
// kernel (1-sum u_j)^{alpha0-1} prod u_j^{alpha_j-1} (1 - sum z_j u_j)^{-(d+1)}
// with z_j = 1 - y_1...y_j and d = sum(alpha)-2+(m-2)/2.
double spectral_n_oracle(std::span<const int> alphas, std::span<const double> ys, double m,
                         const QuadConfig& cfg = {});

// Nested double-exponential rules with endpoint powers folded into cached
// inner node tables (adaptive outer dimension, fixed inner levels):
//   simplex2: \int\int_{u+v<=1} u^{ea-1} v^{eb-1} (1-u-v)^{ec-1} K(p+qu*u+qv*v)
//   square2:  \int\int_{[0,1]^2} u^{ea-1}(1-u)^{eb-1} v^{ec-1}(1-v)^{ed-1} K(...)
//   simplex3: the 3-simplex analogue with exponent e0 on (1-u1-u2-u3)
double detail_simplex2(double ea, double eb, double ec, double p, double qu, double qv,
                       const std::function<double(double)>& K, const QuadConfig& cfg = {});
double detail_square2(double ea, double eb, double ec, double ed, double p, double qu, double qv,
                      const std::function<double(double)>& K, const QuadConfig& cfg = {});
double detail_simplex3(double e0, double e1, double e2, double e3, double p, double q1, double q2,
                       double q3, const std::function<double(double)>& K,
                       const QuadConfig& cfg = {});

} // namespace modcurv
