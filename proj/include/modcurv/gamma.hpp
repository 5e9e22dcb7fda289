#pragma once

#include <cmath>

namespace modcurv {

// Lanczos (g=7, 9 coefficients) log-gamma for x > 0; reflection below 0.5.
// Relative error of gamma_fn is < 1e-13 over the range used here (x up to ~35
// directly, larger values through log_gamma).
double log_gamma(double x);

double gamma_fn(double x);

// log|Gamma(x)| and the sign of Gamma(x); x may be negative non-integer.
struct signed_log_gamma {
    double log_abs;
    int sign; // 0 at poles
};
signed_log_gamma log_gamma_signed(double x);

// Pochhammer (q)_n = Gamma(q+n)/Gamma(q) for real q, integer n >= 0.
// Direct product for small n (handles zeros and sign changes exactly),
// signed log-gamma form for large n.
double pochhammer(double q, int n);

double factorial_fn(int n);
double binomial_fn(int n, int k);

inline bool near_nonpositive_integer(double x, double tol = 1e-12) {
    if (x > 0.5) return false;
    return std::abs(x - std::round(x)) < tol;
}

} // namespace modcurv
