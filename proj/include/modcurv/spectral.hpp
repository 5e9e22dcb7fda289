#pragma once

#include <optional>

namespace modcurv {

// Index (a,b[,c], m) of the K/H spectral families; d~ = a+b(+c)+m/2-2.
struct SpectralIndex {
    int a = 1;
    int b = 1;
    std::optional<int> c;
    double m = 2.0;

    double d_tilde() const;
    void validate() const; // positive indices, m > 0, d~ > 0
};

// K_{a,b}(y;m) = Gamma(d+1)/Gamma(a+b) 2F1(d+1, b; a+b; 1-y),
// d = a+b-2+(m-2)/2
double k_family(const SpectralIndex& idx, double y);

// H_{a,b,c}(y1,y2;m) = Gamma(d+1)/Gamma(a+b+c) F1(d+1; c, b; a+b+c; 1-y1*y2, 1-y1)
double h_family(const SpectralIndex& idx, double y1, double y2);

// tilde variants with argument convention u = 1-y
double tilde_k(const SpectralIndex& idx, double u);
double tilde_h(const SpectralIndex& idx, double u, double v);

// Residuals (scaled by max(1,|lhs|,|rhs|)) of the one-variable relations:
//   dim_shift:  K~_{a,b}(u;m+2) = (d~ + u d/du) K~_{a,b}(u;m)
//   b_shift:    K~_{a,b+1}(u;m) = (1/b) d/du K~_{a,b}(u;m)
//   ab_shift:   K~_{a,b+1}(u;m) = (1 + (1/b) u d/du) K~_{a+1,b}(u;m)
//   recurrence: K~_{a,b}(u;m+2) = a K~_{a+1,b}(u;m) + b K~_{a,b+1}(u;m)
// derivatives are evaluated through parameter shifts, never finite differences.
struct KShiftResiduals {
    double dim_shift, b_shift, ab_shift, recurrence;
    double max() const;
};
KShiftResiduals k_shift_residuals(const SpectralIndex& idx, double u);

struct HShiftResiduals {
    double dim_shift, b_shift, c_shift, recurrence;
    double max() const;
};
HShiftResiduals h_shift_residuals(const SpectralIndex& idx, double u, double v);

// Even-dimension jets: j_m = (m-4)/2, m even >= 4;
// K~_{a,b}(u;m) = d^{j_m}/dz^{j_m} |_{z=0} (1-z)^{-a} (1-u-z)^{-b}
double jet_k(const SpectralIndex& idx, double u);
double jet_h(const SpectralIndex& idx, double u, double v);

// Spectral functions of the b2 coefficient for Delta_k = k Delta, m > 2.
// Closed elementary forms, cross-checked against the hypergeometric
// combinations; evaluation switches to the combination near removable
// singularities (|s-1|, |t-1|, |st-1| < 1e-4).
double k_delta(double s, double m);
double h_delta(double s, double t, double m);
double t_delta(double s, double m);

// hypergeometric-combination routes (also used as the internal cross-check)
double k_delta_hyper(double s, double m);
double h_delta_hyper(double s, double t, double m);
double t_delta_hyper(double s, double m);

// K_{Delta_k}(1;m) = 2 Gamma(m/2+2)/(3m) - Gamma(m/2+1)/2
double k_delta_at_one(double m);

// analytic derivative of t_delta in s
double t_delta_deriv(double s, double m);

// sqrt-prefactor variants: K_phi = sqrt(y) K_delta, H_phi = sqrt(y1 y2) H_delta
double k_phi(double y, double m);
double h_phi(double y1, double y2, double m);

// (w^j - 1)/(w - 1) with the removable singularity at w=1 handled
double power_divided_difference(double w, double j);
double power_divided_difference_deriv(double w, double j);

} // namespace modcurv
