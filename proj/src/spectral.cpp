#include "modcurv/spectral.hpp"

#include <cmath>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"
#include "modcurv/hypergeo.hpp"

namespace modcurv {

namespace {

double scaled_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double f2f1(double a, double b, double c, double z) {
    return gauss_2f1(GaussParams{a, b, c}, z).value;
}

// K~ as a plain function of real index parameters (internal; derivative
// relations shift indices by one which stays in range).
double tilde_k_raw(double a, double b, double m, double u) {
    const double dt = a + b + m / 2.0 - 2.0;
    return std::exp(log_gamma(dt) - log_gamma(a + b)) * f2f1(dt, b, a + b, u);
}

// u-derivative of K~ through the parameter-shift derivative of 2F1
double tilde_k_raw_du(double a, double b, double m, double u) {
    const double dt = a + b + m / 2.0 - 2.0;
    return std::exp(log_gamma(dt) - log_gamma(a + b)) * dt * b / (a + b) *
           f2f1(dt + 1.0, b + 1.0, a + b + 1.0, u);
}

// F1(d; c, b; a+b+c; u, v) via the Prop-2.10 reductions when the middle
// parameters are (1,1) or (2,1)/(1,2), otherwise the series/quadrature path.
double f1_slot(double d, double pc, double pb, double gamma_q, double u, double v) {
    if (pc == 1.0 && pb == 1.0) return f1_divided_difference(d, gamma_q, u, v);
    if (pc == 1.0 && pb == 2.0) return f1_one_two_dd(d, gamma_q, u, v);
    if (pc == 2.0 && pb == 1.0) return f1_one_two_dd(d, gamma_q, v, u);
    return appell_f1(AppellF1Params{d, pc, pb, gamma_q}, u, v).value;
}

double tilde_h_raw(double a, double b, double c, double m, double u, double v) {
    const double dt = a + b + c + m / 2.0 - 2.0;
    return std::exp(log_gamma(dt) - log_gamma(a + b + c)) * f1_slot(dt, c, b, a + b + c, u, v);
}

// partials of H~ through the F1 raising relations
double tilde_h_raw_du(double a, double b, double c, double m, double u, double v) {
    const double dt = a + b + c + m / 2.0 - 2.0;
    const double g = a + b + c;
    return std::exp(log_gamma(dt) - log_gamma(g)) * dt * c / g *
           f1_slot(dt + 1.0, c + 1.0, b, g + 1.0, u, v);
}

double tilde_h_raw_dv(double a, double b, double c, double m, double u, double v) {
    const double dt = a + b + c + m / 2.0 - 2.0;
    const double g = a + b + c;
    return std::exp(log_gamma(dt) - log_gamma(g)) * dt * b / g *
           f1_slot(dt + 1.0, c, b + 1.0, g + 1.0, u, v);
}

// Guard bands around the removable singularities: the elementary closed
// forms cancel to order 3 (K), 2..3 (H) and 4 (T) there, so double precision
// loses ~16-4*log10(1/h) digits; inside the band the hypergeometric
// combination (whose series at the locus is the Taylor expansion) is used.
constexpr double kGuardK = 0.02;
constexpr double kGuardH = 0.05;
constexpr double kGuardT = 0.06;

} // namespace

double SpectralIndex::d_tilde() const {
    return a + b + (c ? *c : 0) + m / 2.0 - 2.0;
}

void SpectralIndex::validate() const {
    if (a < 1 || b < 1 || (c && *c < 1))
        fail(errc::param_domain, "SpectralIndex: indices must be positive integers");
    if (!(m > 0.0)) fail(errc::param_domain, "SpectralIndex: m must be positive");
    if (!(d_tilde() > 0.0)) fail(errc::param_domain, "SpectralIndex: d~ must be positive");
}

double k_family(const SpectralIndex& idx, double y) {
    idx.validate();
    if (idx.c) fail(errc::param_domain, "k_family: two-index family only");
    if (!(y > 0.0)) fail(errc::param_domain, "k_family: y must be positive");
    return tilde_k_raw(idx.a, idx.b, idx.m, 1.0 - y);
}

double h_family(const SpectralIndex& idx, double y1, double y2) {
    idx.validate();
    if (!idx.c) fail(errc::param_domain, "h_family: needs the third index");
    if (!(y1 > 0.0) || !(y2 > 0.0)) fail(errc::param_domain, "h_family: y1,y2 must be positive");
    return tilde_h_raw(idx.a, idx.b, *idx.c, idx.m, 1.0 - y1 * y2, 1.0 - y1);
}

double tilde_k(const SpectralIndex& idx, double u) {
    idx.validate();
    if (idx.c) fail(errc::param_domain, "tilde_k: two-index family only");
    if (!(u < 1.0)) fail(errc::arg_domain, "tilde_k: u < 1 required");
    return tilde_k_raw(idx.a, idx.b, idx.m, u);
}

double tilde_h(const SpectralIndex& idx, double u, double v) {
    idx.validate();
    if (!idx.c) fail(errc::param_domain, "tilde_h: needs the third index");
    if (!(u < 1.0) || !(v < 1.0)) fail(errc::arg_domain, "tilde_h: u,v < 1 required");
    return tilde_h_raw(idx.a, idx.b, *idx.c, idx.m, u, v);
}

double KShiftResiduals::max() const {
    return std::max({dim_shift, b_shift, ab_shift, recurrence});
}

KShiftResiduals k_shift_residuals(const SpectralIndex& idx, double u) {
    idx.validate();
    if (!(u > -1.0) || !(u < 1.0)) fail(errc::arg_domain, "k_shift_residuals: u in (-1,1)");
    const double a = idx.a, b = idx.b, m = idx.m;
    const double dt = a + b + m / 2.0 - 2.0;
    KShiftResiduals r{};
    r.dim_shift = scaled_gap(tilde_k_raw(a, b, m + 2.0, u),
                             dt * tilde_k_raw(a, b, m, u) + u * tilde_k_raw_du(a, b, m, u));
    r.b_shift = scaled_gap(tilde_k_raw(a, b + 1.0, m, u), tilde_k_raw_du(a, b, m, u) / b);
    r.ab_shift = scaled_gap(tilde_k_raw(a, b + 1.0, m, u),
                            tilde_k_raw(a + 1.0, b, m, u) +
                                u / b * tilde_k_raw_du(a + 1.0, b, m, u));
    r.recurrence = scaled_gap(tilde_k_raw(a, b, m + 2.0, u),
                              a * tilde_k_raw(a + 1.0, b, m, u) + b * tilde_k_raw(a, b + 1.0, m, u));
    return r;
}

double HShiftResiduals::max() const {
    return std::max({dim_shift, b_shift, c_shift, recurrence});
}

HShiftResiduals h_shift_residuals(const SpectralIndex& idx, double u, double v) {
    idx.validate();
    if (!idx.c) fail(errc::param_domain, "h_shift_residuals: needs the third index");
    if (!(u > -1.0) || !(u < 1.0) || !(v > -1.0) || !(v < 1.0))
        fail(errc::arg_domain, "h_shift_residuals: u,v in (-1,1)");
    const double a = idx.a, b = idx.b, c = *idx.c, m = idx.m;
    const double dt = a + b + c + m / 2.0 - 2.0;
    HShiftResiduals r{};
    r.dim_shift = scaled_gap(tilde_h_raw(a, b, c, m + 2.0, u, v),
                             dt * tilde_h_raw(a, b, c, m, u, v) +
                                 u * tilde_h_raw_du(a, b, c, m, u, v) +
                                 v * tilde_h_raw_dv(a, b, c, m, u, v));
    r.b_shift = scaled_gap(tilde_h_raw(a, b + 1.0, c, m, u, v),
                           tilde_h_raw_dv(a, b, c, m, u, v) / b);
    r.c_shift = scaled_gap(tilde_h_raw(a, b, c + 1.0, m, u, v),
                           tilde_h_raw_du(a, b, c, m, u, v) / c);
    r.recurrence = scaled_gap(tilde_h_raw(a, b, c, m + 2.0, u, v),
                              a * tilde_h_raw(a + 1.0, b, c, m, u, v) +
                                  b * tilde_h_raw(a, b + 1.0, c, m, u, v) +
                                  c * tilde_h_raw(a, b, c + 1.0, m, u, v));
    return r;
}

double jet_k(const SpectralIndex& idx, double u) {
    idx.validate();
    if (idx.c) fail(errc::param_domain, "jet_k: two-index family only");
    const double m = idx.m;
    if (m < 4.0 || std::abs(m - 2.0 * std::round(m / 2.0)) > 1e-12)
        fail(errc::param_domain, "jet_k: m must be even and >= 4");
    const int jm = static_cast<int>(std::lround((m - 4.0) / 2.0));
    const double a = idx.a, b = idx.b;
    double sum = 0.0;
    for (int i = 0; i <= jm; ++i) {
        sum += binomial_fn(jm, i) * pochhammer(a, jm - i) * pochhammer(b, i) *
               std::pow(1.0 - u, -b - static_cast<double>(i));
    }
    return sum;
}

double jet_h(const SpectralIndex& idx, double u, double v) {
    idx.validate();
    if (!idx.c) fail(errc::param_domain, "jet_h: needs the third index");
    const double m = idx.m;
    if (m < 4.0 || std::abs(m - 2.0 * std::round(m / 2.0)) > 1e-12)
        fail(errc::param_domain, "jet_h: m must be even and >= 4");
    const int jm = static_cast<int>(std::lround((m - 4.0) / 2.0));
    const double a = idx.a, b = idx.b, c = *idx.c;
    double sum = 0.0;
    for (int i = 0; i <= jm; ++i) {
        for (int p = 0; p + i <= jm; ++p) {
            const int q = jm - i - p;
            const double multi = factorial_fn(jm) / (factorial_fn(i) * factorial_fn(p) * factorial_fn(q));
            sum += multi * pochhammer(a, i) * pochhammer(b, p) * pochhammer(c, q) *
                   std::pow(1.0 - u, -b - static_cast<double>(p)) *
                   std::pow(1.0 - v, -c - static_cast<double>(q));
        }
    }
    return sum;
}

double k_delta_at_one(double m) {
    return 2.0 * gamma_fn(m / 2.0 + 2.0) / (3.0 * m) - gamma_fn(m / 2.0 + 1.0) / 2.0;
}

double k_delta_hyper(double s, double m) {
    const double k31 = tilde_k_raw(3, 1, m, 1.0 - s);
    const double k21 = tilde_k_raw(2, 1, m, 1.0 - s);
    return 4.0 / m * k31 - k21;
}

double h_delta_hyper(double s, double t, double m) {
    const double u = 1.0 - s * t, v = 1.0 - s;
    const double g4 = gamma_fn(m / 2.0 + 2.0), g5 = gamma_fn(m / 2.0 + 3.0);
    const double f211 = f1_divided_difference(m / 2.0 + 2.0, 4.0, u, v);
    const double f311 = f1_divided_difference(m / 2.0 + 3.0, 5.0, u, v);
    const double f221 = f1_one_two_dd(m / 2.0 + 3.0, 5.0, u, v);
    return (2.0 * (m + 2.0) * g4 * f211 - 2.0 * g5 * f311 - s * g5 * f221) / (6.0 * m);
}

double t_delta_hyper(double s, double m) {
    // -K(1)(s^{-m/2}-1)/(s-1) + H(s,1/s) with the H-value through the
    // K-reduction H_{a,b,c}(u,1/u) = K_{a+c,b}(u)
    const double head = -k_delta_at_one(m) * power_divided_difference(s, -m / 2.0);
    const double hterm = (4.0 / m + 2.0) * tilde_k_raw(3, 1, m, 1.0 - s) -
                         4.0 * s / m * tilde_k_raw(3, 2, m, 1.0 - s) -
                         8.0 / m * tilde_k_raw(4, 1, m, 1.0 - s);
    return head + hterm;
}

namespace {

double k_delta_closed(double s, double m) {
    const double sm = std::pow(s, m / 2.0);
    const double num = -8.0 / sm * ((m * (s - 1.0) - 4.0 * s) * sm + s * (m * (s - 1.0) + 4.0)) *
                       gamma_fn(m / 2.0 + 2.0);
    const double den = (m - 2.0) * m * m * (m + 2.0) * std::pow(s - 1.0, 3);
    return num / den;
}

double h_delta_closed(double s, double t, double m) {
    const double st = s * t;
    const double pref = 2.0 / m * gamma_fn(m / 2.0 - 1.0) /
                        (std::pow(s - 1.0, 2) * std::pow(t - 1.0, 2) * std::pow(st - 1.0, 3));
    const double br =
        2.0 * std::pow(s, -m / 2.0) * std::pow(st - 1.0, 3) +
        2.0 * std::pow(t - 1.0, 2) *
            (0.5 * m * (s - 1.0) * (st - 1.0) + s * (1.0 - 2.0 * s) * t + 1.0) -
        2.0 * std::pow(s - 1.0, 2) * t * std::pow(st, -m / 2.0) *
            (0.5 * m * (t - 1.0) * (st - 1.0) + s * t * t + t - 2.0);
    return pref * br;
}

// bracket of the closed T form and its partials; w stands for s^a, a = m/2
double t_bracket(double s, double w, double a) {
    return -3.0 * a * a * std::pow(s - 1.0, 2) * (-1.0 + s + w * (1.0 + s)) +
           2.0 * a * (std::pow(s - 1.0, 3) + (s - 1.0) * w * (-2.0 + s * (7.0 + s))) +
           a * a * a * std::pow(s - 1.0, 3) * (w + 1.0) - 12.0 * s * s * (w - 1.0);
}

double t_bracket_ds(double s, double w, double a) {
    return -3.0 * a * a *
               (2.0 * (s - 1.0) * (-1.0 + s + w * (1.0 + s)) + std::pow(s - 1.0, 2) * (1.0 + w)) +
           2.0 * a * (3.0 * std::pow(s - 1.0, 2) + w * (-2.0 + s * (7.0 + s)) +
                      (s - 1.0) * w * (7.0 + 2.0 * s)) +
           3.0 * a * a * a * std::pow(s - 1.0, 2) * (w + 1.0) - 24.0 * s * (w - 1.0);
}

double t_bracket_dw(double s, double w, double a) {
    (void)w;
    return -3.0 * a * a * std::pow(s - 1.0, 2) * (1.0 + s) +
           2.0 * a * (s - 1.0) * (-2.0 + s * (7.0 + s)) + a * a * a * std::pow(s - 1.0, 3) -
           12.0 * s * s;
}

double t_delta_closed(double s, double m) {
    const double a = m / 2.0;
    const double w = std::pow(s, a);
    return gamma_fn(a - 1.0) / (6.0 * a) * std::pow(s - 1.0, -4) * std::pow(s, -a) *
           t_bracket(s, w, a);
}

void require_m_gt_2(double m, const char* who) {
    if (!(m > 2.0)) fail(errc::param_domain, std::string(who) + ": requires m > 2");
}

} // namespace

double k_delta(double s, double m) {
    if (!(s > 0.0)) fail(errc::param_domain, "k_delta: s must be positive");
    require_m_gt_2(m, "k_delta");
    if (std::abs(s - 1.0) < kGuardK) return k_delta_hyper(s, m);
    const double closed = k_delta_closed(s, m);
    const double hyper = k_delta_hyper(s, m);
    if (scaled_gap(closed, hyper) > 1e-6)
        fail(errc::internal_mismatch, "k_delta: closed form disagrees with the 2F1 combination");
    return closed;
}

double h_delta(double s, double t, double m) {
    if (!(s > 0.0) || !(t > 0.0)) fail(errc::param_domain, "h_delta: s,t must be positive");
    require_m_gt_2(m, "h_delta");
    if (std::abs(s - 1.0) < kGuardH || std::abs(t - 1.0) < kGuardH ||
        std::abs(s * t - 1.0) < kGuardH)
        return h_delta_hyper(s, t, m);
    const double closed = h_delta_closed(s, t, m);
    const double hyper = h_delta_hyper(s, t, m);
    if (scaled_gap(closed, hyper) > 1e-6)
        fail(errc::internal_mismatch, "h_delta: closed form disagrees with the F1 combination");
    return closed;
}

double t_delta(double s, double m) {
    if (!(s > 0.0)) fail(errc::param_domain, "t_delta: s must be positive");
    require_m_gt_2(m, "t_delta");
    if (std::abs(s - 1.0) < kGuardT) return t_delta_hyper(s, m);
    const double closed = t_delta_closed(s, m);
    const double hyper = t_delta_hyper(s, m);
    if (scaled_gap(closed, hyper) > 1e-6)
        fail(errc::internal_mismatch, "t_delta: closed form disagrees with the defining combination");
    return closed;
}

double t_delta_deriv(double s, double m) {
    if (!(s > 0.0)) fail(errc::param_domain, "t_delta_deriv: s must be positive");
    require_m_gt_2(m, "t_delta_deriv");
    const double a = m / 2.0;
    if (std::abs(s - 1.0) < kGuardT) {
        // derivative of the combination route: head term uses the series of
        // (s^j-1)/(s-1) around 1, K~ terms use 2F1 parameter-shift derivatives
        const double u = 1.0 - s;
        const double head = -k_delta_at_one(m) * power_divided_difference_deriv(s, -m / 2.0);
        const double k32 = tilde_k_raw(3, 2, m, u);
        const double dh = (4.0 / m + 2.0) * (-tilde_k_raw_du(3, 1, m, u)) -
                          4.0 / m * (k32 - s * tilde_k_raw_du(3, 2, m, u)) -
                          8.0 / m * (-tilde_k_raw_du(4, 1, m, u));
        return head + dh;
    }
    const double w = std::pow(s, a);
    const double pref = gamma_fn(a - 1.0) / (6.0 * a);
    const double p = t_bracket(s, w, a);
    const double dp = t_bracket_ds(s, w, a) + t_bracket_dw(s, w, a) * a * w / s;
    return pref * std::pow(s - 1.0, -4) * std::pow(s, -a) *
           (dp - 4.0 / (s - 1.0) * p - a / s * p);
}

double k_phi(double y, double m) { return std::sqrt(y) * k_delta(y, m); }

double h_phi(double y1, double y2, double m) { return std::sqrt(y1 * y2) * h_delta(y1, y2, m); }

double power_divided_difference(double w, double j) {
    if (!(w > 0.0)) fail(errc::arg_domain, "power_divided_difference: w must be positive");
    const double d = w - 1.0;
    if (std::abs(d) < 1e-12)
        return j * (1.0 + (j - 1.0) * d / 2.0);
    return std::expm1(j * std::log1p(d)) / d;
}

double power_divided_difference_deriv(double w, double j) {
    const double d = w - 1.0;
    if (std::abs(d) < 1e-5) {
        // series of (w^j-1)/(w-1) around w=1:
        // j + j(j-1)/2 d + j(j-1)(j-2)/6 d^2 + j(j-1)(j-2)(j-3)/24 d^3
        return j * (j - 1.0) / 2.0 + j * (j - 1.0) * (j - 2.0) / 3.0 * d +
               j * (j - 1.0) * (j - 2.0) * (j - 3.0) / 8.0 * d * d;
    }
    const double pd = power_divided_difference(w, j);
    return (j * std::pow(w, j - 1.0) - pd) / d;
}

} // namespace modcurv
