#include "modcurv/quadrature.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"

namespace modcurv {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = kPi / 2.0;

// Node of the [0,1] tanh-sinh map t(u) = e^{2x}/(e^{2x}+1), x = (pi/2) sinh u.
// weight = dt/du = pi * cosh(u) * t * (1-t). Both t and 1-t are kept so
// endpoint-singular factors can be formed without cancellation.
struct TsNode {
    double t;
    double omt;
    double w;
};

bool ts_node(double u, TsNode& out) {
    const double x = kHalfPi * std::sinh(u);
    const double e2 = std::exp(-2.0 * std::abs(x));
    const double tnear = e2 / (1.0 + e2);
    const double tfar = 1.0 / (1.0 + e2);
    if (x >= 0) {
        out.t = tfar;
        out.omt = tnear;
    } else {
        out.t = tnear;
        out.omt = tfar;
    }
    out.w = kPi * std::cosh(u) * tnear * tfar;
    return out.w > 1e-300 && tnear > 0.0;
}

struct TsLevel {
    std::vector<TsNode> nodes;
    double h;
};

constexpr int kMaxCachedLevel = 14;

const TsLevel& ts_level(int level) {
    static const std::vector<TsLevel> cache = [] {
        std::vector<TsLevel> c(kMaxCachedLevel + 1);
        for (int L = 0; L <= kMaxCachedLevel; ++L) {
            const double h = std::ldexp(1.0, -L);
            c[L].h = h;
            const long jmax = static_cast<long>(std::floor(6.9 / h));
            for (long j = -jmax; j <= jmax; ++j) {
                TsNode nd{};
                if (ts_node(h * static_cast<double>(j), nd)) c[L].nodes.push_back(nd);
            }
        }
        return c;
    }();
    return cache[static_cast<std::size_t>(level)];
}

double level_sum_01(const Integrand01& f, int level, long& evals) {
    const TsLevel& L = ts_level(level);
    double sum = 0.0;
    for (const TsNode& nd : L.nodes) {
        const double v = f(nd.t, nd.omt);
        if (std::isfinite(v)) {
            sum += nd.w * v;
            ++evals;
        }
    }
    return L.h * sum;
}

// fixed-level node table with the endpoint powers t^{ea-1} (1-t)^{eb-1}
// premultiplied into the weights; used for the inner dimensions of nested
// integrals so the outer integrand stays a smooth function of its argument.
struct PowRule {
    std::vector<double> t;
    std::vector<double> wp; // h * w * t^{ea-1} * (1-t)^{eb-1}
};

PowRule pow_rule(int level, double ea, double eb) {
    const TsLevel& L = ts_level(level);
    PowRule r;
    r.t.reserve(L.nodes.size());
    r.wp.reserve(L.nodes.size());
    for (const TsNode& nd : L.nodes) {
        const double wp =
            L.h * nd.w * std::pow(nd.t, ea - 1.0) * std::pow(nd.omt, eb - 1.0);
        if (wp > 0.0 && std::isfinite(wp)) {
            r.t.push_back(nd.t);
            r.wp.push_back(wp);
        }
    }
    return r;
}

constexpr int kInner2dLevel = 6;
constexpr int kMid3dLevel = 5;
constexpr int kInner3dLevel = 5;

using Kernel1 = std::function<double(double)>;

// \int_0^1 \int_0^{1-u} u^{ea-1} v^{eb-1} (1-u-v)^{ec-1} K(p + qu u + qv v) dv du
// via v = (1-u) w; inner w rule fixed, outer adaptive.
double simplex2_kernel(double ea, double eb, double ec, double p, double qu, double qv,
                       const Kernel1& K, const QuadConfig& cfg) {
    const PowRule inner = pow_rule(kInner2dLevel, eb, ec);
    auto integrand = [&](double u, double omu) {
        const double base = p + qu * u;
        const double scale = qv * omu;
        double s = 0.0;
        for (std::size_t j = 0; j < inner.t.size(); ++j)
            s += inner.wp[j] * K(base + scale * inner.t[j]);
        return std::pow(u, ea - 1.0) * std::pow(omu, eb + ec - 1.0) * s;
    };
    QuadResult res;
    double prev = level_sum_01(integrand, 1, res.n_evals);
    for (int level = 2; level <= cfg.max_levels; ++level) {
        const double cur = level_sum_01(integrand, level, res.n_evals);
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    fail(errc::quad_fail, "simplex2_kernel: level cap reached without convergence");
}

// \int_0^1\int_0^1 u^{ea-1}(1-u)^{eb-1} v^{ec-1}(1-v)^{ed-1} K(p + qu u + qv v)
double square2_kernel(double ea, double eb, double ec, double ed, double p, double qu, double qv,
                      const Kernel1& K, const QuadConfig& cfg) {
    const PowRule inner = pow_rule(kInner2dLevel, ec, ed);
    auto integrand = [&](double u, double omu) {
        const double base = p + qu * u;
        double s = 0.0;
        for (std::size_t j = 0; j < inner.t.size(); ++j)
            s += inner.wp[j] * K(base + qv * inner.t[j]);
        return std::pow(u, ea - 1.0) * std::pow(omu, eb - 1.0) * s;
    };
    QuadResult res;
    double prev = level_sum_01(integrand, 1, res.n_evals);
    for (int level = 2; level <= cfg.max_levels; ++level) {
        const double cur = level_sum_01(integrand, level, res.n_evals);
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    fail(errc::quad_fail, "square2_kernel: level cap reached without convergence");
}

// 3-simplex with kernel K(p + q1 u1 + q2 u2 + q3 u3), exponents
// u1^{e1-1} u2^{e2-1} u3^{e3-1} (1-u1-u2-u3)^{e0-1}; substitutions
// u2 = (1-u1) w2, u3 = (1-u1)(1-w2) w3.
double simplex3_kernel(double e0, double e1, double e2, double e3, double p, double q1, double q2,
                       double q3, const Kernel1& K, const QuadConfig& cfg) {
    const PowRule mid = pow_rule(kMid3dLevel, e2, e3 + e0);
    const PowRule inner = pow_rule(kInner3dLevel, e3, e0);
    auto integrand = [&](double u1, double om1) {
        const double base1 = p + q1 * u1;
        double s2 = 0.0;
        for (std::size_t j = 0; j < mid.t.size(); ++j) {
            const double w2 = mid.t[j];
            const double u2 = om1 * w2;
            const double rem = om1 * (1.0 - w2); // 1 - u1 - u2
            const double base2 = base1 + q2 * u2;
            double s3 = 0.0;
            for (std::size_t k = 0; k < inner.t.size(); ++k)
                s3 += inner.wp[k] * K(base2 + q3 * rem * inner.t[k]);
            s2 += mid.wp[j] * s3;
        }
        return std::pow(u1, e1 - 1.0) * std::pow(om1, e2 + e3 + e0 - 1.0) * s2;
    };
    QuadResult res;
    double prev = level_sum_01(integrand, 1, res.n_evals);
    const int cap = std::min(cfg.max_levels, 7);
    for (int level = 2; level <= cap; ++level) {
        const double cur = level_sum_01(integrand, level, res.n_evals);
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    fail(errc::quad_fail, "simplex3_kernel: level cap reached without convergence");
}

} // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) fail(errc::config_error, "tolerances must be positive");
    if (max_levels < 3 || max_levels > 14) fail(errc::config_error, "max_levels must be in [3,14]");
}

QuadResult tanh_sinh_01(const Integrand01& f, const QuadConfig& cfg) {
    cfg.validate();
    QuadResult res;
    double prev = level_sum_01(f, 1, res.n_evals);
    for (int level = 2; level <= cfg.max_levels; ++level) {
        const double cur = level_sum_01(f, level, res.n_evals);
        const double diff = std::abs(cur - prev);
        res.value = cur;
        res.est_error = diff;
        if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return res;
        prev = cur;
    }
    fail(errc::quad_fail, "tanh_sinh_01: level cap reached without convergence");
}

QuadResult tanh_sinh_interval(const std::function<double(double)>& f, double lo, double hi,
                              const QuadConfig& cfg) {
    const double len = hi - lo;
    QuadResult r = tanh_sinh_01([&](double t, double) { return f(lo + len * t); }, cfg);
    r.value *= len;
    r.est_error *= std::abs(len);
    return r;
}

QuadResult exp_sinh_0inf(const std::function<double(double)>& f, const QuadConfig& cfg) {
    cfg.validate();
    auto level_sum = [&](double h, long& evals) {
        double sum = 0.0;
        const long jmax = static_cast<long>(std::floor(5.0 / h));
        for (long j = -jmax; j <= jmax; ++j) {
            const double u = h * static_cast<double>(j);
            const double s = std::exp(kHalfPi * std::sinh(u));
            if (s == 0.0 || !std::isfinite(s)) continue;
            const double w = s * kHalfPi * std::cosh(u);
            const double v = f(s);
            if (std::isfinite(v)) {
                sum += w * v;
                ++evals;
            }
        }
        return h * sum;
    };
    QuadResult res;
    double h = 0.5;
    double prev = level_sum(h, res.n_evals);
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        const double cur = level_sum(h, res.n_evals);
        const double diff = std::abs(cur - prev);
        res.value = cur;
        res.est_error = diff;
        if (level >= 2 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return res;
        prev = cur;
    }
    fail(errc::quad_fail, "exp_sinh_0inf: level cap reached without convergence");
}

double contour_ab_rhs(double A, double B, double a, double b, const QuadConfig& cfg) {
    if (!(A > 0.0) || !(B > 0.0)) fail(errc::param_domain, "contour_ab_rhs: A,B must be positive");
    if (!(a > 0.0) || !(b > 0.0)) fail(errc::param_domain, "contour_ab_rhs: a,b must be positive");
    const double pref = std::exp(-log_gamma(a) - log_gamma(b));
    const QuadResult q = tanh_sinh_01(
        [&](double t, double omt) {
            return std::pow(omt, a - 1.0) * std::pow(t, b - 1.0) * std::exp(-(A - (A - B) * t));
        },
        cfg);
    return pref * q.value;
}

double contour_abc_rhs(double A, double B, double C, double a, double b, double c,
                       const QuadConfig& cfg) {
    if (!(A > 0.0) || !(B > 0.0) || !(C > 0.0))
        fail(errc::param_domain, "contour_abc_rhs: A,B,C must be positive");
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        fail(errc::param_domain, "contour_abc_rhs: a,b,c must be positive");
    const double pref = std::exp(-log_gamma(a) - log_gamma(b) - log_gamma(c));
    // kernel exp(-(A - (A-B)t - (A-C)u)) over the (t,u) simplex
    const double val = simplex2_kernel(b, c, a, -A, A - B, A - C,
                                       [](double x) { return std::exp(x); }, cfg);
    return pref * val;
}

double contour_abc_rhs_qmc(double A, double B, double C, double a, double b, double c,
                           long n_points) {
    auto halton = [](long idx, int base) {
        double f = 1.0, r = 0.0;
        while (idx > 0) {
            f /= base;
            r += f * static_cast<double>(idx % base);
            idx /= base;
        }
        return r;
    };
    const double pref = std::exp(-log_gamma(a) - log_gamma(b) - log_gamma(c));
    double sum = 0.0;
    for (long i = 1; i <= n_points; ++i) {
        double t = halton(i, 2);
        double u = halton(i, 3);
        if (t + u > 1.0) {
            t = 1.0 - t;
            u = 1.0 - u;
        }
        const double rest = 1.0 - t - u;
        sum += std::pow(rest, a - 1.0) * std::pow(t, b - 1.0) * std::pow(u, c - 1.0) *
               std::exp(-(A - (A - B) * t - (A - C) * u));
    }
    return pref * 0.5 * sum / static_cast<double>(n_points);
}

double oscillatory_lhs_ab(double A, double B, int a, int b, double R) {
    if (a < 1 || b < 1) fail(errc::param_domain, "oscillatory_lhs_ab: orders must be positive");
    if (a + b < 2) fail(errc::param_domain, "oscillatory_lhs_ab: need a+b >= 2 for decay");
    if (!(R > 1.0)) fail(errc::param_domain, "oscillatory_lhs_ab: truncation radius too small");
    using cplx = std::complex<double>;
    auto ipow = [](cplx z, int n) {
        cplx r{1.0, 0.0};
        for (int i = 0; i < n; ++i) r *= z;
        return r;
    };
    // conjugate symmetry: (1/2pi) int_-R^R = (1/pi) Re int_0^R.
    // 16-point Gauss-Legendre panels, ~8 panels per oscillation period.
    static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double panel = kPi / 4.0;
    const long n_panels = static_cast<long>(std::ceil(R / panel));
    double acc = 0.0;
    for (long p = 0; p < n_panels; ++p) {
        const double lo = panel * static_cast<double>(p);
        const double hi = std::min(lo + panel, R);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double s = 0.0;
        for (int k = 0; k < 8; ++k) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                const double x = mid + sgn * half * gx[k];
                const cplx den = ipow(cplx{A, -x}, a) * ipow(cplx{B, -x}, b);
                const cplx val = std::exp(cplx{0.0, -x}) / den;
                s += gw[k] * val.real();
            }
        }
        acc += half * s;
    }
    return acc / kPi;
}

double mellin_power(double A, double a, const QuadConfig& cfg) {
    if (!(A > 0.0) || !(a > 0.0)) fail(errc::param_domain, "mellin_power: A,a must be positive");
    const QuadResult q =
        exp_sinh_0inf([&](double s) { return std::pow(s, a - 1.0) * std::exp(-s * A); }, cfg);
    return q.value * std::exp(-log_gamma(a));
}

double spectral_k_oracle(int a, int b, double y, double m, const QuadConfig& cfg) {
    if (a < 1 || b < 1) fail(errc::param_domain, "spectral_k_oracle: indices must be positive");
    if (!(y > 0.0) || !(m > 0.0)) fail(errc::param_domain, "spectral_k_oracle: need y>0, m>0");
    const double d = a + b - 2 + (m - 2.0) / 2.0;
    const double lpref = log_gamma(d + 1.0) - log_gamma(static_cast<double>(a)) -
                         log_gamma(static_cast<double>(b));
    double integral;
    if (d > 20.0 && y < 1.0) {
        // kernel peaks sharply at t=1; substitute 1-t = e^{-v}
        const double vmax = 50.0 + 5.0 * std::log1p(d);
        const QuadResult q = tanh_sinh_01(
            [&](double w, double) {
                const double v = vmax * w;
                const double omt = std::exp(-v);
                const double t = -std::expm1(-v);
                return vmax * omt * std::pow(omt, a - 1.0) * std::pow(t, b - 1.0) *
                       std::pow(y + omt * (1.0 - y), -(d + 1.0));
            },
            cfg);
        integral = q.value;
    } else {
        const QuadResult q = tanh_sinh_01(
            [&](double t, double omt) {
                return std::pow(omt, a - 1.0) * std::pow(t, b - 1.0) *
                       std::pow(1.0 - t * (1.0 - y), -(d + 1.0));
            },
            cfg);
        integral = q.value;
    }
    return std::exp(lpref) * integral;
}

double spectral_h_oracle(int a, int b, int c, double y1, double y2, double m,
                         const QuadConfig& cfg) {
    if (a < 1 || b < 1 || c < 1)
        fail(errc::param_domain, "spectral_h_oracle: indices must be positive");
    if (!(y1 > 0.0) || !(y2 > 0.0) || !(m > 0.0))
        fail(errc::param_domain, "spectral_h_oracle: need y1,y2>0, m>0");
    const double d = a + b + c - 2 + (m - 2.0) / 2.0;
    const double z1 = 1.0 - y1;
    const double z2 = 1.0 - y1 * y2;
    const double lpref = log_gamma(d + 1.0) - log_gamma(static_cast<double>(a)) -
                         log_gamma(static_cast<double>(b)) - log_gamma(static_cast<double>(c));
    const double dp1 = d + 1.0;
    const double val = simplex2_kernel(b, c, a, 1.0, -z1, -z2,
                                       [dp1](double x) { return std::pow(x, -dp1); }, cfg);
    return std::exp(lpref) * val;
}

double spectral_n_oracle(std::span<const int> alphas, std::span<const double> ys, double m,
                         const QuadConfig& cfg) {
    const std::size_t n = ys.size();
    if (n < 1 || n > 3) fail(errc::param_domain, "spectral_n_oracle: n must be 1..3");
    if (alphas.size() != n + 1)
        fail(errc::param_domain, "spectral_n_oracle: need n+1 exponents for n arguments");
    for (int al : alphas)
        if (al < 1) fail(errc::param_domain, "spectral_n_oracle: exponents must be positive");
    for (double y : ys)
        if (!(y > 0.0)) fail(errc::param_domain, "spectral_n_oracle: arguments must be positive");
    if (n == 1) return spectral_k_oracle(alphas[0], alphas[1], ys[0], m, cfg);
    if (n == 2) return spectral_h_oracle(alphas[0], alphas[1], alphas[2], ys[0], ys[1], m, cfg);

    double dsum = 0.0;
    double lpref = 0.0;
    for (int al : alphas) {
        dsum += al;
        lpref -= log_gamma(static_cast<double>(al));
    }
    const double d = dsum - 2.0 + (m - 2.0) / 2.0;
    lpref += log_gamma(d + 1.0);
    const double z1 = 1.0 - ys[0];
    const double z2 = 1.0 - ys[0] * ys[1];
    const double z3 = 1.0 - ys[0] * ys[1] * ys[2];
    const double dp1 = d + 1.0;
    const double val =
        simplex3_kernel(alphas[0], alphas[1], alphas[2], alphas[3], 1.0, -z1, -z2, -z3,
                        [dp1](double x) { return std::pow(x, -dp1); }, cfg);
    return std::exp(lpref) * val;
}

// nested rules shared with the hypergeometric quadrature fallbacks
double detail_simplex2(double ea, double eb, double ec, double p, double qu, double qv,
                       const std::function<double(double)>& K, const QuadConfig& cfg) {
    return simplex2_kernel(ea, eb, ec, p, qu, qv, K, cfg);
}

double detail_square2(double ea, double eb, double ec, double ed, double p, double qu, double qv,
                      const std::function<double(double)>& K, const QuadConfig& cfg) {
    return square2_kernel(ea, eb, ec, ed, p, qu, qv, K, cfg);
}

double detail_simplex3(double e0, double e1, double e2, double e3, double p, double q1, double q2,
                       double q3, const std::function<double(double)>& K, const QuadConfig& cfg) {
    return simplex3_kernel(e0, e1, e2, e3, p, q1, q2, q3, K, cfg);
}

} // namespace modcurv
