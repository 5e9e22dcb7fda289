#include "modcurv/hypergeo.hpp"

#include <cmath>
#include <cstdlib>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"

namespace modcurv {

namespace {

constexpr long kMaxTermsSingle = 100000;
constexpr long kMaxTermsPerIndex = 4000;
constexpr double kTermStop = 1e-16; // |term| < kTermStop * |sum|, 3 consecutive

bool is_nonpositive_integer(double x) { return near_nonpositive_integer(x); }

// Geometric tail bound for a series with term ratio ~r.
double tail_bound(double last_term, double ratio) {
    const double r = std::min(std::abs(ratio), 0.999);
    return std::abs(last_term) * r / (1.0 - r);
}

} // namespace

void GaussParams::validate() const {
    if (is_nonpositive_integer(c)) fail(errc::param_domain, "2F1: c is a non-positive integer");
}

void AppellF1Params::validate() const {
    if (is_nonpositive_integer(c)) fail(errc::param_domain, "F1: c is a non-positive integer");
}

void AppellF2Params::validate() const {
    if (is_nonpositive_integer(c) || is_nonpositive_integer(c2))
        fail(errc::param_domain, "F2: c or c' is a non-positive integer");
}

void LauricellaParams::validate() const {
    if (alphas.empty() || alphas.size() > 4)
        fail(errc::param_domain, "F_D: need 1 <= n <= 4 exponents");
    if (is_nonpositive_integer(c)) fail(errc::param_domain, "F_D: c is a non-positive integer");
}

double gauss_2f1_series(const GaussParams& p, double z) {
    p.validate();
    if (z == 0.0) return 1.0;
    if (!(std::abs(z) < 1.0)) fail(errc::arg_domain, "2F1 series: |z| must be < 1");
    double term = 1.0, sum = 1.0;
    int small_streak = 0;
    for (long n = 0; n < kMaxTermsSingle; ++n) {
        const double dn = static_cast<double>(n);
        term *= (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum; // terminating (polynomial) case
        if (std::abs(term) < kTermStop * std::abs(sum)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    fail(errc::no_convergence, "2F1 series: term cap reached");
}

EvalResult gauss_2f1(const GaussParams& p, double z) {
    p.validate();
    if (!(z < 1.0)) fail(errc::arg_domain, "2F1: requires z < 1 on the real axis");
    EvalResult res;
    if (z == 0.0) {
        res.value = 1.0;
        res.n_used = 1;
        return res;
    }
    if (z <= -0.5) {
        // Pfaff (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)): argument lands in (1/3,1)
        // with all-positive terms for the parameter ranges used here.
        const double w = z / (z - 1.0);
        const GaussParams q{p.a, p.c - p.b, p.c};
        const double f = gauss_2f1_series(q, w);
        res.value = std::pow(1.0 - z, -p.a) * f;
        res.est_error = 1e-14 * std::abs(res.value);
        res.path = EvalPath::reduction;
        return res;
    }
    // direct series; term counting for est_error
    double term = 1.0, sum = 1.0, ratio = 0.0;
    long used = 1;
    int small_streak = 0;
    for (long n = 0; n < kMaxTermsSingle; ++n) {
        const double dn = static_cast<double>(n);
        const double mult = (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * z;
        term *= mult;
        ratio = mult;
        sum += term;
        ++used;
        if (term == 0.0) break;
        if (std::abs(term) < kTermStop * std::abs(sum)) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
        if (n + 1 == kMaxTermsSingle) fail(errc::no_convergence, "2F1: term cap reached");
    }
    res.value = sum;
    res.est_error = tail_bound(term, ratio) + static_cast<double>(used) * 1e-18 * std::abs(sum);
    res.n_used = used;
    res.path = EvalPath::series;
    return res;
}

double gauss_2f1_deriv(const GaussParams& p, double z) {
    const GaussParams q{p.a + 1.0, p.b + 1.0, p.c + 1.0};
    return p.a * p.b / p.c * gauss_2f1(q, z).value;
}

EvalResult kummer_1f1(double a, double b, double z) {
    if (is_nonpositive_integer(b)) fail(errc::param_domain, "1F1: b is a non-positive integer");
    EvalResult res;
    double term = 1.0, sum = 1.0, ratio = 0.0;
    int small_streak = 0;
    for (long n = 0; n < kMaxTermsSingle; ++n) {
        const double dn = static_cast<double>(n);
        const double mult = (a + dn) / ((b + dn) * (dn + 1.0)) * z;
        term *= mult;
        ratio = mult;
        sum += term;
        ++res.n_used;
        if (term == 0.0) break;
        if (std::abs(term) < kTermStop * std::abs(sum)) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
        if (n + 1 == kMaxTermsSingle) fail(errc::no_convergence, "1F1: term cap reached");
    }
    res.value = sum;
    res.est_error = tail_bound(term, ratio) + static_cast<double>(res.n_used) * 1e-18 * std::abs(sum);
    res.path = EvalPath::series;
    return res;
}

double appell_f1_series(const AppellF1Params& p, double x, double y) {
    p.validate();
    if (!(std::abs(x) + std::abs(y) < 1.0))
        fail(errc::arg_domain, "F1 series: |x|+|y| must be < 1");
    double row_head = 1.0; // C(m,0)
    double total = 0.0;
    int small_rows = 0;
    for (long mm = 0; mm < kMaxTermsPerIndex; ++mm) {
        const double dm = static_cast<double>(mm);
        double term = row_head, row = row_head;
        int small_streak = 0;
        for (long n = 0; n < kMaxTermsPerIndex; ++n) {
            const double dn = static_cast<double>(n);
            term *= (p.a + dm + dn) * (p.b2 + dn) / ((p.c + dm + dn) * (dn + 1.0)) * y;
            row += term;
            if (term == 0.0) break;
            if (std::abs(term) < kTermStop * std::max(std::abs(row), 1e-300)) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
            if (n + 1 == kMaxTermsPerIndex) fail(errc::no_convergence, "F1 series: inner cap");
        }
        total += row;
        if (std::abs(row) < kTermStop * std::abs(total)) {
            if (++small_rows >= 3) return total;
        } else {
            small_rows = 0;
        }
        row_head *= (p.a + dm) * (p.b + dm) / ((p.c + dm) * (dm + 1.0)) * x;
        if (row_head == 0.0 && mm > 0) return total;
    }
    fail(errc::no_convergence, "F1 series: row cap reached");
}

double appell_f1_quad(const AppellF1Params& p, double x, double y, const QuadConfig& cfg) {
    p.validate();
    if (!(p.b > 0.0) || !(p.b2 > 0.0) || !(p.c - p.b - p.b2 > 0.0))
        fail(errc::param_domain, "F1 integral: needs b,b' > 0 and c-b-b' > 0");
    if (!(x < 1.0) || !(y < 1.0)) fail(errc::arg_domain, "F1 integral: needs x,y < 1");
    const double lpref = log_gamma(p.c) - log_gamma(p.b) - log_gamma(p.b2) -
                         log_gamma(p.c - p.b - p.b2);
    const double a = p.a;
    const double val = detail_simplex2(p.b, p.b2, p.c - p.b - p.b2, 1.0, -x, -y,
                                       [a](double w) { return std::pow(w, -a); }, cfg);
    return std::exp(lpref) * val;
}

EvalResult appell_f1(const AppellF1Params& p, double x, double y) {
    p.validate();
    if (!(x < 1.0) || !(y < 1.0)) fail(errc::arg_domain, "F1: evaluation needs x,y < 1");
    EvalResult res;
    if (std::abs(x) + std::abs(y) < 0.98) {
        res.value = appell_f1_series(p, x, y);
        res.est_error = 1e-13 * std::abs(res.value);
        res.path = EvalPath::series;
        return res;
    }
    res.value = appell_f1_quad(p, x, y);
    res.est_error = 1e-11 * std::abs(res.value);
    res.path = EvalPath::quadrature;
    return res;
}

double appell_f2_series(const AppellF2Params& p, double x, double y) {
    p.validate();
    if (!(std::abs(x) + std::abs(y) < 1.0))
        fail(errc::arg_domain, "F2 series: |x|+|y| must be < 1");
    double row_head = 1.0;
    double total = 0.0;
    int small_rows = 0;
    for (long mm = 0; mm < kMaxTermsPerIndex; ++mm) {
        const double dm = static_cast<double>(mm);
        double term = row_head, row = row_head;
        int small_streak = 0;
        for (long n = 0; n < kMaxTermsPerIndex; ++n) {
            const double dn = static_cast<double>(n);
            term *= (p.a + dm + dn) * (p.b2 + dn) / ((p.c2 + dn) * (dn + 1.0)) * y;
            row += term;
            if (term == 0.0) break;
            if (std::abs(term) < kTermStop * std::max(std::abs(row), 1e-300)) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
            if (n + 1 == kMaxTermsPerIndex) fail(errc::no_convergence, "F2 series: inner cap");
        }
        total += row;
        if (std::abs(row) < kTermStop * std::abs(total)) {
            if (++small_rows >= 3) return total;
        } else {
            small_rows = 0;
        }
        row_head *= (p.a + dm) * (p.b + dm) / ((p.c + dm) * (dm + 1.0)) * x;
        if (row_head == 0.0 && mm > 0) return total;
    }
    fail(errc::no_convergence, "F2 series: row cap reached");
}

double appell_f2_quad(const AppellF2Params& p, double x, double y, const QuadConfig& cfg) {
    p.validate();
    if (!(p.b > 0.0) || !(p.b2 > 0.0) || !(p.c - p.b > 0.0) || !(p.c2 - p.b2 > 0.0))
        fail(errc::param_domain, "F2 integral: needs b,b' > 0, c-b > 0, c'-b' > 0");
    if (!(std::max(x, 0.0) + std::max(y, 0.0) < 1.0))
        fail(errc::arg_domain, "F2 integral: kernel singular on the unit square");
    const double lpref = log_gamma(p.c) + log_gamma(p.c2) - log_gamma(p.b) - log_gamma(p.b2) -
                         log_gamma(p.c - p.b) - log_gamma(p.c2 - p.b2);
    const double a = p.a;
    const double val = detail_square2(p.b, p.c - p.b, p.b2, p.c2 - p.b2, 1.0, -x, -y,
                                      [a](double w) { return std::pow(w, -a); }, cfg);
    return std::exp(lpref) * val;
}

EvalResult appell_f2(const AppellF2Params& p, double x, double y) {
    p.validate();
    EvalResult res;
    if (std::abs(x) + std::abs(y) < 0.98) {
        res.value = appell_f2_series(p, x, y);
        res.est_error = 1e-13 * std::abs(res.value);
        res.path = EvalPath::series;
        return res;
    }
    res.value = appell_f2_quad(p, x, y);
    res.est_error = 1e-11 * std::abs(res.value);
    res.path = EvalPath::quadrature;
    return res;
}

double lauricella_fd_series(const LauricellaParams& p, std::span<const double> xs) {
    p.validate();
    if (xs.size() != p.alphas.size())
        fail(errc::param_domain, "F_D: argument count must match exponent count");
    double sum_abs = 0.0;
    for (double x : xs) sum_abs += std::abs(x);
    if (!(sum_abs < 1.0)) fail(errc::arg_domain, "F_D series: sum |x_j| must be < 1");
    // peel one variable at a time:
    // F_D^(n)(a; al; c; x) = sum_k (a)_k (al_1)_k x_1^k / (k! (c)_k)
    //                        * F_D^(n-1)(a+k; al_2..; c+k; x_2..)
    // The tail depends on (a,c) only through the accumulated shift, so each
    // level memoizes on it.
    struct Rec {
        const LauricellaParams& p;
        std::span<const double> xs;
        std::vector<std::vector<double>> memo; // per level, indexed by shift
        std::vector<std::vector<char>> seen;

        double eval(long shift, std::size_t lvl) {
            if (lvl + 1 < xs.size()) {
                auto& m = memo[lvl];
                auto& s = seen[lvl];
                if (shift < static_cast<long>(s.size()) && s[shift]) return m[shift];
            }
            const double a = p.a + static_cast<double>(shift);
            const double c = p.c + static_cast<double>(shift);
            const double alpha = p.alphas[lvl];
            const double x = xs[lvl];
            double total;
            if (lvl + 1 == xs.size()) {
                total = gauss_2f1_series(GaussParams{a, alpha, c}, x);
            } else {
                double coeff = 1.0;
                total = 0.0;
                int small_streak = 0;
                for (long k = 0;; ++k) {
                    if (k == kMaxTermsPerIndex) fail(errc::no_convergence, "F_D series: index cap");
                    const double dk = static_cast<double>(k);
                    const double inner = eval(shift + k, lvl + 1);
                    total += coeff * inner;
                    const double contrib = std::abs(coeff * inner);
                    if (contrib < kTermStop * std::max(std::abs(total), 1e-300)) {
                        if (++small_streak >= 3) break;
                    } else {
                        small_streak = 0;
                    }
                    coeff *= (a + dk) * (alpha + dk) / ((c + dk) * (dk + 1.0)) * x;
                    if (coeff == 0.0 && k > 0) break;
                }
            }
            if (lvl + 1 < xs.size()) {
                auto& m = memo[lvl];
                auto& s = seen[lvl];
                if (shift >= static_cast<long>(s.size())) {
                    s.resize(shift + 64, 0);
                    m.resize(shift + 64, 0.0);
                }
                s[shift] = 1;
                m[shift] = total;
            }
            return total;
        }
    };
    Rec rec{p, xs, {}, {}};
    rec.memo.resize(xs.size());
    rec.seen.resize(xs.size());
    return rec.eval(0, 0);
}

double lauricella_fd_quad(const LauricellaParams& p, std::span<const double> xs,
                          const QuadConfig& cfg) {
    p.validate();
    const std::size_t n = xs.size();
    if (n != p.alphas.size()) fail(errc::param_domain, "F_D: argument count mismatch");
    if (n > 3) fail(errc::arg_domain, "F_D quadrature: simplex rule provided for n <= 3 only");
    double alpha_sum = 0.0;
    for (double al : p.alphas) {
        if (!(al > 0.0)) fail(errc::param_domain, "F_D integral: exponents must be positive");
        alpha_sum += al;
    }
    if (!(p.c - alpha_sum > 0.0)) fail(errc::param_domain, "F_D integral: needs c - sum(alpha) > 0");
    for (double x : xs)
        if (!(x < 1.0)) fail(errc::arg_domain, "F_D integral: needs x_j < 1");
    double lpref = log_gamma(p.c) - log_gamma(p.c - alpha_sum);
    for (double al : p.alphas) lpref -= log_gamma(al);
    const double a = p.a;
    const auto K = [a](double w) { return std::pow(w, -a); };
    double val = 0.0;
    if (n == 1) {
        const QuadResult q = tanh_sinh_01(
            [&](double t, double omt) {
                return std::pow(t, p.alphas[0] - 1.0) * std::pow(omt, p.c - alpha_sum - 1.0) *
                       std::pow(1.0 - xs[0] * t, -p.a);
            },
            cfg);
        val = q.value;
    } else if (n == 2) {
        val = detail_simplex2(p.alphas[0], p.alphas[1], p.c - alpha_sum, 1.0, -xs[0], -xs[1], K,
                              cfg);
    } else {
        val = detail_simplex3(p.c - alpha_sum, p.alphas[0], p.alphas[1], p.alphas[2], 1.0, -xs[0],
                              -xs[1], -xs[2], K, cfg);
    }
    return std::exp(lpref) * val;
}

EvalResult lauricella_fd(const LauricellaParams& p, std::span<const double> xs) {
    p.validate();
    double sum_abs = 0.0;
    for (double x : xs) sum_abs += std::abs(x);
    EvalResult res;
    if (sum_abs < 0.98) {
        res.value = lauricella_fd_series(p, xs);
        res.est_error = 1e-13 * std::abs(res.value);
        res.path = EvalPath::series;
        return res;
    }
    res.value = lauricella_fd_quad(p, xs);
    res.est_error = 1e-10 * std::abs(res.value);
    res.path = EvalPath::quadrature;
    return res;
}

std::array<double, 15> contiguous_residuals(const GaussParams& p, double z) {
    p.validate();
    if (!(z > -1.0) || !(z < 1.0)) fail(errc::arg_domain, "contiguous residuals: z in (-1,1)");
    const double a = p.a, b = p.b, c = p.c;
    // all shifted denominators must stay valid
    for (double cc : {c - 1.0, c + 1.0})
        if (is_nonpositive_integer(cc))
            fail(errc::param_domain, "contiguous residuals: shifted c hits a pole");
    auto F = [&](double aa, double bb, double cc) {
        return gauss_2f1(GaussParams{aa, bb, cc}, z).value;
    };
    const double f = F(a, b, c);
    // six expressions for z dF/dz via one-parameter shifts
    const double e_ap = a * (F(a + 1, b, c) - f);
    const double e_bp = b * (F(a, b + 1, c) - f);
    const double e_cm = (c - 1.0) * (F(a, b, c - 1) - f);
    const double e_am = ((c - a) * F(a - 1, b, c) + (a - c + b * z) * f) / (1.0 - z);
    const double e_bm = ((c - b) * F(a, b - 1, c) + (b - c + a * z) * f) / (1.0 - z);
    const double e_cp = z * ((c - a) * (c - b) * F(a, b, c + 1) + c * (a + b - c) * f) / (c * (1.0 - z));
    const double ex[6] = {e_ap, e_bp, e_cm, e_am, e_bm, e_cp};
    std::array<double, 15> out{};
    std::size_t idx = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out[idx++] = std::abs(ex[i] - ex[j]);
    return out;
}

double pfaff_euler_residual(const GaussParams& p, double z, Transform which) {
    p.validate();
    if (!(z < 1.0)) fail(errc::arg_domain, "transform residual: z < 1 required");
    const double w = z / (z - 1.0);
    if (which != Transform::euler && !(std::abs(w) < 1.0))
        fail(errc::arg_domain, "transform residual: z/(z-1) outside series domain");
    const double lhs = gauss_2f1_series(p, z);
    double rhs = 0.0;
    switch (which) {
        case Transform::pfaff_a:
            rhs = std::pow(1.0 - z, -p.a) * gauss_2f1_series(GaussParams{p.a, p.c - p.b, p.c}, w);
            break;
        case Transform::pfaff_b:
            rhs = std::pow(1.0 - z, -p.b) * gauss_2f1_series(GaussParams{p.c - p.a, p.b, p.c}, w);
            break;
        case Transform::euler:
            rhs = std::pow(1.0 - z, p.c - p.a - p.b) *
                  gauss_2f1_series(GaussParams{p.c - p.a, p.c - p.b, p.c}, z);
            break;
    }
    return std::abs(lhs - rhs);
}

std::array<double, 3> gauss_diff_residuals(const GaussParams& p, double z) {
    p.validate();
    const double f = gauss_2f1(p, z).value;
    const double zfp = z * gauss_2f1_deriv(p, z);
    auto F = [&](double aa, double bb, double cc) {
        return gauss_2f1(GaussParams{aa, bb, cc}, z).value;
    };
    return {
        std::abs(F(p.a + 1, p.b, p.c) - (f + zfp / p.a)),
        std::abs(F(p.a, p.b + 1, p.c) - (f + zfp / p.b)),
        std::abs(F(p.a, p.b, p.c - 1) - (f + zfp / (p.c - 1.0))),
    };
}

std::array<double, 4> f1_diff_residuals(const AppellF1Params& p, double x, double y) {
    p.validate();
    auto F1 = [&](double a, double b, double b2, double c) {
        return appell_f1(AppellF1Params{a, b, b2, c}, x, y).value;
    };
    const double f = F1(p.a, p.b, p.b2, p.c);
    // partials from the raising relations
    const double fx = p.a * p.b / p.c * F1(p.a + 1, p.b + 1, p.b2, p.c + 1);
    const double fy = p.a * p.b2 / p.c * F1(p.a + 1, p.b, p.b2 + 1, p.c + 1);
    const double r_ap = std::abs(F1(p.a + 1, p.b, p.b2, p.c) - (p.a * f + x * fx + y * fy) / p.a);
    const double r_bp = std::abs(F1(p.a, p.b + 1, p.b2, p.c) - (p.b * f + x * fx) / p.b);
    const double r_b2p = std::abs(F1(p.a, p.b, p.b2 + 1, p.c) - (p.b2 * f + y * fy) / p.b2);
    // c+ lowering: c F = (c + x d_x + y d_y) F(c+), partials at c+1
    const double g = F1(p.a, p.b, p.b2, p.c + 1);
    const double gx = p.a * p.b / (p.c + 1.0) * F1(p.a + 1, p.b + 1, p.b2, p.c + 2);
    const double gy = p.a * p.b2 / (p.c + 1.0) * F1(p.a + 1, p.b, p.b2 + 1, p.c + 2);
    const double r_cp = std::abs(f - (p.c * g + x * gx + y * gy) / p.c);
    return {r_ap, r_bp, r_b2p, r_cp};
}

namespace {

// z 2F1(a,1;c;z) and its first/second derivative via parameter shifts.
double g_fn(double a, double c, double z) {
    return z * gauss_2f1(GaussParams{a, 1.0, c}, z).value;
}
double g_deriv(double a, double c, double z) {
    return gauss_2f1(GaussParams{a, 1.0, c}, z).value +
           z * (a / c) * gauss_2f1(GaussParams{a + 1.0, 2.0, c + 1.0}, z).value;
}
double g_deriv2(double a, double c, double z) {
    const double f1 = (a / c) * gauss_2f1(GaussParams{a + 1.0, 2.0, c + 1.0}, z).value;
    const double f2 =
        (a * (a + 1.0) * 2.0 / (c * (c + 1.0))) * gauss_2f1(GaussParams{a + 2.0, 3.0, c + 2.0}, z).value;
    return 2.0 * f1 + z * f2;
}

} // namespace

double f1_divided_difference(double a, double c, double x, double y) {
    if (!(x < 1.0) || !(y < 1.0)) fail(errc::arg_domain, "f1_divided_difference: x,y < 1");
    if (std::abs(x - y) <= 1e-8) {
        // confluent limit: d/dz [z 2F1(a,1;c;z)] at the midpoint
        return g_deriv(a, c, 0.5 * (x + y));
    }
    return (g_fn(a, c, x) - g_fn(a, c, y)) / (x - y);
}

double f1_c2_reduction(double a, double c, double x, double y) {
    if (!(x < 1.0) || !(y < 1.0)) fail(errc::arg_domain, "f1_c2_reduction: x,y < 1");
    if (std::abs(x - y) <= 1e-8) return f1_one_two_dd(a, c, x, y);
    auto F = [&](double aa, double bb, double cc, double z) {
        return gauss_2f1(GaussParams{aa, bb, cc}, z).value;
    };
    const double d = x - y;
    return (c * x * x * F(a, 1, c, x) + c * y * y * F(a, 2, c, y) -
            a * x * y * y * F(a + 1, 2, c + 1, y) - 2.0 * c * x * y * F(a, 1, c, y)) /
           (c * d * d);
}

double f1_one_two_dd(double a, double c, double x, double y) {
    // F1(a;1,2;c;x,y) = (c-1)/(a-1) [x,y,y](z 2F1(a-1,1;c-1;z))
    const double am = a - 1.0, cm = c - 1.0;
    if (std::abs(x - y) <= 1e-4) {
        // second Newton divided difference collapses to g''/2 at the mean
        const double zc = (x + 2.0 * y) / 3.0;
        return cm / am * 0.5 * g_deriv2(am, cm, zc);
    }
    const double dd1 = (g_fn(am, cm, x) - g_fn(am, cm, y)) / (x - y);
    const double dd2 = (dd1 - g_deriv(am, cm, y)) / (x - y);
    return cm / am * dd2;
}

double f2_to_2f1(int q, double a, int p, double b, double x, double y) {
    if (p < 0 || q < 0 || !(p < q)) fail(errc::param_domain, "f2_to_2f1: need 0 <= p < q");
    if (!(std::abs(x) + std::abs(y) < 1.0)) fail(errc::param_domain, "f2_to_2f1: |x|+|y| < 1");
    if (y == 0.0) fail(errc::arg_domain, "f2_to_2f1: y = 0 not representable (1/y^{p+1} factor)");
    auto F = [&](double aa, double bb, double cc, double z) {
        return gauss_2f1(GaussParams{aa, bb, cc}, z).value;
    };
    const double dq = static_cast<double>(q);
    const double yp = std::pow(y, p + 1);
    double value = -factorial_fn(p) / (dq * pochhammer(1.0 - dq, p)) * (p + 1.0) / yp *
                   F(a, dq - p, b, x);
    double outer = 0.0;
    for (int k = 0; k <= p; ++k) {
        double inner = 0.0;
        for (int mm = 0; mm <= p - k; ++mm) {
            inner += std::pow(-x, mm) * binomial_fn(p - k, mm) * pochhammer(a, mm) /
                     pochhammer(b, mm) * F(a + mm, dq - k, b + mm, x / (1.0 - y));
        }
        outer += (k % 2 == 0 ? 1.0 : -1.0) /
                 ((dq - k) * std::pow(1.0 - y, dq - k)) * binomial_fn(p, k) * inner;
    }
    value += (p + 1.0) / yp * outer;
    return value;
}

double symbolic_2f1_a1c(double a, int c, double z) {
    if (c < 1) fail(errc::param_domain, "symbolic_2f1_a1c: c must be a positive integer");
    if (!(z > -1.0) || !(z < 1.0)) fail(errc::arg_domain, "symbolic_2f1_a1c: z in (-1,1)");
    if (z == 0.0) return 1.0;
    const int p = c - 1;
    // Pochhammer denominators (a-c+1)_k must not hit zero
    for (int k = 1; k <= p; ++k)
        if (std::abs(a - c + k) < 1e-12)
            fail(errc::param_domain, "symbolic_2f1_a1c: Pochhammer zero at a-c+k");
    const double dc = static_cast<double>(c);
    const double ratio = (z - 1.0) / z;
    const double head = pochhammer(1.0 - dc, p) / pochhammer(a - dc + 1.0, p) *
                        std::pow(ratio, p) * std::pow(1.0 - z, -a);
    double sum = 0.0;
    double coeff = 1.0, rpow = 1.0;
    for (int k = 1; k <= p; ++k) {
        coeff *= (static_cast<double>(k) - dc) / (a - dc + static_cast<double>(k));
        sum += coeff * rpow;
        rpow *= ratio;
    }
    return head + sum / z;
}

double gauss_cf_ratio(const GaussParams& p, double z, int depth) {
    if (depth < 1) fail(errc::param_domain, "gauss_cf_ratio: depth >= 1");
    if (!(z > -1.0) || !(z < 1.0)) fail(errc::arg_domain, "gauss_cf_ratio: z in (-1,1)");
    // ratio 2F1(alpha+1,beta;gamma+1;z)/2F1(alpha,beta;gamma;z)
    // == 2F1(beta,alpha+1;gamma+1;z)/2F1(beta,alpha;gamma;z): Gauss CF with
    // A = beta, B = alpha, C = gamma:
    //   k_{2i+1} = (A+i)(C-B+i)/((C+2i)(C+2i+1))
    //   k_{2i}   = (B+i)(C-A+i)/((C+2i-1)(C+2i))
    const double A = p.b, B = p.a, C = p.c;
    auto coeff = [&](int idx) {
        if (idx % 2 == 1) {
            const double i = static_cast<double>((idx - 1) / 2);
            return (A + i) * (C - B + i) / ((C + 2 * i) * (C + 2 * i + 1));
        }
        const double i = static_cast<double>(idx / 2);
        return (B + i) * (C - A + i) / ((C + 2 * i - 1) * (C + 2 * i));
    };
    auto eval_at = [&](int d) {
        double t = 1.0;
        for (int idx = d; idx >= 1; --idx) t = 1.0 / (1.0 - coeff(idx) * z * t);
        return t;
    };
    const double v = eval_at(depth);
    const double v_prev = eval_at(depth - 1 >= 1 ? depth - 1 : 1);
    if (std::abs(v - v_prev) > 1e-9 * std::max(1.0, std::abs(v)))
        fail(errc::no_convergence, "gauss_cf_ratio: successive depths disagree");
    return v;
}

} // namespace modcurv
