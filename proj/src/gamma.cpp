#include "modcurv/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace modcurv {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos core, valid for x >= 0.5.
double log_gamma_pos(double x) {
    const double z = x - 1.0;
    double sum = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i)
        sum += kLanczosCoeff[i] / (z + static_cast<double>(i));
    const double t = z + kLanczosG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

double log_gamma(double x) {
    if (x >= 0.5) return log_gamma_pos(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma_pos(1.0 - x);
}

double gamma_fn(double x) {
    if (x >= 0.5) return std::exp(log_gamma_pos(x));
    const double s = std::sin(kPi * x);
    if (s == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return kPi / (s * std::exp(log_gamma_pos(1.0 - x)));
}

signed_log_gamma log_gamma_signed(double x) {
    if (x >= 0.5) return {log_gamma_pos(x), 1};
    const double s = std::sin(kPi * x);
    if (s == 0.0) return {std::numeric_limits<double>::infinity(), 0};
    const double la = std::log(kPi / std::abs(s)) - log_gamma_pos(1.0 - x);
    return {la, s > 0.0 ? 1 : -1};
}

double pochhammer(double q, int n) {
    if (n <= 0) return 1.0;
    if (n <= 64) {
        double p = 1.0;
        for (int i = 0; i < n; ++i) p *= q + static_cast<double>(i);
        return p;
    }
    const signed_log_gamma top = log_gamma_signed(q + static_cast<double>(n));
    const signed_log_gamma bot = log_gamma_signed(q);
    if (bot.sign == 0) return 0.0; // Gamma pole in denominator
    return static_cast<double>(top.sign * bot.sign) * std::exp(top.log_abs - bot.log_abs);
}

double factorial_fn(int n) {
    double p = 1.0;
    for (int i = 2; i <= n; ++i) p *= static_cast<double>(i);
    return p;
}

double binomial_fn(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double p = 1.0;
    for (int i = 1; i <= k; ++i) p *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return p;
}

} // namespace modcurv
