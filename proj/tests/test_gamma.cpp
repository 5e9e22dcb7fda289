#include <doctest.h>

#include <cmath>
#include <random>

#include "modcurv/gamma.hpp"

using namespace modcurv;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("gamma at half-integers and integers") {
    CHECK(gamma_fn(0.5) == doctest::Approx(kSqrtPi).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(6.0) == doctest::Approx(120.0).epsilon(1e-14));
    CHECK(gamma_fn(2.5) == doctest::Approx(1.5 * 0.5 * kSqrtPi).epsilon(1e-14));
    // Gamma(-0.5) = -2 sqrt(pi)
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * kSqrtPi).epsilon(1e-13));
}

TEST_CASE("log gamma functional equation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 40.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        const double lhs = log_gamma(x + 1.0);
        const double rhs = log_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("signed log gamma tracks reflection signs") {
    // Gamma is negative on (-1,0) and (-3,-2), positive on (-2,-1)
    CHECK(log_gamma_signed(-0.5).sign == -1);
    CHECK(log_gamma_signed(-1.5).sign == 1);
    CHECK(log_gamma_signed(-2.5).sign == -1);
    const auto s = log_gamma_signed(-0.5);
    CHECK(s.sign * std::exp(s.log_abs) == doctest::Approx(-2.0 * kSqrtPi).epsilon(1e-12));
}

TEST_CASE("pochhammer: direct product, zeros, large n") {
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 4) == doctest::Approx(3.0 * 4 * 5 * 6));
    CHECK(pochhammer(-2.0, 4) == 0.0); // hits zero factor
    CHECK(pochhammer(-2.5, 3) == doctest::Approx(-2.5 * -1.5 * -0.5));
    // (q)_{n+1} = (q)_n (q+n) across the direct/log-gamma boundary
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int n : {10, 63, 64, 65, 120}) {
        const double q = u(rng);
        const double lhs = pochhammer(q, n + 1);
        const double rhs = pochhammer(q, n) * (q + n);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs));
    }
}

TEST_CASE("binomial and factorial helpers") {
    CHECK(factorial_fn(0) == 1.0);
    CHECK(factorial_fn(5) == 120.0);
    CHECK(binomial_fn(6, 2) == 15.0);
    CHECK(binomial_fn(6, 0) == 1.0);
    CHECK(binomial_fn(4, 7) == 0.0);
}

TEST_CASE("near_nonpositive_integer guard") {
    CHECK(near_nonpositive_integer(0.0));
    CHECK(near_nonpositive_integer(-3.0));
    CHECK(near_nonpositive_integer(-2.0 + 1e-14));
    CHECK(!near_nonpositive_integer(0.5));
    CHECK(!near_nonpositive_integer(-1.5));
    CHECK(!near_nonpositive_integer(2.0));
}
