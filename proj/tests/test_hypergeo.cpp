#include <doctest.h>

#include <cmath>
#include <random>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"
#include "modcurv/hypergeo.hpp"

using namespace modcurv;

namespace {
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kE = 2.71828182845904523536;

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }
} // namespace

TEST_CASE("gauss_2f1 anchor values") {
    CHECK(gauss_2f1(GaussParams{1, 1, 2}, -1.0).value == doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(gauss_2f1(GaussParams{0.7, 2.2, 3.1}, 0.0).value == 1.0);
    // 2F1(alpha, beta; beta; z) = (1-z)^{-alpha}
    CHECK(gauss_2f1(GaussParams{3, 1, 1}, 0.5).value == doctest::Approx(8.0).epsilon(1e-13));
    // slow-argument series still under the term cap
    CHECK(gauss_2f1(GaussParams{1, 1, 2}, 0.98).value ==
          doctest::Approx(std::log(0.02) / (0.02 - 1.0)).epsilon(1e-12));
}

TEST_CASE("gauss_2f1 domain errors") {
    CHECK_THROWS_AS(gauss_2f1(GaussParams{1, 1, 2}, 1.0), error);
    CHECK_THROWS_AS(gauss_2f1(GaussParams{1, 1, 2}, 1.5), error);
    CHECK_THROWS_AS(gauss_2f1(GaussParams{1, 1, 0}, 0.3), error);
    CHECK_THROWS_AS(gauss_2f1(GaussParams{1, 1, -2}, 0.3), error);
    CHECK_THROWS_AS(gauss_2f1(GaussParams{1, 1, 2}, 1.0 - 1e-12), error); // term cap
}

TEST_CASE("gauss_2f1 Pfaff branch matches direct series") {
    for (double z : {-0.51, -0.8, -2.0, -7.0}) {
        const GaussParams p{1.4, 0.8, 2.6};
        const double full = gauss_2f1(p, z).value;
        // Euler-integral reference (c > b > 0)
        const double pref = std::exp(log_gamma(p.c) - log_gamma(p.b) - log_gamma(p.c - p.b));
        const double ref = pref * tanh_sinh_01([&](double t, double omt) {
                                      return std::pow(t, p.b - 1.0) *
                                             std::pow(omt, p.c - p.b - 1.0) *
                                             std::pow(1.0 - z * t, -p.a);
                                  }).value;
        CHECK(rel(full, ref) < 1e-12);
    }
}

TEST_CASE("terminating polynomial case") {
    // a = -3 truncates the series
    const double v = gauss_2f1(GaussParams{-3, 1.2, 2.1}, 0.7).value;
    double expect = 0.0, term = 1.0;
    for (int n = 0; n <= 3; ++n) {
        expect += term;
        term *= (-3.0 + n) * (1.2 + n) / ((2.1 + n) * (n + 1.0)) * 0.7;
    }
    CHECK(v == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("kummer_1f1 values and errors") {
    CHECK(kummer_1f1(1.3, 2.4, 0.0).value == 1.0);
    CHECK(kummer_1f1(1, 2, 1).value == doctest::Approx(kE - 1.0).epsilon(1e-14));
    // pinned at 30-digit precision
    CHECK(kummer_1f1(2, 3, 0.7).value == doctest::Approx(1.61581301126064099).epsilon(1e-14));
    CHECK_THROWS_AS(kummer_1f1(1.0, 0.0, 0.5), error);
    CHECK_THROWS_AS(kummer_1f1(1.0, -3.0, 0.5), error);
}

TEST_CASE("appell_f1 slot collapses and frozen value") {
    const AppellF1Params p{1.7, 0.9, 1.3, 3.2};
    // x=0 collapses to 2F1 in the (b',y) slot
    CHECK(appell_f1(p, 0.0, 0.45).value ==
          doctest::Approx(gauss_2f1(GaussParams{1.7, 1.3, 3.2}, 0.45).value).epsilon(1e-13));
    CHECK(appell_f1(p, 0.0, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(appell_f1(AppellF1Params{3.5, 1, 1, 4}, 0.3, 0.2).value ==
          doctest::Approx(1.65409231897963787).epsilon(1e-13));
    CHECK_THROWS_AS(appell_f1(p, 1.0, 0.2), error);
}

TEST_CASE("appell_f1 series and quadrature paths agree at the crossover") {
    const AppellF1Params p{2.1, 0.8, 1.1, 3.4};
    const double x = 0.55, y = 0.43; // |x|+|y| = 0.98 -> quadrature path
    const EvalResult q = appell_f1(p, x, y);
    CHECK(q.path == EvalPath::quadrature);
    CHECK(rel(q.value, appell_f1_series(p, x, y)) < 1e-10);
}

TEST_CASE("appell_f2 collapses and frozen value") {
    const AppellF2Params p{1.6, 0.8, 1.2, 2.4, 2.9};
    CHECK(appell_f2(p, 0.0, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(appell_f2(p, 0.35, 0.0).value ==
          doctest::Approx(gauss_2f1(GaussParams{1.6, 0.8, 2.4}, 0.35).value).epsilon(1e-13));
    CHECK(appell_f2(AppellF2Params{2, 1, 1, 3, 2}, 0.2, 0.3).value ==
          doctest::Approx(1.71312045679355656).epsilon(1e-13));
    // quadrature fallback needs an integrable kernel
    CHECK_THROWS_AS(appell_f2_quad(p, 0.6, 0.5), error);
}

TEST_CASE("lauricella_fd collapses") {
    // n=1 is a plain 2F1
    {
        LauricellaParams p;
        p.a = 2.3;
        p.alphas = {1.4};
        p.c = 3.1;
        const double xs[] = {0.37};
        CHECK(lauricella_fd(p, xs).value ==
              doctest::Approx(gauss_2f1(GaussParams{2.3, 1.4, 3.1}, 0.37).value).epsilon(1e-13));
    }
    // n=2 matches F1 in both slot orders
    {
        LauricellaParams p;
        p.a = 1.8;
        p.alphas = {0.9, 1.2};
        p.c = 3.3;
        const double xs[] = {0.25, -0.4};
        const double fd = lauricella_fd(p, xs).value;
        CHECK(fd == doctest::Approx(
                        appell_f1(AppellF1Params{1.8, 0.9, 1.2, 3.3}, 0.25, -0.4).value)
                        .epsilon(1e-12));
        CHECK(fd == doctest::Approx(
                        appell_f1(AppellF1Params{1.8, 1.2, 0.9, 3.3}, -0.4, 0.25).value)
                        .epsilon(1e-12));
    }
    // n=3 pinned value
    {
        LauricellaParams p;
        p.a = 3.0;
        p.alphas = {1.0, 1.0, 1.0};
        p.c = 5.0;
        const double xs[] = {0.1, 0.2, 0.15};
        CHECK(lauricella_fd(p, xs).value ==
              doctest::Approx(1.33737042396824908).epsilon(1e-13));
    }
    {
        LauricellaParams p;
        p.a = 1.0;
        p.alphas = {1, 1, 1, 1, 1};
        p.c = 6.0;
        const double xs[] = {0.1, 0.1, 0.1, 0.1, 0.1};
        CHECK_THROWS_AS(lauricella_fd(p, xs), error);
    }
    {
        // quadrature route requires c - sum(alpha) > 0
        LauricellaParams p;
        p.a = 1.0;
        p.alphas = {1.0, 1.0};
        p.c = 1.5;
        const double xs[] = {0.6, 0.5};
        CHECK_THROWS_AS(lauricella_fd(p, xs), error);
    }
}

TEST_CASE("contiguous residuals vanish at z=0 and stay tiny on the grid") {
    const auto r0 = contiguous_residuals(GaussParams{1.3, 0.8, 2.6}, 0.0);
    for (double r : r0) CHECK(r == doctest::Approx(0.0).epsilon(1e-15));
    const auto r1 = contiguous_residuals(GaussParams{2, 1, 3}, 0.4);
    for (double r : r1) CHECK(r < 1e-10);
    const auto r2 = contiguous_residuals(GaussParams{1.5, 2.5, 3.2}, -0.6);
    for (double r : r2) CHECK(r < 1e-9);
    CHECK_THROWS_AS(contiguous_residuals(GaussParams{1.0, 1.0, 1.0}, 0.3), error); // c-1 pole
}

TEST_CASE("pfaff and euler transform residuals") {
    CHECK(pfaff_euler_residual(GaussParams{1.1, 0.9, 2.3}, 0.0, Transform::euler) == 0.0);
    CHECK(pfaff_euler_residual(GaussParams{2, 1, 3}, 0.5, Transform::euler) < 1e-12);
    CHECK(pfaff_euler_residual(GaussParams{1.2, 0.7, 2.4}, -0.8, Transform::pfaff_a) < 1e-12);
    CHECK(pfaff_euler_residual(GaussParams{1.2, 0.7, 2.4}, -0.8, Transform::pfaff_b) < 1e-12);
    // z/(z-1) leaves the series domain at z > 1/2 + eps for the pfaff forms
    CHECK_THROWS_AS(pfaff_euler_residual(GaussParams{1.2, 0.7, 2.4}, 0.7, Transform::pfaff_a),
                    error);
}

TEST_CASE("f1_divided_difference: slots, series match, confluent limit") {
    CHECK(f1_divided_difference(1.9, 3.4, 0.52, 0.0) ==
          doctest::Approx(gauss_2f1(GaussParams{1.9, 1, 3.4}, 0.52).value).epsilon(1e-13));
    CHECK(f1_divided_difference(2, 3, 0.3, 0.5) ==
          doctest::Approx(appell_f1_series(AppellF1Params{2, 1, 1, 3}, 0.3, 0.5)).epsilon(1e-12));
    // confluent: matches d/dz [z 2F1(a,1;c;z)] at the midpoint
    const double a = 3.5, c = 4.0, z = 0.4;
    const double lim = f1_divided_difference(a, c, z - 5e-10, z + 5e-10);
    const double deriv = gauss_2f1(GaussParams{a, 1, c}, z).value +
                         z * (a / c) * gauss_2f1(GaussParams{a + 1, 2, c + 1}, z).value;
    CHECK(lim == doctest::Approx(deriv).epsilon(1e-12));
    // and the finite-difference cross-check of that derivative
    const double h = 1e-6;
    const double fd = ((z + h) * gauss_2f1(GaussParams{a, 1, c}, z + h).value -
                       (z - h) * gauss_2f1(GaussParams{a, 1, c}, z - h).value) /
                      (2 * h);
    CHECK(lim == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("f1_c2_reduction against the double series") {
    CHECK(f1_c2_reduction(3, 4, 0.2, 0.3) ==
          doctest::Approx(appell_f1_series(AppellF1Params{3, 1, 2, 4}, 0.2, 0.3)).epsilon(1e-11));
    CHECK(f1_c2_reduction(2.5, 5, 0.1, 0.6) ==
          doctest::Approx(appell_f1_series(AppellF1Params{2.5, 1, 2, 5}, 0.1, 0.6)).epsilon(1e-11));
    CHECK(f1_c2_reduction(2.2, 4.4, 0.31, 0.0) ==
          doctest::Approx(appell_f1_series(AppellF1Params{2.2, 1, 2, 4.4}, 0.31, 0.0))
              .epsilon(1e-11));
    // the confluent-stable second-divided-difference route agrees everywhere
    CHECK(f1_one_two_dd(3, 4, 0.2, 0.3) ==
          doctest::Approx(f1_c2_reduction(3, 4, 0.2, 0.3)).epsilon(1e-10));
    CHECK(f1_one_two_dd(2.4, 4.2, 0.35, 0.35) ==
          doctest::Approx(appell_f1_series(AppellF1Params{2.4, 1, 2, 4.2}, 0.35, 0.35))
              .epsilon(1e-9));
}

TEST_CASE("f2_to_2f1 finite sum") {
    // x=0 with q=1,p=0: F2(2;a,1;b,2;0,y) = 1/(1-y)
    CHECK(f2_to_2f1(1, 1.7, 0, 2.3, 0.0, 0.3) == doctest::Approx(1.0 / 0.7).epsilon(1e-13));
    CHECK(f2_to_2f1(2, 1.5, 0, 3, 0.2, 0.3) ==
          doctest::Approx(appell_f2_series(AppellF2Params{3, 1.5, 1, 3, 2}, 0.2, 0.3))
              .epsilon(1e-12));
    CHECK(f2_to_2f1(2, 2, 1, 4, 0.1, 0.25) ==
          doctest::Approx(appell_f2_series(AppellF2Params{3, 2, 2, 4, 3}, 0.1, 0.25))
              .epsilon(1e-12));
    CHECK_THROWS_AS(f2_to_2f1(1, 1.0, 1, 2.0, 0.1, 0.2), error); // p >= q
    CHECK_THROWS_AS(f2_to_2f1(2, 1.0, 0, 2.0, 0.6, 0.5), error); // |x|+|y| >= 1
}

TEST_CASE("symbolic_2f1_a1c descending-c evaluation") {
    // base case c=1
    CHECK(symbolic_2f1_a1c(2.7, 1, 0.4) == doctest::Approx(std::pow(0.6, -2.7)).epsilon(1e-14));
    CHECK(symbolic_2f1_a1c(3, 2, 0.5) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(symbolic_2f1_a1c(3, 2, 0.5) ==
          doctest::Approx(gauss_2f1_series(GaussParams{3, 1, 2}, 0.5)).epsilon(1e-12));
    CHECK(symbolic_2f1_a1c(2.5, 4, -0.4) ==
          doctest::Approx(gauss_2f1_series(GaussParams{2.5, 1, 4}, -0.4)).epsilon(1e-12));
    CHECK(symbolic_2f1_a1c(1.8, 1, 0.0) == 1.0);
    // Pochhammer denominator zero: a - c + k = 0 for k <= c-1
    CHECK_THROWS_AS(symbolic_2f1_a1c(2.0, 4, 0.3), error);
    CHECK_THROWS_AS(symbolic_2f1_a1c(2.0, 0, 0.3), error);
}

TEST_CASE("gauss_cf_ratio against the direct ratio") {
    // z=0: both 2F1 values are 1
    CHECK(gauss_cf_ratio(GaussParams{2.5, 1, 3}, 0.0, 40) == doctest::Approx(1.0));
    // d~ = 2.5 from (a,b,m)=(2,1,3)
    {
        const double dt = 2.5;
        const GaussParams p{dt, 1, 3};
        const double direct = gauss_2f1(GaussParams{dt + 1, 1, 4}, 0.3).value /
                              gauss_2f1(p, 0.3).value;
        CHECK(gauss_cf_ratio(p, 0.3, 40) == doctest::Approx(direct).epsilon(1e-10));
    }
    // (a,b,m) = (3,1,4): d~ = 4
    {
        const GaussParams p{4, 1, 4};
        const double direct = gauss_2f1(GaussParams{5, 1, 5}, -0.5).value /
                              gauss_2f1(p, -0.5).value;
        CHECK(gauss_cf_ratio(p, -0.5, 40) == doctest::Approx(direct).epsilon(1e-10));
    }
    CHECK_THROWS_AS(gauss_cf_ratio(GaussParams{2.5, 1, 3}, 0.3, 0), error);
    // shallow depth at large |z| has not settled yet
    CHECK_THROWS_AS(gauss_cf_ratio(GaussParams{6.5, 2.0, 3.2}, 0.93, 3), error);
}

TEST_CASE("property: divided-difference F1 equals the double series on random draws") {
    std::mt19937_64 rng(0xFEEDF00D);
    std::uniform_real_distribution<double> ua(0.5, 3.5), uc(2.1, 6.0), ux(-0.6, 0.6);
    for (int i = 0; i < 60; ++i) {
        const double a = ua(rng), c = uc(rng);
        const double x = ux(rng);
        std::uniform_real_distribution<double> uy(-(0.9 - std::abs(x)), 0.9 - std::abs(x));
        const double y = uy(rng);
        const double dd = f1_divided_difference(a, c, x, y);
        const double ser = appell_f1_series(AppellF1Params{a, 1, 1, c}, x, y);
        CHECK(rel(dd, ser) < 1e-10);
    }
}
