#include <doctest.h>

#include <cmath>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"
#include "modcurv/quadrature.hpp"
#include "modcurv/spectral.hpp"

using namespace modcurv;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    // beta(1/2,1/2) = pi
    const QuadResult q = tanh_sinh_01(
        [](double t, double omt) { return 1.0 / std::sqrt(t * omt); });
    CHECK(q.value == doctest::Approx(kPi).epsilon(1e-12));
    // \int_0^1 ln t dt = -1
    const QuadResult l = tanh_sinh_01([](double t, double) { return std::log(t); });
    CHECK(l.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("tanh-sinh rejects a divergent integrand") {
    CHECK_THROWS_AS(tanh_sinh_01([](double t, double) { return 1.0 / t; }), error);
}

TEST_CASE("quad config validation") {
    QuadConfig cfg;
    cfg.max_levels = 2;
    CHECK_THROWS_AS(tanh_sinh_01([](double, double) { return 1.0; }, cfg), error);
    cfg.max_levels = 8;
    cfg.abs_tol = -1.0;
    CHECK_THROWS_AS(tanh_sinh_01([](double, double) { return 1.0; }, cfg), error);
}

TEST_CASE("exp-sinh on the half line") {
    const QuadResult q = exp_sinh_0inf([](double s) { return std::exp(-s); });
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mellin identity (1/Gamma(a)) int s^{a-1} e^{-sA} = A^{-a}") {
    for (double A : {0.5, 1.0, 3.0})
        for (double a : {1.0, 2.0, 3.5})
            CHECK(mellin_power(A, a) == doctest::Approx(std::pow(A, -a)).epsilon(1e-11));
}

TEST_CASE("contour_ab_rhs closed forms") {
    // A=B collapses to the Beta integral e^{-A}/Gamma(a+b)
    CHECK(contour_ab_rhs(1.3, 1.3, 2.0, 1.5) ==
          doctest::Approx(std::exp(-1.3) / gamma_fn(3.5)).epsilon(1e-12));
    // elementary antiderivative at (1,2,1,1)
    CHECK(contour_ab_rhs(1.0, 2.0, 1.0, 1.0) ==
          doctest::Approx(std::exp(-1.0) * (1.0 - std::exp(-1.0))).epsilon(1e-12));
    // confluent-hypergeometric form: e^{-B}/Gamma(a+b) 1F1(a;a+b;B-A);
    // at (0.5,1.5,2,1) the closed value is e^{-1.5}
    CHECK(contour_ab_rhs(0.5, 1.5, 2.0, 1.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-10));
    CHECK_THROWS_AS(contour_ab_rhs(-1.0, 1.0, 1.0, 1.0), error);
    CHECK_THROWS_AS(contour_ab_rhs(1.0, 1.0, 0.0, 1.0), error);
}

TEST_CASE("contour_abc_rhs: Dirichlet collapse, slot merge, frozen value") {
    CHECK(contour_abc_rhs(1.3, 1.3, 1.3, 1.0, 2.0, 1.5) ==
          doctest::Approx(std::exp(-1.3) / gamma_fn(4.5)).epsilon(1e-11));
    CHECK(contour_abc_rhs(1.2, 0.7, 0.7, 1.0, 1.5, 2.0) ==
          doctest::Approx(contour_ab_rhs(1.2, 0.7, 1.0, 3.5)).epsilon(1e-11));
    // pinned independently at 30-digit precision
    CHECK(contour_abc_rhs(1.0, 2.0, 3.0, 1.0, 1.0, 1.0) ==
          doctest::Approx(0.0734979715330404404).epsilon(1e-11));
    // quasi-Monte-Carlo route agrees to its documented accuracy
    CHECK(std::abs(contour_abc_rhs_qmc(1.0, 2.0, 3.0, 1.0, 1.0, 1.0, 2000000) -
                   0.0734979715330404404) < 1e-5);
}

TEST_CASE("oscillatory line integral: loose agreement and symmetry") {
    const double lhs = oscillatory_lhs_ab(1.0, 1.0, 1, 1, 1e4);
    CHECK(std::abs(lhs - contour_ab_rhs(1.0, 1.0, 1.0, 1.0)) < 1e-3);
    const double l2 = oscillatory_lhs_ab(1.0, 2.0, 1, 2, 1e4);
    CHECK(std::abs(l2 - contour_ab_rhs(1.0, 2.0, 1.0, 2.0)) < 1e-3);
    CHECK(oscillatory_lhs_ab(0.5, 1.5, 1, 2, 2000.0) ==
          doctest::Approx(oscillatory_lhs_ab(1.5, 0.5, 2, 1, 2000.0)).epsilon(1e-12));
    CHECK_THROWS_AS(oscillatory_lhs_ab(1.0, 1.0, 1, 0, 1e4), error);
}

TEST_CASE("spectral_k_oracle against closed values") {
    // y=1 collapses to Gamma(d+1)/Gamma(a+b)
    const double d21 = 2 + 1 - 2 + (3.0 - 2.0) / 2.0;
    CHECK(spectral_k_oracle(2, 1, 1.0, 3.0) ==
          doctest::Approx(gamma_fn(d21 + 1.0) / gamma_fn(3.0)).epsilon(1e-12));
    // the m=3 elementary display at z=4 gives sqrt(pi)/9
    CHECK(spectral_k_oracle(2, 1, 4.0, 3.0) ==
          doctest::Approx(std::sqrt(kPi) / 9.0).epsilon(1e-11));
    // statement check against the 2F1 form
    const SpectralIndex idx{3, 1, std::nullopt, 5.0};
    CHECK(spectral_k_oracle(3, 1, 0.7, 5.0) ==
          doctest::Approx(k_family(idx, 0.7)).epsilon(1e-10));
    CHECK_THROWS_AS(spectral_k_oracle(0, 1, 1.0, 3.0), error);
    CHECK_THROWS_AS(spectral_k_oracle(1, 1, -1.0, 3.0), error);
}

TEST_CASE("spectral_k_oracle large-dimension path keeps digits") {
    for (double y : {0.3, 0.8}) {
        const SpectralIndex idx{2, 1, std::nullopt, 50.0};
        const double oracle = spectral_k_oracle(2, 1, y, 50.0);
        const double fam = k_family(idx, y);
        CHECK(std::abs(oracle - fam) <= 1e-9 * std::abs(fam));
    }
}

TEST_CASE("spectral_h_oracle collapses") {
    const double d111 = 1 + 1 + 1 - 2 + (3.0 - 2.0) / 2.0;
    CHECK(spectral_h_oracle(1, 1, 1, 1.0, 1.0, 3.0) ==
          doctest::Approx(gamma_fn(d111 + 1.0) / gamma_fn(3.0)).epsilon(1e-11));
    // y2 = 1/y1 reduces the first F1 slot: H_{1,1,1}(u,1/u) = K_{2,1}(u)
    CHECK(spectral_h_oracle(1, 1, 1, 1.7, 1.0 / 1.7, 4.0) ==
          doctest::Approx(spectral_k_oracle(2, 1, 1.7, 4.0)).epsilon(1e-10));
    const SpectralIndex idx{2, 1, 1, 4.0};
    CHECK(spectral_h_oracle(2, 1, 1, 0.8, 1.3, 4.0) ==
          doctest::Approx(h_family(idx, 0.8, 1.3)).epsilon(1e-10));
}

TEST_CASE("spectral_n_oracle matches the lower collapses and rejects bad input") {
    {
        const int al[] = {2, 1};
        const double ys[] = {0.7};
        CHECK(spectral_n_oracle(al, ys, 5.0) ==
              doctest::Approx(spectral_k_oracle(2, 1, 0.7, 5.0)).epsilon(1e-12));
    }
    {
        const int al[] = {1, 1, 1};
        const double ys[] = {0.8, 1.3};
        CHECK(spectral_n_oracle(al, ys, 4.0) ==
              doctest::Approx(spectral_h_oracle(1, 1, 1, 0.8, 1.3, 4.0)).epsilon(1e-12));
    }
    {
        const int al[] = {1, 1, 1};
        const double ys[] = {0.5, 0.5, 0.5}; // size mismatch
        CHECK_THROWS_AS(spectral_n_oracle(al, ys, 4.0), error);
    }
    {
        const int al[] = {1, 0, 1};
        const double ys[] = {0.5};
        CHECK_THROWS_AS(spectral_n_oracle(al, ys, 4.0), error);
    }
}
