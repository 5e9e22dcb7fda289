#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>

#include "modcurv/errors.hpp"
#include "modcurv/report.hpp"
#include "modcurv/sweep.hpp"

using namespace modcurv;

TEST_CASE("report finalize and pass logic") {
    RelationReport r;
    r.relation_id = "demo";
    r.tolerance = 1e-9;
    r.samples = {{"p0", 1e-12}, {"p1", 5e-10}, {"p2", 3e-11}};
    r.finalize();
    CHECK(r.max_abs_residual == doctest::Approx(5e-10));
    CHECK(r.passed);
    r.samples.push_back({"p3", 2e-9});
    r.finalize();
    CHECK(!r.passed);
}

TEST_CASE("JSON round trip is lossless") {
    RelationReport r;
    r.relation_id = "thm4_10.K/m=3";
    r.grid_spec = "6 u-points";
    r.tolerance = 1e-7;
    r.fitted_constants = {{"c_fit", -2.0}, {"degenerate", 0.0}};
    r.samples = {{"m=3 u=0.5", 1.25e-13}, {"m=3 u=2", 7.5e-14}};
    r.finalize();
    const std::vector<RelationReport> in = {r};
    const std::string js = reports_to_json(in, ToleranceConfig{});
    const auto out = reports_from_json(js);
    REQUIRE(out.size() == 1);
    CHECK(out[0].relation_id == r.relation_id);
    CHECK(out[0].grid_spec == r.grid_spec);
    CHECK(out[0].max_abs_residual == r.max_abs_residual);
    CHECK(out[0].tolerance == r.tolerance);
    CHECK(out[0].passed == r.passed);
    CHECK(out[0].fitted_constants == r.fitted_constants);
    REQUIRE(out[0].samples.size() == 2);
    CHECK(out[0].samples[1].point == "m=3 u=2");
    CHECK(out[0].samples[1].residual == r.samples[1].residual);
}

TEST_CASE("CSV has one row per grid point") {
    RelationReport r;
    r.relation_id = "demo";
    r.tolerance = 1.0;
    r.samples = {{"a", 0.1}, {"b,with,commas", 0.2}};
    r.finalize();
    const std::string csv = reports_to_csv(std::vector<RelationReport>{r});
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 3); // header + 2 samples
    CHECK(csv.find("b;with;commas") != std::string::npos);
}

TEST_CASE("tolerance config parsing") {
    const char* path = "test_tolerances.cfg";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "hypergeo = 1e-8\n";
        f << "thm4_10=5e-7\n";
    }
    const ToleranceConfig cfg = ToleranceConfig::from_file(path);
    CHECK(cfg.hypergeo == doctest::Approx(1e-8));
    CHECK(cfg.thm4_10 == doctest::Approx(5e-7));
    CHECK(cfg.spectral == doctest::Approx(1e-8)); // untouched default
    {
        std::ofstream f(path);
        f << "nonsense = 1\n";
    }
    CHECK_THROWS_AS(ToleranceConfig::from_file(path), error);
    CHECK_THROWS_AS(ToleranceConfig::from_file("no_such_file.cfg"), error);
    std::remove(path);
}

TEST_CASE("grid spec validation") {
    GridSpec g = GridSpec::defaults();
    CHECK_NOTHROW(g.validate_eh());
    g.m_values.push_back(2.0);
    CHECK_THROWS_AS(g.validate_eh(), error);
    g = GridSpec::defaults();
    g.arg_values.push_back(-0.5);
    CHECK_THROWS_AS(g.validate_eh(), error);
}

TEST_CASE("serial and parallel sweeps agree exactly") {
    std::mt19937_64 rng(123);
    std::vector<double> vals(1000);
    for (double& v : vals) v = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const ResidualFn f = [&](std::size_t i) { return vals[i]; };
    const SweepOutcome s = sweep_serial(vals.size(), f);
    const SweepOutcome p = sweep_parallel(vals.size(), f);
    CHECK(s.max_residual == p.max_residual);
    CHECK(s.argmax == p.argmax);
    const auto ms = residual_map(vals.size(), f);
    set_parallel_enabled(false);
    const auto mp = residual_map(vals.size(), f);
    set_parallel_enabled(true);
    CHECK(ms == mp);
}

TEST_CASE("sweep tie-break picks the smallest index") {
    std::vector<double> vals = {0.1, 0.9, 0.4, 0.9, 0.2};
    const ResidualFn f = [&](std::size_t i) { return vals[i]; };
    CHECK(sweep_serial(vals.size(), f).argmax == 1);
    CHECK(sweep_parallel(vals.size(), f).argmax == 1);
    CHECK(sweep(0, f).max_residual == 0.0);
}

TEST_CASE("MODCURV_THREADS caps the thread budget") {
    setenv("MODCURV_THREADS", "1", 1);
    CHECK(effective_threads() == 1);
    unsetenv("MODCURV_THREADS");
    CHECK(effective_threads() >= 1);
}
