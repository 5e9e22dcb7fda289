#include "modcurv/suites.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "modcurv/errors.hpp"
#include "modcurv/gamma.hpp"
#include "modcurv/hypergeo.hpp"
#include "modcurv/quadrature.hpp"
#include "modcurv/spectral.hpp"
#include "modcurv/sweep.hpp"
#include "modcurv/symbol_calculus.hpp"
#include "modcurv/variational.hpp"

namespace modcurv {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// run a residual function over labelled points (parallel over points)
RelationReport grid_report(std::string id, std::string grid_desc, double tol,
                           const std::vector<std::string>& labels,
                           const std::function<double(std::size_t)>& residual) {
    RelationReport r;
    r.relation_id = std::move(id);
    r.grid_spec = std::move(grid_desc);
    r.tolerance = tol;
    const std::vector<double> res = residual_map(labels.size(), residual);
    for (std::size_t i = 0; i < labels.size(); ++i) r.samples.push_back({labels[i], res[i]});
    r.finalize();
    return r;
}

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(std::uint64_t seed) : rng(seed) {}
    double uni(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
};

// ---------- hypergeo suite ----------

RelationReport rel_series_vs_integral_2f1(double tol) {
    Draw d(0xC0FFEE01);
    const int n = 70;
    std::vector<std::string> labels;
    std::vector<GaussParams> ps;
    std::vector<double> zs;
    for (int i = 0; i < n; ++i) {
        GaussParams p;
        p.b = d.uni(0.3, 2.5);
        p.c = p.b + d.uni(0.3, 2.5);
        p.a = d.uni(0.3, 3.0);
        const double z = d.uni(-0.9, 0.9);
        ps.push_back(p);
        zs.push_back(z);
        labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " c=" + fmt(p.c) + " z=" + fmt(z));
    }
    return grid_report(
        "hypergeo.series_vs_integral.2f1", "70 random draws, Euler-integral oracle", tol, labels,
        [&](std::size_t i) {
            const GaussParams& p = ps[i];
            const double z = zs[i];
            const double series = gauss_2f1(p, z).value;
            const double pref = std::exp(log_gamma(p.c) - log_gamma(p.b) - log_gamma(p.c - p.b));
            const double quad =
                pref * tanh_sinh_01([&](double t, double omt) {
                           return std::pow(t, p.b - 1.0) * std::pow(omt, p.c - p.b - 1.0) *
                                  std::pow(1.0 - z * t, -p.a);
                       }).value;
            return std::abs(series - quad) / (1.0 + std::abs(quad));
        });
}

RelationReport rel_series_vs_integral_f1(double tol) {
    Draw d(0xC0FFEE02);
    const int n = 60;
    std::vector<std::string> labels;
    std::vector<AppellF1Params> ps;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        AppellF1Params p;
        p.b = d.uni(0.3, 1.8);
        p.b2 = d.uni(0.3, 1.8);
        p.c = p.b + p.b2 + d.uni(0.3, 2.0);
        p.a = d.uni(0.3, 3.0);
        const double x = d.uni(-0.8, 0.8);
        const double y = d.uni(-1.0, 1.0) * (0.9 - std::abs(x));
        ps.push_back(p);
        xy.emplace_back(x, y);
        labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " b'=" + fmt(p.b2) +
                         " c=" + fmt(p.c) + " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report("hypergeo.series_vs_integral.f1", "60 random draws, 2-simplex oracle", tol,
                       labels, [&](std::size_t i) {
                           const double series = appell_f1_series(ps[i], xy[i].first, xy[i].second);
                           const double quad = appell_f1_quad(ps[i], xy[i].first, xy[i].second);
                           return std::abs(series - quad) / (1.0 + std::abs(quad));
                       });
}

RelationReport rel_series_vs_integral_f2(double tol) {
    Draw d(0xC0FFEE03);
    const int n = 50;
    std::vector<std::string> labels;
    std::vector<AppellF2Params> ps;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        AppellF2Params p;
        p.b = d.uni(0.3, 1.5);
        p.b2 = d.uni(0.3, 1.5);
        p.c = p.b + d.uni(0.3, 2.0);
        p.c2 = p.b2 + d.uni(0.3, 2.0);
        p.a = d.uni(0.3, 2.5);
        const double x = d.uni(-0.8, 0.8);
        const double y = d.uni(-1.0, 1.0) * (0.9 - std::abs(x));
        ps.push_back(p);
        xy.emplace_back(x, y);
        labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " b'=" + fmt(p.b2) +
                         " c=" + fmt(p.c) + " c'=" + fmt(p.c2) + " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report("hypergeo.series_vs_integral.f2", "50 random draws, square-domain oracle",
                       tol, labels, [&](std::size_t i) {
                           const double series = appell_f2_series(ps[i], xy[i].first, xy[i].second);
                           const double quad = appell_f2_quad(ps[i], xy[i].first, xy[i].second);
                           return std::abs(series - quad) / (1.0 + std::abs(quad));
                       });
}

RelationReport rel_series_vs_integral_fd(double tol) {
    Draw d(0xC0FFEE04);
    const int n2 = 18, n3 = 2; // n=3 simplex draws are expensive; depth gets
                               // further coverage in the oracle suite
    std::vector<std::string> labels;
    std::vector<LauricellaParams> ps;
    std::vector<std::vector<double>> xs;
    for (int i = 0; i < n2 + n3; ++i) {
        const int nv = i < n2 ? 2 : 3;
        LauricellaParams p;
        p.a = d.uni(0.3, 2.5);
        std::vector<double> x;
        double asum = 0.0, budget = 0.85;
        for (int k = 0; k < nv; ++k) {
            p.alphas.push_back(d.uni(0.4, 1.5));
            asum += p.alphas.back();
            x.push_back(d.uni(-1.0, 1.0) * budget / static_cast<double>(nv - k));
            budget -= std::abs(x.back());
        }
        p.c = asum + d.uni(0.3, 2.0);
        ps.push_back(p);
        xs.push_back(x);
        std::string xdesc;
        for (double xv : x) xdesc += fmt(xv) + ",";
        labels.push_back("n=" + fmt(nv) + " a=" + fmt(p.a) + " c=" + fmt(p.c) + " x=(" + xdesc +
                         ")");
    }
    return grid_report("hypergeo.series_vs_integral.fd", "20 random draws, n-simplex oracle", tol,
                       labels, [&](std::size_t i) {
                           const double series = lauricella_fd_series(ps[i], xs[i]);
                           const double quad = lauricella_fd_quad(ps[i], xs[i]);
                           return std::abs(series - quad) / (1.0 + std::abs(quad));
                       });
}

RelationReport rel_contiguous(double tol, int n_params = 10, int n_z = 10) {
    Draw d(0xC0FFEE05);
    std::vector<std::string> labels;
    std::vector<GaussParams> ps;
    std::vector<double> zs;
    for (int i = 0; i < n_params; ++i) {
        GaussParams p;
        p.a = d.uni(0.4, 3.0);
        p.b = d.uni(0.4, 3.0);
        p.c = d.uni(2.1, 5.0);
        for (int j = 0; j < n_z; ++j) {
            const double z = -0.85 + 1.7 * (j + 0.5) / n_z;
            ps.push_back(p);
            zs.push_back(z);
            labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " c=" + fmt(p.c) +
                             " z=" + fmt(z));
        }
    }
    return grid_report(
        "hypergeo.contiguous.15",
        "10x10 (params,z) grid; max of the 15 residuals, scaled by max(1,|z dF/dz|)", tol, labels,
        [&](std::size_t i) {
            const auto res = contiguous_residuals(ps[i], zs[i]);
            const double scale = std::max(1.0, std::abs(zs[i] * gauss_2f1_deriv(ps[i], zs[i])));
            double worst = 0.0;
            for (double r : res) worst = std::max(worst, r / scale);
            return worst;
        });
}

RelationReport rel_pfaff_euler(double tol) {
    std::vector<std::string> labels;
    std::vector<GaussParams> ps;
    std::vector<double> zs;
    std::vector<Transform> which;
    const GaussParams base[] = {{2, 1, 3}, {1.2, 0.7, 2.4}, {1.5, 2.5, 3.2}, {0.8, 1.9, 4.1}};
    for (const auto& p : base)
        for (double z : {-0.8, -0.4, 0.25, 0.45})
            for (Transform t : {Transform::pfaff_a, Transform::pfaff_b, Transform::euler}) {
                ps.push_back(p);
                zs.push_back(z);
                which.push_back(t);
                const char* nm = t == Transform::euler ? "euler"
                                 : t == Transform::pfaff_a ? "pfaff_a" : "pfaff_b";
                labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " c=" + fmt(p.c) +
                                 " z=" + fmt(z) + " " + nm);
            }
    return grid_report("hypergeo.pfaff_euler", "4 params x 4 z x 3 transforms, both sides by series",
                       tol, labels, [&](std::size_t i) {
                           return pfaff_euler_residual(ps[i], zs[i], which[i]);
                       });
}

RelationReport rel_diff_relations(double tol) {
    Draw d(0xC0FFEE06);
    std::vector<std::string> labels;
    std::vector<GaussParams> ps;
    std::vector<double> zs;
    for (int i = 0; i < 24; ++i) {
        GaussParams p{d.uni(0.5, 3.0), d.uni(0.5, 3.0), d.uni(2.1, 5.0)};
        const double z = d.uni(-0.8, 0.8);
        ps.push_back(p);
        zs.push_back(z);
        labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " c=" + fmt(p.c) + " z=" + fmt(z));
    }
    return grid_report("hypergeo.diff_relations",
                       "24 random points; F(a+),F(b+),F(c-) with dF/dz in parameter-shift form",
                       tol, labels, [&](std::size_t i) {
                           const auto r = gauss_diff_residuals(ps[i], zs[i]);
                           return std::max({r[0], r[1], r[2]});
                       });
}

RelationReport rel_f1_diff_system(double tol) {
    Draw d(0xC0FFEE07);
    std::vector<std::string> labels;
    std::vector<AppellF1Params> ps;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < 16; ++i) {
        AppellF1Params p{d.uni(0.5, 2.5), d.uni(0.5, 2.0), d.uni(0.5, 2.0), d.uni(3.0, 6.0)};
        const double x = d.uni(-0.5, 0.5);
        const double y = d.uni(-1.0, 1.0) * (0.85 - std::abs(x));
        ps.push_back(p);
        xy.emplace_back(x, y);
        labels.push_back("a=" + fmt(p.a) + " b=" + fmt(p.b) + " b'=" + fmt(p.b2) +
                         " c=" + fmt(p.c) + " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report("hypergeo.f1_diff_system",
                       "16 random points; a+, b+, b'+, c+ relations, shifted-series partials", tol,
                       labels, [&](std::size_t i) {
                           const auto r = f1_diff_residuals(ps[i], xy[i].first, xy[i].second);
                           return std::max({r[0], r[1], r[2], r[3]});
                       });
}

RelationReport rel_f1_dd(double tol) {
    Draw d(0xC0FFEE08);
    std::vector<std::string> labels;
    std::vector<std::array<double, 4>> pts;
    for (int i = 0; i < 40; ++i) {
        const double a = d.uni(0.5, 3.5), c = d.uni(2.1, 6.0);
        const double x = d.uni(-0.6, 0.6);
        const double y = d.uni(-1.0, 1.0) * (0.9 - std::abs(x));
        pts.push_back({a, c, x, y});
        labels.push_back("a=" + fmt(a) + " c=" + fmt(c) + " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report("hypergeo.f1_dd_vs_series",
                       "40 random points; divided difference vs the F1 double series", tol, labels,
                       [&](std::size_t i) {
                           const auto& q = pts[i];
                           const double dd = f1_divided_difference(q[0], q[1], q[2], q[3]);
                           const double ser =
                               appell_f1_series(AppellF1Params{q[0], 1.0, 1.0, q[1]}, q[2], q[3]);
                           return rel_gap(dd, ser);
                       });
}

RelationReport rel_f1_c2(double tol) {
    Draw d(0xC0FFEE09);
    std::vector<std::string> labels;
    std::vector<std::array<double, 4>> pts;
    for (int i = 0; i < 30; ++i) {
        const double a = d.uni(0.6, 3.5), c = d.uni(2.6, 6.0);
        const double x = d.uni(-0.6, 0.6);
        const double y = d.uni(-1.0, 1.0) * (0.9 - std::abs(x));
        pts.push_back({a, c, x, y});
        labels.push_back("a=" + fmt(a) + " c=" + fmt(c) + " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report(
        "hypergeo.f1_c2_vs_series", "30 random points; F1(a;1,2;c) reduction vs double series + dd route",
        tol, labels, [&](std::size_t i) {
            const auto& q = pts[i];
            const double red = f1_c2_reduction(q[0], q[1], q[2], q[3]);
            const double ser = appell_f1_series(AppellF1Params{q[0], 1.0, 2.0, q[1]}, q[2], q[3]);
            const double ddr = f1_one_two_dd(q[0], q[1], q[2], q[3]);
            return std::max(rel_gap(red, ser), rel_gap(ddr, ser));
        });
}

RelationReport rel_f2_to_2f1(double tol) {
    std::vector<std::string> labels;
    struct Case { int q; double a; int p; double b; double x, y; };
    std::vector<Case> cases;
    Draw d(0xC0FFEE0A);
    for (int i = 0; i < 20; ++i) {
        Case c;
        c.q = 1 + static_cast<int>(d.uni(0, 2.999));
        c.p = std::min(c.q - 1, static_cast<int>(d.uni(0, 1.999)));
        c.a = d.uni(0.5, 2.5);
        c.b = d.uni(2.2, 5.0);
        c.x = d.uni(-0.4, 0.4);
        c.y = d.uni(0.05, 0.85 - std::abs(c.x)); // keep away from y=0 (1/y^{p+1})
        cases.push_back(c);
        labels.push_back("q=" + fmt(c.q) + " a=" + fmt(c.a) + " p=" + fmt(c.p) + " b=" + fmt(c.b) +
                         " x=" + fmt(c.x) + " y=" + fmt(c.y));
    }
    return grid_report("hypergeo.f2_to_2f1", "20 random points; finite 2F1 sum vs F2 series", tol,
                       labels, [&](std::size_t i) {
                           const Case& c = cases[i];
                           const double red = f2_to_2f1(c.q, c.a, c.p, c.b, c.x, c.y);
                           const double ser = appell_f2_series(
                               AppellF2Params{static_cast<double>(c.q + 1), c.a,
                                              static_cast<double>(c.p + 1), c.b,
                                              static_cast<double>(c.p + 2)},
                               c.x, c.y);
                           return rel_gap(red, ser);
                       });
}

RelationReport rel_f1_via_f2(double tol) {
    // F1(a;b,b';c;x,y) = (x/y)^{b'} F2(b+b'; a, b'; c, b+b'; x, 1-x/y) on the
    // grid where the F2 series converges
    Draw d(0xC0FFEE0B);
    std::vector<std::string> labels;
    std::vector<std::array<double, 6>> pts;
    while (pts.size() < 20) {
        const double a = d.uni(0.5, 2.5), b = d.uni(0.4, 1.6), b2 = d.uni(0.4, 1.6);
        const double c = b + b2 + d.uni(0.4, 2.0);
        const double x = d.uni(0.05, 0.45);
        const double y = x / d.uni(0.55, 0.95); // 1 - x/y in (0.05, 0.45), same sign domain
        if (std::abs(x) + std::abs(1.0 - x / y) >= 0.9) continue;
        if (std::abs(x) + std::abs(y) >= 0.9) continue;
        pts.push_back({a, b, b2, c, x, y});
        labels.push_back("a=" + fmt(a) + " b=" + fmt(b) + " b'=" + fmt(b2) + " c=" + fmt(c) +
                         " x=" + fmt(x) + " y=" + fmt(y));
    }
    return grid_report("hypergeo.f1_via_f2_reduction",
                       "20 points inside both series domains; (x/y)^{b'} branch", tol, labels,
                       [&](std::size_t i) {
                           const auto& q = pts[i];
                           const double lhs =
                               appell_f1_series(AppellF1Params{q[0], q[1], q[2], q[3]}, q[4], q[5]);
                           const double rhs =
                               std::pow(q[4] / q[5], q[2]) *
                               appell_f2_series(AppellF2Params{q[1] + q[2], q[0], q[2], q[3],
                                                               q[1] + q[2]},
                                                q[4], 1.0 - q[4] / q[5]);
                           return rel_gap(lhs, rhs);
                       });
}

RelationReport rel_symbolic_a1c(double tol) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 3>> pts; // a, c, z
    Draw d(0xC0FFEE0C);
    while (pts.size() < 30) {
        const int c = 1 + static_cast<int>(d.uni(0, 5.999));
        double a = d.uni(0.3, 6.0);
        bool bad = false;
        for (int k = 1; k < c; ++k)
            if (std::abs(a - c + k) < 1e-3) bad = true;
        if (bad) a += 0.01;
        double z = d.uni(-0.9, 0.9);
        if (std::abs(z) < 0.05) z = 0.3;
        // the descending-c formula amplifies roundoff by |(z-1)/z|^{c-1};
        // keep draws where that factor stays tame
        if (std::pow(std::abs((z - 1.0) / z), c - 1) > 100.0) continue;
        pts.push_back({a, static_cast<double>(c), z});
        labels.push_back("a=" + fmt(a) + " c=" + fmt(c) + " z=" + fmt(z));
    }
    return grid_report("hypergeo.symbolic_a1c",
                       "30 random points with |(z-1)/z|^{c-1} <= 100; descending-c vs series", tol,
                       labels, [&](std::size_t i) {
                           const auto& q = pts[i];
                           const double sym = symbolic_2f1_a1c(q[0], static_cast<int>(q[1]), q[2]);
                           const double ser =
                               gauss_2f1_series(GaussParams{q[0], 1.0, q[1]}, q[2]);
                           return rel_gap(sym, ser);
                       });
}

RelationReport rel_cf_ratio(double tol) {
    Draw d(0xC0FFEE0D);
    std::vector<std::string> labels;
    std::vector<std::array<double, 4>> pts; // alpha, beta, gamma, z
    for (int i = 0; i < 20; ++i) {
        const double alpha = d.uni(0.8, 4.0), beta = d.uni(0.5, 2.5);
        const double gamma_q = d.uni(2.2, 6.0);
        const double z = d.uni(-0.8, 0.8);
        pts.push_back({alpha, beta, gamma_q, z});
        labels.push_back("alpha=" + fmt(alpha) + " beta=" + fmt(beta) + " gamma=" + fmt(gamma_q) +
                         " z=" + fmt(z));
    }
    return grid_report("hypergeo.cf_ratio", "20 random points; CF depth 60 vs direct series ratio",
                       tol, labels, [&](std::size_t i) {
                           const auto& q = pts[i];
                           const GaussParams p{q[0], q[1], q[2]};
                           const double cf = gauss_cf_ratio(p, q[3], 60);
                           const double direct =
                               gauss_2f1(GaussParams{q[0] + 1.0, q[1], q[2] + 1.0}, q[3]).value /
                               gauss_2f1(p, q[3]).value;
                           return rel_gap(cf, direct);
                       });
}

// ---------- oracle suite ----------

RelationReport rel_eq23(double tol) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 4>> pts;
    for (double A : {0.5, 1.0, 2.0})
        for (double B : {0.5, 1.0, 2.0})
            for (auto ab : {std::pair{1.0, 2.0}, std::pair{2.5, 1.5}}) {
                pts.push_back({A, B, ab.first, ab.second});
                labels.push_back("A=" + fmt(A) + " B=" + fmt(B) + " a=" + fmt(ab.first) +
                                 " b=" + fmt(ab.second));
            }
    return grid_report(
        "oracles.eq2_3_kummer", "18-point (A,B,a,b) grid; e^{-B}/Gamma(a+b) 1F1(a;a+b;B-A)", tol,
        labels, [&](std::size_t i) {
            const auto& q = pts[i];
            const double lhs = contour_ab_rhs(q[0], q[1], q[2], q[3]);
            const double rhs = std::exp(-q[1] - log_gamma(q[2] + q[3])) *
                               kummer_1f1(q[2], q[2] + q[3], q[1] - q[0]).value;
            return rel_gap(lhs, rhs);
        });
}

RelationReport rel_mellin(double tol) {
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> pts;
    for (double A : {0.5, 1.0, 3.0})
        for (double a : {1.0, 2.0, 3.5}) {
            pts.emplace_back(A, a);
            labels.push_back("A=" + fmt(A) + " a=" + fmt(a));
        }
    return grid_report("oracles.mellin", "A in {0.5,1,3}, a in {1,2,3.5}; (1/G(a)) int = A^-a", tol,
                       labels, [&](std::size_t i) {
                           return rel_gap(mellin_power(pts[i].first, pts[i].second),
                                          std::pow(pts[i].first, -pts[i].second));
                       });
}

RelationReport rel_k_statement(double tol, const GridSpec& grid) {
    std::vector<std::string> labels;
    struct P { int a, b; double y, m; };
    std::vector<P> pts;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (double y : {0.25, 0.5, 1.0, 2.0, 4.0})
                for (double m : grid.m_values) {
                    pts.push_back({a, b, y, m});
                    labels.push_back("a=" + fmt(a) + " b=" + fmt(b) + " y=" + fmt(y) +
                                     " m=" + fmt(m));
                }
    return grid_report("oracles.k_statement", "a,b in 1..3, y in {0.25..4}, default m grid", tol,
                       labels, [&](std::size_t i) {
                           const P& p = pts[i];
                           const double oracle = spectral_k_oracle(p.a, p.b, p.y, p.m);
                           const double fam =
                               k_family(SpectralIndex{p.a, p.b, std::nullopt, p.m}, p.y);
                           return rel_gap(oracle, fam);
                       });
}

RelationReport rel_h_statement(double tol, const GridSpec& grid) {
    std::vector<std::string> labels;
    struct P { int a, b, c; double y1, y2, m; };
    std::vector<P> pts;
    const std::pair<double, double> ys[] = {{0.25, 2.0}, {0.5, 0.5}, {1.0, 4.0}, {2.0, 0.8},
                                            {4.0, 0.25}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (const auto& y : ys)
                    for (double m : grid.m_values) {
                        pts.push_back({a, b, c, y.first, y.second, m});
                        labels.push_back("a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c) +
                                         " y1=" + fmt(y.first) + " y2=" + fmt(y.second) +
                                         " m=" + fmt(m));
                    }
    return grid_report("oracles.h_statement", "a,b,c in 1..3, 5 (y1,y2) pairs, default m grid", tol,
                       labels, [&](std::size_t i) {
                           const P& p = pts[i];
                           const double oracle =
                               spectral_h_oracle(p.a, p.b, p.c, p.y1, p.y2, p.m);
                           const double fam =
                               h_family(SpectralIndex{p.a, p.b, p.c, p.m}, p.y1, p.y2);
                           return rel_gap(oracle, fam);
                       });
}

RelationReport rel_n_collapse(double tol) {
    std::vector<std::string> labels = {
        "n=1 a=(2,1) y=0.7 m=5",    "n=1 a=(3,2) y=1.6 m=3",
        "n=2 a=(1,1,1) y=(0.8,1.3) m=4", "n=2 a=(2,1,1) y=(1.5,0.6) m=2.5",
    };
    return grid_report(
        "oracles.n_collapse", "n=1 -> K oracle, n=2 -> H oracle", tol, labels,
        [&](std::size_t i) {
            switch (i) {
                case 0: {
                    const int al[] = {2, 1};
                    const double ys[] = {0.7};
                    return rel_gap(spectral_n_oracle(al, ys, 5.0), spectral_k_oracle(2, 1, 0.7, 5.0));
                }
                case 1: {
                    const int al[] = {3, 2};
                    const double ys[] = {1.6};
                    return rel_gap(spectral_n_oracle(al, ys, 3.0), spectral_k_oracle(3, 2, 1.6, 3.0));
                }
                case 2: {
                    const int al[] = {1, 1, 1};
                    const double ys[] = {0.8, 1.3};
                    return rel_gap(spectral_n_oracle(al, ys, 4.0),
                                   spectral_h_oracle(1, 1, 1, 0.8, 1.3, 4.0));
                }
                default: {
                    const int al[] = {2, 1, 1};
                    const double ys[] = {1.5, 0.6};
                    return rel_gap(spectral_n_oracle(al, ys, 2.5),
                                   spectral_h_oracle(2, 1, 1, 1.5, 0.6, 2.5));
                }
            }
        });
}

RelationReport rel_n3_vs_fd(double tol) {
    struct P { std::array<int, 4> al; std::array<double, 3> ys; double m; };
    const std::vector<P> pts = {
        {{1, 1, 1, 1}, {1.2, 0.9, 1.1}, 4.0},
        {{2, 1, 1, 1}, {0.8, 1.4, 0.7}, 3.0},
        {{1, 2, 1, 1}, {1.1, 1.05, 0.95}, 5.0},
    };
    std::vector<std::string> labels;
    for (const auto& p : pts)
        labels.push_back("al=(" + fmt(p.al[0]) + "," + fmt(p.al[1]) + "," + fmt(p.al[2]) + "," +
                         fmt(p.al[3]) + ") m=" + fmt(p.m));
    return grid_report(
        "oracles.n3_vs_fd", "3-simplex oracle vs Gamma-prefactored F_D^(3) series", tol, labels,
        [&](std::size_t i) {
            const P& p = pts[i];
            const double oracle = spectral_n_oracle(p.al, p.ys, p.m);
            double asum = 0.0;
            for (int a : p.al) asum += a;
            const double d = asum - 2.0 + (p.m - 2.0) / 2.0;
            const double z1 = 1.0 - p.ys[0];
            const double z2 = 1.0 - p.ys[0] * p.ys[1];
            const double z3 = 1.0 - p.ys[0] * p.ys[1] * p.ys[2];
            LauricellaParams lp;
            lp.a = d + 1.0;
            lp.alphas = {double(p.al[1]), double(p.al[2]), double(p.al[3])};
            lp.c = asum;
            const double zs[] = {z1, z2, z3};
            const double fd = lauricella_fd(lp, zs).value;
            const double rhs = std::exp(log_gamma(d + 1.0) - log_gamma(asum)) * fd;
            return rel_gap(oracle, rhs);
        });
}

RelationReport rel_abc_checks(double tol) {
    std::vector<std::string> labels = {
        "A=B=C=1.3 a=1 b=2 c=1.5 (Dirichlet)",
        "C=B: (1.2, 0.7, 0.7, 1, 1.5, 2) vs ab-merge",
        "elementary (1,2,1,1)",
    };
    return grid_report(
        "oracles.contour_abc", "degenerate collapses and the elementary antiderivative", tol,
        labels, [&](std::size_t i) {
            switch (i) {
                case 0: {
                    const double v = contour_abc_rhs(1.3, 1.3, 1.3, 1.0, 2.0, 1.5);
                    return rel_gap(v, std::exp(-1.3 - log_gamma(4.5)));
                }
                case 1: {
                    const double v = contour_abc_rhs(1.2, 0.7, 0.7, 1.0, 1.5, 2.0);
                    return rel_gap(v, contour_ab_rhs(1.2, 0.7, 1.0, 3.5));
                }
                default: {
                    const double v = contour_ab_rhs(1.0, 2.0, 1.0, 1.0);
                    return rel_gap(v, std::exp(-1.0) * (1.0 - std::exp(-1.0)));
                }
            }
        });
}

RelationReport rel_abc_qmc(double tol) {
    std::vector<std::string> labels = {"(1,2,3,1,1,1)", "(0.5,1.5,2.5,2,1,1)"};
    return grid_report("oracles.contour_abc_qmc",
                       "tanh-sinh vs quasi-Monte-Carlo simplex route (4e6 Halton points)", tol,
                       labels, [&](std::size_t i) {
                           const double A = i == 0 ? 1.0 : 0.5, B = i == 0 ? 2.0 : 1.5,
                                        C = i == 0 ? 3.0 : 2.5;
                           const double a = i == 0 ? 1.0 : 2.0;
                           const double v = contour_abc_rhs(A, B, C, a, 1.0, 1.0);
                           const double q = contour_abc_rhs_qmc(A, B, C, a, 1.0, 1.0, 4000000);
                           return rel_gap(v, q);
                       });
}

RelationReport rel_oscillatory(double tol) {
    struct P { double A, B; int a, b; double R; };
    const std::vector<P> pts = {
        {1.0, 1.0, 1, 1, 1e4}, {1.0, 2.0, 1, 2, 1e4}, {0.5, 1.5, 2, 1, 1e4},
        {1.0, 1.0, 2, 2, 1e4}, {2.0, 1.0, 3, 1, 1e4},
    };
    std::vector<std::string> labels;
    for (const auto& p : pts)
        labels.push_back("A=" + fmt(p.A) + " B=" + fmt(p.B) + " a=" + fmt(p.a) + " b=" + fmt(p.b) +
                         " R=" + fmt(p.R));
    return grid_report("oracles.oscillatory", "truncated line integral vs smooth right side", tol,
                       labels, [&](std::size_t i) {
                           const P& p = pts[i];
                           const double lhs = oscillatory_lhs_ab(p.A, p.B, p.a, p.b, p.R);
                           const double rhs = contour_ab_rhs(p.A, p.B, p.a, p.b);
                           return rel_gap(lhs, rhs);
                       });
}

RelationReport rel_oscillatory_symmetry(double tol) {
    std::vector<std::string> labels = {"(A,a)<->(B,b) swap (1,2,0.5,1.5)",
                                       "(A,a)<->(B,b) swap (2,1,1.0,2.0)"};
    return grid_report("oracles.oscillatory_symmetry", "integrand symmetry under slot swap", tol,
                       labels, [&](std::size_t i) {
                           const double A = i == 0 ? 0.5 : 1.0, B = i == 0 ? 1.5 : 2.0;
                           const int a = i == 0 ? 1 : 2, b = i == 0 ? 2 : 1;
                           return rel_gap(oscillatory_lhs_ab(A, B, a, b, 2000.0),
                                          oscillatory_lhs_ab(B, A, b, a, 2000.0));
                       });
}

// ---------- spectral suite ----------

RelationReport rel_closed_25_m3(double tol) {
    std::vector<std::string> labels;
    std::vector<double> zs;
    for (int i = 0; i < 20; ++i) {
        const double z = 0.15 + 0.25 * i; // 0.15 .. 4.9
        zs.push_back(z);
        labels.push_back("z=" + fmt(z));
    }
    return grid_report(
        "spectral.closed_2_5.m3",
        "20 z-points; K~21, K~31 (relabelled), H~211, H~111 elementary forms at m=3", tol, labels,
        [&](std::size_t i) {
            const double z = zs[i];
            const double rz = std::sqrt(z);
            double worst = 0.0;
            const double k21 = tilde_k(SpectralIndex{2, 1, std::nullopt, 3.0}, 1.0 - z);
            worst = std::max(worst,
                             rel_gap(k21, std::sqrt(kPi) * (rz + 2.0) /
                                              (2.0 * (rz + 1.0) * (rz + 1.0) * rz)));
            const double k31 = tilde_k(SpectralIndex{3, 1, std::nullopt, 3.0}, 1.0 - z);
            worst = std::max(
                worst, rel_gap(k31, std::sqrt(kPi) * (3.0 * z + 9.0 * rz + 8.0) /
                                        (8.0 * std::pow(rz + 1.0, 3) * rz)));
            // x,y slots for the H displays
            const double x = z, y = 0.35 + 0.2 * static_cast<double>(i);
            const double rx = std::sqrt(x), ry = std::sqrt(y);
            const double h211 = tilde_h(SpectralIndex{2, 1, 1, 3.0}, 1.0 - x, 1.0 - y);
            const double h211_ref =
                std::sqrt(kPi) *
                (x * ry + rx * y + 4.0 * rx * ry + 2.0 * x + 4.0 * rx + 2.0 * y + 4.0 * ry + 2.0) /
                (2.0 * std::pow(rx + 1.0, 2) * rx * std::pow(ry + 1.0, 2) * ry * (rx + ry));
            worst = std::max(worst, rel_gap(h211, h211_ref));
            const double h111 = tilde_h(SpectralIndex{1, 1, 1, 3.0}, 1.0 - x, 1.0 - y);
            const double h111_ref = std::sqrt(kPi) * (rx + ry + 1.0) /
                                    ((rx + 1.0) * rx * (ry + 1.0) * ry * (rx + ry));
            worst = std::max(worst, rel_gap(h111, h111_ref));
            return worst;
        });
}

RelationReport rel_closed_25_m2(double tol) {
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 20; ++i) {
        const double s = 0.3 + 0.25 * i;
        const double t = 4.7 - 0.18 * i;
        pts.emplace_back(s, t);
        labels.push_back("s=" + fmt(s) + " t=" + fmt(t));
    }
    return grid_report(
        "spectral.closed_2_5.m2", "20 (s,t)-points; H~211 and H~311 elementary forms at m=2", tol,
        labels, [&](std::size_t i) {
            const double s = pts[i].first, t = pts[i].second;
            double worst = 0.0;
            const double h211 = tilde_h(SpectralIndex{2, 1, 1, 2.0}, 1.0 - s, 1.0 - t);
            const double h211_ref =
                (std::pow(t - 1.0, 2) * std::log(s) +
                 (s - 1.0) * ((t - 1.0) * (s - t) - (s - 1.0) * std::log(t))) /
                (std::pow(s - 1.0, 2) * std::pow(t - 1.0, 2) * (s - t));
            worst = std::max(worst, rel_gap(h211, h211_ref));
            const double h311 = tilde_h(SpectralIndex{3, 1, 1, 2.0}, 1.0 - s, 1.0 - t);
            const double h311_ref =
                ((s - 1.0) * (t - 1.0) * (s - t) * ((s - 3.0) * t - 3.0 * s + 5.0) +
                 2.0 * std::pow(s - 1.0, 3) * std::log(t) -
                 2.0 * std::pow(t - 1.0, 3) * std::log(s)) /
                (2.0 * std::pow(s - 1.0, 3) * std::pow(t - 1.0, 3) * (s - t));
            worst = std::max(worst, rel_gap(h311, h311_ref));
            return worst;
        });
}

RelationReport rel_modified_log(double tol) {
    std::vector<std::string> labels;
    std::vector<double> zs;
    for (int i = 0; i < 20; ++i) {
        const double z = 0.2 + 0.35 * i;
        if (std::abs(z - 1.0) < 1e-6) continue;
        zs.push_back(z);
        labels.push_back("z=" + fmt(z));
    }
    return grid_report("spectral.modified_log", "2F1(1,1;2;1-z) = ln z/(z-1)", tol, labels,
                       [&](std::size_t i) {
                           const double z = zs[i];
                           const double f = gauss_2f1(GaussParams{1, 1, 2}, 1.0 - z).value;
                           return rel_gap(f, std::log(z) / (z - 1.0));
                       });
}

RelationReport rel_delta_pairs(double tol, const GridSpec& grid) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 3>> pts;
    for (double m : grid.m_values) {
        if (!(m > 2.0)) continue;
        for (double s : grid.arg_values)
            for (double t : grid.arg_values) {
                pts.push_back({s, t, m});
                labels.push_back("s=" + fmt(s) + " t=" + fmt(t) + " m=" + fmt(m));
            }
    }
    return grid_report(
        "spectral.delta_closed_vs_hyper",
        "K/H/T closed forms vs hypergeometric combinations, default grid (m>2)", tol, labels,
        [&](std::size_t i) {
            const double s = pts[i][0], t = pts[i][1], m = pts[i][2];
            double worst = rel_gap(k_delta(s, m), k_delta_hyper(s, m));
            worst = std::max(worst, rel_gap(h_delta(s, t, m), h_delta_hyper(s, t, m)));
            worst = std::max(worst, rel_gap(t_delta(s, m), t_delta_hyper(s, m)));
            return worst;
        });
}

RelationReport rel_delta_spots(double tol) {
    std::vector<std::string> labels = {
        "K_delta(1;4) = 0",
        "K_delta(1;m) closed expression m=3",
        "t_delta s->1 Richardson vs analytic limit (m=5)",
        "h_delta(1,1;3) equals the F1-combination origin value",
        "h_delta t=1/s reduction (s=2, m=5)",
        "phi variants sqrt prefactors (y=4, m=3)",
    };
    return grid_report(
        "spectral.delta_spots", "spot identities for the b2 spectral functions", tol, labels,
        [&](std::size_t i) {
            switch (i) {
                case 0:
                    return std::abs(k_delta(1.0, 4.0));
                case 1:
                    return rel_gap(k_delta(1.0, 3.0), k_delta_at_one(3.0));
                case 2: {
                    // Neville extrapolation of t_delta(1+h;5), h -> 0
                    const double m = 5.0;
                    std::vector<double> hs = {0.32, 0.16, 0.08, 0.04, 0.02, 0.01};
                    std::vector<double> v(hs.size());
                    for (std::size_t k = 0; k < hs.size(); ++k) v[k] = t_delta(1.0 + hs[k], m);
                    for (std::size_t lvl = 1; lvl < hs.size(); ++lvl)
                        for (std::size_t k = 0; k + lvl < hs.size(); ++k)
                            v[k] = v[k + 1] + (v[k + 1] - v[k]) * hs[k + lvl] /
                                                  (hs[k] - hs[k + lvl]);
                    return rel_gap(v[0], t_delta(1.0, m)) / 10.0; // extrapolation-grade check
                }
                case 3: {
                    const double m = 3.0;
                    const double origin = (4.0 / m + 2.0) * gamma_fn(m / 2.0 + 2.0) / 6.0 -
                                          (4.0 / m + 8.0 / m) * gamma_fn(m / 2.0 + 3.0) / 24.0;
                    return rel_gap(h_delta(1.0, 1.0, m), origin);
                }
                case 4: {
                    const double s = 2.0, m = 5.0;
                    const double lhs = h_delta(s, 1.0 / s, m);
                    const double rhs = (4.0 / m + 2.0) *
                                           k_family(SpectralIndex{3, 1, std::nullopt, m}, s) -
                                       4.0 * s / m * k_family(SpectralIndex{3, 2, std::nullopt, m}, s) -
                                       8.0 / m * k_family(SpectralIndex{4, 1, std::nullopt, m}, s);
                    return rel_gap(lhs, rhs);
                }
                default: {
                    double worst = rel_gap(k_phi(4.0, 3.0), 2.0 * k_delta(4.0, 3.0));
                    worst = std::max(worst, rel_gap(k_phi(1.0, 3.0), k_delta(1.0, 3.0)));
                    worst = std::max(
                        worst, rel_gap(h_phi(3.0, 1.0 / 3.0, 4.5), h_delta(3.0, 1.0 / 3.0, 4.5)));
                    return worst;
                }
            }
        });
}

RelationReport rel_h_reduction(double tol) {
    std::vector<std::string> labels;
    struct P { int a, b, c; double u, m; };
    std::vector<P> pts;
    for (const auto& abc : {std::array{1, 1, 1}, std::array{2, 1, 1}, std::array{2, 2, 1},
                            std::array{3, 1, 2}})
        for (double u : {0.5, 1.6, 3.0})
            for (double m : {2.5, 4.0, 7.0}) {
                pts.push_back({abc[0], abc[1], abc[2], u, m});
                labels.push_back("a=" + fmt(abc[0]) + " b=" + fmt(abc[1]) + " c=" + fmt(abc[2]) +
                                 " u=" + fmt(u) + " m=" + fmt(m));
            }
    return grid_report("spectral.h_reduction", "H_{a,b,c}(u,1/u;m) = K_{a+c,b}(u;m)", tol, labels,
                       [&](std::size_t i) {
                           const P& p = pts[i];
                           const double h =
                               h_family(SpectralIndex{p.a, p.b, p.c, p.m}, p.u, 1.0 / p.u);
                           const double k =
                               k_family(SpectralIndex{p.a + p.c, p.b, std::nullopt, p.m}, p.u);
                           return rel_gap(h, k);
                       });
}

// ---------- recurrences / jets ----------

RelationReport rel_k_recurrences(double tol) {
    std::vector<std::string> labels;
    struct P { int a, b; double u, m; };
    std::vector<P> pts;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (double u : {-0.6, -0.3, 0.3, 0.6, 0.75})
                for (double m : {2.0, 2.5, 3.0, 4.0, 5.0, 6.25, 8.0}) {
                    pts.push_back({a, b, u, m});
                    labels.push_back("a=" + fmt(a) + " b=" + fmt(b) + " u=" + fmt(u) +
                                     " m=" + fmt(m));
                }
    return grid_report("recurrences.K", "dimension shift, b-shift, (a,b)-shift, m+2 recurrence",
                       tol, labels, [&](std::size_t i) {
                           const P& p = pts[i];
                           return k_shift_residuals(SpectralIndex{p.a, p.b, std::nullopt, p.m}, p.u)
                               .max();
                       });
}

RelationReport rel_h_recurrences(double tol) {
    std::vector<std::string> labels;
    struct P { int a, b, c; double u, v, m; };
    std::vector<P> pts;
    for (const auto& abc : {std::array{1, 1, 1}, std::array{2, 1, 1}, std::array{2, 2, 1},
                            std::array{1, 2, 3}, std::array{3, 3, 3}})
        for (const auto& uv : {std::pair{0.2, -0.1}, std::pair{-0.5, 0.4}, std::pair{0.6, 0.3}})
            for (double m : {2.0, 3.0, 4.0, 6.25}) {
                pts.push_back({abc[0], abc[1], abc[2], uv.first, uv.second, m});
                labels.push_back("a=" + fmt(abc[0]) + " b=" + fmt(abc[1]) + " c=" + fmt(abc[2]) +
                                 " u=" + fmt(uv.first) + " v=" + fmt(uv.second) + " m=" + fmt(m));
            }
    return grid_report("recurrences.H", "dimension shift, b/c-shifts, m+2 recurrence", tol, labels,
                       [&](std::size_t i) {
                           const P& p = pts[i];
                           return h_shift_residuals(SpectralIndex{p.a, p.b, p.c, p.m}, p.u, p.v)
                               .max();
                       });
}

RelationReport rel_cf_invariant(double tol) {
    std::vector<std::string> labels;
    struct P { int a, b; double y, m; };
    std::vector<P> pts;
    for (const auto& ab : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}})
        for (double y : {0.5, 0.7, 1.5})
            for (double m : {3.0, 4.0, 5.5}) {
                pts.push_back({ab.first, ab.second, y, m});
                labels.push_back("a=" + fmt(ab.first) + " b=" + fmt(ab.second) + " y=" + fmt(y) +
                                 " m=" + fmt(m));
            }
    return grid_report(
        "recurrences.gauss_cf", "(a+b)/d~ K_{a+1,b}/K_{a,b} equals the continued fraction", tol,
        labels, [&](std::size_t i) {
            const P& p = pts[i];
            const double dt = p.a + p.b + p.m / 2.0 - 2.0;
            const double lhs = (p.a + p.b) / dt *
                               k_family(SpectralIndex{p.a + 1, p.b, std::nullopt, p.m}, p.y) /
                               k_family(SpectralIndex{p.a, p.b, std::nullopt, p.m}, p.y);
            const double rhs =
                gauss_cf_ratio(GaussParams{dt, static_cast<double>(p.b),
                                           static_cast<double>(p.a + p.b)},
                               1.0 - p.y, 60);
            return rel_gap(lhs, rhs);
        });
}

RelationReport rel_jets(double tol, const std::vector<double>& ms) {
    std::vector<std::string> labels;
    struct P { int a, b, c; double u, v, m; bool is_h; };
    std::vector<P> pts;
    for (double m : ms) {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (double u : {-0.5, 0.3, 0.7}) {
                    pts.push_back({a, b, 0, u, 0.0, m, false});
                    labels.push_back("K a=" + fmt(a) + " b=" + fmt(b) + " u=" + fmt(u) +
                                     " m=" + fmt(m));
                }
        for (const auto& abc : {std::array{1, 1, 1}, std::array{2, 1, 1}, std::array{2, 2, 2}})
            for (const auto& uv : {std::pair{0.2, 0.4}, std::pair{-0.4, 0.3}}) {
                pts.push_back({abc[0], abc[1], abc[2], uv.first, uv.second, m, true});
                labels.push_back("H a=" + fmt(abc[0]) + " b=" + fmt(abc[1]) + " c=" + fmt(abc[2]) +
                                 " u=" + fmt(uv.first) + " v=" + fmt(uv.second) + " m=" + fmt(m));
            }
    }
    return grid_report("jets.even_m", "Leibniz-form jets vs hypergeometric definitions", tol,
                       labels, [&](std::size_t i) {
                           const P& p = pts[i];
                           if (p.is_h) {
                               const SpectralIndex idx{p.a, p.b, p.c, p.m};
                               return rel_gap(jet_h(idx, p.u, p.v), tilde_h(idx, p.u, p.v));
                           }
                           const SpectralIndex idx{p.a, p.b, std::nullopt, p.m};
                           return rel_gap(jet_k(idx, p.u), tilde_k(idx, p.u));
                       });
}

// ---------- variational suite ----------

RelationReport rel_power_dd(double tol) {
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> pts; // j, y
    for (double j : {-3.0, -1.5, 2.0})
        for (double y : {0.5, 2.0}) {
            pts.emplace_back(j, y);
            labels.push_back("j=" + fmt(j) + " y=" + fmt(y));
        }
    return grid_report("variational.power_dd", "[1,y](z^j) = (y^j-1)/(y-1)", tol, labels,
                       [&](std::size_t i) {
                           const double j = pts[i].first, y = pts[i].second;
                           ScalarFn f{[j](double z) { return std::pow(z, j); },
                                      [j](double z) { return j * std::pow(z, j - 1.0); }};
                           const double lhs = divided_difference(f, 1.0, y);
                           // [1,y] = (f(1)-f(y))/(1-y) = (y^j-1)/(y-1)
                           return rel_gap(lhs, power_divided_difference(y, j));
                       });
}

RelationReport rel_dd_zT(double tol) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 4>> pts; // a, c, s, t
    Draw d(0xC0FFEE20);
    for (int i = 0; i < 12; ++i) {
        pts.push_back({d.uni(0.6, 3.0), d.uni(2.2, 5.0), d.uni(0.3, 3.0), d.uni(0.3, 3.0)});
        if (std::abs(pts.back()[2] - pts.back()[3]) < 0.05) pts.back()[3] += 0.2;
        labels.push_back("a=" + fmt(pts.back()[0]) + " c=" + fmt(pts.back()[1]) +
                         " s=" + fmt(pts.back()[2]) + " t=" + fmt(pts.back()[3]));
    }
    return grid_report(
        "variational.dd_zT", "[s,t](zT) = F1(a;1,1;c;1-t,1-s) + [s,t](T) for T = 2F1(a,1;c;1-z)",
        tol, labels, [&](std::size_t i) {
            const double a = pts[i][0], c = pts[i][1], s = pts[i][2], t = pts[i][3];
            auto T = [&](double z) { return gauss_2f1(GaussParams{a, 1, c}, 1.0 - z).value; };
            const double lhs = (s * T(s) - t * T(t)) / (s - t);
            const double rhs = f1_divided_difference(a, c, 1.0 - t, 1.0 - s) +
                               (T(s) - T(t)) / (s - t);
            return rel_gap(lhs, rhs);
        });
}

RelationReport rel_pfaff_instance(double tol) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 3>> pts;
    for (double a : {1.5, 2.0, 3.5})
        for (double c : {3.0, 4.0, 5.0})
            for (double z : {0.5, 2.0, 4.0}) {
                pts.push_back({a, c, z});
                labels.push_back("a=" + fmt(a) + " c=" + fmt(c) + " z=" + fmt(z));
            }
    return grid_report("variational.pfaff_instance", "2F1(a,1;c;1-1/z) = z 2F1(c-a,1;c;1-z)", tol,
                       labels, [&](std::size_t i) {
                           const double a = pts[i][0], c = pts[i][1], z = pts[i][2];
                           const double lhs =
                               gauss_2f1(GaussParams{a, 1, c}, 1.0 - 1.0 / z).value;
                           const double rhs =
                               z * gauss_2f1(GaussParams{c - a, 1, c}, 1.0 - z).value;
                           return rel_gap(lhs, rhs);
                       });
}

RelationReport rel_d_op_displays(double tol) {
    std::vector<std::string> labels = {
        "D(T) for T=2F1(a,1;c;1-z), (a,c)=(2.5,4), (y1,y2)=(0.7,1.6)",
        "D(T) for T=2F1(a,1;c;1-z), (a,c)=(1.5,3), (y1,y2)=(2,0.5)",
        "D(K_{a,1}) via H_{a-1,1,1}, a=3, m=3, (0.7,1.6)",
        "D(K_{a,1}) via H_{a-1,1,1}, a=2, m=5, (2,0.5)",
        "D(T~) four-line display, (a,c,j)=(2.5,4,-2.5), (0.7,1.6)",
        "D(T~) four-line display, (a,c,j)=(1.5,3,2), (2,0.5)",
        "d_op limit y2=1 equals y1 T'(y1), T = t_delta(.;5)",
    };
    return grid_report(
        "variational.d_op", "commutator-defect displays against compositional evaluation", tol,
        labels, [&](std::size_t i) {
            switch (i) {
                case 0:
                case 1: {
                    const double a = i == 0 ? 2.5 : 1.5, c = i == 0 ? 4.0 : 3.0;
                    const double y1 = i == 0 ? 0.7 : 2.0, y2 = i == 0 ? 1.6 : 0.5;
                    ScalarFn T{[=](double z) { return gauss_2f1(GaussParams{a, 1, c}, 1.0 - z).value; },
                               {}};
                    const double lhs = d_op(T, y1, y2);
                    const double dd = (T(y1) - T(y1 * y2)) / (y1 - y1 * y2);
                    const double rhs = f1_divided_difference(a, c, 1.0 - y1 * y2, 1.0 - y1) + dd -
                                       T(y1 * y2);
                    return rel_gap(lhs, rhs);
                }
                case 2:
                case 3: {
                    const int a = i == 2 ? 3 : 2;
                    const double m = i == 2 ? 3.0 : 5.0;
                    const double y1 = i == 2 ? 0.7 : 2.0, y2 = i == 2 ? 1.6 : 0.5;
                    const SpectralIndex ka{a, 1, std::nullopt, m};
                    ScalarFn T{[=](double z) { return k_family(ka, z); }, {}};
                    const double lhs = d_op(T, y1, y2);
                    const double dd = (T(y1) - T(y1 * y2)) / (y1 - y1 * y2);
                    const double rhs =
                        h_family(SpectralIndex{a - 1, 1, 1, m}, y1, y2) + dd - T(y1 * y2);
                    return rel_gap(lhs, rhs);
                }
                case 4:
                case 5: {
                    const double a = i == 4 ? 2.5 : 1.5, c = i == 4 ? 4.0 : 3.0;
                    const double j = i == 4 ? -2.5 : 2.0;
                    const double y1 = i == 4 ? 0.7 : 2.0, y2 = i == 4 ? 1.6 : 0.5;
                    ScalarFn T{[=](double z) { return gauss_2f1(GaussParams{a, 1, c}, 1.0 - z).value; },
                               {}};
                    const double lhs = d_op(inversion_op(T, j), y1, y2);
                    auto G = [&](double z) {
                        return gauss_2f1(GaussParams{c - a, 1, c}, 1.0 - z).value;
                    };
                    const double y12 = y1 * y2;
                    const double pow_dd =
                        (std::pow(y1, j + 1.0) - std::pow(y12, j + 1.0)) / (y1 - y12);
                    const double dd = (G(y1) - G(y12)) / (y1 - y12);
                    const double rhs = y12 * pow_dd * G(y12) +
                                       std::pow(y1, j + 1.0) *
                                           f1_divided_difference(c - a, c, 1.0 - y12, 1.0 - y1) +
                                       std::pow(y1, j + 1.0) * dd -
                                       std::pow(y12, j + 1.0) * G(y12);
                    return rel_gap(lhs, rhs);
                }
                default: {
                    const ScalarFn T = t_delta_fn(5.0);
                    const double y1 = 1.7;
                    return rel_gap(d_op(T, y1, 1.0), y1 * t_delta_deriv(y1, 5.0));
                }
            }
        });
}

RelationReport rel_inversion(double tol) {
    std::vector<std::string> labels = {
        "I(K_{2,1}(.;3);j=-2.5)(u) = u^{j+d~} K_{1,2}(u;3), u=0.6",
        "I(K_{3,2}(.;5);j=1.3)(u) = u^{j+d~} K_{2,3}(u;5), u=2",
        "involution I(I(T;j);j) = T, T=2F1-based, u=1.7, j=-3",
        "I(1;j)(u) = u^j, u=2.2, j=0.7",
    };
    return grid_report(
        "variational.inversion", "Pfaff-backed inversion identities", tol, labels,
        [&](std::size_t i) {
            switch (i) {
                case 0:
                case 1: {
                    const int a = i == 0 ? 2 : 3, b = i == 0 ? 1 : 2;
                    const double m = i == 0 ? 3.0 : 5.0;
                    const double j = i == 0 ? -2.5 : 1.3;
                    const double u = i == 0 ? 0.6 : 2.0;
                    const SpectralIndex kab{a, b, std::nullopt, m};
                    const SpectralIndex kba{b, a, std::nullopt, m};
                    ScalarFn T{[=](double z) { return k_family(kab, z); }, {}};
                    const double lhs = inversion_op(T, j)(u);
                    const double dt = a + b + m / 2.0 - 2.0;
                    const double rhs = std::pow(u, j + dt) * k_family(kba, u);
                    return rel_gap(lhs, rhs);
                }
                case 2: {
                    ScalarFn T{[](double z) {
                                   return gauss_2f1(GaussParams{2.2, 1, 3.3}, 1.0 - z).value;
                               },
                               {}};
                    const double u = 1.7, j = -3.0;
                    const double twice = inversion_op(inversion_op(T, j), j)(u);
                    return rel_gap(twice, T(u));
                }
                default: {
                    ScalarFn one{[](double) { return 1.0; }, [](double) { return 0.0; }};
                    return rel_gap(inversion_op(one, 0.7)(2.2), std::pow(2.2, 0.7));
                }
            }
        });
}

RelationReport rel_II_limits(double tol) {
    std::vector<std::string> labels = {
        "II2 at uv->1 (u=2, v=1/2), T=t_delta(.;3)",
        "II3 at u->1 (v=2.3), T=t_delta(.;3)",
        "II3 at v->1 (u=0.6), T=t_delta(.;5)",
        "II4 at uv->1 (u=0.8, v=1.25), T=t_delta(.;5)",
        "II1 at uv->1 (u=2, v=0.5), T=t_delta(.;2.5)",
    };
    return grid_report(
        "variational.II_limits", "limit evaluations vs Richardson from eps-offset points", tol,
        labels, [&](std::size_t i) {
            const double m = (i == 0 || i == 1) ? 3.0 : (i == 4 ? 2.5 : 5.0);
            const ScalarFn T = t_delta_fn(m);
            const double j = -m / 2.0 - 1.0;
            int which = 0;
            double u = 0.0, v = 0.0;
            bool offset_v = false;
            switch (i) {
                case 0: which = 2; u = 2.0; v = 0.5; offset_v = true; break;
                case 1: which = 3; u = 1.0; v = 2.3; offset_v = false; break;
                case 2: which = 3; u = 0.6; v = 1.0; offset_v = true; break;
                case 3: which = 4; u = 0.8; v = 1.25; offset_v = true; break;
                default: which = 1; u = 2.0; v = 0.5; offset_v = true; break;
            }
            const double at_limit = op_II(T, j, u, v, which);
            // Richardson over symmetric offsets
            const double h0 = 2e-3;
            auto offset_val = [&](double h) {
                const double up = offset_v ? u : u + h;
                const double vp = offset_v ? v + h : v;
                return op_II(T, j, up, vp, which);
            };
            const double f1 = 0.5 * (offset_val(h0) + offset_val(-h0));
            const double f2 = 0.5 * (offset_val(h0 / 2) + offset_val(-h0 / 2));
            const double extrap = (4.0 * f2 - f1) / 3.0;
            return rel_gap(at_limit, extrap);
        });
}

RelationReport rel_II_const(double tol) {
    std::vector<std::string> labels;
    std::vector<std::array<double, 3>> pts;
    for (const auto& uvj :
         {std::array{2.0, 3.0, -2.5}, std::array{0.5, 0.8, 1.7}, std::array{1.3, 0.4, -3.0}}) {
        pts.push_back(uvj);
        labels.push_back("u=" + fmt(uvj[0]) + " v=" + fmt(uvj[1]) + " j=" + fmt(uvj[2]));
    }
    return grid_report(
        "variational.II_const_T", "sum_beta II(1;j) against the single rational closed form", tol,
        labels, [&](std::size_t i) {
            const double u = pts[i][0], v = pts[i][1], j = pts[i][2];
            ScalarFn one{[](double) { return 1.0; }, [](double) { return 0.0; }};
            const double lhs = op_II_sum(one, j, u, v);
            const double num = u * u * v * v - 2.0 * u * u * v + u * u + std::pow(u, j) +
                               2.0 * std::pow(u, j + 1.0) * std::pow(v, j) -
                               2.0 * std::pow(u, j + 1.0) -
                               std::pow(u, j + 2.0) * v * v + 2.0 * std::pow(u, j + 2.0) * v -
                               std::pow(u, j + 2.0) * std::pow(v, j) - std::pow(u * v, j);
            const double rhs = num / (u * (u - 1.0) * (v - 1.0) * (u * v - 1.0));
            return rel_gap(lhs, rhs);
        });
}

// ---------- symbolic suite ----------

symb::SymbolPoly expected_b2() {
    using namespace symb;
    auto W = [](std::int64_t num, std::int64_t den, int rp, std::vector<int> xi,
                std::vector<Atom> atoms) {
        Word w;
        w.coeff = RatM(Rational{num, den});
        w.r_power = rp;
        w.xi = std::move(xi);
        w.atoms = std::move(atoms);
        return w;
    };
    SymbolPoly p;
    p.words = {
        W(4, 1, 2, {0, 1}, {Atom::b0(3), Atom::kpow(2), Atom::grad2(0, 1), Atom::b0(1)}),
        W(-1, 1, 2, {}, {Atom::b0(2), Atom::kpow(1), Atom::grad2(0, 0), Atom::b0(1)}),
        W(4, 1, 2, {0, 1},
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(1), Atom::grad(1), Atom::b0(1)}),
        W(-4, 1, 4, {0, 1},
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(2), Atom::kpow(1), Atom::grad(1),
           Atom::b0(1)}),
        W(2, 1, 4, {},
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(1), Atom::grad(0), Atom::b0(1)}),
        W(-8, 1, 4, {0, 1},
          {Atom::b0(3), Atom::kpow(2), Atom::grad(0), Atom::b0(1), Atom::grad(1), Atom::b0(1)}),
    };
    return canonicalize(p);
}

symb::SymbolPoly expected_b2_averaged() {
    using namespace symb;
    auto W = [](RatM coeff, int rp, std::vector<Atom> atoms) {
        Word w;
        w.coeff = std::move(coeff);
        w.r_power = rp;
        w.atoms = std::move(atoms);
        return w;
    };
    const RatM four_over_m = RatM(PolyM::constant(Rational{4}), PolyM::variable());
    const RatM m8 = RatM(PolyM::constant(Rational{-8}), PolyM::variable());
    const RatM m4 = RatM(PolyM::constant(Rational{-4}), PolyM::variable());
    SymbolPoly p;
    p.words = {
        W(four_over_m, 4, {Atom::b0(3), Atom::kpow(2), Atom::grad2(0, 0), Atom::b0(1)}),
        W(RatM(Rational{-1}), 2, {Atom::b0(2), Atom::kpow(1), Atom::grad2(0, 0), Atom::b0(1)}),
        W(RatM(Rational{2}), 4,
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(1), Atom::grad(0), Atom::b0(1)}),
        W(four_over_m, 4,
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(1), Atom::grad(0), Atom::b0(1)}),
        W(m8, 6,
          {Atom::b0(3), Atom::kpow(2), Atom::grad(0), Atom::b0(1), Atom::grad(0), Atom::b0(1)}),
        W(m4, 6,
          {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(2), Atom::kpow(1), Atom::grad(0),
           Atom::b0(1)}),
    };
    return canonicalize(p);
}

symb::SpectralDecomposition expected_decomposition() {
    using namespace symb;
    SpectralDecomposition d;
    const RatM four_over_m = RatM(PolyM::constant(Rational{4}), PolyM::variable());
    const RatM m8 = RatM(PolyM::constant(Rational{-8}), PolyM::variable());
    const RatM m4 = RatM(PolyM::constant(Rational{-4}), PolyM::variable());
    // (4/m + 2) = (2m+4)/m
    PolyM num;
    num.coeff = {Rational{4}, Rational{2}};
    const RatM h211 = RatM(num, PolyM::variable());
    d.terms = {
        {false, 2, 1, 0, 0, RatM(Rational{-1})},
        {false, 3, 1, 0, 0, four_over_m},
        {true, 2, 1, 1, 0, h211},
        {true, 2, 2, 1, 1, m4},
        {true, 3, 1, 1, 0, m8},
    };
    return d;
}

RelationReport rel_symbolic_structure(double /*tol*/) {
    RelationReport r;
    r.relation_id = "symbolic.structure";
    r.grid_spec = "exact multiset equality: b2, sphere average, spectral decomposition";
    r.tolerance = 0.0;
    const symb::SymbolPoly b2 = symb::build_b2();
    r.samples.push_back({"b2 == six-term display", b2 == expected_b2() ? 0.0 : 1.0});
    r.samples.push_back({"b2 word count", b2.words.size() == 6 ? 0.0 : 1.0});
    const symb::SymbolPoly avg = symb::sphere_average(b2);
    r.samples.push_back({"sphere average == displayed form", avg == expected_b2_averaged() ? 0.0 : 1.0});
    const symb::SymbolPoly norm = symb::normalize_k_left(avg);
    const symb::SpectralDecomposition dec = symb::decompose_spectral(norm);
    r.samples.push_back(
        {"decomposition == (5.12)/(5.13) coefficients", dec == expected_decomposition() ? 0.0 : 1.0});
    r.finalize();
    return r;
}

RelationReport rel_symbolic_crosscheck(double tol) {
    const symb::SpectralDecomposition dec =
        symb::decompose_spectral(symb::normalize_k_left(symb::sphere_average(symb::build_b2())));
    std::vector<std::string> labels;
    std::vector<std::array<double, 3>> pts = {
        {2.0, 0.5, 4.0}, {1.3, 1.7, 3.0},  {0.5, 2.2, 2.5}, {3.0, 0.7, 5.0}, {1.6, 1.6, 6.25},
        {0.8, 0.6, 8.0}, {2.5, 1.2, 3.7},  {4.0, 0.3, 4.0}, {0.4, 3.1, 5.0}, {1.9, 0.9, 2.5},
    };
    for (const auto& p : pts)
        labels.push_back("s=" + fmt(p[0]) + " t=" + fmt(p[1]) + " m=" + fmt(p[2]));
    return grid_report("symbolic.numeric_crosscheck",
                       "decomposition evaluated through the spectral families vs closed forms", tol,
                       labels, [&](std::size_t i) {
                           return symb::numeric_crosscheck(dec, pts[i][0], pts[i][1], pts[i][2]);
                       });
}

} // namespace

std::vector<RelationReport> suite_hypergeo(const ToleranceConfig& tol) {
    std::vector<RelationReport> out;
    out.push_back(rel_series_vs_integral_2f1(tol.hypergeo));
    out.push_back(rel_series_vs_integral_f1(tol.hypergeo));
    out.push_back(rel_series_vs_integral_f2(tol.hypergeo));
    out.push_back(rel_series_vs_integral_fd(tol.hypergeo));
    out.push_back(rel_contiguous(tol.hypergeo));
    out.push_back(rel_pfaff_euler(1e-11));
    out.push_back(rel_diff_relations(tol.hypergeo));
    out.push_back(rel_f1_diff_system(1e-8));
    out.push_back(rel_f1_dd(1e-10));
    out.push_back(rel_f1_c2(1e-10));
    out.push_back(rel_f2_to_2f1(tol.hypergeo));
    out.push_back(rel_f1_via_f2(tol.hypergeo));
    out.push_back(rel_symbolic_a1c(1e-12));
    out.push_back(rel_cf_ratio(1e-10));
    return out;
}

std::vector<RelationReport> suite_oracles(const ToleranceConfig& tol) {
    const GridSpec grid = GridSpec::defaults();
    std::vector<RelationReport> out;
    out.push_back(rel_eq23(tol.oracles));
    out.push_back(rel_mellin(1e-11));
    out.push_back(rel_k_statement(tol.oracles, grid));
    out.push_back(rel_h_statement(1e-8, grid));
    out.push_back(rel_n_collapse(1e-7));
    out.push_back(rel_n3_vs_fd(1e-7));
    out.push_back(rel_abc_checks(1e-9));
    out.push_back(rel_abc_qmc(1e-5));
    out.push_back(rel_oscillatory(1e-3));
    out.push_back(rel_oscillatory_symmetry(1e-9));
    return out;
}

std::vector<RelationReport> suite_spectral(const ToleranceConfig& tol, const GridSpec& grid) {
    std::vector<RelationReport> out;
    out.push_back(rel_closed_25_m3(1e-10));
    out.push_back(rel_closed_25_m2(1e-10));
    out.push_back(rel_modified_log(1e-12));
    out.push_back(rel_delta_pairs(tol.spectral, grid));
    out.push_back(rel_delta_spots(1e-7));
    out.push_back(rel_h_reduction(tol.spectral));
    return out;
}

std::vector<RelationReport> suite_recurrences(const ToleranceConfig& tol) {
    std::vector<RelationReport> out;
    out.push_back(rel_k_recurrences(tol.recurrences));
    out.push_back(rel_h_recurrences(tol.recurrences));
    out.push_back(rel_cf_invariant(tol.recurrences));
    return out;
}

std::vector<RelationReport> suite_jets(const ToleranceConfig& tol, const std::vector<double>& ms) {
    return {rel_jets(tol.jets, ms)};
}

std::vector<RelationReport> suite_variational(const ToleranceConfig& tol) {
    std::vector<RelationReport> out;
    out.push_back(rel_power_dd(1e-12));
    out.push_back(rel_dd_zT(1e-9));
    out.push_back(rel_pfaff_instance(1e-10));
    out.push_back(rel_d_op_displays(tol.variational));
    out.push_back(rel_inversion(tol.variational));
    out.push_back(rel_II_limits(1e-6));
    out.push_back(rel_II_const(1e-11));
    return out;
}

std::vector<RelationReport> suite_thm4_10(const ToleranceConfig& tol,
                                          const std::vector<double>& ms) {
    const std::vector<double> grid_u = {0.55, 0.8, 1.3, 2.0, 3.1, 4.2};
    const std::vector<double> grid_v = {0.45, 1.35, 2.2, 3.6};
    Thm410Options opt;
    opt.rel_tol = tol.thm4_10;
    std::vector<RelationReport> out;
    for (double m : ms) {
        auto reports = verify_theorem_4_10(m, grid_u, grid_v, opt);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

std::vector<RelationReport> suite_symbolic(const ToleranceConfig& tol) {
    std::vector<RelationReport> out;
    out.push_back(rel_symbolic_structure(0.0));
    out.push_back(rel_symbolic_crosscheck(tol.symbolic));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "hypergeo", "oracles", "spectral", "recurrences", "jets", "variational", "thm4_10",
        "symbolic", "all"};
    return names;
}

std::vector<RelationReport> run_suite(const std::string& name, const ToleranceConfig& tol,
                                      const GridSpec& grid, const std::vector<double>& ms) {
    if (name == "hypergeo") return suite_hypergeo(tol);
    if (name == "oracles") return suite_oracles(tol);
    if (name == "spectral") return suite_spectral(tol, grid);
    if (name == "recurrences") return suite_recurrences(tol);
    if (name == "jets") return suite_jets(tol, ms.empty() ? std::vector<double>{4, 6, 8} : ms);
    if (name == "variational") return suite_variational(tol);
    if (name == "thm4_10")
        return suite_thm4_10(tol, ms.empty() ? std::vector<double>{2.5, 3, 4, 5.5} : ms);
    if (name == "symbolic") return suite_symbolic(tol);
    if (name == "all") {
        std::vector<RelationReport> out;
        for (const std::string& n : suite_names()) {
            if (n == "all") continue;
            auto part = run_suite(n, tol, grid, ms);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    fail(errc::config_error, "unknown suite: " + name);
}

} // namespace modcurv
