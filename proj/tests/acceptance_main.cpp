// Acceptance suite: one pass/fail line per criterion, each with its pinned
// tolerance and runtime budget. Exit code 0 only if every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "modcurv/errors.hpp"
#include "modcurv/quadrature.hpp"
#include "modcurv/report.hpp"
#include "modcurv/spectral.hpp"
#include "modcurv/suites.hpp"
#include "modcurv/variational.hpp"

using namespace modcurv;

namespace {

struct Criterion {
    int id;
    std::string desc;
    bool passed;
    double max_residual;
    double seconds;
    std::string note;
};

std::vector<Criterion> g_results;

template <typename Fn>
void run_criterion(int id, const std::string& desc, double time_budget_s, Fn&& body) {
    Criterion c{id, desc, false, 0.0, 0.0, ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto [ok, resid, note] = body();
        c.passed = ok;
        c.max_residual = resid;
        c.note = note;
    } catch (const error& e) {
        c.passed = false;
        c.note = std::string(errc_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        c.passed = false;
        c.note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (time_budget_s > 0.0 && c.seconds > time_budget_s) {
        c.passed = false;
        c.note += " [runtime budget exceeded]";
    }
    std::printf("[%s] criterion %d: %s (max_residual=%.3g, t=%.1fs%s%s)\n",
                c.passed ? "PASS" : "FAIL", c.id, c.desc.c_str(), c.max_residual, c.seconds,
                c.note.empty() ? "" : ", ", c.note.c_str());
    std::fflush(stdout);
    g_results.push_back(std::move(c));
}

struct Outcome {
    bool ok;
    double resid;
    std::string note;
};

Outcome from_reports(const std::vector<RelationReport>& reports) {
    double worst = 0.0;
    bool ok = true;
    std::string note;
    for (const auto& r : reports) {
        worst = std::max(worst, r.max_abs_residual);
        if (!r.passed) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += r.relation_id + " failed";
        }
    }
    return {ok, worst, note};
}

} // namespace

int main() {
    const ToleranceConfig tol;
    const GridSpec grid = GridSpec::defaults();

    // 1. hypergeometric core: series vs integral representations over 200
    //    random draws, the 15 contiguous relations on a 100-point grid,
    //    Pfaff/Euler transforms at 1e-11.
    run_criterion(1, "hypergeometric core (series vs quadrature, contiguous, transforms)", 30.0,
                  [&]() -> Outcome { return from_reports(suite_hypergeo(tol)); });

    // 2. rearrangement lemmas: the confluent identity on the 18-point grid,
    //    the K/H statement checks over the default (non-integer m) grid, and
    //    the n-variable collapses.
    run_criterion(2, "rearrangement lemmas (Kummer identity, K/H oracles, n-collapse)", 120.0,
                  [&]() -> Outcome { return from_reports(suite_oracles(tol)); });

    // 3. explicit low-dimension displays reproduced pointwise at 1e-10.
    run_criterion(3, "explicit m=2 and m=3 closed-form displays", 60.0, [&]() -> Outcome {
        auto reports = suite_spectral(tol, grid);
        std::vector<RelationReport> displays;
        for (auto& r : reports)
            if (r.relation_id.rfind("spectral.closed_2_5", 0) == 0 ||
                r.relation_id == "spectral.modified_log")
                displays.push_back(r);
        return from_reports(displays);
    });

    // 4. recurrences, jets and the Gauss continued fraction.
    run_criterion(4, "dimension-shift recurrences, even-m jets, continued fraction", 60.0,
                  [&]() -> Outcome {
                      auto reports = suite_recurrences(tol);
                      auto jets = suite_jets(tol, {4, 6, 8});
                      reports.insert(reports.end(), jets.begin(), jets.end());
                      return from_reports(reports);
                  });

    // 5. closed forms of the b2 spectral functions vs their hypergeometric
    //    combinations over the full default grid, with the spot value
    //    K_delta(1;4) = 0.
    run_criterion(5, "b2 spectral functions: elementary forms vs combinations (real m)", 60.0,
                  [&]() -> Outcome {
                      auto reports = suite_spectral(tol, grid);
                      std::vector<RelationReport> wanted;
                      for (auto& r : reports)
                          if (r.relation_id == "spectral.delta_closed_vs_hyper" ||
                              r.relation_id == "spectral.delta_spots" ||
                              r.relation_id == "spectral.h_reduction")
                              wanted.push_back(r);
                      Outcome o = from_reports(wanted);
                      const double spot = std::abs(k_delta(1.0, 4.0));
                      if (spot > 1e-12) {
                          o.ok = false;
                          o.note += " K_delta(1;4) spot failed";
                      }
                      return o;
                  });

    // 6. Theorem-level functional relations: fitted scale constant is
    //    argument-independent to 1e-7, shared between the K and H relations,
    //    reported against the candidate normalizations.
    run_criterion(6, "functional relations from the EH-action variation (fitted c(m))", 60.0,
                  [&]() -> Outcome {
                      auto reports = suite_thm4_10(tol, {2.5, 3.0, 4.0, 5.5});
                      Outcome o = from_reports(reports);
                      std::string cs = "c(m):";
                      for (std::size_t i = 0; i < reports.size(); i += 2) {
                          const auto& fc = reports[i].fitted_constants;
                          char buf[96];
                          if (fc.at("degenerate") == 1.0)
                              std::snprintf(buf, sizeof buf, " [degenerate: both sides vanish]");
                          else
                              std::snprintf(buf, sizeof buf, " %g (cand.1=1, cand.2=(2-m)/2=%g)",
                                            fc.at("c_fit"), fc.at("candidate_(2-m)/2"));
                          cs += buf;
                      }
                      o.note = o.note.empty() ? cs : o.note + "; " + cs;
                      return o;
                  });

    // 7. symbol calculus: exact multiset equalities and the numeric
    //    crosscheck against the closed forms.
    run_criterion(7, "b2 term rewriting: exact expansion, averaging, decomposition", 5.0,
                  [&]() -> Outcome { return from_reports(suite_symbolic(tol)); });

    // 8. oscillatory sanity check at its documented loose tolerance.
    run_criterion(8, "truncated oscillatory line integral vs smooth side (1e-3)", 60.0,
                  [&]() -> Outcome {
                      struct P { double A, B; int a, b; };
                      const std::vector<P> pts = {{1.0, 2.0, 1, 2}, {0.5, 1.5, 2, 1},
                                                  {1.0, 1.0, 2, 2}, {2.0, 1.0, 3, 1}};
                      double worst = 0.0;
                      for (const auto& p : pts) {
                          const double lhs = oscillatory_lhs_ab(p.A, p.B, p.a, p.b, 1e4);
                          const double rhs = contour_ab_rhs(p.A, p.B, p.a, p.b);
                          worst = std::max(worst, std::abs(lhs - rhs) /
                                                      std::max(1.0, std::abs(rhs)));
                      }
                      return {worst < 1e-3, worst, ""};
                  });

    int failures = 0;
    for (const auto& c : g_results)
        if (!c.passed) ++failures;
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(g_results.size()) - failures,
                g_results.size());
    return failures == 0 ? 0 : 1;
}
