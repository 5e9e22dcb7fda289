#pragma once

#include <string>
#include <vector>

#include "modcurv/report.hpp"

namespace modcurv {

// Named verification suites behind `modcurv verify <name>`; each returns one
// RelationReport per relation, residuals swept over the grid (parallel over
// grid points).
std::vector<RelationReport> suite_hypergeo(const ToleranceConfig& tol);
std::vector<RelationReport> suite_oracles(const ToleranceConfig& tol);
std::vector<RelationReport> suite_spectral(const ToleranceConfig& tol, const GridSpec& grid);
std::vector<RelationReport> suite_recurrences(const ToleranceConfig& tol);
std::vector<RelationReport> suite_jets(const ToleranceConfig& tol,
                                       const std::vector<double>& ms = {4, 6, 8});
std::vector<RelationReport> suite_variational(const ToleranceConfig& tol);
std::vector<RelationReport> suite_thm4_10(const ToleranceConfig& tol,
                                          const std::vector<double>& ms = {2.5, 3, 4, 5.5});
std::vector<RelationReport> suite_symbolic(const ToleranceConfig& tol);

const std::vector<std::string>& suite_names();
std::vector<RelationReport> run_suite(const std::string& name, const ToleranceConfig& tol,
                                      const GridSpec& grid, const std::vector<double>& ms);

} // namespace modcurv
