#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace modcurv {

struct GridSample {
    std::string point; // e.g. "m=3 u=0.5 v=2"
    double residual = 0.0;
};

struct RelationReport {
    std::string relation_id;  // e.g. "contiguous.15", "thm4_10.K"
    std::string grid_spec;
    double max_abs_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, double> fitted_constants;
    std::vector<GridSample> samples;

    void finalize(); // recompute max residual from samples, set passed
};

struct GridSpec {
    std::vector<double> m_values;
    std::vector<double> arg_values;
    double exclusion_radius = 1e-3;

    void validate_eh() const; // m > 2 everywhere, args > 0
    static GridSpec defaults();
};

// Per-suite tolerances; echoed into every report file.
struct ToleranceConfig {
    double hypergeo = 1e-9;
    double oracles = 1e-9;
    double spectral = 1e-8;
    double recurrences = 1e-9;
    double jets = 1e-10;
    double variational = 1e-8;
    double thm4_10 = 1e-7;
    double symbolic = 1e-9; // numeric crosscheck; structural checks are exact

    static ToleranceConfig from_file(const std::string& path); // key=value lines
    std::map<std::string, double> as_map() const;
};

std::string reports_to_json(std::span<const RelationReport> reports, const ToleranceConfig& cfg);
std::vector<RelationReport> reports_from_json(const std::string& json_text);

// one row per (relation, grid point): relation_id,point,residual,tolerance,passed
std::string reports_to_csv(std::span<const RelationReport> reports);

bool all_passed(std::span<const RelationReport> reports);

} // namespace modcurv
