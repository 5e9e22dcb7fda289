#include "modcurv/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modcurv/errors.hpp"

namespace modcurv {

using nlohmann::json;

void RelationReport::finalize() {
    max_abs_residual = 0.0;
    for (const auto& s : samples) max_abs_residual = std::max(max_abs_residual, s.residual);
    passed = max_abs_residual <= tolerance;
}

void GridSpec::validate_eh() const {
    for (double m : m_values)
        if (!(m > 2.0)) fail(errc::config_error, "EH-action suites need m > 2");
    for (double a : arg_values)
        if (!(a > 0.0)) fail(errc::config_error, "grid arguments must be positive");
}

GridSpec GridSpec::defaults() {
    GridSpec g;
    g.m_values = {2.5, 3.0, 3.7, 4.0, 5.0, 6.25, 8.0};
    g.arg_values = {0.25, 0.5, 0.8, 1.25, 2.0, 4.0};
    g.exclusion_radius = 1e-3;
    return g;
}

ToleranceConfig ToleranceConfig::from_file(const std::string& path) {
    ToleranceConfig cfg;
    std::ifstream in(path);
    if (!in) fail(errc::config_error, "cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        double x = 0.0;
        try {
            x = std::stod(val);
        } catch (...) {
            fail(errc::config_error, "bad value for " + key + " in " + path);
        }
        if (key == "hypergeo") cfg.hypergeo = x;
        else if (key == "oracles") cfg.oracles = x;
        else if (key == "spectral") cfg.spectral = x;
        else if (key == "recurrences") cfg.recurrences = x;
        else if (key == "jets") cfg.jets = x;
        else if (key == "variational") cfg.variational = x;
        else if (key == "thm4_10") cfg.thm4_10 = x;
        else if (key == "symbolic") cfg.symbolic = x;
        else fail(errc::config_error, "unknown tolerance key: " + key);
    }
    return cfg;
}

std::map<std::string, double> ToleranceConfig::as_map() const {
    return {{"hypergeo", hypergeo}, {"oracles", oracles},     {"spectral", spectral},
            {"recurrences", recurrences}, {"jets", jets},     {"variational", variational},
            {"thm4_10", thm4_10},   {"symbolic", symbolic}};
}

std::string reports_to_json(std::span<const RelationReport> reports, const ToleranceConfig& cfg) {
    json root;
    root["tolerances"] = cfg.as_map();
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["relation_id"] = r.relation_id;
        j["grid_spec"] = r.grid_spec;
        j["max_abs_residual"] = r.max_abs_residual;
        j["tolerance"] = r.tolerance;
        j["passed"] = r.passed;
        if (!r.fitted_constants.empty()) j["fitted_constants"] = r.fitted_constants;
        json samples = json::array();
        for (const auto& s : r.samples) samples.push_back({{"point", s.point}, {"residual", s.residual}});
        j["samples"] = samples;
        arr.push_back(std::move(j));
    }
    root["reports"] = std::move(arr);
    return root.dump(2);
}

std::vector<RelationReport> reports_from_json(const std::string& json_text) {
    const json root = json::parse(json_text);
    std::vector<RelationReport> out;
    for (const auto& j : root.at("reports")) {
        RelationReport r;
        r.relation_id = j.at("relation_id").get<std::string>();
        r.grid_spec = j.at("grid_spec").get<std::string>();
        r.max_abs_residual = j.at("max_abs_residual").get<double>();
        r.tolerance = j.at("tolerance").get<double>();
        r.passed = j.at("passed").get<bool>();
        if (j.contains("fitted_constants"))
            r.fitted_constants = j.at("fitted_constants").get<std::map<std::string, double>>();
        for (const auto& s : j.at("samples"))
            r.samples.push_back({s.at("point").get<std::string>(), s.at("residual").get<double>()});
        out.push_back(std::move(r));
    }
    return out;
}

std::string reports_to_csv(std::span<const RelationReport> reports) {
    std::ostringstream os;
    os.precision(17);
    os << "relation_id,point,residual,tolerance,passed\n";
    for (const auto& r : reports) {
        if (r.samples.empty()) {
            os << r.relation_id << ",," << r.max_abs_residual << "," << r.tolerance << ","
               << (r.passed ? 1 : 0) << "\n";
            continue;
        }
        for (const auto& s : r.samples) {
            std::string pt = s.point;
            std::replace(pt.begin(), pt.end(), ',', ';');
            os << r.relation_id << "," << pt << "," << s.residual << "," << r.tolerance << ","
               << (r.passed ? 1 : 0) << "\n";
        }
    }
    return os.str();
}

bool all_passed(std::span<const RelationReport> reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

} // namespace modcurv
