#pragma once

#include <stdexcept>
#include <string>

namespace modcurv {

enum class errc {
    param_domain,
    arg_domain,
    no_convergence,
    quad_fail,
    domain_error,
    internal_mismatch,
    unsupported_monomial,
    pattern_mismatch,
    homogeneity_violation,
    fit_failure,
    config_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::param_domain: return "ParamDomain";
        case errc::arg_domain: return "ArgDomain";
        case errc::no_convergence: return "NoConvergence";
        case errc::quad_fail: return "QuadFail";
        case errc::domain_error: return "DomainError";
        case errc::internal_mismatch: return "InternalMismatch";
        case errc::unsupported_monomial: return "UnsupportedMonomial";
        case errc::pattern_mismatch: return "PatternMismatch";
        case errc::homogeneity_violation: return "HomogeneityViolation";
        case errc::fit_failure: return "FitFailure";
        case errc::config_error: return "ConfigError";
    }
    return "Unknown";
}

} // namespace modcurv
