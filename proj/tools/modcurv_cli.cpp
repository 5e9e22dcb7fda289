// modcurv: point evaluation of the hypergeometric/spectral families,
// verification suites with JSON/CSV reports, and the symbolic b2 derivation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modcurv/errors.hpp"
#include "modcurv/hypergeo.hpp"
#include "modcurv/report.hpp"
#include "modcurv/spectral.hpp"
#include "modcurv/suites.hpp"
#include "modcurv/sweep.hpp"
#include "modcurv/symbol_calculus.hpp"

namespace {

using namespace modcurv;

const char* path_name(EvalPath p) {
    switch (p) {
        case EvalPath::series: return "series";
        case EvalPath::quadrature: return "quadrature";
        case EvalPath::closed_form: return "closed-form";
        case EvalPath::reduction: return "reduction";
        case EvalPath::continued_fraction: return "continued-fraction";
    }
    return "?";
}

void print_result(double value, double est_error, const char* path) {
    std::cout.precision(17);
    std::cout << value << "  (est_error " << est_error << ", path " << path << ")\n";
}

int cmd_eval(const std::string& fn, const std::vector<double>& args,
             const std::map<std::string, double>& kw, const std::vector<double>& alphas,
             const std::vector<double>& xs) {
    auto need = [&](const char* key) {
        auto it = kw.find(key);
        if (it == kw.end()) fail(errc::config_error, std::string("missing --") + key);
        return it->second;
    };
    if (fn == "2f1") {
        if (args.size() != 4) fail(errc::config_error, "eval 2f1 a b c z");
        const EvalResult r = gauss_2f1(GaussParams{args[0], args[1], args[2]}, args[3]);
        print_result(r.value, r.est_error, path_name(r.path));
    } else if (fn == "1f1") {
        if (args.size() != 3) fail(errc::config_error, "eval 1f1 a b z");
        const EvalResult r = kummer_1f1(args[0], args[1], args[2]);
        print_result(r.value, r.est_error, path_name(r.path));
    } else if (fn == "f1") {
        if (args.size() != 6) fail(errc::config_error, "eval f1 a b b' c x y");
        const EvalResult r = appell_f1(AppellF1Params{args[0], args[1], args[2], args[3]},
                                       args[4], args[5]);
        print_result(r.value, r.est_error, path_name(r.path));
    } else if (fn == "f2") {
        if (args.size() != 7) fail(errc::config_error, "eval f2 a b b' c c' x y");
        const EvalResult r = appell_f2(
            AppellF2Params{args[0], args[1], args[2], args[3], args[4]}, args[5], args[6]);
        print_result(r.value, r.est_error, path_name(r.path));
    } else if (fn == "fd") {
        LauricellaParams p;
        p.a = need("a");
        p.c = need("c");
        p.alphas = alphas;
        const EvalResult r = lauricella_fd(p, xs);
        print_result(r.value, r.est_error, path_name(r.path));
    } else if (fn == "K") {
        const SpectralIndex idx{static_cast<int>(need("a")), static_cast<int>(need("b")),
                                std::nullopt, need("m")};
        print_result(k_family(idx, need("y")), 1e-13, "series");
    } else if (fn == "H") {
        const SpectralIndex idx{static_cast<int>(need("a")), static_cast<int>(need("b")),
                                static_cast<int>(need("c")), need("m")};
        print_result(h_family(idx, need("y1"), need("y2")), 1e-12, "reduction");
    } else if (fn == "Kdelta") {
        print_result(k_delta(need("s"), need("m")), 1e-12, "closed-form (cross-checked)");
    } else if (fn == "Hdelta") {
        print_result(h_delta(need("s"), need("t"), need("m")), 1e-12,
                     "closed-form (cross-checked)");
    } else if (fn == "Tdelta") {
        print_result(t_delta(need("s"), need("m")), 1e-12, "closed-form (cross-checked)");
    } else {
        fail(errc::config_error, "unknown function: " + fn);
    }
    return 0;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral functions of modular curvature: evaluators and identity verification"};
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate one function at a point");
    std::string fn_name;
    std::vector<double> fn_args;
    std::map<std::string, double> kw;
    std::string alphas_csv, xs_csv;
    eval->add_option("function", fn_name,
                     "one of: 2f1 1f1 f1 f2 fd K H Kdelta Hdelta Tdelta")
        ->required();
    eval->add_option("args", fn_args, "positional parameters (hypergeometric functions)");
    for (const char* key : {"a", "b", "c", "m", "y", "y1", "y2", "s", "t"}) {
        eval->add_option_function<double>(
            std::string("--") + key, [&kw, key](double v) { kw[key] = v; });
    }
    eval->add_option("--alphas", alphas_csv, "comma-separated exponents (fd)");
    eval->add_option("--xs", xs_csv, "comma-separated arguments (fd)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite and write reports");
    std::string suite;
    std::string out_dir = "reports";
    std::string cfg_path;
    std::string m_csv;
    int threads = 0;
    verify->add_option("suite", suite, "hypergeo|oracles|spectral|recurrences|jets|variational|thm4_10|symbolic|all")
        ->required();
    verify->add_option("--m", m_csv, "comma-separated m values (thm4_10, jets)");
    verify->add_option("--out", out_dir, "output directory for report.json / report.csv");
    verify->add_option("--config", cfg_path, "tolerance config file (key=value)");
    verify->add_option("--threads", threads, "cap worker threads (also: MODCURV_THREADS)");
    bool serial = false;
    verify->add_flag("--serial", serial, "disable the OpenMP sweep kernel");

    // ---- derive-b2 ----
    auto* derive = app.add_subcommand("derive-b2", "print the b2 derivation");
    std::string format = "paper";
    bool check = false;
    double cs = 2.0, ct = 0.5, cm = 4.0;
    derive->add_option("--format", format, "paper|json");
    derive->add_flag("--check", check, "run the numeric crosscheck");
    derive->add_option("--s", cs, "crosscheck s");
    derive->add_option("--t", ct, "crosscheck t");
    derive->add_option("--m", cm, "crosscheck m");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            return cmd_eval(fn_name, fn_args, kw, parse_list(alphas_csv), parse_list(xs_csv));
        }
        if (*verify) {
            if (threads > 0) {
#ifdef _WIN32
#else
                setenv("MODCURV_THREADS", std::to_string(threads).c_str(), 1);
#endif
            }
            if (serial) set_parallel_enabled(false);
            bool known = false;
            for (const auto& n : suite_names()) known = known || n == suite;
            if (!known) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            const ToleranceConfig tol =
                cfg_path.empty() ? ToleranceConfig{} : ToleranceConfig::from_file(cfg_path);
            const auto reports = run_suite(suite, tol, GridSpec::defaults(), parse_list(m_csv));
            std::filesystem::create_directories(out_dir);
            {
                std::ofstream j(out_dir + "/report.json");
                j << reports_to_json(reports, tol);
            }
            {
                std::ofstream c(out_dir + "/report.csv");
                c << reports_to_csv(reports);
            }
            for (const auto& r : reports) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.relation_id
                          << "  max_residual=" << r.max_abs_residual << "  tol=" << r.tolerance;
                if (auto it = r.fitted_constants.find("c_fit"); it != r.fitted_constants.end())
                    std::cout << "  c=" << it->second;
                std::cout << "\n";
            }
            return all_passed(reports) ? 0 : 1;
        }
        if (*derive) {
            const symb::SymbolPoly b2 = symb::build_b2();
            const symb::SymbolPoly avg = symb::sphere_average(b2);
            const symb::SpectralDecomposition dec =
                symb::decompose_spectral(symb::normalize_k_left(avg));
            if (format == "json") {
                std::cout << symb::decomposition_to_json(dec) << "\n";
            } else {
                std::cout << "b2(xi):\n" << symb::to_paper_string(b2) << "\n\n";
                std::cout << "b2(r) after sphere averaging (volume factor dropped):\n"
                          << symb::to_paper_string(avg) << "\n\n";
                std::cout << "spectral decomposition:\n  " << symb::to_paper_string(dec) << "\n";
            }
            if (check) {
                const double dev = symb::numeric_crosscheck(dec, cs, ct, cm);
                std::cout << "\nnumeric crosscheck at (s,t,m)=(" << cs << "," << ct << "," << cm
                          << "): max deviation " << dev << "\n";
                return dev < 1e-9 ? 0 : 1;
            }
            return 0;
        }
    } catch (const modcurv::error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == errc::config_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
