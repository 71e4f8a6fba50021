#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apkin/constants.hpp"
#include "apkin/experiment.hpp"

namespace {

struct CommonOptions {
    std::string scheme = "isa";
    double alpha = -1.0;  // negative: use the scheme-family default
    double eps = 1e-6;
    double dt = 1e-3;
    double tfinal = 0.1;
    int nx = 0;
    int nv = 0;
    double vmax = 0.0;
    std::string equilibrium;
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--scheme", opt.scheme, "isd|isa|mmsd|mmsa|dsd|dsa|dsa-cn|ds|ads");
    cmd->add_option("--alpha", opt.alpha, "limit exponent (default per scheme family)");
    cmd->add_option("--eps", opt.eps, "Knudsen number");
    cmd->add_option("--dt", opt.dt, "time step");
    cmd->add_option("--tfinal", opt.tfinal, "final time (integer multiple of dt)");
    cmd->add_option("--nx", opt.nx, "spatial resolution");
    cmd->add_option("--nv", opt.nv, "velocity resolution");
    cmd->add_option("--vmax", opt.vmax, "velocity cutoff");
    cmd->add_option("--equilibrium", opt.equilibrium, "gaussian|heavytail");
    cmd->add_option("--out", opt.out, "CSV output path (stdout when omitted)");
}

apkin::ExperimentConfig build_config(const CommonOptions& opt) {
    const auto scheme = apkin::parse_scheme(opt.scheme);
    if (!scheme) throw CLI::ValidationError("--scheme", "unknown scheme '" + opt.scheme + "'");
    apkin::ExperimentConfig cfg = apkin::default_config(*scheme);
    if (opt.alpha > 0.0) cfg.alpha = opt.alpha;
    cfg.eps = opt.eps;
    cfg.dt = opt.dt;
    cfg.tfinal = opt.tfinal;
    if (opt.nx > 0) cfg.nx = opt.nx;
    if (opt.nv > 0) cfg.nv = opt.nv;
    if (opt.vmax > 0.0) cfg.vmax = opt.vmax;
    if (!opt.equilibrium.empty()) {
        if (opt.equilibrium == "gaussian")
            cfg.equilibrium = apkin::EquilibriumKind::Gaussian;
        else if (opt.equilibrium == "heavytail")
            cfg.equilibrium = apkin::EquilibriumKind::HeavyTail;
        else
            throw CLI::ValidationError("--equilibrium",
                                       "expected gaussian or heavytail, got '" + opt.equilibrium + "'");
    }
    return cfg;
}

void write_report(const apkin::ErrorReport& report, const std::string& out,
                  bool with_summary = false) {
    if (out.empty())
        apkin::emit_csv(report, std::cout);
    else
        apkin::emit_csv(report, out);
    if (with_summary)
        std::cerr << "# fitted slope " << report.slope << " (rms residual " << report.residual
                  << ")\n";
}

std::vector<double> geometric_eps_list() {
    std::vector<double> eps;
    for (int p = 2; p <= 12; ++p) eps.push_back(std::pow(2.0, -p));
    return eps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic-preserving solvers for the scaled BGK equation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file mirroring the flags");
    app.get_config_ptr()->configurable(true);

    CommonOptions opt;
    std::vector<double> eps_list, dt_list;
    double reference_dt = 1e-6;
    std::string alphas = "0.8,1.0,1.5";

    CLI::App* run = app.add_subcommand("run", "single run; reports error vs the limit solver");
    add_common_flags(run, opt);

    CLI::App* sweep_eps = app.add_subcommand("sweep-eps", "error vs the limit solver across eps");
    add_common_flags(sweep_eps, opt);
    sweep_eps->add_option("--eps-list", eps_list, "eps values (default 2^-2 .. 2^-12)");

    CLI::App* sweep_dt = app.add_subcommand("sweep-dt", "observed time order against a fine self-reference");
    add_common_flags(sweep_dt, opt);
    sweep_dt->add_option("--dt-list", dt_list, "dt values (default 4e-3,2e-3,1e-3,5e-4)");

    CLI::App* uniform = app.add_subcommand("uniform", "coupled sweep along dt = eps^alpha");
    add_common_flags(uniform, opt);
    uniform->add_option("--dt-list", dt_list, "dt values (default 1e-1,1e-2,1e-3,1e-4)");
    uniform->add_option("--reference-dt", reference_dt, "dt of the limit-solver reference");

    CLI::App* verify = app.add_subcommand("verify-constants", "print the fractional constants and identity residuals");
    verify->add_option("--alpha", alphas, "comma-separated alpha values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            write_report(apkin::single_run_report(build_config(opt)), opt.out);
        } else if (sweep_eps->parsed()) {
            if (eps_list.empty()) eps_list = geometric_eps_list();
            write_report(apkin::sweep_epsilon(build_config(opt), eps_list), opt.out, true);
        } else if (sweep_dt->parsed()) {
            if (dt_list.empty()) dt_list = {4e-3, 2e-3, 1e-3, 5e-4};
            write_report(apkin::sweep_dt(build_config(opt), dt_list), opt.out, true);
        } else if (uniform->parsed()) {
            if (dt_list.empty()) dt_list = {1e-1, 1e-2, 1e-3, 1e-4};
            write_report(apkin::uniform_study(build_config(opt), dt_list, reference_dt), opt.out);
        } else if (verify->parsed()) {
            std::cout.precision(12);
            std::cout << "alpha,m,kappa,symbol_constant,gamma_alpha_plus_1,c_paper,"
                         "identity_residual\n";
            std::string token;
            std::stringstream ss(alphas);
            while (std::getline(ss, token, ',')) {
                const double alpha = std::stod(token);
                const double m = apkin::heavy_tail_normalization(alpha + 1.0);
                const auto c = apkin::compute_fractional_constants(alpha, 1, m);
                const double residual =
                    std::abs(c.kappa - c.m * c.gamma_alpha_plus_1 * c.symbol_constant) / c.kappa;
                std::cout << alpha << ',' << c.m << ',' << c.kappa << ',' << c.symbol_constant
                          << ',' << c.gamma_alpha_plus_1 << ',' << c.c_paper << ',' << residual
                          << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
