#include "apkin/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "apkin/constants.hpp"
#include "apkin/duhamel.hpp"
#include "apkin/implicit.hpp"
#include "apkin/limits.hpp"

namespace apkin {

std::string scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::Isd: return "isd";
        case SchemeId::Isa: return "isa";
        case SchemeId::Mmsd: return "mmsd";
        case SchemeId::Mmsa: return "mmsa";
        case SchemeId::Dsd: return "dsd";
        case SchemeId::Dsa: return "dsa";
        case SchemeId::DsaCn: return "dsa-cn";
        case SchemeId::Ds: return "ds";
        case SchemeId::Ads: return "ads";
    }
    return "?";
}

std::optional<SchemeId> parse_scheme(const std::string& name) {
    for (SchemeId id : {SchemeId::Isd, SchemeId::Isa, SchemeId::Mmsd, SchemeId::Mmsa,
                        SchemeId::Dsd, SchemeId::Dsa, SchemeId::DsaCn, SchemeId::Ds,
                        SchemeId::Ads})
        if (scheme_name(id) == name) return id;
    return std::nullopt;
}

bool targets_anomalous_limit(SchemeId id) {
    switch (id) {
        case SchemeId::Isa:
        case SchemeId::Mmsa:
        case SchemeId::Dsa:
        case SchemeId::DsaCn:
        case SchemeId::Ads: return true;
        default: return false;
    }
}

ExperimentConfig default_config(SchemeId scheme) {
    ExperimentConfig cfg;
    cfg.scheme = scheme;
    if (targets_anomalous_limit(scheme)) {
        cfg.alpha = 1.5;
        cfg.equilibrium = EquilibriumKind::HeavyTail;
        cfg.nv = 200;
        cfg.vmax = 50.0;
    } else {
        cfg.alpha = 2.0;
        cfg.equilibrium = EquilibriumKind::Gaussian;
        cfg.nv = 20;
        cfg.vmax = 10.0;
    }
    cfg.nx = (scheme == SchemeId::Mmsd || scheme == SchemeId::Mmsa) ? 32 : 64;
    return cfg;
}

namespace {

int step_count(const ExperimentConfig& cfg) {
    const double ratio = cfg.tfinal / cfg.dt;
    const long long n = std::llround(ratio);
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-6)
        throw std::invalid_argument("run_scheme: tfinal must be an integer multiple of dt");
    return static_cast<int>(n);
}

Equilibrium config_equilibrium(const ExperimentConfig& cfg) {
    const VelocityGrid vgrid = make_velocity_grid(cfg.nv, cfg.vmax);
    return make_equilibrium(cfg.equilibrium, cfg.alpha + 1.0, vgrid);
}

LimitConfig limit_config_for(const ExperimentConfig& cfg, const Equilibrium& eq, double dt) {
    LimitConfig lim;
    lim.dt = dt;
    if (targets_anomalous_limit(cfg.scheme) || cfg.equilibrium == EquilibriumKind::HeavyTail) {
        lim.kind = LimitKind::Anomalous;
        lim.alpha = cfg.alpha;
        lim.coeff = cfg.use_continuous_constants ? compute_kappa(cfg.alpha, 1, eq.m)
                                                 : discrete_kappa(eq);
    } else {
        lim.kind = LimitKind::Diffusion;
        lim.coeff = cfg.use_continuous_constants ? 1.0 : discrete_moment(eq, 2);
    }
    return lim;
}

}  // namespace

RunResult run_scheme(const ExperimentConfig& cfg) {
    const int n_steps = step_count(cfg);
    const SpatialGrid sgrid = make_spatial_grid(cfg.nx, cfg.half_width);
    const Equilibrium eq = config_equilibrium(cfg);

    const auto t0 = std::chrono::steady_clock::now();
    RunResult result;

    switch (cfg.scheme) {
        case SchemeId::Ds:
        case SchemeId::Ads: {
            LimitConfig lim = limit_config_for(cfg, eq, cfg.dt);
            lim.kind = cfg.scheme == SchemeId::Ds ? LimitKind::Diffusion : LimitKind::Anomalous;
            SpectralDensity rho = to_spectral(sgrid, initial_density(sgrid));
            for (int n = 0; n < n_steps; ++n) limit_step(rho, lim, sgrid);
            result.rho = from_spectral(sgrid, rho);
            break;
        }
        case SchemeId::Isd:
        case SchemeId::Isa: {
            ImplicitState state = make_implicit_state(sgrid, eq, cfg.eps, cfg.dt, cfg.alpha);
            for (int n = 0; n < n_steps; ++n) {
                if (cfg.scheme == SchemeId::Isd)
                    isd_step(state, sgrid, eq);
                else
                    isa_step(state, sgrid, eq);
            }
            result.rho = from_spectral(sgrid, state.rho);
            break;
        }
        case SchemeId::Mmsd:
        case SchemeId::Mmsa: {
            MicroMacroState state = make_micromacro_state(sgrid, eq, cfg.eps, cfg.dt, cfg.alpha);
            for (int n = 0; n < n_steps; ++n) {
                if (cfg.scheme == SchemeId::Mmsd)
                    mmsd_step(state, sgrid, eq);
                else
                    mmsa_step(state, sgrid, eq);
            }
            result.rho = state.rho;
            break;
        }
        case SchemeId::Dsd:
        case SchemeId::Dsa:
        case SchemeId::DsaCn: {
            const CoefficientTable table =
                cfg.scheme == SchemeId::Dsd
                    ? build_diffusion_coefficients(n_steps, sgrid, eq, cfg.eps, cfg.dt)
                    : build_anomalous_coefficients(n_steps, sgrid, eq, cfg.eps, cfg.dt, cfg.alpha);
            HistoryBuffer history = make_history(sgrid, eq);
            for (int n = 0; n < n_steps; ++n) {
                if (cfg.scheme == SchemeId::DsaCn)
                    cn_variant_step(history, table, sgrid, eq.grid);
                else
                    duhamel_step(history, table, sgrid, eq.grid);
            }
            result.rho = from_spectral(sgrid, history.rho.back());
            break;
        }
    }

    result.walltime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

double relative_error(const Eigen::ArrayXd& ref, const Eigen::ArrayXd& test) {
    if (ref.size() != test.size())
        throw std::invalid_argument("relative_error: size mismatch");
    const double denom = std::sqrt(ref.square().sum());
    if (denom == 0.0) throw std::invalid_argument("relative_error: zero reference");
    return std::sqrt((test - ref).square().sum()) / denom;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& err,
                        double* residual, double floor, double ceiling) {
    if (x.size() != err.size()) throw std::invalid_argument("fit_loglog_slope: size mismatch");
    std::vector<double> lx, le;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (err[i] >= floor && err[i] <= ceiling && x[i] > 0.0) {
            lx.push_back(std::log(x[i]));
            le.push_back(std::log(err[i]));
        }
    const std::size_t n = lx.size();
    if (n < 3)
        throw std::runtime_error("fit_loglog_slope: fewer than 3 points inside the error window");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += le[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * le[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    if (residual) {
        double rss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = le[i] - slope * lx[i] - intercept;
            rss += r * r;
        }
        *residual = std::sqrt(rss / n);
    }
    return slope;
}

double stable_micromacro_dt(const ExperimentConfig& cfg, double eps, double requested) {
    const double dx = 2.0 * cfg.half_width / cfg.nx;
    // Transport is damped outright once relaxation dominates on the cell
    // scale; otherwise the explicit upwind part needs a CFL-type cap.
    if (eps <= dx / (2.0 * cfg.vmax)) return requested;
    const double cap = 0.9 * dx * std::pow(eps, cfg.alpha - 1.0) / cfg.vmax;
    if (requested <= cap) return requested;
    const int n = static_cast<int>(std::ceil(cfg.tfinal / cap));
    return cfg.tfinal / n;
}

namespace {

std::string fmt(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

ErrorRow make_row(const ExperimentConfig& cfg, double error, double order, double walltime) {
    return {scheme_name(cfg.scheme), cfg.alpha, cfg.eps, cfg.dt, cfg.nx, cfg.nv,
            cfg.vmax,                error,     order,   walltime};
}

bool is_micromacro(SchemeId id) { return id == SchemeId::Mmsd || id == SchemeId::Mmsa; }

void fit_report(ErrorReport& report, const std::vector<double>& x, const std::vector<double>& err) {
    report.slope = fit_loglog_slope(x, err, &report.residual);
}

}  // namespace

ErrorReport sweep_epsilon(const ExperimentConfig& cfg, const std::vector<double>& eps_list) {
    ErrorReport report;
    std::vector<double> errs;
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        ExperimentConfig run_cfg = cfg;
        run_cfg.eps = eps_list[i];
        if (is_micromacro(cfg.scheme))
            run_cfg.dt = stable_micromacro_dt(cfg, eps_list[i], cfg.dt);

        const RunResult run = run_scheme(run_cfg);

        ExperimentConfig ref_cfg = run_cfg;
        ref_cfg.scheme = targets_anomalous_limit(cfg.scheme) ? SchemeId::Ads : SchemeId::Ds;
        const RunResult ref = run_scheme(ref_cfg);

        const double err = relative_error(ref.rho, run.rho);
        errs.push_back(err);
        double pairwise = 0.0;
        if (i > 0)
            pairwise = std::log(errs[i] / errs[i - 1]) / std::log(eps_list[i] / eps_list[i - 1]);
        report.rows.push_back(make_row(run_cfg, err, pairwise, run.walltime_s));
    }
    fit_report(report, eps_list, errs);
    return report;
}

ErrorReport sweep_dt(const ExperimentConfig& cfg, const std::vector<double>& dt_list) {
    if (dt_list.empty()) throw std::invalid_argument("sweep_dt: empty dt list");
    double dt_min = dt_list[0];
    for (double dt : dt_list) dt_min = std::min(dt_min, dt);

    ExperimentConfig ref_cfg = cfg;
    ref_cfg.dt = dt_min / 16.0;
    const RunResult ref = run_scheme(ref_cfg);

    ErrorReport report;
    std::vector<double> errs;
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        ExperimentConfig run_cfg = cfg;
        run_cfg.dt = dt_list[i];
        const RunResult run = run_scheme(run_cfg);
        const double err = relative_error(ref.rho, run.rho);
        errs.push_back(err);
        double pairwise = 0.0;
        if (i > 0)
            pairwise = std::log(errs[i] / errs[i - 1]) / std::log(dt_list[i] / dt_list[i - 1]);
        report.rows.push_back(make_row(run_cfg, err, pairwise, run.walltime_s));
    }
    // Unlike the eps sweep there is no physical saturation floor here, only
    // the noise of the fine self-reference, so the window reaches far lower.
    report.slope = fit_loglog_slope(dt_list, errs, &report.residual, 1e-12, 1e-1);
    return report;
}

ErrorReport uniform_study(const ExperimentConfig& cfg, const std::vector<double>& dt_list,
                          double reference_dt) {
    ErrorReport report;
    std::vector<double> errs;
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        ExperimentConfig run_cfg = cfg;
        run_cfg.dt = dt_list[i];
        run_cfg.eps = std::pow(dt_list[i], 1.0 / cfg.alpha);
        if (is_micromacro(cfg.scheme))
            run_cfg.dt = stable_micromacro_dt(run_cfg, run_cfg.eps, run_cfg.dt);
        const RunResult run = run_scheme(run_cfg);

        ExperimentConfig ref_cfg = run_cfg;
        ref_cfg.scheme = targets_anomalous_limit(cfg.scheme) ? SchemeId::Ads : SchemeId::Ds;
        ref_cfg.dt = reference_dt;
        const RunResult ref = run_scheme(ref_cfg);

        const double err = relative_error(ref.rho, run.rho);
        errs.push_back(err);
        double pairwise = 0.0;
        if (i > 0)
            pairwise = std::log(errs[i] / errs[i - 1]) / std::log(dt_list[i] / dt_list[i - 1]);
        report.rows.push_back(make_row(run_cfg, err, pairwise, run.walltime_s));
    }
    // The whole point of this study is the plateau, so no slope is fitted;
    // keep the summary fields at their neutral defaults.
    return report;
}

ErrorReport single_run_report(const ExperimentConfig& cfg) {
    const RunResult run = run_scheme(cfg);
    Eigen::ArrayXd ref_rho;
    if (cfg.scheme == SchemeId::Ds || cfg.scheme == SchemeId::Ads) {
        const SpatialGrid sgrid = make_spatial_grid(cfg.nx, cfg.half_width);
        const Equilibrium eq = config_equilibrium(cfg);
        const LimitConfig lim = limit_config_for(cfg, eq, cfg.dt);
        const SpectralDensity rho0 = to_spectral(sgrid, initial_density(sgrid));
        ref_rho = from_spectral(sgrid, exact_limit_solution(cfg.tfinal, rho0, lim, sgrid));
    } else {
        ExperimentConfig ref_cfg = cfg;
        ref_cfg.scheme = targets_anomalous_limit(cfg.scheme) ? SchemeId::Ads : SchemeId::Ds;
        ref_rho = run_scheme(ref_cfg).rho;
    }
    ErrorReport report;
    report.rows.push_back(make_row(cfg, relative_error(ref_rho, run.rho), 0.0, run.walltime_s));
    return report;
}

void emit_csv(const ErrorReport& report, std::ostream& out) {
    out << "scheme,alpha,eps,dt,nx,nv,vmax,error,slope_or_order,walltime_s\n";
    for (const ErrorRow& r : report.rows)
        out << r.scheme << ',' << fmt(r.alpha) << ',' << fmt(r.eps) << ',' << fmt(r.dt) << ','
            << r.nx << ',' << r.nv << ',' << fmt(r.vmax) << ',' << fmt(r.error) << ','
            << fmt(r.slope_or_order) << ',' << fmt(r.walltime_s) << '\n';
}

void emit_csv(const ErrorReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    emit_csv(report, out);
}

}  // namespace apkin
