#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apkin/micromacro.hpp"
#include "apkin/spectral.hpp"

namespace apkin {

enum class SchemeId { Isd, Isa, Mmsd, Mmsa, Dsd, Dsa, DsaCn, Ds, Ads };

std::string scheme_name(SchemeId id);
std::optional<SchemeId> parse_scheme(const std::string& name);

/// True for the schemes whose vanishing-eps limit is the fractional heat
/// equation (the others target the classical heat equation).
bool targets_anomalous_limit(SchemeId id);

struct ExperimentConfig {
    SchemeId scheme = SchemeId::Isa;
    double alpha = 1.5;
    double eps = 1e-6;
    double dt = 1e-3;
    double tfinal = 0.1;
    int nx = 64;
    int nv = 200;
    double vmax = 50.0;
    EquilibriumKind equilibrium = EquilibriumKind::HeavyTail;
    double half_width = 1.0;
    bool use_continuous_constants = false;  // Ds/Ads coefficient source
};

/// Fills nx/nv/vmax/equilibrium/alpha with the defaults matching the scheme
/// family (heavy-tail grid 200 x [-50, 50], Gaussian grid 20 x [-10, 10],
/// micro-macro schemes on nx = 32, everything else on nx = 64).
ExperimentConfig default_config(SchemeId scheme);

struct RunResult {
    Eigen::ArrayXd rho;      // final density on the spatial nodes
    double walltime_s = 0.0;
};

/// Runs round(tfinal / dt) steps of the configured scheme; tfinal must be an
/// integer multiple of dt.
RunResult run_scheme(const ExperimentConfig& cfg);

struct ErrorRow {
    std::string scheme;
    double alpha = 0.0, eps = 0.0, dt = 0.0;
    int nx = 0, nv = 0;
    double vmax = 0.0;
    double error = 0.0;
    double slope_or_order = 0.0;
    double walltime_s = 0.0;
};

struct ErrorReport {
    std::vector<ErrorRow> rows;
    double slope = 0.0;     // global log-log fit over the admitted rows
    double residual = 0.0;  // rms residual of that fit
};

/// Discrete relative L2 error ||test - ref|| / ||ref||.
double relative_error(const Eigen::ArrayXd& ref, const Eigen::ArrayXd& test);

/// Least-squares slope of log(err) against log(x), restricted to errors in
/// [floor, ceiling]; requires at least 3 admitted points.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& err,
                        double* residual = nullptr, double floor = 1e-7, double ceiling = 1e-1);

/// Largest time step kept by the explicit micro-macro transport at this eps
/// (never larger than requested); returns requested when the relaxation is
/// strong enough to damp the transport outright.
double stable_micromacro_dt(const ExperimentConfig& cfg, double eps, double requested);

/// Error against the limit solver (same dt) for each eps in the list; for
/// micro-macro schemes the dt is capped per eps by stable_micromacro_dt and
/// rounded so that tfinal stays an integer number of steps.
ErrorReport sweep_epsilon(const ExperimentConfig& cfg, const std::vector<double>& eps_list);

/// Error against a self-reference at min(dt)/16 for each dt in the list;
/// slope_or_order holds the pairwise observed order.
ErrorReport sweep_dt(const ExperimentConfig& cfg, const std::vector<double>& dt_list);

/// Coupled sweep along dt = eps^alpha (eps = dt^{1/alpha}); error against the
/// limit solver run at reference_dt.
ErrorReport uniform_study(const ExperimentConfig& cfg, const std::vector<double>& dt_list,
                          double reference_dt = 1e-6);

/// Single run reported as one row; the error column compares against the
/// limit solver at the same dt (or the exact semigroup for Ds/Ads).
ErrorReport single_run_report(const ExperimentConfig& cfg);

void emit_csv(const ErrorReport& report, std::ostream& out);
void emit_csv(const ErrorReport& report, const std::string& path);

}  // namespace apkin
