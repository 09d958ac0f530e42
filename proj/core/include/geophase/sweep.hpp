#ifndef GEOPHASE_SWEEP_HPP
#define GEOPHASE_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "geophase/config.hpp"
#include "geophase/geometric_phase.hpp"
#include "geophase/kernel.hpp"

namespace geophase {

struct BosonicEnvSpec {
    double lambda;
    double s;
    double omega_c;
};

struct SpinEnvSpec {
    int n;
    double omega;
    double lambda;
    // Optional per-mode list; overrides the homogeneous (n, omega, lambda).
    std::vector<SpinMode> explicit_modes;
};

using EnvSpec = std::variant<BosonicEnvSpec, SpinEnvSpec>;

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::Projective;
    double theta0 = 0.0;  // projective / uncorrelated
    char axis = 'y';      // unitary: Omega = exp(i * angle * sigma_axis)
    double angle = 0.0;
    double phi0 = 0.0;
};

enum class SweepVariable { S, Lambda, Beta, Theta0 };

struct SweepSpec {
    EnvSpec environment;
    ScenarioSpec scenario;
    bool beta_infinite = false;
    double beta = 0.0;
    double omega0 = 1.0;
    SweepVariable variable = SweepVariable::Lambda;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    int grid_size = 2048;
    std::string output_path;
    bool no_header = false;
    int jobs = 0;  // 0 = hardware concurrency
};

// Build from a parsed config ([environment]/[scenario]/[sweep]/[output]);
// throws ConfigError on invalid or missing fields.
SweepSpec sweep_spec_from_config(const KeyValueConfig& config);
// Same, minus the [sweep] section (single-point trajectory runs).
SweepSpec point_spec_from_config(const KeyValueConfig& config);

enum class RowStatus { Ok, Singular, Failed };
std::string to_string(RowStatus s);

struct SweepRow {
    double value = 0.0;
    double phi_g_corr = 0.0;
    double phi_g_uncorr = 0.0;
    double delta_corr = 0.0;
    double delta_uncorr = 0.0;
    RowStatus status = RowStatus::Ok;
    std::string message;  // not part of the CSV schema
};

// One row per sweep point, in sweep order; per-point failures are recorded
// in-row and never abort the sweep. Deterministic for identical specs.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Column order is fixed: sweep_value, phi_g_corr, phi_g_uncorr,
// delta_phi_g_corr, delta_phi_g_uncorr, status.
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

struct TrajectoryDump {
    std::vector<double> t;
    std::vector<double> gamma;      // -ln|ratio|; +inf at singular samples
    std::vector<double> chi;        // NaN from the first singular/ambiguous sample on
    std::vector<double> chi_dot;
    std::vector<double> abs_ratio;
    std::vector<double> arg_ratio;  // principal branch
    std::vector<RowStatus> status;
};

TrajectoryDump run_trajectory(const SweepSpec& spec);
void write_trajectory_csv(std::ostream& out, const SweepSpec& spec, const TrajectoryDump& dump);

}  // namespace geophase

#endif
