#include "geophase/geometric_phase.hpp"

#include <cmath>
#include <numbers>

#include "geophase/angles.hpp"
#include "geophase/errors.hpp"
#include "geophase/quadrature.hpp"

namespace geophase {

namespace {

constexpr double kPi = std::numbers::pi;

double f_factor(double sin2_theta0, double gamma0, double gamma_t) {
    // sqrt(1 + sin^2(th0)(e^{-2 G0 - 2 G} - 1)); argument >= cos^2(th0) >= 0
    const double inner = 1.0 + sin2_theta0 * (std::exp(-2.0 * (gamma0 + gamma_t)) - 1.0);
    return std::sqrt(std::max(inner, 0.0));
}

// I(tau) = int_0^tau F^{-1} (omega0 + chi_dot) dt by Simpson + Richardson.
double path_integral(const DephasingTrajectory& traj, double sin2_theta0, double gamma0) {
    const std::size_t n = traj.size();
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k)
        y[k] = (traj.omega0 + traj.chi_dot[k]) / f_factor(sin2_theta0, gamma0, traj.gamma[k]);
    const double h = traj.grid[1] - traj.grid[0];
    if ((n - 1) % 4 == 0) return simpson_richardson(y, h);
    return simpson_uniform(y, h);
}

void require_regular(const DephasingTrajectory& traj) {
    if (traj.size() < 257) throw Error("trajectory grid too small for phase evaluation");
    for (double g : traj.gamma)
        if (!std::isfinite(g)) throw Error("trajectory contains singular samples");
}

}  // namespace

std::vector<EigenPathPoint> eigen_path(const DephasingTrajectory& traj,
                                       const MixedInitialState& init) {
    const double st = std::sin(init.theta_tilde0);
    const double ct = std::cos(init.theta_tilde0);
    std::vector<EigenPathPoint> out(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double f = f_factor(st * st, init.gamma0, traj.gamma[k]);
        out[k] = EigenPathPoint{traj.grid[k], 0.5 * (1.0 + f), 0.5 * (1.0 - f),
                                std::atan2(st * std::exp(-init.gamma0 - traj.gamma[k]), ct), f};
    }
    return out;
}

GeometricPhaseResult phase_pure(const DephasingTrajectory& traj, const BlochState& state) {
    if (std::sin(state.theta0) == 0.0)
        throw NoCoherenceError("phase undefined, no coherence: theta0 in {0, pi}");
    return phase_mixed(traj, MixedInitialState::from_bloch(state));
}

GeometricPhaseResult phase_mixed(const DephasingTrajectory& traj, const MixedInitialState& init) {
    require_regular(traj);
    const double th0 = init.theta_tilde0;
    if (std::sin(th0) == 0.0)
        throw NoCoherenceError("phase undefined, no coherence: theta~0 in {0, pi}");
    const double st = std::sin(th0);
    const double ct = std::cos(th0);
    const double g0 = init.gamma0;
    const double chi_tau = traj.chi.back();
    const double gamma_tau = traj.gamma.back();

    const double integral = path_integral(traj, st * st, g0);
    const double f0 = f_factor(st * st, g0, 0.0);
    const double ftau = f_factor(st * st, g0, gamma_tau);

    GeometricPhaseResult r;
    r.phi1 = -kPi - chi_tau / 2.0 + 0.5 * ct * integral;

    // tan(theta~(t)/2) = sin(th0) e^{-G0-G} / (F + cos th0)
    const double tan_half_0 = st * std::exp(-g0) / (f0 + ct);
    const double tan_half_tau = st * std::exp(-g0 - gamma_tau) / (ftau + ct);
    const complexd phase_tau = std::polar(1.0, chi_tau);
    r.phi2 = std::arg(1.0 + phase_tau * tan_half_0 * tan_half_tau);

    const double eps_minus_0 = 0.5 * (1.0 - f0);
    if (eps_minus_0 > 1e-15) {
        const double eps_plus_0 = 0.5 * (1.0 + f0);
        const double eps_minus_tau = 0.5 * (1.0 - ftau);
        const double eps_plus_tau = 0.5 * (1.0 + ftau);
        const double a = std::sqrt((eps_minus_0 * eps_minus_tau) / (eps_plus_0 * eps_plus_tau));
        const complexd b = (tan_half_0 * tan_half_tau + phase_tau) /
                           (1.0 + phase_tau * tan_half_0 * tan_half_tau);
        r.phi3 = std::arg(1.0 + a * b * std::polar(1.0, -ct * integral));
    } else {
        r.phi3 = 0.0;  // pure-state reduction
    }
    r.phi_total = wrap_angle(r.phi1 + r.phi2 + r.phi3);
    return r;
}

double reference_phase_pure(const BlochState& state) {
    return -kPi + kPi * std::cos(state.theta0);
}

double reference_phase_mixed(const MixedInitialState& init, double omega0, int grid_size) {
    DephasingTrajectory zero;
    zero.omega0 = omega0;
    const double tau = 2.0 * kPi / omega0;
    zero.grid.resize(static_cast<std::size_t>(grid_size) + 1);
    for (int k = 0; k <= grid_size; ++k)
        zero.grid[static_cast<std::size_t>(k)] = tau * k / grid_size;
    zero.grid.back() = tau;
    zero.gamma.assign(zero.grid.size(), 0.0);
    zero.chi.assign(zero.grid.size(), 0.0);
    zero.chi_dot.assign(zero.grid.size(), 0.0);
    return phase_mixed(zero, init).phi_total;
}

double phase_correction(const GeometricPhaseResult& result, double reference_phase) {
    return circular_distance(result.phi_total, reference_phase);
}

}  // namespace geophase
