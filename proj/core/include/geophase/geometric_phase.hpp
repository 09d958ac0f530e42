#ifndef GEOPHASE_GEOMETRIC_PHASE_HPP
#define GEOPHASE_GEOMETRIC_PHASE_HPP

#include <vector>

#include "geophase/kernel.hpp"
#include "geophase/model.hpp"

namespace geophase {

// Instantaneous eigen-decomposition data of rho(t) along a trajectory:
//   eps_pm = (1 +- f)/2,  f = sqrt(1 + sin^2(th0)(e^{-2 Gamma0 - 2 Gamma(t)} - 1)),
//   cos(theta_t) = cos(th0)/f. eps_pm are independent of chi(t).
struct EigenPathPoint {
    double t;
    double eps_plus;
    double eps_minus;
    double theta_t;
    double f_t;
};

std::vector<EigenPathPoint> eigen_path(const DephasingTrajectory& traj,
                                       const MixedInitialState& init);

struct GeometricPhaseResult {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;   // 0 in the pure branch
    double phi_total = 0.0;  // wrapped to (-pi, pi]
    double delta = 0.0;      // set by phase_correction
};

// Pure branch: Phi_G = Phi1 + Phi2 with
//   Phi1 = -pi - chi(tau)/2 + (cos th0 / 2) I(tau),
//   I(tau) = int_0^tau F(t)^{-1} [omega0 + chi_dot(t)] dt  (Simpson + Richardson),
//   Phi2 = arg(1 + e^{i chi(tau)} e^{-Gamma(tau)} (1 - cos th0)/(F(tau) + cos th0)).
GeometricPhaseResult phase_pure(const DephasingTrajectory& traj, const BlochState& state);

// Mixed branch adds Phi3 = arg(1 + a(tau) b(tau) e^{-i cos(th~0) I~(tau)});
// reduces exactly to the pure branch when gamma0 = 0 (eps_minus(0) = 0).
GeometricPhaseResult phase_mixed(const DephasingTrajectory& traj, const MixedInitialState& init);

// Reference phases for corrections:
//   pure:  Phi_U = -pi + pi cos(theta0)
//   mixed: Phi_0 = phase_mixed on the zero-coupling trajectory at the same
//          (theta~0, Gamma0), per-figure caption definition.
double reference_phase_pure(const BlochState& state);
double reference_phase_mixed(const MixedInitialState& init, double omega0, int grid_size = 2048);

// Signed wrapped difference Phi_G - reference in (-pi, pi].
double phase_correction(const GeometricPhaseResult& result, double reference_phase);

}  // namespace geophase

#endif
