#include <cmath>

#include "geophase/errors.hpp"
#include "geophase/oracles.hpp"

namespace geophase {

DensityMatrixPath path_from_trajectory(const DephasingTrajectory& traj,
                                       const MixedInitialState& init) {
    DensityMatrixPath path;
    path.t = traj.grid;
    path.rho.resize(traj.size());
    const double p0 = std::cos(init.theta_tilde0 / 2.0) * std::cos(init.theta_tilde0 / 2.0);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double omega_t = traj.omega0 * traj.grid[k] + traj.chi[k] + init.phi0;
        const double r = 0.5 * std::sin(init.theta_tilde0) *
                         std::exp(-init.gamma0 - traj.gamma[k]);
        Eigen::Matrix2cd rho;
        rho(0, 0) = p0;
        rho(1, 1) = 1.0 - p0;
        rho(1, 0) = r * std::polar(1.0, omega_t);
        rho(0, 1) = std::conj(rho(1, 0));
        path.rho[k] = rho;
    }
    return path;
}

double tong_phase(const DensityMatrixPath& path) {
    const std::size_t n = path.t.size();
    if (n < 1025) throw Error("tong_phase needs at least 1024 intervals");
    if (path.rho.size() != n) throw Error("path size mismatch");

    // Analytic 2x2 eigendecomposition per step, eigenvector phases fixed by
    // positive-real overlap with the previous step (discrete parallel
    // transport); the functional is then the arg of the weighted sum of
    // start-to-end overlaps in the transported frame.
    Eigen::Vector2cd prev[2];
    Eigen::Vector2cd start[2];
    double eps_start[2] = {0.0, 0.0};
    double eps_end[2] = {0.0, 0.0};

    for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Matrix2cd& rho = path.rho[k];
        const double a = rho(0, 0).real();
        const double d = rho(1, 1).real();
        const complexd c = rho(1, 0);
        const double gap = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(c));
        if (gap < 1e-13) throw Error("path degenerate: eigenvalues coincide");
        const double eps_plus = 0.5 * (a + d + gap);
        const double eps_minus = 0.5 * (a + d - gap);

        Eigen::Vector2cd v[2];
        if (std::abs(c) > 1e-150) {
            // (rho - eps) v = 0 has v = (eps - d, c)^T up to normalization
            v[0] = Eigen::Vector2cd(complexd(eps_plus - d, 0.0), c);
            v[1] = Eigen::Vector2cd(complexd(eps_minus - d, 0.0), c);
        } else {
            // diagonal rho: eigenvectors are the basis states
            const bool zero_first = a >= d;
            v[0] = zero_first ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
            v[1] = zero_first ? Eigen::Vector2cd(0.0, 1.0) : Eigen::Vector2cd(1.0, 0.0);
        }
        v[0].normalize();
        v[1].normalize();

        for (int i = 0; i < 2; ++i) {
            if (k == 0) {
                start[i] = v[i];
                prev[i] = v[i];
                eps_start[i] = (i == 0) ? eps_plus : eps_minus;
            } else {
                const complexd ov = prev[i].adjoint() * v[i];
                if (std::abs(ov) > 1e-300) v[i] *= std::conj(ov) / std::abs(ov);
                prev[i] = v[i];
            }
        }
        eps_end[0] = eps_plus;
        eps_end[1] = eps_minus;
    }

    complexd total = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double w = std::sqrt(std::max(eps_start[i], 0.0) * std::max(eps_end[i], 0.0));
        total += w * complexd(start[i].adjoint() * prev[i]);
    }
    return std::arg(total);
}

}  // namespace geophase
