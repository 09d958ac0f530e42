#ifndef GEOPHASE_ORACLES_HPP
#define GEOPHASE_ORACLES_HPP

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "geophase/kernel.hpp"
#include "geophase/model.hpp"
#include "geophase/spin_bath.hpp"

namespace geophase {

// Brute-force validators. Everything here builds dense Hamiltonians and
// diagonalizes them; nothing reuses the closed forms it is meant to check.

struct FockMode {
    double g;      // coupling, real
    double omega;  // mode frequency > 0
};

struct SpinBathModel {
    std::vector<SpinMode> modes;  // N <= 6
};

struct FockBathModel {
    std::vector<FockMode> modes;  // <= 3
    int n_max;                    // Fock cutoff per mode, <= 40
};

struct UncorrelatedPrep {
    BlochState state;
};
struct ProjectivePrep {
    BlochState state;
};
struct UnitaryPrep {
    UnitaryOp2x2 u;
};
using Preparation = std::variant<UncorrelatedPrep, ProjectivePrep, UnitaryPrep>;

struct ExactModelSpec {
    std::variant<SpinBathModel, FockBathModel> bath;
    double omega0;
    BathTemperature temperature;
    Preparation preparation;
};

// Largest total Hilbert dimension accepted for dense diagonalization.
inline constexpr int kExactDimensionCap = 4200;

struct ExactCoherenceResult {
    // rho10(t)/rho10(0); equals coherence_ratio(t) * e^{i omega0 t}.
    std::vector<complexd> ratio;
    // Populations of |0> along the path (constant under pure dephasing).
    std::vector<double> population0;
};

ExactCoherenceResult exact_coherence(const ExactModelSpec& spec, std::span<const double> t);

// Finite-sum closed form at discrete-mode scale (no quadrature error):
// Gamma_uc = sum_k 4|g|^2 coth(beta w/2)(1-cos w t)/w^2, Phi likewise, then
// the same X(t) assembly. Returns the ratio WITHOUT the e^{i omega0 t} factor.
complexd discrete_mode_closed_form(std::span<const FockMode> modes,
                                   const BathTemperature& temperature,
                                   const Preparation& preparation, double omega0, double t);

// Grid of 2x2 density matrices (Hermitian, unit trace, constant diagonal).
struct DensityMatrixPath {
    std::vector<double> t;
    std::vector<Eigen::Matrix2cd> rho;
};

// Assemble the path rho(t) determined by (theta~0, phi0, Gamma0) and the
// trajectory's (Gamma, chi): off-diagonal (1/2) sin(th~0) e^{-G0-G} e^{i Omega}.
DensityMatrixPath path_from_trajectory(const DephasingTrajectory& traj,
                                       const MixedInitialState& init);

// Discretized kinematic phase functional: eigendecompose each rho(t_k),
// enforce parallel transport by rotating each eigenvector to have positive
// real overlap with its predecessor, return
//   arg( sum_k sqrt(eps_k(0) eps_k(tau)) <eps_k(0)|eps_k(tau)_transported> ).
// Throws on degenerate paths (eps_+ == eps_-).
double tong_phase(const DensityMatrixPath& path);

// ---- validation matrix ----------------------------------------------------

struct OracleCaseResult {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
};

struct OracleReport {
    std::vector<OracleCaseResult> cases;
    bool all_pass() const;
};

// Selectors: "spin-small", "fock", "zero-coupling", "tong", "all".
OracleReport run_oracle_check(const std::string& selector);
void print_report(const OracleReport& report, std::ostream& out);

}  // namespace geophase

#endif
