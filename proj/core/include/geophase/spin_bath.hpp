#ifndef GEOPHASE_SPIN_BATH_HPP
#define GEOPHASE_SPIN_BATH_HPP

#include <complex>
#include <vector>

#include "geophase/bosonic.hpp"  // BranchFactors
#include "geophase/model.hpp"

namespace geophase {

struct SpinMode {
    double omega;   // transverse field frequency > 0
    double lambda;  // coupling >= 0
    double alpha() const;  // sqrt(lambda^2 + omega^2)
};

// N two-level systems: H_B = sum omega_j sigma_x^j, V = sum lambda_j sigma_z^j.
struct SpinBathSpec {
    SpinBathSpec(std::vector<SpinMode> modes_, BathTemperature temperature_);
    // Homogeneous bath of N identical modes (the figures' configuration).
    static SpinBathSpec homogeneous(int n, double omega, double lambda,
                                    BathTemperature temperature);
    std::vector<SpinMode> modes;
    BathTemperature temperature;
    bool homogeneous_bath() const;
};

// A_j(t) = 1 - 2 (lambda^2/alpha^2) sin^2(alpha t)
// B_j(t) = (lambda^2/alpha^2) tanh(beta alpha) sin(2 alpha t), tanh -> 1 at beta -> inf.
// Each (A, B) is a normalized single-spin bath trace: A^2 + B^2 <= 1.
struct PerSpinFactor {
    double a;
    double b;
};

PerSpinFactor per_spin_factor(const SpinMode& mode, const BathTemperature& temperature, double t);

// Uncorrelated coherence factor prod_j A_j(t), a signed real packaged as
// complex (negative products are legal when lambda_j > omega_j). The caller
// extracts Gamma_uc = -ln|prod A_j|; a zero product marks a singular sample.
complexd gamma_uc_spin(const SpinBathSpec& bath, double t);

// F_minus = prod_j (A_j - i B_j), F_plus = conj(F_minus), C0 divided out.
BranchFactors spin_branch_factors(const SpinBathSpec& bath, double t);

// Explicit correlated decay correction
//   -1/2 sum_j ln[1 + (l/w)^4 (tanh(beta a) sin(2 a t) / (1 + (l/w)^2 cos(2 a t)))^2];
// redundancy check against -ln|F_minus| - Gamma_uc. Singular where A_j = 0.
double gamma_corr1_check(const SpinBathSpec& bath, double t);

// Per-mode data for a whole trajectory grid with per-spin unwrapped args
// (each arg(A_j + i B_j) lifted along t independently, then summed; the
// product's arg winds N times faster and would defeat coarse grids).
struct SpinGrid {
    std::vector<double> log_abs_f;     // sum_j ln|A_j + i B_j|        (= -Gamma of F_plus)
    std::vector<double> arg_f;         // sum_j unwrapped arg(A_j + i B_j)
    std::vector<complexd> dlog_f;      // sum_j (Adot_j + i Bdot_j)/(A_j + i B_j)
    std::vector<double> prod_a;        // prod_j A_j (signed)
    std::vector<bool> singular;        // |A_j + i B_j| == 0 at sample
    std::vector<bool> singular_uncorr; // prod A_j == 0 or sign flip into sample
};

SpinGrid spin_grid(const SpinBathSpec& bath, std::span<const double> t);

struct SpinEnvironment {
    SpinBathSpec bath;
};

}  // namespace geophase

#endif
