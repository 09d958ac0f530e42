#ifndef GEOPHASE_MODEL_HPP
#define GEOPHASE_MODEL_HPP

#include <complex>

#include <Eigen/Dense>

#include "geophase/errors.hpp"

namespace geophase {

using complexd = std::complex<double>;

// Basis and sign conventions used throughout:
//   sigma_z |l> = (-1)^l |l>,  sigma_plus = |0><1|,
//   coherence tracked as rho10(t) = <sigma_plus(t)>,
//   H_S = (omega0/2) sigma_z, cycle time tau = 2*pi/omega0.
struct QubitConvention {
    explicit QubitConvention(double omega0_);
    double omega0;
    double tau() const { return 2.0 * 3.14159265358979323846 / omega0; }

    static Eigen::Matrix2cd sigma_z();
    static Eigen::Matrix2cd sigma_x();
    static Eigen::Matrix2cd sigma_y();
    static Eigen::Matrix2cd sigma_plus();   // |0><1|
    static Eigen::Matrix2cd sigma_minus();  // |1><0|
};

// Pure initial system state |psi> = cos(theta0/2)|0> + e^{i phi0} sin(theta0/2)|1>.
struct BlochState {
    BlochState(double theta0_, double phi0_ = 0.0);
    double theta0;  // [0, pi]
    double phi0;    // [0, 2*pi)
};

// (theta~0, phi0, Gamma0) parametrization of a possibly mixed prepared state:
//   populations cos^2(theta~0/2), sin^2(theta~0/2),
//   rho10(0) = (1/2) e^{-Gamma0} sin(theta~0) e^{i phi0}.
// gamma0 == 0 reproduces BlochState semantics. theta~0 is not a Bloch angle.
struct MixedInitialState {
    MixedInitialState(double theta_tilde0_, double phi0_, double gamma0_);
    static MixedInitialState from_bloch(const BlochState& s) {
        return MixedInitialState(s.theta0, s.phi0, 0.0);
    }
    double theta_tilde0;  // [0, pi]
    double phi0;          // [0, 2*pi)
    double gamma0;        // >= 0
};

// Inverse temperature with an exact beta -> infinity branch. Gibbs ratios,
// coth and tanh factors take their exact limits in that branch; it is never
// approximated by a large float.
struct BathTemperature {
    static BathTemperature finite(double beta);
    static BathTemperature zero_temperature();  // beta -> infinity
    bool is_zero_temperature() const { return zero_temp_; }
    double beta() const;  // throws on the zero-temperature branch

  private:
    BathTemperature(double b, bool z) : beta_(b), zero_temp_(z) {}
    double beta_;
    bool zero_temp_;
};

// Unitary preparation operator on the system qubit; U^dag U = 1 to 1e-12.
struct UnitaryOp2x2 {
    explicit UnitaryOp2x2(const Eigen::Matrix2cd& u);
    // exp(i * angle * sigma_axis) for axis in {'x','y','z'}
    static UnitaryOp2x2 exp_i_pauli(char axis, double angle);
    const Eigen::Matrix2cd& matrix() const { return u_; }

  private:
    Eigen::Matrix2cd u_;
};

// The pair (w0, w1) = (<0|Omega^dag sigma_+ Omega|0>, <1|...|1>) that fully
// encodes how the preparation enters the coherence ratio X(t).
struct PreparationWeights {
    PreparationWeights(complexd w0_, complexd w1_);
    complexd w0;
    complexd w1;
};

// Projective preparation: weights reduce to the real pair
// (cos^2(theta0/2), sin^2(theta0/2)) after the common factor
// <psi|sigma_+|psi> is divided out. theta0 in {0, pi} carries no coherence.
PreparationWeights projective_weights(const BlochState& state);

// Unitary preparation: w_l = <l|U^dag sigma_+ U|l> by direct 2x2 algebra.
PreparationWeights unitary_weights(const UnitaryOp2x2& u);

// Reduced initial state of the qubit prepared by a unitary on the global
// Gibbs state: rho_S(0) = sum_l g_l U|l><l|U^dag with qubit Gibbs weights
// g_l (the bath partition factors are l-independent for both environments
// treated here and cancel). The zero-temperature branch keeps only l = 1.
MixedInitialState mixed_state_from_unitary(const UnitaryOp2x2& u,
                                           const BathTemperature& temperature,
                                           double omega0);

}  // namespace geophase

#endif
