#include "geophase/model.hpp"

#include <cmath>
#include <numbers>

namespace geophase {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr complexd kI{0.0, 1.0};
}  // namespace

QubitConvention::QubitConvention(double omega0_) : omega0(omega0_) {
    if (!(omega0 > 0.0)) throw Error("omega0 must be positive");
}

Eigen::Matrix2cd QubitConvention::sigma_z() {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
Eigen::Matrix2cd QubitConvention::sigma_x() {
    Eigen::Matrix2cd m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
Eigen::Matrix2cd QubitConvention::sigma_y() {
    Eigen::Matrix2cd m;
    m << 0.0, -kI, kI, 0.0;
    return m;
}
Eigen::Matrix2cd QubitConvention::sigma_plus() {
    Eigen::Matrix2cd m;
    m << 0.0, 1.0, 0.0, 0.0;
    return m;
}
Eigen::Matrix2cd QubitConvention::sigma_minus() {
    Eigen::Matrix2cd m;
    m << 0.0, 0.0, 1.0, 0.0;
    return m;
}

BlochState::BlochState(double theta0_, double phi0_) : theta0(theta0_), phi0(phi0_) {
    if (!(theta0 >= 0.0 && theta0 <= kPi)) throw Error("theta0 must lie in [0, pi]");
    if (!(phi0 >= 0.0 && phi0 < 2.0 * kPi)) throw Error("phi0 must lie in [0, 2*pi)");
}

MixedInitialState::MixedInitialState(double theta_tilde0_, double phi0_, double gamma0_)
    : theta_tilde0(theta_tilde0_), phi0(phi0_), gamma0(gamma0_) {
    if (!(theta_tilde0 >= 0.0 && theta_tilde0 <= kPi))
        throw Error("theta_tilde0 must lie in [0, pi]");
    if (!(phi0 >= 0.0 && phi0 < 2.0 * kPi)) throw Error("phi0 must lie in [0, 2*pi)");
    if (!(gamma0 >= 0.0)) throw Error("gamma0 must be non-negative");
}

BathTemperature BathTemperature::finite(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw Error("beta must be positive and finite; use zero_temperature() for beta -> inf");
    return BathTemperature(beta, false);
}

BathTemperature BathTemperature::zero_temperature() { return BathTemperature(0.0, true); }

double BathTemperature::beta() const {
    if (zero_temp_) throw Error("beta is infinite on the zero-temperature branch");
    return beta_;
}

UnitaryOp2x2::UnitaryOp2x2(const Eigen::Matrix2cd& u) : u_(u) {
    const Eigen::Matrix2cd defect = u.adjoint() * u - Eigen::Matrix2cd::Identity();
    if (defect.cwiseAbs().maxCoeff() > 1e-12) throw Error("operator is not unitary to 1e-12");
}

UnitaryOp2x2 UnitaryOp2x2::exp_i_pauli(char axis, double angle) {
    Eigen::Matrix2cd sigma;
    switch (axis) {
        case 'x': sigma = QubitConvention::sigma_x(); break;
        case 'y': sigma = QubitConvention::sigma_y(); break;
        case 'z': sigma = QubitConvention::sigma_z(); break;
        default: throw Error("axis must be one of x, y, z");
    }
    return UnitaryOp2x2(std::cos(angle) * Eigen::Matrix2cd::Identity() +
                        kI * std::sin(angle) * sigma);
}

PreparationWeights::PreparationWeights(complexd w0_, complexd w1_) : w0(w0_), w1(w1_) {
    if (std::abs(w0) == 0.0 && std::abs(w1) == 0.0) throw NoCoherenceError();
}

PreparationWeights projective_weights(const BlochState& state) {
    // Common factor <psi|sigma_+|psi> = (1/2) sin(theta0) e^{i phi0} divided out.
    if (std::sin(state.theta0) == 0.0)
        throw NoCoherenceError("no initial coherence: sin(theta0) = 0");
    const double c2 = std::cos(state.theta0 / 2.0);
    const double s2 = std::sin(state.theta0 / 2.0);
    return PreparationWeights(c2 * c2, s2 * s2);
}

PreparationWeights unitary_weights(const UnitaryOp2x2& u) {
    const Eigen::Matrix2cd m =
        u.matrix().adjoint() * QubitConvention::sigma_plus() * u.matrix();
    const complexd w0 = m(0, 0);
    const complexd w1 = m(1, 1);
    if (std::abs(w0) < 1e-15 && std::abs(w1) < 1e-15)
        throw NoCoherenceError("no initial coherence: both preparation weights vanish");
    return PreparationWeights(w0, w1);
}

MixedInitialState mixed_state_from_unitary(const UnitaryOp2x2& u,
                                           const BathTemperature& temperature, double omega0) {
    const Eigen::Matrix2cd& m = u.matrix();
    Eigen::Matrix2cd rho;
    if (temperature.is_zero_temperature()) {
        rho = m.col(1) * m.col(1).adjoint();  // only the l = 1 Gibbs branch survives
    } else {
        const double x = temperature.beta() * omega0 / 2.0;
        // Gibbs weights g_l = e^{-beta omega0 (-1)^l / 2} / (2 cosh(beta omega0/2)),
        // written with the larger exponent divided out.
        const double g0 = 1.0 / (1.0 + std::exp(2.0 * x));
        const double g1 = 1.0 - g0;
        rho = g0 * m.col(0) * m.col(0).adjoint() + g1 * m.col(1) * m.col(1).adjoint();
    }
    const double p0 = rho(0, 0).real();
    const double p1 = rho(1, 1).real();
    const complexd r10 = rho(1, 0);
    const double coherence = std::abs(r10);
    const double sin_theta = 2.0 * std::sqrt(std::max(p0, 0.0) * std::max(p1, 0.0));
    if (coherence < 1e-15) throw NoCoherenceError();
    if (sin_theta == 0.0)
        throw Error("inconsistent state: vanishing sin(theta~0) with nonzero coherence");
    const double theta = 2.0 * std::atan2(std::sqrt(std::max(p1, 0.0)),
                                          std::sqrt(std::max(p0, 0.0)));
    // 2|rho10| <= sin(theta~0) always; clamp the float dust at gamma0 = 0.
    const double gamma0 = std::max(0.0, -std::log(2.0 * coherence / sin_theta));
    double phi0 = std::arg(r10);
    if (phi0 < 0.0) phi0 += 2.0 * kPi;
    if (phi0 >= 2.0 * kPi) phi0 = 0.0;
    return MixedInitialState(theta, phi0, gamma0);
}

}  // namespace geophase
