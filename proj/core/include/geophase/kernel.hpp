#ifndef GEOPHASE_KERNEL_HPP
#define GEOPHASE_KERNEL_HPP

#include <optional>
#include <variant>
#include <vector>

#include "geophase/bosonic.hpp"
#include "geophase/model.hpp"
#include "geophase/spin_bath.hpp"

namespace geophase {

using Environment = std::variant<BosonicEnvironment, SpinEnvironment>;

enum class ScenarioKind { UncorrelatedThermal, Projective, Unitary };

// Preparation x temperature context feeding the universal coherence ratio
//   X(t) = [w0 e^{-beta w0/2} F_minus(t) + w1 e^{+beta w0/2} F_plus(t)] / D,
//   D    =  w0 e^{-beta w0/2} + w1 e^{+beta w0/2}   (only the w1 term at beta -> inf).
// The uncorrelated kind bypasses the branch combination and uses the thermal
// factor e^{-Gamma_uc} (bosonic) or prod_j A_j (spin).
class CorrelationScenario {
  public:
    static CorrelationScenario uncorrelated(const BlochState& state,
                                            const BathTemperature& temperature, double omega0);
    static CorrelationScenario uncorrelated(const MixedInitialState& state,
                                            const BathTemperature& temperature, double omega0);
    static CorrelationScenario projective(const BlochState& state,
                                          const BathTemperature& temperature, double omega0);
    static CorrelationScenario unitary(const UnitaryOp2x2& u, const BathTemperature& temperature,
                                       double omega0);

    ScenarioKind kind() const { return kind_; }
    const PreparationWeights& weights() const;  // throws for uncorrelated
    const BathTemperature& temperature() const { return temperature_; }
    double omega0() const { return omega0_; }
    // Initial reduced state entering the geometric-phase functionals.
    const MixedInitialState& initial_state() const { return initial_state_; }
    bool mixed_branch() const { return initial_state_.gamma0 > 0.0; }

  private:
    CorrelationScenario(ScenarioKind kind, std::optional<PreparationWeights> w,
                        BathTemperature temperature, double omega0, MixedInitialState init);
    ScenarioKind kind_;
    std::optional<PreparationWeights> weights_;
    BathTemperature temperature_;
    double omega0_;
    MixedInitialState initial_state_;
};

// X(t) for given branch factors; value 1 at t = 0 since F_mp(0) = 1.
complexd coherence_ratio(const CorrelationScenario& scenario, const BranchFactors& factors);
// Uncorrelated kind: the real thermal factor is passed through unchanged.
complexd coherence_ratio_uncorrelated(const CorrelationScenario& scenario, complexd thermal_factor);

// Sampled Gamma(t), unwrapped chi(t) and analytic chi_dot(t) over one cycle
// [0, tau], tau = 2*pi/omega0. Gamma(0) = chi(0) = 0 exactly.
struct DephasingTrajectory {
    std::vector<double> grid;
    std::vector<double> gamma;
    std::vector<double> chi;
    std::vector<double> chi_dot;
    double omega0 = 1.0;
    double tau() const { return grid.back(); }
    std::size_t size() const { return grid.size(); }
};

struct TrajectoryOptions {
    int max_grid = 1 << 16;  // unwrap ambiguity refinement cap
    QuadratureOptions quadrature{};
};

// Uniform grid of M intervals (M >= 256, even); auto-doubles M on unwrap
// ambiguity up to max_grid. Singular samples abort with SingularSampleError.
DephasingTrajectory build_trajectory(const CorrelationScenario& scenario,
                                     const Environment& environment, int grid_size = 2048,
                                     const TrajectoryOptions& options = {});

// Pointwise samples for dumps: per-sample ratio with singular flags, no
// unwrapping requirements.
struct RatioSamples {
    std::vector<double> t;
    std::vector<complexd> ratio;
    std::vector<bool> singular;
};
RatioSamples sample_coherence_ratio(const CorrelationScenario& scenario,
                                    const Environment& environment, std::span<const double> t,
                                    const QuadratureOptions& opt = {});

}  // namespace geophase

#endif
