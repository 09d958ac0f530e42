#include "geophase/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "geophase/angles.hpp"
#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kPi = std::numbers::pi;
// |ratio| below this is treated as a coherence zero: Gamma would exceed the
// log-representable range and chi is no longer trustworthy.
constexpr double kSingularAbs = 1e-250;

// Gibbs prefactors with the common e^{+beta omega0/2} scale divided out:
// (q0, q1) proportional to (e^{-beta omega0/2}, e^{+beta omega0/2}).
struct GibbsPair {
    double q0;
    double q1;
};

GibbsPair gibbs_pair(const BathTemperature& temperature, double omega0) {
    if (temperature.is_zero_temperature()) return {0.0, 1.0};
    const double x = temperature.beta() * omega0;  // q0/q1 = e^{-x}
    return {std::exp(-x), 1.0};
}

}  // namespace

CorrelationScenario::CorrelationScenario(ScenarioKind kind, std::optional<PreparationWeights> w,
                                         BathTemperature temperature, double omega0,
                                         MixedInitialState init)
    : kind_(kind),
      weights_(std::move(w)),
      temperature_(temperature),
      omega0_(omega0),
      initial_state_(init) {
    if (!(omega0_ > 0.0)) throw Error("omega0 must be positive");
    if (kind_ != ScenarioKind::UncorrelatedThermal) {
        const GibbsPair g = gibbs_pair(temperature_, omega0_);
        const complexd d = weights_->w0 * g.q0 + weights_->w1 * g.q1;
        if (std::abs(d) < 1e-15 * (std::abs(weights_->w0) + std::abs(weights_->w1)))
            throw NoCoherenceError("prepared coherence vanishes");
    }
}

CorrelationScenario CorrelationScenario::uncorrelated(const BlochState& state,
                                                      const BathTemperature& temperature,
                                                      double omega0) {
    if (std::sin(state.theta0) == 0.0)
        throw NoCoherenceError("no initial coherence: sin(theta0) = 0");
    return CorrelationScenario(ScenarioKind::UncorrelatedThermal, std::nullopt, temperature,
                               omega0, MixedInitialState::from_bloch(state));
}

CorrelationScenario CorrelationScenario::uncorrelated(const MixedInitialState& state,
                                                      const BathTemperature& temperature,
                                                      double omega0) {
    if (std::sin(state.theta_tilde0) == 0.0)
        throw NoCoherenceError("no initial coherence: sin(theta~0) = 0");
    return CorrelationScenario(ScenarioKind::UncorrelatedThermal, std::nullopt, temperature,
                               omega0, state);
}

CorrelationScenario CorrelationScenario::projective(const BlochState& state,
                                                    const BathTemperature& temperature,
                                                    double omega0) {
    return CorrelationScenario(ScenarioKind::Projective, projective_weights(state), temperature,
                               omega0, MixedInitialState::from_bloch(state));
}

CorrelationScenario CorrelationScenario::unitary(const UnitaryOp2x2& u,
                                                 const BathTemperature& temperature,
                                                 double omega0) {
    return CorrelationScenario(ScenarioKind::Unitary, unitary_weights(u), temperature, omega0,
                               mixed_state_from_unitary(u, temperature, omega0));
}

const PreparationWeights& CorrelationScenario::weights() const {
    if (!weights_) throw Error("uncorrelated scenario has no preparation weights");
    return *weights_;
}

complexd coherence_ratio(const CorrelationScenario& scenario, const BranchFactors& factors) {
    if (scenario.kind() == ScenarioKind::UncorrelatedThermal)
        throw Error("uncorrelated scenario: use coherence_ratio_uncorrelated");
    const GibbsPair g = gibbs_pair(scenario.temperature(), scenario.omega0());
    const PreparationWeights& w = scenario.weights();
    const complexd d = w.w0 * g.q0 + w.w1 * g.q1;
    return (w.w0 * g.q0 * factors.f_minus + w.w1 * g.q1 * factors.f_plus) / d;
}

complexd coherence_ratio_uncorrelated(const CorrelationScenario& scenario,
                                      complexd thermal_factor) {
    if (scenario.kind() != ScenarioKind::UncorrelatedThermal)
        throw Error("correlated scenario: use coherence_ratio");
    return thermal_factor;
}

namespace {

struct GridSamples {
    std::vector<complexd> ratio;       // X(t_k)
    std::vector<complexd> dlog_ratio;  // log-derivative of the ratio (see notes per env)
    std::vector<bool> singular;
};

GridSamples sample_bosonic(const CorrelationScenario& scenario, const BosonicEnvironment& env,
                           std::span<const double> t, const QuadratureOptions& opt) {
    GridSamples out;
    const std::size_t m = t.size();
    out.ratio.resize(m);
    out.dlog_ratio.assign(m, complexd(0.0, 0.0));
    out.singular.assign(m, false);

    BosonicGridEvaluator eval(env.spectral_density, env.temperature, t.back(), opt);
    std::vector<double> gamma_uc, phi, phi_dot;
    eval.evaluate(t, gamma_uc, phi, phi_dot);

    // dlog_ratio carries d/dt log(X e^{+Gamma_uc}): the branch-common real
    // -Gamma_uc_dot is dropped. Only the imaginary part (chi_dot) is consumed.
    if (scenario.kind() == ScenarioKind::UncorrelatedThermal) {
        for (std::size_t k = 0; k < m; ++k) out.ratio[k] = std::exp(-gamma_uc[k]);
        return out;
    }
    const GibbsPair g = gibbs_pair(scenario.temperature(), scenario.omega0());
    const PreparationWeights& w = scenario.weights();
    const complexd d = w.w0 * g.q0 + w.w1 * g.q1;
    for (std::size_t k = 0; k < m; ++k) {
        const complexd fm = std::polar(1.0, -phi[k]);
        const complexd fp = std::polar(1.0, phi[k]);
        const complexd num = w.w0 * g.q0 * fm + w.w1 * g.q1 * fp;
        out.ratio[k] = std::exp(-gamma_uc[k]) * num / d;
        if (std::abs(num) < 1e-150 * std::abs(d)) {
            out.singular[k] = true;
            continue;
        }
        const complexd dnum = complexd(0.0, phi_dot[k]) * (w.w1 * g.q1 * fp - w.w0 * g.q0 * fm);
        out.dlog_ratio[k] = dnum / num;  // common -Gamma_uc_dot omitted (real)
    }
    return out;
}

GridSamples sample_spin(const CorrelationScenario& scenario, const SpinEnvironment& env,
                        std::span<const double> t) {
    GridSamples out;
    const std::size_t m = t.size();
    out.ratio.resize(m);
    out.dlog_ratio.assign(m, complexd(0.0, 0.0));
    out.singular.assign(m, false);

    const SpinGrid grid = spin_grid(env.bath, t);
    if (scenario.kind() == ScenarioKind::UncorrelatedThermal) {
        for (std::size_t k = 0; k < m; ++k) {
            out.ratio[k] = grid.prod_a[k];
            out.singular[k] = grid.singular_uncorr[k];
        }
        return out;
    }
    const GibbsPair g = gibbs_pair(scenario.temperature(), scenario.omega0());
    const PreparationWeights& w = scenario.weights();
    const complexd d = w.w0 * g.q0 + w.w1 * g.q1;
    for (std::size_t k = 0; k < m; ++k) {
        if (grid.singular[k]) {
            out.ratio[k] = 0.0;
            out.singular[k] = true;
            continue;
        }
        const complexd fp = std::exp(complexd(grid.log_abs_f[k], 0.0)) *
                            std::polar(1.0, grid.arg_f[k]);
        const complexd fm = std::conj(fp);
        const complexd num = w.w0 * g.q0 * fm + w.w1 * g.q1 * fp;
        out.ratio[k] = num / d;
        if (std::abs(num) < kSingularAbs * std::abs(d)) {
            out.singular[k] = true;
            continue;
        }
        const complexd dnum =
            w.w0 * g.q0 * fm * std::conj(grid.dlog_f[k]) + w.w1 * g.q1 * fp * grid.dlog_f[k];
        out.dlog_ratio[k] = dnum / num;
    }
    return out;
}

GridSamples sample_ratio_grid(const CorrelationScenario& scenario, const Environment& environment,
                              std::span<const double> t, const QuadratureOptions& opt) {
    if (const auto* b = std::get_if<BosonicEnvironment>(&environment))
        return sample_bosonic(scenario, *b, t, opt);
    return sample_spin(scenario, std::get<SpinEnvironment>(environment), t);
}

std::vector<double> uniform_grid(double tau, int m) {
    std::vector<double> t(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) t[static_cast<std::size_t>(k)] = tau * k / m;
    t.back() = tau;
    return t;
}

}  // namespace

DephasingTrajectory build_trajectory(const CorrelationScenario& scenario,
                                     const Environment& environment, int grid_size,
                                     const TrajectoryOptions& options) {
    if (grid_size < 256) throw Error("grid_size must be at least 256");
    if (grid_size % 2 != 0) throw Error("grid_size must be even");
    const double tau = 2.0 * kPi / scenario.omega0();

    for (int m = grid_size; m <= options.max_grid; m *= 2) {
        const std::vector<double> t = uniform_grid(tau, m);
        const GridSamples samples = sample_ratio_grid(scenario, environment, t, options.quadrature);

        std::vector<double> singular_times;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (samples.singular[k] || std::abs(samples.ratio[k]) < kSingularAbs)
                singular_times.push_back(t[k]);
        }
        if (!singular_times.empty())
            throw SingularSampleError("coherence vanishes at sampled times", singular_times);

        std::vector<double> raw(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) raw[k] = std::arg(samples.ratio[k]);

        std::vector<double> chi;
        try {
            chi = unwrap_phase(raw);
        } catch (const UnwrapError&) {
            if (2 * m <= options.max_grid) continue;  // refine and retry
            throw;
        }
        // chi(0) = 0 exactly: X(0) = 1, but guard against representation dust.
        const double chi0 = chi.front();
        for (auto& c : chi) c -= chi0;

        DephasingTrajectory traj;
        traj.grid = t;
        traj.omega0 = scenario.omega0();
        traj.chi = std::move(chi);
        traj.gamma.resize(t.size());
        traj.chi_dot.resize(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) {
            traj.gamma[k] = -std::log(std::abs(samples.ratio[k]));
            traj.chi_dot[k] = samples.dlog_ratio[k].imag();
        }
        traj.gamma.front() = 0.0;
        return traj;
    }
    throw UnwrapError("grid too coarse even at the refinement cap");
}

RatioSamples sample_coherence_ratio(const CorrelationScenario& scenario,
                                    const Environment& environment, std::span<const double> t,
                                    const QuadratureOptions& opt) {
    const GridSamples samples = sample_ratio_grid(scenario, environment, t, opt);
    RatioSamples out;
    out.t.assign(t.begin(), t.end());
    out.ratio = samples.ratio;
    out.singular.resize(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        out.singular[k] = samples.singular[k] || std::abs(samples.ratio[k]) < kSingularAbs;
    return out;
}

}  // namespace geophase
