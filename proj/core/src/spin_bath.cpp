#include "geophase/spin_bath.hpp"

#include <cmath>
#include <limits>

#include "geophase/angles.hpp"
#include "geophase/errors.hpp"

namespace geophase {

double SpinMode::alpha() const { return std::hypot(lambda, omega); }

SpinBathSpec::SpinBathSpec(std::vector<SpinMode> modes_, BathTemperature temperature_)
    : modes(std::move(modes_)), temperature(temperature_) {
    if (modes.empty()) throw Error("spin bath needs at least one mode");
    for (const auto& m : modes) {
        if (!(m.omega > 0.0)) throw Error("spin mode frequency must be positive");
        if (!(m.lambda >= 0.0)) throw Error("spin mode coupling must be non-negative");
    }
}

SpinBathSpec SpinBathSpec::homogeneous(int n, double omega, double lambda,
                                       BathTemperature temperature) {
    if (n < 1) throw Error("spin bath needs at least one mode");
    return SpinBathSpec(std::vector<SpinMode>(static_cast<std::size_t>(n),
                                              SpinMode{omega, lambda}),
                        temperature);
}

bool SpinBathSpec::homogeneous_bath() const {
    for (const auto& m : modes)
        if (m.omega != modes.front().omega || m.lambda != modes.front().lambda) return false;
    return true;
}

namespace {

double tanh_factor(const BathTemperature& temperature, double alpha) {
    return temperature.is_zero_temperature() ? 1.0 : std::tanh(temperature.beta() * alpha);
}

struct ModeEval {
    double a, b;       // A_j, B_j
    double da, db;     // dA_j/dt, dB_j/dt
};

ModeEval eval_mode(const SpinMode& mode, const BathTemperature& temperature, double t) {
    const double alpha = mode.alpha();
    const double r = mode.lambda * mode.lambda / (alpha * alpha);
    const double s1 = std::sin(alpha * t);
    const double s2 = std::sin(2.0 * alpha * t);
    const double c2 = std::cos(2.0 * alpha * t);
    const double th = tanh_factor(temperature, alpha);
    return {1.0 - 2.0 * r * s1 * s1, r * th * s2, -2.0 * r * alpha * s2, 2.0 * r * alpha * th * c2};
}

}  // namespace

PerSpinFactor per_spin_factor(const SpinMode& mode, const BathTemperature& temperature, double t) {
    if (!(t >= 0.0)) throw Error("time must be non-negative");
    const ModeEval e = eval_mode(mode, temperature, t);
    return {e.a, e.b};
}

namespace {

// x^n preserving the sign for negative bases (A_j < 0 is legal at lambda > omega).
double signed_pow(double x, std::size_t n) {
    double mag = std::pow(std::abs(x), static_cast<double>(n));
    return (x < 0.0 && n % 2 == 1) ? -mag : mag;
}

}  // namespace

complexd gamma_uc_spin(const SpinBathSpec& bath, double t) {
    if (!(t >= 0.0)) throw Error("time must be non-negative");
    double prod = 1.0;
    if (bath.homogeneous_bath()) {
        const ModeEval e = eval_mode(bath.modes.front(), bath.temperature, t);
        prod = signed_pow(e.a, bath.modes.size());
    } else {
        for (const auto& m : bath.modes) prod *= eval_mode(m, bath.temperature, t).a;
    }
    return complexd(prod, 0.0);
}

BranchFactors spin_branch_factors(const SpinBathSpec& bath, double t) {
    if (!(t >= 0.0)) throw Error("time must be non-negative");
    complexd f_plus(1.0, 0.0);
    if (bath.homogeneous_bath()) {
        const ModeEval e = eval_mode(bath.modes.front(), bath.temperature, t);
        f_plus = std::pow(complexd(e.a, e.b), static_cast<int>(bath.modes.size()));
    } else {
        for (const auto& m : bath.modes) {
            const ModeEval e = eval_mode(m, bath.temperature, t);
            f_plus *= complexd(e.a, e.b);
        }
    }
    return {std::conj(f_plus), f_plus};
}

double gamma_corr1_check(const SpinBathSpec& bath, double t) {
    if (!(t >= 0.0)) throw Error("time must be non-negative");
    double acc = 0.0;
    for (const auto& m : bath.modes) {
        const ModeEval e = eval_mode(m, bath.temperature, t);
        if (e.a == 0.0) throw Error("formula singular, use branch factors");
        const double lw2 = (m.lambda / m.omega) * (m.lambda / m.omega);
        const double th = tanh_factor(bath.temperature, m.alpha());
        const double s2 = std::sin(2.0 * m.alpha() * t);
        const double c2 = std::cos(2.0 * m.alpha() * t);
        const double q = lw2 * lw2 * (th * s2 / (1.0 + lw2 * c2)) * (th * s2 / (1.0 + lw2 * c2));
        acc += std::log1p(q);
    }
    return -0.5 * acc;  // <= 0: initial correlations slow the decay
}

SpinGrid spin_grid(const SpinBathSpec& bath, std::span<const double> t) {
    const std::size_t m = t.size();
    SpinGrid out;
    out.log_abs_f.assign(m, 0.0);
    out.arg_f.assign(m, 0.0);
    out.dlog_f.assign(m, complexd(0.0, 0.0));
    out.prod_a.assign(m, 1.0);
    out.singular.assign(m, false);
    out.singular_uncorr.assign(m, false);

    const bool homogeneous = bath.homogeneous_bath();
    const std::size_t n_distinct = homogeneous ? 1 : bath.modes.size();
    const double multiplicity = homogeneous ? static_cast<double>(bath.modes.size()) : 1.0;

    std::vector<double> raw_arg(m);
    for (std::size_t j = 0; j < n_distinct; ++j) {
        const SpinMode& mode = bath.modes[j];
        std::vector<double> log_abs(m), prod_a(m);
        std::vector<complexd> dlog(m);
        std::vector<bool> sing(m, false);
        for (std::size_t k = 0; k < m; ++k) {
            const ModeEval e = eval_mode(mode, bath.temperature, t[k]);
            const complexd c(e.a, e.b);
            const double mag = std::abs(c);
            prod_a[k] = e.a;
            if (mag == 0.0) {
                sing[k] = true;
                log_abs[k] = -std::numeric_limits<double>::infinity();
                raw_arg[k] = (k > 0) ? raw_arg[k - 1] : 0.0;  // neutral for the unwrap pass
                dlog[k] = 0.0;
            } else {
                log_abs[k] = std::log(mag);
                raw_arg[k] = std::arg(c);
                dlog[k] = complexd(e.da, e.db) / c;
            }
        }
        // per-spin unwrap before summation
        std::vector<double> lifted = unwrap_phase(raw_arg);
        for (std::size_t k = 0; k < m; ++k) {
            out.log_abs_f[k] += multiplicity * log_abs[k];
            out.arg_f[k] += multiplicity * lifted[k];
            out.dlog_f[k] += multiplicity * dlog[k];
            out.prod_a[k] *= homogeneous ? signed_pow(prod_a[k], bath.modes.size()) : prod_a[k];
            if (sing[k]) out.singular[k] = true;
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (out.prod_a[k] == 0.0) out.singular_uncorr[k] = true;
        if (k > 0 && out.prod_a[k] * out.prod_a[k - 1] < 0.0) out.singular_uncorr[k] = true;
    }
    return out;
}

}  // namespace geophase
