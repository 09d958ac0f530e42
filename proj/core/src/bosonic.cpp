#include "geophase/bosonic.hpp"

#include <cmath>

#include "geophase/errors.hpp"

namespace geophase {

OhmicFamilySpectralDensity::OhmicFamilySpectralDensity(double lambda_, double s_, double omega_c_)
    : lambda(lambda_), s(s_), omega_c(omega_c_) {
    if (!(lambda >= 0.0)) throw Error("coupling lambda must be non-negative");
    if (!(s > 0.0)) throw Error("infrared divergent: Ohmicity s must be positive");
    if (!(omega_c > 0.0)) throw Error("cutoff omega_c must be positive");
}

double OhmicFamilySpectralDensity::operator()(double omega) const {
    if (omega <= 0.0) return 0.0;
    return lambda * std::pow(omega, s) * std::pow(omega_c, 1.0 - s) * std::exp(-omega / omega_c);
}

namespace {

double bhat_of(const OhmicFamilySpectralDensity& j, const BathTemperature& temperature) {
    return temperature.is_zero_temperature() ? 0.0 : temperature.beta() * j.omega_c;
}

void require_time(double t) {
    if (!(t >= 0.0)) throw Error("time must be non-negative");
}

}  // namespace

double gamma_uc_bosonic(const OhmicFamilySpectralDensity& j, const BathTemperature& temperature,
                        double t, const QuadratureOptions& opt) {
    require_time(t);
    if (j.lambda == 0.0 || t == 0.0) return 0.0;
    return j.lambda * ohmic_integral(OhmicIntegralKind::GammaUc, j.s, bhat_of(j, temperature),
                                     temperature.is_zero_temperature(), j.omega_c * t, opt);
}

double phi_shift_bosonic(const OhmicFamilySpectralDensity& j, double t,
                         const QuadratureOptions& opt) {
    require_time(t);
    if (j.lambda == 0.0 || t == 0.0) return 0.0;
    return j.lambda *
           ohmic_integral(OhmicIntegralKind::PhiShift, j.s, 0.0, true, j.omega_c * t, opt);
}

double phi_dot_bosonic(const OhmicFamilySpectralDensity& j, double t,
                       const QuadratureOptions& opt) {
    require_time(t);
    if (j.lambda == 0.0) return 0.0;
    return j.lambda * j.omega_c *
           ohmic_integral(OhmicIntegralKind::PhiDot, j.s, 0.0, true, j.omega_c * t, opt);
}

BranchFactors bosonic_branch_factors(const OhmicFamilySpectralDensity& j,
                                     const BathTemperature& temperature, double t,
                                     const QuadratureOptions& opt) {
    require_time(t);
    if (j.lambda == 0.0 || t == 0.0) return {1.0, 1.0};
    const double gamma = gamma_uc_bosonic(j, temperature, t, opt);
    const double phi = phi_shift_bosonic(j, t, opt);
    const double mag = std::exp(-gamma);
    return {mag * std::polar(1.0, -phi), mag * std::polar(1.0, phi)};
}

complexd thermal_coherence_factor(const OhmicFamilySpectralDensity& j,
                                  const BathTemperature& temperature, double t,
                                  const QuadratureOptions& opt) {
    require_time(t);
    if (j.lambda == 0.0 || t == 0.0) return 1.0;
    return std::exp(-gamma_uc_bosonic(j, temperature, t, opt));
}

BosonicGridEvaluator::BosonicGridEvaluator(const OhmicFamilySpectralDensity& j,
                                           const BathTemperature& temperature, double t_max,
                                           const QuadratureOptions& opt)
    : j_(j) {
    const double bhat = bhat_of(j, temperature);
    const bool zero_t = temperature.is_zero_temperature();
    const double t_max_x = j.omega_c * std::max(t_max, 0.0);
    // Probe times for the self check, spread over the grid range.
    const double probes[] = {0.13 * t_max_x, 0.41 * t_max_x, 0.77 * t_max_x, t_max_x};
    int level = 0;
    for (; level <= opt.max_level; ++level) {
        auto rule = std::make_shared<const OhmicRule>(j.s, bhat, zero_t, t_max_x, level);
        OhmicRule fine(j.s, bhat, zero_t, t_max_x, level + 1);
        double worst = 0.0;
        for (double T : probes) {
            for (auto kind : {OhmicIntegralKind::GammaUc, OhmicIntegralKind::PhiShift,
                              OhmicIntegralKind::PhiDot}) {
                const double v0 = rule->evaluate(kind, T);
                const double v1 = fine.evaluate(kind, T);
                const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(v1));
                worst = std::max(worst, std::abs(v0 - v1) / tol);
            }
        }
        if (worst <= 1.0) {
            rule_ = std::move(rule);
            return;
        }
        if (level == opt.max_level)
            throw QuadratureError("bosonic grid rule did not converge", worst * opt.abs_tol);
    }
}

void BosonicGridEvaluator::evaluate(std::span<const double> t, std::vector<double>& gamma_uc,
                                    std::vector<double>& phi, std::vector<double>& phi_dot) const {
    std::vector<double> T(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        require_time(t[i]);
        T[i] = j_.omega_c * t[i];
    }
    if (j_.lambda == 0.0) {
        gamma_uc.assign(t.size(), 0.0);
        phi.assign(t.size(), 0.0);
        phi_dot.assign(t.size(), 0.0);
        return;
    }
    rule_->evaluate_grid(T, gamma_uc, phi, phi_dot);
    for (std::size_t i = 0; i < t.size(); ++i) {
        gamma_uc[i] *= j_.lambda;
        phi[i] *= j_.lambda;
        phi_dot[i] *= j_.lambda * j_.omega_c;
    }
}

}  // namespace geophase
