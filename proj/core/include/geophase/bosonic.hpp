#ifndef GEOPHASE_BOSONIC_HPP
#define GEOPHASE_BOSONIC_HPP

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "geophase/model.hpp"
#include "geophase/quadrature.hpp"

namespace geophase {

// J(omega) = lambda * omega^s * omega_c^{1-s} * exp(-omega/omega_c).
struct OhmicFamilySpectralDensity {
    OhmicFamilySpectralDensity(double lambda_, double s_, double omega_c_);
    double lambda;   // >= 0, dimensionless coupling
    double s;        // > 0, Ohmicity exponent
    double omega_c;  // > 0, cutoff
    double operator()(double omega) const;
};

// Gamma_uc(t) = int_0^inf J(w) coth(beta w/2) (1 - cos(w t)) / w^2 dw.
// coth == 1 on the zero-temperature branch. Adaptive-refinement quadrature.
double gamma_uc_bosonic(const OhmicFamilySpectralDensity& j, const BathTemperature& temperature,
                        double t, const QuadratureOptions& opt = {});

// Phi(t) = int_0^inf J(w) sin(w t) / w^2 dw; temperature independent.
double phi_shift_bosonic(const OhmicFamilySpectralDensity& j, double t,
                         const QuadratureOptions& opt = {});

// dPhi/dt = int_0^inf J(w) cos(w t) / w dw.
double phi_dot_bosonic(const OhmicFamilySpectralDensity& j, double t,
                       const QuadratureOptions& opt = {});

// Bath factors conditioned on the system level: F_minus pairs with l = 0
// (bath Hamiltonian H_B + V), F_plus with l = 1 (H_B - V).
struct BranchFactors {
    complexd f_minus;
    complexd f_plus;
};

// F_mp(t) = e^{-Gamma_uc(t)} e^{mp i Phi(t)}.
BranchFactors bosonic_branch_factors(const OhmicFamilySpectralDensity& j,
                                     const BathTemperature& temperature, double t,
                                     const QuadratureOptions& opt = {});

// e^{-Gamma_uc(t)}: the uncorrelated thermal baseline, real in (0, 1].
complexd thermal_coherence_factor(const OhmicFamilySpectralDensity& j,
                                  const BathTemperature& temperature, double t,
                                  const QuadratureOptions& opt = {});

// Grid workspace: one fixed rule reused for Gamma_uc, Phi, Phi_dot over a
// whole trajectory grid; construction self-validates against a refined rule
// at probe times and throws QuadratureError if the target is not met.
class BosonicGridEvaluator {
  public:
    BosonicGridEvaluator(const OhmicFamilySpectralDensity& j, const BathTemperature& temperature,
                         double t_max, const QuadratureOptions& opt = {});
    void evaluate(std::span<const double> t, std::vector<double>& gamma_uc,
                  std::vector<double>& phi, std::vector<double>& phi_dot) const;

  private:
    OhmicFamilySpectralDensity j_;
    std::shared_ptr<const OhmicRule> rule_;
};

struct BosonicEnvironment {
    OhmicFamilySpectralDensity spectral_density;
    BathTemperature temperature;
};

}  // namespace geophase

#endif
