#ifndef GEOPHASE_QUADRATURE_HPP
#define GEOPHASE_QUADRATURE_HPP

#include <span>
#include <vector>

namespace geophase {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int max_level = 4;  // rule refinements tried before giving up
};

// Kinds of semi-infinite Ohmic-family integrals, all in x = omega/omega_c
// units with the J(omega)/omega^2 measure folded in:
//   GammaUc : int x^{s-2} e^{-x} coth(bhat x / 2) (1 - cos(T x)) dx
//   PhiShift: int x^{s-2} e^{-x} sin(T x) dx
//   PhiDot  : int x^{s-1} e^{-x} cos(T x) dx            (times omega_c later)
// with T = omega_c * t and bhat = beta * omega_c (coth == 1 at beta -> inf).
enum class OhmicIntegralKind { GammaUc, PhiShift, PhiDot };

// Fixed composite rule for the three integral families at one (s, bhat):
// tanh-sinh head on [0, a] (handles the x^{s-1}-type endpoint), GL16 panels
// capped by the oscillation wavelength on [a, 75]. Weights are stored in
// log-regularized form so strongly sub-Ohmic exponents neither overflow nor
// cancel; evaluation uses 2 sin^2(y/2) instead of 1 - cos(y).
class OhmicRule {
  public:
    // t_max bounds the oscillation frequency the rule must resolve.
    // level >= 0 halves the panel cap and deepens the head per step.
    OhmicRule(double s, double bhat_or_inf, bool zero_temperature, double t_max_in_x_units,
              int level = 0);

    double evaluate(OhmicIntegralKind kind, double T) const;
    // All three integrals on a whole grid of T values, one pass.
    void evaluate_grid(std::span<const double> T, std::vector<double>& gamma_uc,
                       std::vector<double>& phi, std::vector<double>& phi_dot) const;
    std::size_t node_count() const { return x_.size(); }

  private:
    std::vector<double> x_;
    std::vector<double> wg_;  // w e^{-x} x^s coth  -> * (T^2/2) sinc^2(Tx/2)
    std::vector<double> wp_;  // w e^{-x} x^{s-1}   -> * T sinc(Tx) | * cos(Tx)
};

// One scalar integral with internal refinement until two successive rule
// levels agree within tolerance; throws QuadratureError otherwise. For
// T > 50 the middle region switches to between-zeros panels summed with
// Wynn-epsilon acceleration.
double ohmic_integral(OhmicIntegralKind kind, double s, double bhat_or_inf,
                      bool zero_temperature, double T, const QuadratureOptions& opt = {});

// Composite Simpson on a uniform grid (size must be odd: even interval count).
double simpson_uniform(std::span<const double> y, double h);

// Simpson improved by one Richardson step against the half-resolution grid;
// (size - 1) must be divisible by 4.
double simpson_richardson(std::span<const double> y, double h);

}  // namespace geophase

#endif
