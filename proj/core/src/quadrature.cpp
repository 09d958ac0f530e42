#include "geophase/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailCut = 75.0;  // e^{-75} ~ 2.6e-33: beyond any tolerance here

// 16-point Gauss-Legendre on [-1, 1].
constexpr int kGlN = 16;
constexpr double kGlX[kGlN / 2] = {
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGlW[kGlN / 2] = {
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

double sinc(double y) {
    const double ay = std::abs(y);
    if (ay > 1e-4) return std::sin(y) / y;
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
}

// log(coth(y/2)) evaluated without overflow or cancellation; y > 0.
double log_coth_half(double y) {
    if (y >= 36.0) return 0.0;
    if (y <= 1e-7) return std::log(2.0 / y);
    return std::log1p(2.0 / std::expm1(y));
}

// log(cosh(y)) without overflow.
double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

struct NodeSet {
    std::vector<double> x;
    std::vector<double> log_w;  // includes the panel/DE measure only
};

// tanh-sinh nodes on (0, a]: distance-to-endpoint form keeps full relative
// accuracy at the singular end. umax scales with 1/s so the truncated mass
// x_min^s stays below tolerance for strongly sub-Ohmic exponents.
NodeSet tanh_sinh_head(double a, double s, int level) {
    const double umax = std::max(3.8, std::asinh(38.0 / (kPi * std::min(s, 1.0))));
    const int n = 1 << (8 + level);
    const double du = 2.0 * umax / (2 * n);
    NodeSet out;
    out.x.reserve(2 * n + 1);
    out.log_w.reserve(2 * n + 1);
    for (int k = -n; k <= n; ++k) {
        const double u = k * du;
        const double su = kPi / 2.0 * std::sinh(u);
        if (su < -350.0) continue;  // x underflows
        const double x01 = 1.0 / (1.0 + std::exp(-2.0 * su));
        if (!(x01 > 0.0) || !(x01 < 1.0)) continue;
        const double lw = std::log(du * kPi / 4.0) + log_cosh(u) - 2.0 * log_cosh(su);
        out.x.push_back(a * x01);
        out.log_w.push_back(lw + std::log(a));
    }
    return out;
}

void append_gl_panel(NodeSet& out, double lo, double hi) {
    const double c = (lo + hi) / 2.0;
    const double h = (hi - lo) / 2.0;
    const double lh = std::log(h);
    for (int i = 0; i < kGlN / 2; ++i) {
        out.x.push_back(c - h * kGlX[i]);
        out.log_w.push_back(lh + std::log(kGlW[i]));
        out.x.push_back(c + h * kGlX[i]);
        out.log_w.push_back(lh + std::log(kGlW[i]));
    }
}

// Panels on [a, 75]: width grows with x (grading off the boundary layer)
// but never exceeds the half-oscillation cap.
NodeSet middle_panels(double a, double t_max, int level) {
    const double cap = std::min(0.5, kPi / std::max(t_max, 1e-6)) / static_cast<double>(1 << level);
    NodeSet out;
    double x = a;
    while (x < kTailCut) {
        const double w = std::min(std::max(x, a), cap);
        const double hi = std::min(x + w, kTailCut);
        append_gl_panel(out, x, hi);
        x = hi;
    }
    return out;
}

}  // namespace

OhmicRule::OhmicRule(double s, double bhat_or_inf, bool zero_temperature,
                     double t_max_in_x_units, int level) {
    const double t_max = std::max(t_max_in_x_units, 1e-6);
    const double a = std::min(0.5, kPi / (2.0 * t_max));
    NodeSet nodes = tanh_sinh_head(a, s, level);
    NodeSet mid = middle_panels(a, t_max, level);
    nodes.x.insert(nodes.x.end(), mid.x.begin(), mid.x.end());
    nodes.log_w.insert(nodes.log_w.end(), mid.log_w.begin(), mid.log_w.end());

    x_.reserve(nodes.x.size());
    wg_.reserve(nodes.x.size());
    wp_.reserve(nodes.x.size());
    for (std::size_t i = 0; i < nodes.x.size(); ++i) {
        const double x = nodes.x[i];
        const double lx = std::log(x);
        const double base = nodes.log_w[i] - x;
        const double lcoth = zero_temperature ? 0.0 : log_coth_half(bhat_or_inf * x);
        const double lwg = base + s * lx + lcoth;
        const double lwp = base + (s - 1.0) * lx;
        if (lwg <= -745.0 && lwp <= -745.0) continue;
        x_.push_back(x);
        wg_.push_back(lwg > -745.0 ? std::exp(lwg) : 0.0);
        wp_.push_back(lwp > -745.0 ? std::exp(lwp) : 0.0);
    }
}

double OhmicRule::evaluate(OhmicIntegralKind kind, double T) const {
    double acc = 0.0;
    switch (kind) {
        case OhmicIntegralKind::GammaUc: {
            const double half_t2 = T * T / 2.0;
            for (std::size_t i = 0; i < x_.size(); ++i) {
                const double sc = sinc(T * x_[i] / 2.0);
                acc += wg_[i] * half_t2 * sc * sc;
            }
            break;
        }
        case OhmicIntegralKind::PhiShift:
            for (std::size_t i = 0; i < x_.size(); ++i) acc += wp_[i] * T * sinc(T * x_[i]);
            break;
        case OhmicIntegralKind::PhiDot:
            for (std::size_t i = 0; i < x_.size(); ++i) acc += wp_[i] * std::cos(T * x_[i]);
            break;
    }
    return acc;
}

void OhmicRule::evaluate_grid(std::span<const double> T, std::vector<double>& gamma_uc,
                              std::vector<double>& phi, std::vector<double>& phi_dot) const {
    const std::size_t m = T.size();
    gamma_uc.assign(m, 0.0);
    phi.assign(m, 0.0);
    phi_dot.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const double t = T[k];
        const double half_t2 = t * t / 2.0;
        double g = 0.0, p = 0.0, d = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i) {
            // one sincos of the half angle serves all three integrands
            const double yh = t * x_[i] / 2.0;
            const double sh = std::sin(yh);
            const double ch = std::cos(yh);
            const double schalf = (std::abs(yh) > 1e-4) ? sh / yh : sinc(yh);
            g += wg_[i] * half_t2 * schalf * schalf;
            const double y = t * x_[i];
            p += wp_[i] * ((std::abs(y) > 1e-4) ? 2.0 * sh * ch / x_[i] : t * sinc(y));
            d += wp_[i] * (1.0 - 2.0 * sh * sh);
        }
        gamma_uc[k] = g;
        phi[k] = p;
        phi_dot[k] = d;
    }
}

namespace {

// Wynn epsilon table over partial sums; returns the latest stable estimate.
class WynnEpsilon {
  public:
    void add(double partial_sum) {
        e_.push_back(partial_sum);
        double prev = 0.0;  // epsilon_{-1}
        for (int j = static_cast<int>(e_.size()) - 2; j >= 0; --j) {
            const double tmp = e_[j];
            const double d = e_[j + 1] - e_[j];
            e_[j] = (std::abs(d) > 1e-300) ? prev + 1.0 / d : std::numeric_limits<double>::max();
            prev = tmp;
        }
        const int n = static_cast<int>(e_.size());
        // even-order entries estimate the sum; e_[n-1] is the raw partial sum
        estimate_ = (n >= 3) ? e_[(n - 1) % 2] : partial_sum;
    }
    double estimate() const { return estimate_; }

  private:
    std::vector<double> e_;
    double estimate_ = 0.0;
};

double integrand(OhmicIntegralKind kind, double s, double bhat, bool zero_t, double T, double x) {
    const double lx = std::log(x);
    const double lcoth = zero_t ? 0.0 : log_coth_half(bhat * x);
    switch (kind) {
        case OhmicIntegralKind::GammaUc: {
            const double lw = (s)*lx + lcoth - x;
            if (lw < -700.0) return 0.0;
            const double sc = sinc(T * x / 2.0);
            return std::exp(lw) * (T * T / 2.0) * sc * sc;
        }
        case OhmicIntegralKind::PhiShift: {
            const double lw = (s - 1.0) * lx - x;
            if (lw < -700.0) return 0.0;
            return std::exp(lw) * T * sinc(T * x);
        }
        case OhmicIntegralKind::PhiDot: {
            const double lw = (s - 1.0) * lx - x;
            if (lw < -700.0) return 0.0;
            return std::exp(lw) * std::cos(T * x);
        }
    }
    return 0.0;
}

double gl_panel(OhmicIntegralKind kind, double s, double bhat, bool zero_t, double T, double lo,
                double hi, int splits) {
    double acc = 0.0;
    const double step = (hi - lo) / splits;
    for (int p = 0; p < splits; ++p) {
        const double c = lo + (p + 0.5) * step;
        const double h = step / 2.0;
        for (int i = 0; i < kGlN / 2; ++i) {
            acc += h * kGlW[i] * (integrand(kind, s, bhat, zero_t, T, c - h * kGlX[i]) +
                                  integrand(kind, s, bhat, zero_t, T, c + h * kGlX[i]));
        }
    }
    return acc;
}

// Pure -cos(Tx) piece of the GammaUc integrand (the DC part is handled
// separately in the oscillatory path).
double gl_panel_cos(double s, double bhat, bool zero_t, double T, double lo, double hi,
                    int splits) {
    double acc = 0.0;
    const double step = (hi - lo) / splits;
    for (int p = 0; p < splits; ++p) {
        const double c = lo + (p + 0.5) * step;
        const double h = step / 2.0;
        for (int i = 0; i < kGlN / 2; ++i) {
            for (double x : {c - h * kGlX[i], c + h * kGlX[i]}) {
                const double lw =
                    (s - 2.0) * std::log(x) - x + (zero_t ? 0.0 : log_coth_half(bhat * x));
                if (lw > -700.0) acc += h * kGlW[i] * std::exp(lw) * std::cos(T * x);
            }
        }
    }
    return acc;
}

// Between-zeros summation for strongly oscillatory T: half-period panels
// accelerated with the epsilon algorithm.
double oscillatory_value(OhmicIntegralKind kind, double s, double bhat, bool zero_t, double T,
                         int level, double tol) {
    const double a = std::min(0.5, kPi / (2.0 * T));
    // DE head (full integrand, non-oscillatory on [0, a])
    NodeSet head = tanh_sinh_head(a, s, level);
    double value = 0.0;
    for (std::size_t i = 0; i < head.x.size(); ++i) {
        const double f = integrand(kind, s, bhat, zero_t, T, head.x[i]);
        value += std::exp(head.log_w[i]) * f;
    }
    // For GammaUc the non-oscillatory part int x^{s-2} e^-x coth dx over
    // [a, 75] is graded-panel integrable on its own (a > 0).
    if (kind == OhmicIntegralKind::GammaUc) {
        double x = a;
        while (x < kTailCut) {
            const double w = std::min(std::max(x, a), 0.5);
            const double hi = std::min(x + w, kTailCut);
            const double c = (x + hi) / 2.0, h = (hi - x) / 2.0;
            for (int i = 0; i < kGlN / 2; ++i) {
                for (double xx : {c - h * kGlX[i], c + h * kGlX[i]}) {
                    const double lw = (s - 2.0) * std::log(xx) - xx +
                                      (zero_t ? 0.0 : log_coth_half(bhat * xx));
                    if (lw > -700.0) value += h * kGlW[i] * std::exp(lw);
                }
            }
            x = hi;
        }
    }
    // Oscillatory remainder between consecutive zeros of sin/cos.
    const int splits = 1 << level;
    WynnEpsilon eps;
    double partial = 0.0;
    double prev_est = 0.0;
    int stable = 0;
    const int k0 = static_cast<int>(std::ceil(a * T / kPi));
    double lo = std::max(a, k0 * kPi / T);
    // panel [a, first zero]
    if (lo > a) {
        double f = (kind == OhmicIntegralKind::GammaUc)
                       ? -gl_panel_cos(s, bhat, zero_t, T, a, lo, splits)
                       : gl_panel(kind, s, bhat, zero_t, T, a, lo, splits);
        partial += f;
    }
    for (int k = k0; lo < kTailCut; ++k) {
        const double hi = std::min((k + 1) * kPi / T, kTailCut);
        double f = (kind == OhmicIntegralKind::GammaUc)
                       ? -gl_panel_cos(s, bhat, zero_t, T, lo, hi, splits)
                       : gl_panel(kind, s, bhat, zero_t, T, lo, hi, splits);
        partial += f;
        eps.add(partial);
        const double est = eps.estimate();
        if (k > k0 + 4 && std::abs(est - prev_est) < tol / 8.0) {
            if (++stable >= 2) return value + est;
        } else {
            stable = 0;
        }
        prev_est = est;
        lo = hi;
    }
    return value + eps.estimate();
}

}  // namespace

double ohmic_integral(OhmicIntegralKind kind, double s, double bhat_or_inf, bool zero_temperature,
                      double T, const QuadratureOptions& opt) {
    if (T == 0.0 && kind != OhmicIntegralKind::PhiDot) return 0.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double achieved = std::numeric_limits<double>::infinity();
    for (int level = 0; level <= opt.max_level; ++level) {
        double value;
        if (T > 50.0) {
            value = oscillatory_value(kind, s, bhat_or_inf, zero_temperature, T, level,
                                      opt.abs_tol);
        } else {
            OhmicRule rule(s, bhat_or_inf, zero_temperature, T, level);
            value = rule.evaluate(kind, T);
        }
        if (level > 0) {
            achieved = std::abs(value - prev);
            if (achieved <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) return value;
        }
        prev = value;
    }
    throw QuadratureError("ohmic quadrature did not converge", achieved);
}

double simpson_uniform(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    if (n < 3 || n % 2 == 0) throw Error("simpson needs an odd sample count (even intervals)");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < n; i += 2) odd += y[i];
    for (std::size_t i = 2; i + 1 < n; i += 2) even += y[i];
    return h / 3.0 * (y.front() + y.back() + 4.0 * odd + 2.0 * even);
}

double simpson_richardson(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    if ((n - 1) % 4 != 0) throw Error("richardson step needs (size - 1) divisible by 4");
    const double fine = simpson_uniform(y, h);
    std::vector<double> coarse;
    coarse.reserve((n + 1) / 2);
    for (std::size_t i = 0; i < n; i += 2) coarse.push_back(y[i]);
    const double half = simpson_uniform(coarse, 2.0 * h);
    return fine + (fine - half) / 15.0;
}

}  // namespace geophase
