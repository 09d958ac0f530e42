#include "geophase/angles.hpp"

#include <cmath>
#include <numbers>

#include "geophase/errors.hpp"

namespace geophase {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double wrap_angle(double x) {
    double y = std::remainder(x, kTwoPi);  // (-pi, pi] up to the -pi edge
    if (y <= -kPi) y += kTwoPi;
    return y;
}

double circular_distance(double a, double b) { return wrap_angle(a - b); }

std::vector<double> unwrap_phase(std::span<const double> raw, double guard) {
    std::vector<double> out(raw.begin(), raw.end());
    for (std::size_t k = 1; k < out.size(); ++k) {
        const double gap = wrap_angle(raw[k] - raw[k - 1]);
        if (std::abs(gap) >= kPi - guard) throw UnwrapError();
        out[k] = out[k - 1] + gap;
    }
    return out;
}

}  // namespace geophase
