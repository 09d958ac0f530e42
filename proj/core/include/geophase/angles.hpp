#ifndef GEOPHASE_ANGLES_HPP
#define GEOPHASE_ANGLES_HPP

#include <span>
#include <vector>

namespace geophase {

// Wrap an angle to (-pi, pi].
double wrap_angle(double x);

// Signed circular distance wrap(a - b); zero iff a == b mod 2*pi.
double circular_distance(double a, double b);

// Lift a sequence of principal-branch angles to a continuous sequence by
// adding integer multiples of 2*pi per sample. output[0] == raw[0].
// Throws UnwrapError if a consecutive (adjusted) gap comes within
// `guard` of a half turn, i.e. |gap| >= pi - guard.
std::vector<double> unwrap_phase(std::span<const double> raw, double guard = 0.1 * 3.14159265358979323846);

}  // namespace geophase

#endif
