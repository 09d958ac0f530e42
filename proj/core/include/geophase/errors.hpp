#ifndef GEOPHASE_ERRORS_HPP
#define GEOPHASE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace geophase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a prepared state carries no coherence (theta0 in {0,pi},
// vanishing preparation weights, or a Gibbs-cancelled rho10(0)).
struct NoCoherenceError : Error {
    NoCoherenceError() : Error("no initial coherence") {}
    explicit NoCoherenceError(const std::string& what) : Error(what) {}
};

// Quadrature failed to reach the requested tolerance; carries the achieved
// error estimate so the caller can decide whether to accept the value.
struct QuadratureError : Error {
    QuadratureError(const std::string& what, double achieved)
        : Error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

// Consecutive principal-branch angles too close to a half turn apart; the
// 2*pi*k choice is ambiguous and the sampling grid must be refined.
struct UnwrapError : Error {
    UnwrapError() : Error("grid too coarse") {}
    explicit UnwrapError(const std::string& what) : Error(what) {}
};

// Coherence hit (or crossed) zero at the listed sample times; Gamma diverges
// there and chi is undefined, so the trajectory cannot be assembled.
struct SingularSampleError : Error {
    SingularSampleError(const std::string& what, std::vector<double> times_)
        : Error(what), times(std::move(times_)) {}
    std::vector<double> times;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace geophase

#endif
