#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sigcurve {

/// 5-point Gauss-Legendre quadrature of f over [a, b].
double gauss_legendre_5(const std::function<double(double)>& f, double a, double b);

/// Cumulative trapezoid integral of uniformly spaced samples; out[0] = 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& y);

/// Bisection for a strictly monotone function g on [lo, hi] with g(result) = target.
/// Assumes target is bracketed; refines to `tol` in the argument.
double invert_monotone(const std::function<double(double)>& g, double lo, double hi,
                       double target, double tol);

/// Deterministic smooth noise on [0, L]: a low-order random Fourier series
/// normalized so that sup|xi| <= amplitude. Streams from a splitmix-style
/// generator so results are platform independent.
class SmoothNoise {
public:
    SmoothNoise(double length, double amplitude, std::uint64_t seed, int modes = 4);
    double operator()(double s) const;

private:
    double length_;
    double scale_;
    std::vector<double> coeff_;
    std::vector<double> phase_;
};

/// Uniform double in [0, 1) from a 64-bit state; advances the state (splitmix64).
double uniform01(std::uint64_t& state);

/// Minimal period of a uniformly sampled periodic sequence over [0, L).
/// Searches normalized circular autocorrelation peaks (parabolic refinement)
/// and validates candidates by the sup-difference of the shifted sequence.
/// Returns nullopt when the sequence is constant to within `constant_tol`.
std::optional<double> minimal_period(const std::vector<double>& values, double length,
                                     double constant_tol);

}  // namespace sigcurve
