#pragma once

#include <vector>

#include "sigcurve/geometry.hpp"

namespace sigcurve {

enum class SplineBoundary { NotAKnot, Natural, Periodic };

/// Interpolating cubic spline through (t_i, y_i) with selectable boundary
/// conditions. Periodic splines wrap with period `period` (the knot list does
/// not repeat the first point; y(t_0 + period) = y_0).
class CubicSpline1D {
public:
    CubicSpline1D() = default;

    static CubicSpline1D fit(std::vector<double> t, std::vector<double> y,
                             SplineBoundary boundary);
    static CubicSpline1D fit_periodic(std::vector<double> t, std::vector<double> y,
                                      double period);

    double eval(double s) const;
    double derivative(double s) const;
    double second_derivative(double s) const;
    double third_derivative(double s) const;

    bool periodic() const { return periodic_; }
    double t_front() const { return t_.front(); }
    double t_back() const { return periodic_ ? t_.front() + period_ : t_.back(); }

private:
    // Interval lookup; for periodic splines wraps s into [t0, t0 + period).
    int interval(double& s) const;

    std::vector<double> t_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives ("moments") at knots
    bool periodic_ = false;
    double period_ = 0.0;
};

/// Parametric plane curve (x(t), y(t)) backed by two cubic splines.
class CurveSpline {
public:
    CurveSpline() = default;
    CurveSpline(CubicSpline1D x, CubicSpline1D y) : x_(std::move(x)), y_(std::move(y)) {}

    Vec2 position(double t) const { return {x_.eval(t), y_.eval(t)}; }
    Vec2 derivative(double t) const { return {x_.derivative(t), y_.derivative(t)}; }
    Vec2 second_derivative(double t) const {
        return {x_.second_derivative(t), y_.second_derivative(t)};
    }

    const CubicSpline1D& x() const { return x_; }
    const CubicSpline1D& y() const { return y_; }

private:
    CubicSpline1D x_, y_;
};

}  // namespace sigcurve
