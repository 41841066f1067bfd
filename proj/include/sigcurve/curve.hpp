#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigcurve/config.hpp"
#include "sigcurve/geometry.hpp"
#include "sigcurve/spline.hpp"

namespace sigcurve {

/// Closed-form generator descriptor carried alongside sampled curves so that
/// oracle tests and file I/O can regenerate them.
struct AnalyticTag {
    std::string kind;  // circle | ellipse | parabola | clothoid | custom_curvature
    std::map<std::string, double> params;
    std::map<std::string, std::vector<double>> arrays;
};

/// A sampled planar curve. For closed curves the first and last samples are
/// adjacent; the endpoint is not duplicated.
struct PlanarCurve {
    std::vector<Vec2> samples;
    bool closed = false;
    std::optional<AnalyticTag> analytic;

    void validate() const;
};

/// Unit-speed resampling of a PlanarCurve: `base.samples` are equally spaced
/// in arc length and `spline` interpolates them over s in [0, length].
/// When produced by resample_by_arclength, `source` keeps the chord-parameter
/// fit of the input samples and `tau_nodes` the source parameter of each
/// node; curvature estimation differentiates the source fit directly (a
/// refit through the resampled nodes carries grid-scale interpolation noise
/// that derivative columns would amplify).
struct ArcLengthCurve {
    PlanarCurve base;
    double length = 0.0;
    CurveSpline spline;
    CurveSpline source;
    std::vector<double> tau_nodes;   // source parameter of each node
    std::vector<double> source_s;    // arc length at the source fit's knots
    bool has_source = false;

    int node_count() const { return static_cast<int>(base.samples.size()); }
    bool closed() const { return base.closed; }
    /// Node spacing: L/N for closed curves, L/(N-1) for open ones.
    double spacing() const {
        return closed() ? length / node_count() : length / (node_count() - 1);
    }
    Vec2 point_at(double s) const { return spline.position(s); }
    Vec2 tangent_at(double s) const;
};

/// Curvature and its arc-length derivatives sampled on a strictly increasing
/// s-grid: columns[k][i] = kappa^(k)(s_i), k = 0..order.
struct CurvatureProfile {
    std::vector<double> s;
    std::vector<std::vector<double>> columns;
    int order = 0;
    double domain_length = 0.0;
    bool closed = false;

    const std::vector<double>& kappa() const { return columns.at(0); }
    const std::vector<double>& column(int k) const { return columns.at(k); }
    int sample_count() const { return static_cast<int>(s.size()); }

    /// Spline of column k over s (periodic when closed).
    CubicSpline1D column_spline(int k) const;
};

PlanarCurve make_analytic_curve(const AnalyticTag& tag, int n);
PlanarCurve apply_group(const GroupElement& g, const PlanarCurve& curve);

ArcLengthCurve resample_by_arclength(const PlanarCurve& curve, int n,
                                     const Config& cfg = {});

CurvatureProfile euclidean_curvature(const ArcLengthCurve& curve, int order,
                                     const Config& cfg = {});

/// Vertex threshold for a profile: vertex_tol_scale * max|kappa'| floored at
/// vertex_tol_floor.
double vertex_threshold(const CurvatureProfile& profile, const Config& cfg = {});

/// Max deviation of |d(gamma)/ds| from 1 over interior nodes (unit-speed check).
double max_speed_error(const ArcLengthCurve& curve);

}  // namespace sigcurve
