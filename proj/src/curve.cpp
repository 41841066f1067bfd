#include "sigcurve/curve.hpp"

#include <algorithm>
#include <cmath>

#include "sigcurve/errors.hpp"
#include "sigcurve/numeric.hpp"

namespace sigcurve {

namespace {

double param(const std::map<std::string, double>& p, const std::string& key,
             double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

PlanarCurve clothoid_like(int n, double s0, double s1, double theta0,
                          const std::function<double(double)>& theta) {
    // Position by cumulative Gauss-Legendre of (cos theta, sin theta).
    PlanarCurve curve;
    curve.closed = false;
    curve.samples.resize(n);
    Vec2 pos(0.0, 0.0);
    curve.samples[0] = pos;
    const double h = (s1 - s0) / (n - 1);
    for (int i = 1; i < n; ++i) {
        double a = s0 + (i - 1) * h, b = s0 + i * h;
        pos.x() += gauss_legendre_5([&](double s) { return std::cos(theta0 + theta(s)); }, a, b);
        pos.y() += gauss_legendre_5([&](double s) { return std::sin(theta0 + theta(s)); }, a, b);
        curve.samples[i] = pos;
    }
    return curve;
}

}  // namespace

void PlanarCurve::validate() const {
    if (samples.size() < 4) throw InvalidInput("curve needs at least 4 samples");
    const std::size_t n = samples.size();
    const std::size_t last = closed ? n : n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        const Vec2& p = samples[i];
        const Vec2& q = samples[(i + 1) % n];
        if ((p - q).norm() <= 0.0)
            throw InvalidInput("consecutive samples must be distinct");
    }
}

PlanarCurve make_analytic_curve(const AnalyticTag& tag, int n) {
    if (n < 4) throw InvalidInput("analytic curve needs n >= 4");
    PlanarCurve curve;
    if (tag.kind == "circle") {
        double r = param(tag.params, "r", 1.0);
        double cx = param(tag.params, "cx", 0.0), cy = param(tag.params, "cy", 0.0);
        if (r <= 0) throw InvalidInput("circle radius must be positive");
        curve.closed = true;
        curve.samples.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = 2.0 * M_PI * i / n;
            curve.samples[i] = {cx + r * std::cos(t), cy + r * std::sin(t)};
        }
    } else if (tag.kind == "ellipse") {
        double a = param(tag.params, "a", 2.0), b = param(tag.params, "b", 1.0);
        if (a <= 0 || b <= 0) throw InvalidInput("ellipse semi-axes must be positive");
        curve.closed = true;
        curve.samples.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = 2.0 * M_PI * i / n;
            curve.samples[i] = {a * std::cos(t), b * std::sin(t)};
        }
    } else if (tag.kind == "parabola") {
        double a = param(tag.params, "a", 1.0);
        double xmin = param(tag.params, "xmin", -1.0), xmax = param(tag.params, "xmax", 1.0);
        if (xmax <= xmin) throw InvalidInput("parabola needs xmax > xmin");
        curve.closed = false;
        curve.samples.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = xmin + (xmax - xmin) * i / (n - 1);
            curve.samples[i] = {x, a * x * x};
        }
    } else if (tag.kind == "clothoid") {
        double s0 = param(tag.params, "s0", 0.0), s1 = param(tag.params, "s1", 2.0);
        if (s1 <= s0) throw InvalidInput("clothoid needs s1 > s0");
        curve = clothoid_like(n, s0, s1, 0.0, [](double s) { return 0.5 * s * s; });
    } else if (tag.kind == "custom_curvature") {
        auto it = tag.arrays.find("coeffs");
        if (it == tag.arrays.end() || it->second.empty())
            throw InvalidInput("custom_curvature needs a coeffs array");
        const std::vector<double>& c = it->second;
        double length = param(tag.params, "length", 1.0);
        double theta0 = param(tag.params, "theta0", 0.0);
        if (length <= 0) throw InvalidInput("custom_curvature needs positive length");
        // theta(s) = sum c_k s^(k+1)/(k+1): the curvature polynomial integrated
        // in closed form.
        auto theta = [&c](double s) {
            double acc = 0.0, pw = 1.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                pw *= s;
                acc += c[k] * pw / (static_cast<double>(k) + 1.0);
            }
            return acc;
        };
        curve = clothoid_like(n, 0.0, length, theta0, theta);
        double x0 = param(tag.params, "x0", 0.0), y0 = param(tag.params, "y0", 0.0);
        for (auto& p : curve.samples) p += Vec2(x0, y0);
    } else {
        throw InvalidInput("unknown analytic curve kind: " + tag.kind);
    }
    curve.analytic = tag;
    curve.validate();
    return curve;
}

PlanarCurve apply_group(const GroupElement& g, const PlanarCurve& curve) {
    g.validate();
    PlanarCurve out;
    out.closed = curve.closed;
    out.samples.reserve(curve.samples.size());
    for (const Vec2& p : curve.samples) out.samples.push_back(g.apply(p));
    return out;
}

Vec2 ArcLengthCurve::tangent_at(double s) const {
    Vec2 d = spline.derivative(s);
    double norm = d.norm();
    if (norm <= 0) throw DegenerateCurve("zero tangent");
    return d / norm;
}

ArcLengthCurve resample_by_arclength(const PlanarCurve& curve, int n, const Config& cfg) {
    cfg.validate();
    curve.validate();
    if (n < 4) throw InvalidInput("resampling needs n >= 4");

    const int m = static_cast<int>(curve.samples.size());
    std::vector<double> tau(m), xs(m), ys(m);
    tau[0] = 0.0;
    for (int i = 0; i < m; ++i) {
        xs[i] = curve.samples[i].x();
        ys[i] = curve.samples[i].y();
        if (i > 0) tau[i] = tau[i - 1] + (curve.samples[i] - curve.samples[i - 1]).norm();
    }
    double period = tau[m - 1];
    CurveSpline fit;
    int intervals = m - 1;
    if (curve.closed) {
        period = tau[m - 1] + (curve.samples[0] - curve.samples[m - 1]).norm();
        fit = CurveSpline(CubicSpline1D::fit_periodic(tau, xs, period),
                          CubicSpline1D::fit_periodic(tau, ys, period));
        intervals = m;
    } else {
        fit = CurveSpline(CubicSpline1D::fit(tau, xs, SplineBoundary::NotAKnot),
                          CubicSpline1D::fit(tau, ys, SplineBoundary::NotAKnot));
    }

    auto speed = [&fit](double t) { return fit.derivative(t).norm(); };

    // Cumulative arc length at the knots via per-interval Gauss-Legendre.
    std::vector<double> knot_s(intervals + 1, 0.0);
    std::vector<double> knot_tau(intervals + 1);
    for (int i = 0; i <= intervals; ++i)
        knot_tau[i] = i < m ? tau[i] : period;
    for (int i = 0; i < intervals; ++i)
        knot_s[i + 1] = knot_s[i] + gauss_legendre_5(speed, knot_tau[i], knot_tau[i + 1]);
    const double total = knot_s[intervals];
    if (total < 1e-10) throw DegenerateCurve("total length below threshold");

    // Invert s(tau) at the equally spaced arc-length targets.
    const int out_n = n;
    const double step = curve.closed ? total / out_n : total / (out_n - 1);
    std::vector<Vec2> nodes(out_n);
    std::vector<double> sgrid(out_n), taus(out_n);
    int seg = 0;
    for (int j = 0; j < out_n; ++j) {
        double target = std::min(step * j, total);
        sgrid[j] = step * j;
        while (seg + 1 < intervals && knot_s[seg + 1] < target) ++seg;
        auto partial = [&](double t) {
            return knot_s[seg] + gauss_legendre_5(speed, knot_tau[seg], t);
        };
        double t = invert_monotone(partial, knot_tau[seg], knot_tau[seg + 1], target,
                                   1e-13 * std::max(1.0, period));
        taus[j] = t;
        nodes[j] = fit.position(t);
    }

    ArcLengthCurve out;
    out.base.samples = std::move(nodes);
    out.base.closed = curve.closed;
    out.base.analytic = curve.analytic;
    out.length = total;
    out.source = fit;
    out.tau_nodes = std::move(taus);
    out.source_s.assign(knot_s.begin(), knot_s.begin() + m);
    out.has_source = true;

    std::vector<double> ox(out_n), oy(out_n);
    for (int j = 0; j < out_n; ++j) {
        ox[j] = out.base.samples[j].x();
        oy[j] = out.base.samples[j].y();
    }
    if (curve.closed) {
        out.spline = CurveSpline(CubicSpline1D::fit_periodic(sgrid, ox, total),
                                 CubicSpline1D::fit_periodic(sgrid, oy, total));
    } else {
        out.spline = CurveSpline(CubicSpline1D::fit(sgrid, ox, SplineBoundary::NotAKnot),
                                 CubicSpline1D::fit(sgrid, oy, SplineBoundary::NotAKnot));
    }
    return out;
}

CurvatureProfile euclidean_curvature(const ArcLengthCurve& curve, int order,
                                     const Config& cfg) {
    cfg.validate();
    if (order < 0) throw InvalidInput("order must be non-negative");
    const int n = curve.node_count();
    if (n < 4 * (order + 2))
        throw InsufficientResolution("need at least " + std::to_string(4 * (order + 2)) +
                                     " nodes for order " + std::to_string(order));

    CurvatureProfile profile;
    profile.order = order;
    profile.domain_length = curve.length;
    profile.closed = curve.closed();
    profile.s.resize(n);
    const double step = curve.spacing();
    for (int i = 0; i < n; ++i) profile.s[i] = step * i;
    if (!curve.closed()) profile.s.back() = curve.length;

    // Curvature data is taken at the knots of the fit that produced the
    // curve (spline derivative errors are smooth sequences there), each
    // further derivative column is obtained by differentiating at knots, and
    // only the final evaluation moves to the profile grid. Differentiating a
    // spline between knots would sample the oscillatory within-interval error
    // pattern, which the next derivative amplifies by 1/h.
    std::vector<double> knot_s;
    std::vector<double> kappa_at_knots;
    if (curve.has_source) {
        knot_s = curve.source_s;
        const std::vector<double>& tau_knots = curve.source.x().knots();
        kappa_at_knots.resize(knot_s.size());
        for (std::size_t k = 0; k < knot_s.size(); ++k) {
            Vec2 d1 = curve.source.derivative(tau_knots[k]);
            Vec2 d2 = curve.source.second_derivative(tau_knots[k]);
            double speed = d1.norm();
            if (speed <= 0) throw DegenerateCurve("zero speed at node");
            kappa_at_knots[k] =
                (d1.x() * d2.y() - d1.y() * d2.x()) / (speed * speed * speed);
        }
    } else {
        knot_s = profile.s;
        kappa_at_knots.resize(n);
        for (int i = 0; i < n; ++i) {
            Vec2 d1 = curve.spline.derivative(profile.s[i]);
            Vec2 d2 = curve.spline.second_derivative(profile.s[i]);
            double speed = d1.norm();
            if (speed <= 0) throw DegenerateCurve("zero speed at node");
            kappa_at_knots[i] =
                (d1.x() * d2.y() - d1.y() * d2.x()) / (speed * speed * speed);
        }
    }

    auto fit_column = [&](const std::vector<double>& data) {
        return profile.closed
                   ? CubicSpline1D::fit_periodic(knot_s, data, curve.length)
                   : CubicSpline1D::fit(knot_s, data, SplineBoundary::NotAKnot);
    };

    std::vector<double> data = std::move(kappa_at_knots);
    for (int k = 0; k <= order; ++k) {
        CubicSpline1D col_spline = fit_column(data);
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = col_spline.eval(profile.s[i]);
        profile.columns.push_back(std::move(col));
        if (k < order) {
            std::vector<double> next(knot_s.size());
            for (std::size_t j = 0; j < knot_s.size(); ++j)
                next[j] = col_spline.derivative(knot_s[j]);
            data = std::move(next);
        }
    }
    return profile;
}

CubicSpline1D CurvatureProfile::column_spline(int k) const {
    if (closed) return CubicSpline1D::fit_periodic(s, columns.at(k), domain_length);
    return CubicSpline1D::fit(s, columns.at(k), SplineBoundary::NotAKnot);
}

double vertex_threshold(const CurvatureProfile& profile, const Config& cfg) {
    if (profile.order < 1) throw InvalidInput("vertex threshold needs order >= 1");
    double top = 0.0;
    for (double v : profile.column(1)) top = std::max(top, std::abs(v));
    return std::max(cfg.vertex_tol_scale * top, cfg.vertex_tol_floor);
}

double max_speed_error(const ArcLengthCurve& curve) {
    const int n = curve.node_count();
    double worst = 0.0;
    const int first = curve.closed() ? 0 : 1;
    const int last = curve.closed() ? n : n - 1;
    const double step = curve.spacing();
    for (int i = first; i < last; ++i)
        worst = std::max(worst, std::abs(curve.spline.derivative(step * i).norm() - 1.0));
    return worst;
}

}  // namespace sigcurve
