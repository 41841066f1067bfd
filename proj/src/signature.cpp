#include "sigcurve/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigcurve/distance.hpp"
#include "sigcurve/errors.hpp"
#include "sigcurve/numeric.hpp"

namespace sigcurve {

std::vector<double> PhasePortrait::column(int k) const {
    std::vector<double> out(samples.rows());
    for (Eigen::Index i = 0; i < samples.rows(); ++i) out[i] = samples(i, k);
    return out;
}

PhasePortrait portrait_from_profile(const CurvatureProfile& profile, SignatureKind kind) {
    if (profile.order < 1) throw InvalidInput("portrait needs order >= 1");
    PhasePortrait p;
    p.kind = kind;
    p.order = profile.order;
    p.closed = profile.closed;
    p.s = profile.s;
    p.domain_length = profile.domain_length;
    const int n = profile.sample_count();
    p.samples.resize(n, profile.order + 1);
    for (int k = 0; k <= profile.order; ++k)
        for (int i = 0; i < n; ++i) p.samples(i, k) = profile.column(k)[i];
    return p;
}

PhasePortrait euclidean_signature(const ArcLengthCurve& curve, int order,
                                  const Config& cfg) {
    if (order < 1) throw InvalidInput("signature order must be >= 1");
    return portrait_from_profile(euclidean_curvature(curve, order, cfg),
                                 SignatureKind::Euclidean);
}

PhasePortrait affine_signature(const ArcLengthCurve& curve, const Config& cfg) {
    cfg.validate();
    const double e = cfg.affine_exponent;
    CurvatureProfile prof = euclidean_curvature(curve, 2, cfg);
    for (double k : prof.kappa())
        if (k <= 0.0) throw NonConvexArc("affine arc length needs kappa > 0");

    CubicSpline1D kappa_spline = prof.column_spline(0);
    CubicSpline1D kappa_s_spline = prof.column_spline(1);
    CubicSpline1D kappa_ss_spline = prof.column_spline(2);
    auto f = [&](double s) { return std::pow(kappa_spline.eval(s), e); };
    auto kap_at = [&](double s) { return kappa_spline.eval(s); };

    // Affine arc length alpha(s) = int kappa^e ds and the tangent angle
    // theta(s) = int kappa ds, cumulative at the s-nodes.
    const int n = prof.sample_count();
    const bool closed = curve.closed();
    const int intervals = closed ? n : n - 1;
    std::vector<double> node_alpha(intervals + 1, 0.0), node_theta(intervals + 1, 0.0);
    std::vector<double> node_s(intervals + 1);
    for (int i = 0; i <= intervals; ++i) node_s[i] = i < n ? prof.s[i] : curve.length;
    for (int i = 0; i < intervals; ++i) {
        node_alpha[i + 1] = node_alpha[i] + gauss_legendre_5(f, node_s[i], node_s[i + 1]);
        node_theta[i + 1] = node_theta[i] + gauss_legendre_5(kap_at, node_s[i], node_s[i + 1]);
    }
    const double alpha_total = node_alpha[intervals];

    // Resample uniformly in alpha and evaluate the frame there. The frame is
    // built from the smoothed curvature columns (theta = int kappa), so its
    // errors vary smoothly and the Cartan entries stay clean.
    const double step = closed ? alpha_total / n : alpha_total / (n - 1);
    std::vector<double> alpha_grid(n), mu(n);
    int seg = 0;
    for (int j = 0; j < n; ++j) {
        alpha_grid[j] = step * j;
        double target = std::min(alpha_grid[j], alpha_total);
        while (seg + 1 < intervals && node_alpha[seg + 1] < target) ++seg;
        auto partial = [&](double s) {
            return node_alpha[seg] + gauss_legendre_5(f, node_s[seg], s);
        };
        double s = invert_monotone(partial, node_s[seg], node_s[seg + 1], target,
                                   1e-13 * std::max(1.0, curve.length));
        double theta = node_theta[seg] + gauss_legendre_5(kap_at, node_s[seg], s);

        // T = t_hat / f, N = T_alpha; A' rows are N and N_alpha, where N_s is
        // expanded through the Frenet relations t_hat' = kappa n_hat,
        // n_hat' = -kappa t_hat.
        double kap = kappa_spline.eval(s);
        double kap_s = kappa_s_spline.eval(s);
        double kap_ss = kappa_ss_spline.eval(s);
        double fv = std::pow(kap, e);
        double fs = e * std::pow(kap, e - 1.0) * kap_s;
        double fss = e * (e - 1.0) * std::pow(kap, e - 2.0) * kap_s * kap_s +
                     e * std::pow(kap, e - 1.0) * kap_ss;
        Vec2 t_hat(std::cos(theta), std::sin(theta));
        Vec2 n_hat(-std::sin(theta), std::cos(theta));

        Vec2 tangent = t_hat / fv;
        Vec2 normal = kap * n_hat / (fv * fv) - fs * t_hat / (fv * fv * fv);
        Vec2 normal_s =
            t_hat * (-kap * kap / (fv * fv) - fss / (fv * fv * fv) +
                     3.0 * fs * fs / (fv * fv * fv * fv)) +
            n_hat * (kap_s / (fv * fv) - 3.0 * kap * fs / (fv * fv * fv));

        Mat2 frame, dframe;
        frame << tangent.x(), tangent.y(), normal.x(), normal.y();
        dframe << normal.x(), normal.y(), normal_s.x() / fv, normal_s.y() / fv;
        double det = frame.determinant();
        if (std::abs(det) < 1e-12) throw FrameSingular("degenerate affine frame");
        Mat2 cartan = dframe * frame.inverse();
        mu[j] = cartan(1, 0);
    }

    CubicSpline1D mu_spline =
        closed ? CubicSpline1D::fit_periodic(alpha_grid, mu, alpha_total)
               : CubicSpline1D::fit(alpha_grid, mu, SplineBoundary::NotAKnot);
    PhasePortrait p;
    p.kind = SignatureKind::Affine;
    p.order = 1;
    p.closed = closed;
    p.s = alpha_grid;
    p.domain_length = alpha_total;
    p.samples.resize(n, 2);
    for (int j = 0; j < n; ++j) {
        p.samples(j, 0) = mu[j];
        p.samples(j, 1) = mu_spline.derivative(alpha_grid[j]);
    }
    return p;
}

SignatureGraph as_graph(const PhasePortrait& portrait) {
    const int n = portrait.sample_count();
    if (n < 2) throw NotGraphLike("too few samples");
    SignatureGraph g;
    g.u.resize(n);
    g.v.resize(n);
    for (int i = 0; i < n; ++i) {
        g.u[i] = portrait.samples(i, 0);
        g.v[i] = portrait.samples(i, 1);
    }
    const bool inc = g.u[1] > g.u[0];
    for (int i = 1; i < n; ++i) {
        if (inc ? g.u[i] <= g.u[i - 1] : g.u[i] >= g.u[i - 1])
            throw NotGraphLike("u-column is not strictly monotone");
    }
    return g;
}

namespace {

// Linear interpolation of v over the (monotone) u-grid.
double graph_value(const SignatureGraph& g, double u) {
    const int n = g.size();
    if (g.increasing()) {
        auto it = std::upper_bound(g.u.begin(), g.u.end(), u);
        int i = std::clamp<int>(static_cast<int>(it - g.u.begin()) - 1, 0, n - 2);
        double w = (u - g.u[i]) / (g.u[i + 1] - g.u[i]);
        return (1.0 - w) * g.v[i] + w * g.v[i + 1];
    }
    auto it = std::upper_bound(g.u.begin(), g.u.end(), u, std::greater<double>());
    int i = std::clamp<int>(static_cast<int>(it - g.u.begin()) - 1, 0, n - 2);
    double w = (u - g.u[i]) / (g.u[i + 1] - g.u[i]);
    return (1.0 - w) * g.v[i] + w * g.v[i + 1];
}

SignatureGraph normalized_increasing(const SignatureGraph& g) {
    if (g.increasing()) return g;
    SignatureGraph out;
    out.u.assign(g.u.rbegin(), g.u.rend());
    out.v.assign(g.v.rbegin(), g.v.rend());
    return out;
}

}  // namespace

TubeNeighborhood make_tube(const SignatureGraph& base, double delta) {
    if (delta <= 0) throw InvalidInput("tube radius must be positive");
    TubeNeighborhood tube;
    // The endpoints are sigma(0), sigma(L); samples are normalized so that u
    // increases, which leaves the endpoint set unchanged.
    Vec2 first(base.u.front(), base.v.front());
    Vec2 last(base.u.back(), base.v.back());
    tube.base = normalized_increasing(base);
    tube.delta = delta;
    tube.left_endpoint = base.increasing() ? first : last;
    tube.right_endpoint = base.increasing() ? last : first;
    return tube;
}

TubeNeighborhood make_tube(const PhasePortrait& base, double delta) {
    return make_tube(as_graph(base), delta);
}

bool inner_tube_contains(const TubeNeighborhood& tube, const Vec2& p) {
    const SignatureGraph& g = tube.base;
    if (p.x() < g.u.front() || p.x() > g.u.back()) return false;
    return std::abs(p.y() - graph_value(g, p.x())) < tube.delta;
}

bool tube_contains(const TubeNeighborhood& tube, const Vec2& p) {
    if (inner_tube_contains(tube, p)) return true;
    const double d = tube.delta;
    const Vec2& l = tube.left_endpoint;
    const Vec2& r = tube.right_endpoint;
    if (p.x() < l.x() && std::max(std::abs(p.x() - l.x()), std::abs(p.y() - l.y())) < d)
        return true;
    if (p.x() > r.x() && std::max(std::abs(p.x() - r.x()), std::abs(p.y() - r.y())) < d)
        return true;
    return false;
}

double delta_star(const TubeNeighborhood& tube) {
    const SignatureGraph& g = tube.base;
    const double d = tube.delta;
    const int n = g.size();
    const int refine = 8;

    // Boundary of T(S,delta): the top/bottom curves over [u_l, u_r] plus the
    // outer edges of the endpoint rectangles.
    std::vector<Vec2> top, bottom;
    top.reserve((n - 1) * refine + 1);
    bottom.reserve((n - 1) * refine + 1);
    for (int i = 0; i + 1 < n; ++i) {
        for (int k = 0; k < refine; ++k) {
            double u = g.u[i] + (g.u[i + 1] - g.u[i]) * k / refine;
            double v = graph_value(g, u);
            top.emplace_back(u, v + d);
            bottom.emplace_back(u, v - d);
        }
    }
    top.emplace_back(g.u.back(), g.v.back() + d);
    bottom.emplace_back(g.u.back(), g.v.back() - d);

    const Vec2 l = tube.left_endpoint, r = tube.right_endpoint;
    std::vector<std::pair<Vec2, Vec2>> edges = {
        {{l.x() - d, l.y() - d}, {l.x() - d, l.y() + d}},
        {{l.x() - d, l.y() - d}, {l.x(), l.y() - d}},
        {{l.x() - d, l.y() + d}, {l.x(), l.y() + d}},
        {{r.x() + d, r.y() - d}, {r.x() + d, r.y() + d}},
        {{r.x(), r.y() - d}, {r.x() + d, r.y() - d}},
        {{r.x(), r.y() + d}, {r.x() + d, r.y() + d}},
    };

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        Vec2 p(g.u[i], g.v[i]);
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j + 1 < top.size(); ++j) {
            dist = std::min(dist, point_segment_distance(p, top[j], top[j + 1]));
            dist = std::min(dist, point_segment_distance(p, bottom[j], bottom[j + 1]));
        }
        for (const auto& [a, b] : edges)
            dist = std::min(dist, point_segment_distance(p, a, b));
        best = std::min(best, dist);
    }
    return best;
}

double tube_radius_needed(const TubeNeighborhood& tube, const PhasePortrait& portrait) {
    const SignatureGraph& g = tube.base;
    double worst = 0.0;
    for (int i = 0; i < portrait.sample_count(); ++i) {
        Vec2 p(portrait.samples(i, 0), portrait.samples(i, 1));
        double r;
        if (p.x() < g.u.front()) {
            r = std::max(g.u.front() - p.x(), std::abs(p.y() - tube.left_endpoint.y()));
        } else if (p.x() > g.u.back()) {
            r = std::max(p.x() - g.u.back(), std::abs(p.y() - tube.right_endpoint.y()));
        } else {
            r = std::abs(p.y() - graph_value(g, p.x()));
        }
        worst = std::max(worst, r);
    }
    return worst;
}

double signature_hausdorff(const PhasePortrait& s1, const PhasePortrait& s2) {
    if (s1.kind != s2.kind) throw KindMismatch("signature kinds differ");
    if (s1.order != s2.order) throw KindMismatch("signature orders differ");
    return hausdorff_distance(s1.samples, s2.samples);
}

double l1_signature_distance(const SignatureGraph& f, const SignatureGraph& fstar) {
    const double x = std::max(f.u_min(), fstar.u_min());
    const double y = std::min(f.u_max(), fstar.u_max());
    if (x >= y) throw NoCommonDomain("graph domains do not overlap");
    const int m = 2 * std::max(f.size(), fstar.size());
    std::vector<double> grid(m), diff(m);
    for (int i = 0; i < m; ++i) {
        grid[i] = x + (y - x) * i / (m - 1);
        diff[i] = std::abs(graph_value(f, grid[i]) - graph_value(fstar, grid[i]));
    }
    return cumulative_trapezoid(grid, diff).back();
}

LiftedSignature lift_signature(const ArcLengthCurve& curve, int order,
                               int base_point_index, const Config& cfg) {
    if (!curve.closed()) throw OpenCurve("lifting needs a closed curve");
    CurvatureProfile prof = euclidean_curvature(curve, order, cfg);
    const int n = prof.sample_count();
    const int base = ((base_point_index % n) + n) % n;
    LiftedSignature lifted;
    lifted.order = order;
    lifted.period = curve.length;
    lifted.base_point = curve.base.samples[base];
    lifted.samples.resize(n, order + 2);
    const double h = curve.spacing();
    for (int r = 0; r < n; ++r) {
        int i = (base + r) % n;
        for (int k = 0; k <= order; ++k) lifted.samples(r, k) = prof.column(k)[i];
        lifted.samples(r, order + 1) = h * r;
    }
    return lifted;
}

double max_in_phase_residual(const PhasePortrait& portrait) {
    const int n = portrait.sample_count();
    if (n < 3) return 0.0;
    double worst = 0.0;
    for (int k = 0; k + 1 <= portrait.order; ++k) {
        double scale = 1.0;
        for (int i = 0; i < n; ++i)
            scale = std::max(scale, std::abs(portrait.samples(i, k + 1)));
        const int first = portrait.closed ? 0 : 1;
        const int last = portrait.closed ? n : n - 1;
        for (int i = first; i < last; ++i) {
            int im = (i - 1 + n) % n, ip = (i + 1) % n;
            // Closed portraits have a uniform grid; the wrap spacing is 2h.
            double ds = portrait.closed ? 2.0 * (portrait.s[1] - portrait.s[0])
                                        : portrait.s[ip] - portrait.s[im];
            double fd = (portrait.samples(ip, k) - portrait.samples(im, k)) / ds;
            worst = std::max(worst, std::abs(fd - portrait.samples(i, k + 1)) / scale);
        }
    }
    return worst;
}

bool lifted_signature_injective(const LiftedSignature& lifted, const Config& cfg) {
    const int n = static_cast<int>(lifted.samples.rows());
    const double t_sep = cfg.injectivity_t_sep * lifted.period;
    double scale = std::max(1.0, lifted.samples.leftCols(lifted.order + 1)
                                     .cwiseAbs()
                                     .maxCoeff());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dt = lifted.samples(j, lifted.order + 1) -
                        lifted.samples(i, lifted.order + 1);
            dt = std::min(dt, lifted.period - dt);
            if (dt <= t_sep) continue;
            double dist = (lifted.samples.row(i).head(lifted.order + 1) -
                           lifted.samples.row(j).head(lifted.order + 1))
                              .norm();
            if (dist < cfg.injectivity_tol * scale) return false;
        }
    }
    return true;
}

}  // namespace sigcurve
