#include "sigcurve/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigcurve/errors.hpp"

namespace sigcurve {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.squaredNorm();
    if (len2 <= 0.0) return (p - a).norm();
    double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

namespace {

double directed_points(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < b.rows(); ++j) {
            double d2 = (a.row(i) - b.row(j)).squaredNorm();
            if (d2 < best) {
                best = d2;
                if (best <= worst) break;  // cannot raise the supremum
            }
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

double directed_to_polyline(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                            bool b_closed) {
    const std::size_t nb = b.size();
    const std::size_t segs = b_closed ? nb : nb - 1;
    double worst = 0.0;
    for (const Vec2& p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < segs; ++j) {
            double d = point_segment_distance(p, b[j], b[(j + 1) % nb]);
            if (d < best) {
                best = d;
                if (best <= worst) break;
            }
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() == 0 || b.rows() == 0) throw EmptySet("hausdorff of empty set");
    if (a.cols() != b.cols()) throw KindMismatch("dimension mismatch");
    return std::max(directed_points(a, b), directed_points(b, a));
}

double hausdorff_distance(const std::vector<Vec2>& a, bool a_closed,
                          const std::vector<Vec2>& b, bool b_closed) {
    if (a.empty() || b.empty()) throw EmptySet("hausdorff of empty set");
    auto directed = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to,
                       bool to_closed) {
        if (to.size() == 1) {
            double worst = 0.0;
            for (const Vec2& p : from) worst = std::max(worst, (p - to[0]).norm());
            return worst;
        }
        return directed_to_polyline(from, to, to_closed);
    };
    return std::max(directed(a, b, b_closed), directed(b, a, a_closed));
}

double curve_distance(const PlanarCurve& a, const PlanarCurve& b) {
    a.validate();
    b.validate();
    return hausdorff_distance(a.samples, a.closed, b.samples, b.closed);
}

}  // namespace sigcurve
