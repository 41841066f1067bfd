#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sigcurve/config.hpp"
#include "sigcurve/curve.hpp"
#include "sigcurve/signature.hpp"

namespace sigcurve {

/// Continuous n x n matrix function sampled on [s_0, s_1]; evaluated by
/// piecewise-linear interpolation in s.
struct MatrixFunction {
    std::vector<double> s;
    std::vector<Eigen::MatrixXd> values;
    int dim = 0;

    Eigen::MatrixXd eval(double at) const;
    double s_front() const { return s.front(); }
    double s_back() const { return s.back(); }
    /// Sup-norm bound M = max over samples of max|entry|.
    double sup_norm_bound() const;
};

/// Solution of A' = K A with A(s_star) = U.
struct FrameSolution {
    std::vector<double> s;
    std::vector<Eigen::MatrixXd> frames;
    Eigen::MatrixXd initial;
    int iteration_count = 0;
    double sup_error_estimate = 0.0;
    bool converged = false;

    Eigen::MatrixXd frame_at(double at) const;
};

/// Integrates theta' = h, x' = cos(theta), y' = sin(theta) with fixed-step
/// RK4 (cfg.integrator_steps steps): the unique curve with curvature h up to
/// rigid motion.
ArcLengthCurve curve_from_curvature(const CurvatureProfile& h, const Vec2& x0,
                                    double theta0, const Config& cfg = {});

/// Solves the in-phase ODE u'(s) = F(u(s)), u(0) = u0, for a graph-like
/// order-1 portrait via quadrature of 1/F and monotone inversion. The domain
/// is the maximal s-interval before u exits the graph's u-range.
CurvatureProfile curvature_from_signature(const PhasePortrait& s, double u0,
                                          const Config& cfg = {});
CurvatureProfile curvature_from_signature(const SignatureGraph& graph, double u0,
                                          const Config& cfg = {});

/// Picard iteration A_j = U + int_{s*}^s K A_{j-1} until the sup-norm
/// successive difference drops below tol or j_max is reached. Non-convergence
/// is reported through the result (converged flag + estimate), not thrown.
FrameSolution picard_frame(const MatrixFunction& k, const Eigen::MatrixXd& u,
                           double s_star, double tol, int j_max);

/// Lemma-12 envelope: n^(j-1) M^j span^j / j!.
double picard_error_bound(double m, int n, int j, double span);

/// RK4 integration of A' = K A on K's domain from A(s_front) = U; used as the
/// cross-check oracle for picard_frame and by the affine reconstruction.
FrameSolution rk4_frame(const MatrixFunction& k, const Eigen::MatrixXd& u,
                        const Config& cfg = {});

/// Integrates the affine frame A' = [[0,1],[mu,0]] A and position
/// x' = T = first frame row from (A0, x0); mu sampled in affine arc length.
PlanarCurve affine_curve_from_mu(const CurvatureProfile& mu, const Mat2& a0,
                                 const Vec2& x0, const Config& cfg = {});

/// Full inverse pipeline: signature -> curvature (piecewise across a
/// partition when needed) -> curve; `registration` is applied last. Closed
/// portraits are integrated until the frame returns to its start.
PlanarCurve reconstruct_from_signature(const PhasePortrait& s,
                                       const GroupElement& registration,
                                       const Config& cfg = {},
                                       const Partition* partition = nullptr);

}  // namespace sigcurve
