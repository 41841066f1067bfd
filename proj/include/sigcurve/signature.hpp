#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sigcurve/config.hpp"
#include "sigcurve/curve.hpp"

namespace sigcurve {

enum class SignatureKind { Euclidean, Affine };

/// In-phase sampled phase portrait {(f, f', ..., f^(i))}. Row j of `samples`
/// is the portrait point at parameter s[j]; column k holds f^(k).
struct PhasePortrait {
    SignatureKind kind = SignatureKind::Euclidean;
    int order = 1;
    bool closed = false;
    std::vector<double> s;
    Eigen::MatrixXd samples;  // N x (order+1)
    double domain_length = 0.0;

    int sample_count() const { return static_cast<int>(samples.rows()); }
    std::vector<double> column(int k) const;
};

/// A signature interpreted as the graph of a function v = F(u); u strictly
/// monotone.
struct SignatureGraph {
    std::vector<double> u;
    std::vector<double> v;

    int size() const { return static_cast<int>(u.size()); }
    bool increasing() const { return u.back() > u.front(); }
    double u_min() const { return increasing() ? u.front() : u.back(); }
    double u_max() const { return increasing() ? u.back() : u.front(); }
};

/// Tube neighborhood T(S,delta) of a graph-like order-1 portrait: the inner
/// tube (vertical band of half-height delta over the graph) plus sup-norm
/// rectangles at both endpoints.
struct TubeNeighborhood {
    SignatureGraph base;
    double delta = 0.0;
    Vec2 left_endpoint;   // sigma(0)
    Vec2 right_endpoint;  // sigma(L)
};

/// Signature lifted to R^(i+2) by appending the in-phase parameter t.
struct LiftedSignature {
    Eigen::MatrixXd samples;  // N x (order+2); last column is t
    Vec2 base_point;
    int order = 1;
    double period = 0.0;
};

/// Partition of an order-i signature: strictly increasing times
/// 0 = t_0 < ... < t_n = L with a per-segment witness derivative order k
/// bounded away from zero on the whole closed segment.
struct Partition {
    std::vector<double> times;
    std::vector<int> witness_orders;  // size times.size()-1
    std::vector<double> margins;      // min |kappa^(k)| per segment
    std::vector<int> sample_index;    // portrait sample index of each time

    int segment_count() const { return static_cast<int>(witness_orders.size()); }
};

PhasePortrait euclidean_signature(const ArcLengthCurve& curve, int order,
                                  const Config& cfg = {});

/// Equi-affine signature (mu, mu_alpha) sampled in affine arc length.
/// Requires kappa > 0 along the curve; throws NonConvexArc otherwise.
PhasePortrait affine_signature(const ArcLengthCurve& curve, const Config& cfg = {});

/// Portrait of a curvature profile (columns become portrait coordinates).
PhasePortrait portrait_from_profile(const CurvatureProfile& profile, SignatureKind kind);

/// Graph view of an order-1 portrait; throws NotGraphLike unless the u-column
/// is strictly monotone.
SignatureGraph as_graph(const PhasePortrait& portrait);

TubeNeighborhood make_tube(const PhasePortrait& base, double delta);
TubeNeighborhood make_tube(const SignatureGraph& base, double delta);

bool inner_tube_contains(const TubeNeighborhood& tube, const Vec2& p);
bool tube_contains(const TubeNeighborhood& tube, const Vec2& p);

/// Largest delta* such that the delta*-neighborhood of the base graph stays
/// inside T(S,delta), computed by dense sampling of the tube boundary.
double delta_star(const TubeNeighborhood& tube);

/// Smallest radius r such that every point of `portrait` lies in T(base, r).
double tube_radius_needed(const TubeNeighborhood& tube, const PhasePortrait& portrait);

double signature_hausdorff(const PhasePortrait& s1, const PhasePortrait& s2);

/// Trapezoid value of the L1 distance between two graphs over their common
/// u-domain; throws NoCommonDomain when the domains do not overlap.
double l1_signature_distance(const SignatureGraph& f, const SignatureGraph& fstar);

LiftedSignature lift_signature(const ArcLengthCurve& curve, int order,
                               int base_point_index, const Config& cfg = {});

/// Max scaled in-phase residual over interior nodes: central difference of
/// column j against column j+1, scaled by max(1, max|column j+1|).
double max_in_phase_residual(const PhasePortrait& portrait);

/// Numeric injectivity check for a lifted signature: minimum pairwise sample
/// distance over pairs separated by more than injectivity_t_sep * period.
bool lifted_signature_injective(const LiftedSignature& lifted, const Config& cfg = {});

}  // namespace sigcurve
