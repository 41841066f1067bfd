#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigcurve/config.hpp"
#include "sigcurve/curve.hpp"
#include "sigcurve/geometry.hpp"
#include "sigcurve/signature.hpp"

namespace sigcurve {

enum class Verdict { Congruent, NotCongruent, Undecidable };

struct CongruenceEvidence {
    double signature_distance = -1.0;
    double certified_delta = -1.0;
    std::vector<double> intersections_a;
    std::vector<double> intersections_b;
    std::optional<Partition> partition;
    std::vector<std::string> notes;
};

struct CongruenceVerdict {
    Verdict verdict = Verdict::Undecidable;
    std::optional<GroupElement> g;
    double registered_distance = -1.0;
    CongruenceEvidence evidence;

    bool congruent() const { return verdict == Verdict::Congruent; }
};

struct SelfIntersection {
    double t1 = 0.0;
    double t2 = 0.0;
    Vec2 point;
};

struct SelfIntersectionReport {
    std::vector<SelfIntersection> crossings;
    int tangential_near_misses = 0;
};

/// Group element mapping B's start onto A's start: SE2 aligns initial point
/// and unit tangent; Affine aligns the full affine frames at the anchor.
GroupElement register_curves(const ArcLengthCurve& a, const ArcLengthCurve& b,
                             GroupKind kind, const Config& cfg = {});

CongruenceVerdict congruence_open(const PlanarCurve& a, const PlanarCurve& b,
                                  GroupKind kind, double threshold,
                                  const Config& cfg = {});

/// Greedy sweep partition of an order-i portrait; throws ForbiddenPoint when
/// some sample has every derivative coordinate below the margin threshold
/// (the signature meets {(x,0,...,0)} numerically).
Partition find_partition(const PhasePortrait& s, const Config& cfg = {});

/// Theorem-5 style closed-curve congruence: align at a common signature
/// point, compare minimal periods and self-intersection sequences, then
/// register and measure.
CongruenceVerdict congruence_closed(const PlanarCurve& a, const PlanarCurve& b,
                                    double threshold, const Config& cfg = {});

/// All transverse crossings of non-adjacent polyline segments, each reported
/// once with both arc-length parameters, sorted by the first one.
SelfIntersectionReport self_intersections(const PlanarCurve& curve);

/// L / (minimal period of kappa), rounded to the nearest integer after a
/// residue check. Throws ConstantCurvature for circles.
int index_of_symmetry(const ArcLengthCurve& curve, const Config& cfg = {});

/// Splices a circular arc of curvature kappa(at_vertex_s) and the given
/// length at a vertex; the order-1 signature set is unchanged while the curve
/// itself is not congruent to the original for arc_length > 0.
PlanarCurve insert_constant_curvature(const ArcLengthCurve& curve, double at_vertex_s,
                                      double arc_length, const Config& cfg = {});

/// Minimal-period normalization: if the sampled closed curve traverses its
/// trace k > 1 times, return one traversal.
ArcLengthCurve normalize_curve_period(const ArcLengthCurve& curve,
                                      const Config& cfg = {});

}  // namespace sigcurve
