#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigcurve/config.hpp"
#include "sigcurve/curve.hpp"
#include "sigcurve/signature.hpp"

namespace sigcurve {

/// A sampled function of s: parallel (s, value) arrays.
struct SampledFunction {
    std::vector<double> s;
    std::vector<double> value;

    int size() const { return static_cast<int>(s.size()); }
};

/// Envelope machinery around a monotone curvature: the reparameterizations
/// rho+-, the top/bottom portrait curves sigma+-, the curvature envelopes
/// tau/beta on [0, L_tau], and the extended two-piece beta on [0, L_beta].
/// When the input curvature is decreasing it is reflected into the upper
/// half-plane internally; tau/beta are reflected back and stored so that
/// beta <= tau pointwise.
struct EnvelopeSet {
    SampledFunction rho_plus, rho_minus;
    SignatureGraph sigma_plus, sigma_minus;
    SampledFunction tau, beta;      // on [0, L_tau]
    SampledFunction beta_extended;  // on [0, L_beta]
    double delta = 0.0;
    double m = 0.0;  // min |kappa'|
    double big_m = 0.0;  // max |kappa'|
    double ell_tau = 0.0, l_tau = 0.0;
    double ell_beta = 0.0, l_beta = 0.0;
    bool reflected = false;
};

/// Every constant of the explicit O(delta) bound, with provenance notes.
struct BoundReport {
    double delta = 0.0;
    double m = 0.0, m1 = 0.0, m2 = 0.0, big_m = 0.0, length = 0.0;
    double ell_tau = 0.0, l_tau = 0.0, l_beta = 0.0;
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
    double epsilon_of_delta = 0.0;
    std::vector<std::string> notes;
};

/// Solves (rho^+/-)'(s) = 1 +/- delta/kappa'(rho(s)), rho(0) = 0, stopping
/// when rho reaches the curvature domain length. Requires delta < min|kappa'|.
SampledFunction solve_rho(const CurvatureProfile& kappa, double delta, int sign,
                          const Config& cfg = {});

EnvelopeSet envelopes(const CurvatureProfile& kappa, double delta,
                      const Config& cfg = {});

BoundReport explicit_bound(const CurvatureProfile& kappa, double delta,
                           const Config& cfg = {});

/// Lemma-2 constant: (min common length)^2 * sup|kappa - kappa*| / 2.
double closeness_bound_curvature(const CurvatureProfile& kappa,
                                 const CurvatureProfile& kappa_star);

/// Corollary-2 constant delta*M/m^2 for graphs F, F* (m = min|F|, M = max|F|
/// over both). Throws VanishingF when either graph changes sign or vanishes.
double l1_curvature_bound(const SignatureGraph& f, const SignatureGraph& fstar,
                          double delta);

/// Corollary-3 bound for graphs over [x1,y1] and [x2,y2]; requires
/// max{x1,x2} < min{y1,y2}.
double l1_curve_bound(const SignatureGraph& f, const SignatureGraph& fstar,
                      double delta);

struct ExperimentRow {
    int trial = 0;
    double delta_measured = 0.0;
    double d_curves = 0.0;
    double eps_bound = 0.0;
    bool in_hypothesis = false;
    bool pass = false;
};

/// Seeded perturbation study: perturb the curvature smoothly, reconstruct,
/// measure signature and registered curve distances against the explicit
/// bound. Trials are seeded individually (seed + trial index).
std::vector<ExperimentRow> perturbation_experiment(const PlanarCurve& curve,
                                                   double noise_amplitude, int trials,
                                                   std::uint64_t seed,
                                                   const Config& cfg = {},
                                                   bool allow_vertices = false);

/// In-phase perturbation contained in IT(S, delta) by construction:
/// u*' = F(u*) + xi with |xi| <= 0.95 delta and u*(0) = kappa(0).
CurvatureProfile synthetic_inner_tube_profile(const CurvatureProfile& kappa,
                                              double delta, std::uint64_t seed,
                                              const Config& cfg = {});

}  // namespace sigcurve
