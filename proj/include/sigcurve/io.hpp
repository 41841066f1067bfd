#pragma once

#include <string>
#include <vector>

#include "sigcurve/congruence.hpp"
#include "sigcurve/config.hpp"
#include "sigcurve/curve.hpp"
#include "sigcurve/robustness.hpp"
#include "sigcurve/signature.hpp"

namespace sigcurve::io {

/// Curve JSON: {"closed": bool, "samples": [[x,y],...]} or the analytic form
/// {"kind": ..., "params": {...}, "n": int}.
PlanarCurve read_curve_json(const std::string& path);
void write_curve_json(const std::string& path, const PlanarCurve& curve);
std::string curve_to_json(const PlanarCurve& curve);
PlanarCurve curve_from_json(const std::string& text);

/// Signature CSV (header s,k0,...,ki) plus metadata sidecar
/// {"kind","order","closed","L"} at <path>.meta.json.
void write_signature_csv(const std::string& path, const PhasePortrait& portrait);
PhasePortrait read_signature_csv(const std::string& path);
bool has_signature_sidecar(const std::string& path);

/// Curvature profile CSV: header s,k0[,k1...].
void write_profile_csv(const std::string& path, const CurvatureProfile& profile);
CurvatureProfile read_profile_csv(const std::string& path);

std::string verdict_to_json(const CongruenceVerdict& verdict, GroupKind kind);

std::string bound_report_to_json(const BoundReport& report);

void write_experiment_csv(const std::string& path,
                          const std::vector<ExperimentRow>& rows);

/// Config JSON (all fields optional); unknown keys rejected.
Config read_config_json(const std::string& path);

/// Shortest round-trip decimal formatting used for all file output.
std::string format_double(double v);

}  // namespace sigcurve::io
