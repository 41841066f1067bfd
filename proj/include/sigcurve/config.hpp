#pragma once

#include <cstdint>
#include <string>

#include "sigcurve/errors.hpp"

namespace sigcurve {

enum class OutputFormat { Csv, Json };

/// Global numeric configuration threaded through every operation.
/// Tolerances are never hard-coded at call sites.
struct Config {
    double differentiation_tol = 1e-3;  // in-phase / derivative consistency
    double quadrature_tol = 1e-9;       // arc-length and ODE quadrature
    double comparison_tol = 1e-6;       // set/scalar comparisons
    double vertex_tol_scale = 1e-4;     // vertex threshold = scale*max|k'|...
    double vertex_tol_floor = 1e-8;     // ...floored here
    double injectivity_tol = 1e-4;      // min pairwise distance for lifted samples
    double injectivity_t_sep = 0.05;    // fraction of the period separating samples
    double partition_margin = 0.05;     // per-column witness threshold fraction
    int integrator_steps = 4096;        // fixed-step RK4 node count
    double affine_exponent = 1.0 / 3.0; // d(alpha) = kappa^e ds; {1/3, 1/2}
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::Csv;

    void validate() const {
        if (differentiation_tol <= 0 || quadrature_tol <= 0 || comparison_tol <= 0 ||
            vertex_tol_scale <= 0 || vertex_tol_floor <= 0 || injectivity_tol <= 0)
            throw InvalidInput("all tolerances must be positive");
        if (integrator_steps < 64)
            throw InvalidInput("integrator_steps must be at least 64");
        if (affine_exponent != 0.5 && affine_exponent != 1.0 / 3.0)
            throw InvalidInput("affine_exponent must be 1/2 or 1/3");
    }
};

}  // namespace sigcurve
