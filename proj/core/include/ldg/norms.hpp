#pragma once

#include "ldg/assembly1d.hpp"
#include "ldg/assembly2d.hpp"
#include "ldg/problems.hpp"

namespace ldg {

/// Error measures of a discrete solution against the exact one.
struct ErrorReport {
    double energy = 0.0;
    double balanced = 0.0;
    double l2_u = 0.0;
    double linf_u = 0.0;
    double l2_q = 0.0;  ///< in 2D: combined sqrt(|p-P|^2 + |q-Q|^2)
};

/// Quadrature used by the error integrals: nodes per cell (per direction in 2D)
/// is degree + extra_nodes.
struct NormOptions {
    int extra_nodes = 5;
};

double energy_error_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                       NormOptions opts = {});
double balanced_error_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                         NormOptions opts = {});
ErrorReport measure_errors_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                              NormOptions opts = {});

/// Energy norm squared of a discrete pair (jumps taken from the pair itself).
double discrete_energy_sq(const LdgSolution1D& chi, double eps, const Function1D& b, const FluxConfig& cfg);

double energy_error_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                       NormOptions opts = {});
double balanced_error_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                         NormOptions opts = {});
ErrorReport measure_errors_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                              NormOptions opts = {});

double discrete_energy_sq_2d(const LdgSolution2D& chi, double eps, const Function2D& b, const FluxConfig2D& cfg);

}  // namespace ldg
