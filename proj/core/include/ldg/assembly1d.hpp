#pragma once

#include "ldg/linalg.hpp"
#include "ldg/mesh.hpp"
#include "ldg/polyspace.hpp"
#include "ldg/problems.hpp"

#include <span>
#include <vector>

namespace ldg {

/// Which trace flux to use.
///  - Paper: penalised U-hat at the interface x_{3N/4}.
///  - Classic: same fluxes without the interior jump penalty.
enum class FluxKind { Paper, Classic };

/// Stabilisation parameters of the 1D numerical fluxes.
struct FluxConfig {
    double lambda0 = 0.0;       ///< boundary penalty at x = 0
    double lambdaN = 0.0;       ///< boundary penalty at x = 1
    double lambdaQ = 0.0;       ///< jump penalty on Q at the special interface
    int special_interface = 0;  ///< interface index carrying the Q-jump penalty (3N/4)

    /// lambda0 = lambdaN = sqrt(eps), lambdaQ = 1/sqrt(eps), interface 3N/4.
    static FluxConfig paper(double eps, int N);
    /// As paper() with lambdaQ = 0.
    static FluxConfig classic(double eps, int N);
    static FluxConfig make(FluxKind kind, double eps, int N);
};

/// Cell-major ordering: per cell a Q block of k+1 Legendre coefficients
/// followed by a U block.
struct UnknownLayout1D {
    int num_cells = 0;
    int degree = 0;

    [[nodiscard]] int block() const noexcept { return degree + 1; }
    [[nodiscard]] int dimension() const noexcept { return 2 * num_cells * block(); }
    [[nodiscard]] int q_index(int cell, int m) const noexcept { return 2 * cell * block() + m; }
    [[nodiscard]] int u_index(int cell, int m) const noexcept { return 2 * cell * block() + block() + m; }
};

using SparseSystem = LinearSystem<UnknownLayout1D>;

/// Discrete pair W = (Q, U).
struct LdgSolution1D {
    PiecewisePoly1D Q;
    PiecewisePoly1D U;
};

/// Numerical trace U-hat at interface j (0..N): zero on the boundary,
/// U^- elsewhere, and U^- - lambdaQ [[Q]] at the special interface.
double flux_u_hat(const LdgSolution1D& w, int j, const FluxConfig& cfg);
/// Numerical flux Q-hat at interface j (0..N).
double flux_q_hat(const LdgSolution1D& w, int j, const FluxConfig& cfg);

/// Assembles the elementwise LDG equations; rows follow the unknown layout
/// (the r-test equation of cell c sits on the Q rows of c, the v-test
/// equation on the U rows).
SparseSystem assemble(const ShishkinMesh1D& mesh, const ProblemSpec1D& problem, int k, const FluxConfig& cfg);

/// Scatter a coefficient vector into (Q, U).
LdgSolution1D unpack(const ShishkinMesh1D& mesh, const UnknownLayout1D& layout, std::span<const double> x);
/// Gather (Q, U) into a coefficient vector in layout order.
std::vector<double> pack(const LdgSolution1D& w);

/// assemble + lu_solve + unpack.
LdgSolution1D solve_ldg_1d(const ShishkinMesh1D& mesh, const ProblemSpec1D& problem, int k,
                           const FluxConfig& cfg);

/// Compact bilinear form B(W; chi) evaluated term by term with quadrature.
double bilinear_B(const LdgSolution1D& w, const LdgSolution1D& chi, double eps, const Function1D& b,
                  const FluxConfig& cfg);

/// |A x - rhs|_inf
double residual_check(const SparseSystem& system, std::span<const double> x);

}  // namespace ldg
