#pragma once

#include "ldg/assembly1d.hpp"
#include "ldg/linalg.hpp"
#include "ldg/mesh.hpp"
#include "ldg/polyspace.hpp"
#include "ldg/problems.hpp"

#include <span>
#include <vector>

namespace ldg {

/// Stabilisation parameters of the 2D fluxes. Line indices are interface
/// indices (0..N) of the x- and y-partitions.
struct FluxConfig2D {
    double lambda_boundary = 0.0;  ///< penalty on [[U]] along the four boundary edges
    double lambdaP = 0.0;          ///< jump penalty on P along the vertical line x = x_{special_x}
    double lambdaQ = 0.0;          ///< jump penalty on Q along the horizontal line y = y_{special_y}
    int special_x = 0;
    int special_y = 0;

    static FluxConfig2D paper(double eps, int nx, int ny);
    static FluxConfig2D classic(double eps, int nx, int ny);
    static FluxConfig2D make(FluxKind kind, double eps, int nx, int ny);
};

/// Cell-major lexicographic ordering (x-index fastest), P, Q, U blocks of
/// (k+1)^2 tensor Legendre coefficients per cell.
struct UnknownLayout2D {
    int nx = 0;
    int ny = 0;
    int degree = 0;

    [[nodiscard]] int block() const noexcept { return (degree + 1) * (degree + 1); }
    [[nodiscard]] int dimension() const noexcept { return 3 * nx * ny * block(); }
    [[nodiscard]] int cell(int i, int j) const noexcept { return i + nx * j; }
    [[nodiscard]] int local(int a, int b) const noexcept { return a + (degree + 1) * b; }
    [[nodiscard]] int p_index(int i, int j, int a, int b) const noexcept
    {
        return 3 * cell(i, j) * block() + local(a, b);
    }
    [[nodiscard]] int q_index(int i, int j, int a, int b) const noexcept
    {
        return 3 * cell(i, j) * block() + block() + local(a, b);
    }
    [[nodiscard]] int u_index(int i, int j, int a, int b) const noexcept
    {
        return 3 * cell(i, j) * block() + 2 * block() + local(a, b);
    }
};

using SparseSystem2D = LinearSystem<UnknownLayout2D>;

/// Discrete triple T = (U, P, Q).
struct LdgSolution2D {
    PiecewisePoly2D U;
    PiecewisePoly2D P;
    PiecewisePoly2D Q;
};

/// Assembles the three elementwise equations: s-test rows on the P block,
/// r-test rows on the Q block, v-test rows on the U block of each cell.
SparseSystem2D assemble2d(const TensorMesh2D& mesh, const ProblemSpec2D& problem, int k, const FluxConfig2D& cfg);

LdgSolution2D unpack2d(const TensorMesh2D& mesh, const UnknownLayout2D& layout, std::span<const double> x);
std::vector<double> pack2d(const LdgSolution2D& t);

LdgSolution2D solve_ldg_2d(const TensorMesh2D& mesh, const ProblemSpec2D& problem, int k,
                           const FluxConfig2D& cfg);

/// Compact bilinear form B(T; Z) evaluated with volume and edge quadrature.
double bilinear_B2d(const LdgSolution2D& t, const LdgSolution2D& z, double eps, const Function2D& b,
                    const FluxConfig2D& cfg);

double residual_check2d(const SparseSystem2D& system, std::span<const double> x);

}  // namespace ldg
