#include "ldg/assembly1d.hpp"
#include "ldg/norms.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ldg;

namespace {

const Function1D kOne = [](double) { return 1.0; };

LdgSolution1D constant_pair(const ShishkinMesh1D& mesh, int k, double q, double u)
{
    std::vector<double> br(mesh.points().begin(), mesh.points().end());
    LdgSolution1D w{PiecewisePoly1D(br, k), PiecewisePoly1D(br, k)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        w.Q.cell_coeffs(c)[0] = q;
        w.U.cell_coeffs(c)[0] = u;
    }
    return w;
}

}  // namespace

TEST(FluxConfig, Defaults)
{
    const auto cfg = FluxConfig::paper(1e-4, 32);
    EXPECT_DOUBLE_EQ(cfg.lambda0, 0.01);
    EXPECT_DOUBLE_EQ(cfg.lambdaN, 0.01);
    EXPECT_DOUBLE_EQ(cfg.lambdaQ, 100.0);
    EXPECT_EQ(cfg.special_interface, 24);
    EXPECT_EQ(FluxConfig::classic(1e-4, 32).lambdaQ, 0.0);
}

TEST(FluxUHat, BoundaryAndSpecialInterface)
{
    const double eps = 1e-4;
    const auto mesh = test_util::mesh_1d(eps, 8);
    const auto cfg = FluxConfig::paper(eps, 8);
    auto w = constant_pair(mesh, 1, 0.0, 1.0);
    EXPECT_EQ(flux_u_hat(w, 0, cfg), 0.0);
    EXPECT_EQ(flux_u_hat(w, 8, cfg), 0.0);
    EXPECT_DOUBLE_EQ(flux_u_hat(w, 6, cfg), 1.0);  // Q continuous
    // [[Q]]_6 = Q^- - Q^+ = 2
    w.Q.cell_coeffs(5)[0] = 2.0;
    EXPECT_NEAR(flux_u_hat(w, 6, cfg), 1.0 - 100.0 * 2.0, 1e-12);
    EXPECT_DOUBLE_EQ(flux_u_hat(w, 6, FluxConfig::classic(eps, 8)), 1.0);
    EXPECT_THROW(flux_u_hat(w, 9, cfg), std::out_of_range);
}

TEST(FluxQHat, Cases)
{
    const double eps = 1e-4;
    const auto mesh = test_util::mesh_1d(eps, 8);
    const auto cfg = FluxConfig::paper(eps, 8);
    auto w = constant_pair(mesh, 1, 0.0, 1.0);
    EXPECT_NEAR(flux_q_hat(w, 0, cfg), 0.01, 1e-15);
    w.Q.cell_coeffs(3)[0] = 0.7;
    EXPECT_DOUBLE_EQ(flux_q_hat(w, 3, cfg), 0.7);
    auto z = constant_pair(mesh, 1, 0.4, 0.0);
    EXPECT_DOUBLE_EQ(flux_q_hat(z, 8, cfg), 0.4);
}

TEST(FluxConsistency, ContinuousTracesReturned)
{
    // U = x(1-x), Q = 1 - 2x represented exactly with k = 2
    const double eps = 1e-6;
    const auto mesh = test_util::mesh_1d(eps, 16);
    const auto cfg = FluxConfig::paper(eps, 16);
    std::vector<double> br(mesh.points().begin(), mesh.points().end());
    LdgSolution1D w{PiecewisePoly1D(br, 2), PiecewisePoly1D(br, 2)};
    for (int c = 0; c < 16; ++c) {
        const double a = br[c];
        const double b = br[c + 1];
        const double m = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        // x = m + h t
        w.U.set_cell(c, LocalPoly{2, {m - m * m - h * h / 3.0, h * (1.0 - 2.0 * m), -2.0 * h * h / 3.0}});
        w.Q.set_cell(c, LocalPoly{2, {1.0 - 2.0 * m, -2.0 * h, 0.0}});
    }
    for (int j = 1; j < 16; ++j) {
        const double x = br[j];
        EXPECT_NEAR(flux_u_hat(w, j, cfg), x * (1.0 - x), 1e-13);
        EXPECT_NEAR(flux_q_hat(w, j, cfg), 1.0 - 2.0 * x, 1e-13);
    }
    EXPECT_NEAR(flux_q_hat(w, 0, cfg), 1.0, 1e-13);
    EXPECT_NEAR(flux_q_hat(w, 16, cfg), -1.0, 1e-13);
}

TEST(Assemble1D, DimensionAndNonemptyRows)
{
    const double eps = 1e-4;
    const auto mesh = test_util::mesh_1d(eps, 4);
    const auto sys = assemble(mesh, layer1d(eps), 1, FluxConfig::paper(eps, 4));
    EXPECT_EQ(sys.matrix.dimension(), 16);
    EXPECT_EQ(sys.rhs.size(), 16u);
    const auto off = sys.matrix.row_offsets();
    for (int r = 0; r < 16; ++r) {
        EXPECT_GT(off[r + 1], off[r]);
        EXPECT_TRUE(std::isfinite(sys.rhs[r]));
    }
}

TEST(Assemble1D, RejectsMismatchedInputs)
{
    const auto mesh = test_util::mesh_1d(1e-4, 8);
    EXPECT_THROW(assemble(mesh, layer1d(1e-6), 1, FluxConfig::paper(1e-4, 8)), std::invalid_argument);
    EXPECT_THROW(assemble(mesh, layer1d(1e-4), 0, FluxConfig::paper(1e-4, 8)), std::invalid_argument);
}

TEST(Assemble1D, Deterministic)
{
    const double eps = 1e-8;
    const auto mesh = test_util::mesh_1d(eps, 64);
    const auto a = assemble(mesh, layer1d(eps), 2, FluxConfig::paper(eps, 64));
    const auto b = assemble(mesh, layer1d(eps), 2, FluxConfig::paper(eps, 64));
    EXPECT_TRUE(a.matrix == b.matrix);
    EXPECT_EQ(a.rhs, b.rhs);
    EXPECT_EQ(lu_solve(a.matrix, a.rhs), lu_solve(b.matrix, b.rhs));
}

TEST(Assemble1D, MatrixActionEqualsBilinearForm)
{
    // chi^T A w = B(w; chi) when b is constant (assembly quadrature then exact).
    std::mt19937 rng(21);
    for (double eps : {1e-4, 1e-6}) {
        for (int k : {1, 2, 3}) {
            for (auto kind : {FluxKind::Paper, FluxKind::Classic}) {
                const int n = 16;
                const auto mesh = test_util::mesh_1d(eps, n);
                const auto cfg = FluxConfig::make(kind, eps, n);
                const auto sys = assemble(mesh, layer1d(eps), k, cfg);
                const auto w = test_util::random_pair(mesh, k, rng);
                const auto chi = test_util::random_pair(mesh, k, rng);
                const auto aw = matvec(sys.matrix, pack(w));
                const double lhs = test_util::dot(pack(chi), aw);
                const double rhs = bilinear_B(w, chi, eps, kOne, cfg);
                EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST(Assemble1D, PolynomialExactness)
{
    for (double eps : {1e-4, 1e-6, 1e-10}) {
        const int n = 8;
        const auto mesh = test_util::mesh_1d(eps, n, 3.0);
        const auto pb = poly1d(eps);
        const auto cfg = FluxConfig::paper(eps, n);
        const auto sys = assemble(mesh, pb, 2, cfg);
        const auto x = lu_solve(sys.matrix, sys.rhs);
        EXPECT_LE(residual_check(sys, x), 1e-10 * std::max(1.0, 1.0));
        const auto w = unpack(mesh, sys.layout, x);
        for (int i = 0; i <= 200; ++i) {
            const double s = i / 200.0;
            EXPECT_NEAR(w.U.eval(s), pb.u(s), 1e-10);
            EXPECT_NEAR(w.Q.eval(s), pb.q(s), 1e-10);
        }
    }
}

TEST(Assemble1D, ResidualContract)
{
    const double eps = 1e-8;
    for (int k : {1, 2, 3}) {
        const auto mesh = test_util::mesh_1d(eps, 256, k + 1.0);
        const auto sys = assemble(mesh, layer1d(eps), k, FluxConfig::paper(eps, 256));
        auto x = lu_solve(sys.matrix, sys.rhs);
        double rhs_inf = 0.0;
        for (double v : sys.rhs) {
            rhs_inf = std::max(rhs_inf, std::abs(v));
        }
        EXPECT_LE(residual_check(sys, x), 1e-10 * std::max(1.0, rhs_inf));
        std::vector<double> zero(x.size(), 0.0);
        EXPECT_DOUBLE_EQ(residual_check(sys, zero), rhs_inf);
        x[3] += 1.0;
        EXPECT_GT(residual_check(sys, x), 0.0);
    }
}

TEST(BilinearB, ConstantUExample)
{
    const double eps = 1e-4;
    const auto mesh = test_util::mesh_1d(eps, 8);
    const auto w = constant_pair(mesh, 1, 0.0, 1.0);
    EXPECT_NEAR(bilinear_B(w, w, eps, kOne, FluxConfig::paper(eps, 8)), 1.02, 1e-13);
    const auto z = constant_pair(mesh, 1, 0.0, 0.0);
    EXPECT_EQ(bilinear_B(z, z, eps, kOne, FluxConfig::paper(eps, 8)), 0.0);
}

TEST(BilinearB, EnergyIdentity)
{
    std::mt19937 rng(99);
    int count = 0;
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        for (int n : {8, 32}) {
            for (int k : {1, 2, 3}) {
                const auto mesh = test_util::mesh_1d(eps, n, k + 1.0);
                const auto cfg = FluxConfig::paper(eps, n);
                const Function1D b = [](double x) { return 1.0 + x * x; };
                for (int r = 0; r < 12; ++r, ++count) {
                    const auto chi = test_util::random_pair(mesh, k, rng);
                    const double lhs = bilinear_B(chi, chi, eps, b, cfg);
                    const double rhs = discrete_energy_sq(chi, eps, b, cfg);
                    EXPECT_NEAR(lhs, rhs, 1e-10 * rhs);
                }
            }
        }
    }
    EXPECT_GE(count, 200);
}
