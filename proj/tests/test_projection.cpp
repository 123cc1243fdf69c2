#include "ldg/linalg.hpp"
#include "ldg/problems.hpp"
#include "ldg/projection.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ldg;

namespace {

const ScalarField1D kSmooth = [](double x) { return std::sin(3.0 * x) + std::exp(x) - x * x * x * x; };
const ScalarField2D kSmooth2 = [](double x, double y) { return std::sin(2.0 * x + y) * std::exp(x * y) + y * y; };

/// int_a^b f(x) P_m(ref x) dx with a fine rule
double moment(const ScalarField1D& f, double a, double b, int m)
{
    const auto r = gauss_rule(20);
    double s = 0.0;
    for (std::size_t q = 0; q < r.size(); ++q) {
        s += r.weights[q] * f(from_reference(r.nodes[q], a, b)) * legendre_eval(m, r.nodes[q]);
    }
    return 0.5 * (b - a) * s;
}

double moment_2d(const ScalarField2D& f, const Rect& c, int ma, int mb)
{
    const auto r = gauss_rule(20);
    double s = 0.0;
    for (std::size_t qy = 0; qy < r.size(); ++qy) {
        for (std::size_t qx = 0; qx < r.size(); ++qx) {
            const double x = from_reference(r.nodes[qx], c.x0, c.x1);
            const double y = from_reference(r.nodes[qy], c.y0, c.y1);
            s += r.weights[qx] * r.weights[qy] * f(x, y) * legendre_eval(ma, r.nodes[qx]) *
                 legendre_eval(mb, r.nodes[qy]);
        }
    }
    return 0.25 * (c.x1 - c.x0) * (c.y1 - c.y0) * s;
}

ScalarField1D as_field(const LocalPoly& p, double a, double b)
{
    return [p, a, b](double x) { return p(to_reference(x, a, b)); };
}

ScalarField2D as_field(const LocalPoly2D& p, const Rect& c)
{
    return [p, c](double x, double y) { return p(to_reference(x, c.x0, c.x1), to_reference(y, c.y0, c.y1)); };
}

}  // namespace

TEST(L2Projection, ConstantAndQuadratic)
{
    const auto p = l2_project([](double) { return 5.0; }, 0.2, 0.7, 1);
    EXPECT_NEAR(p.coeffs[0], 5.0, 1e-14);
    EXPECT_NEAR(p.coeffs[1], 0.0, 1e-14);

    const auto sq = l2_project([](double x) { return x * x; }, 0.0, 1.0, 1);
    for (double x : {0.0, 0.3, 1.0}) {
        EXPECT_NEAR(sq(to_reference(x, 0.0, 1.0)), -1.0 / 6.0 + x, 1e-14);
    }
}

TEST(GaussRadau, QuadraticExample)
{
    const ScalarField1D z = [](double x) { return x * x; };
    const auto m = gauss_radau_minus(z, 0.0, 1.0, 1);
    for (double x : {0.0, 0.4, 1.0}) {
        EXPECT_NEAR(m(to_reference(x, 0.0, 1.0)), -1.0 / 3.0 + 4.0 / 3.0 * x, 1e-14);
    }
    const auto p = gauss_radau_plus(z, 0.0, 1.0, 1);
    EXPECT_NEAR(p(-1.0), 0.0, 1e-15);
}

TEST(GaussRadau, RejectsDegreeZero)
{
    EXPECT_THROW(gauss_radau_minus(kSmooth, 0.0, 1.0, 0), std::invalid_argument);
    EXPECT_THROW(gauss_radau_plus(kSmooth, 0.0, 1.0, 0), std::invalid_argument);
}

TEST(Projection1D, ReproducesPolynomials)
{
    for (int k = 1; k <= 4; ++k) {
        const ScalarField1D poly = [k](double x) { return std::pow(x - 0.3, k) - 2.0 * x + 0.5; };
        for (const auto& p : {l2_project(poly, 0.1, 0.4, k), gauss_radau_minus(poly, 0.1, 0.4, k),
                              gauss_radau_plus(poly, 0.1, 0.4, k)}) {
            for (double x : {0.1, 0.23, 0.4}) {
                EXPECT_NEAR(p(to_reference(x, 0.1, 0.4)), poly(x), 1e-13);
            }
        }
    }
}

TEST(Projection1D, OrthogonalityAndEndpoints)
{
    for (int k = 1; k <= 4; ++k) {
        for (auto [a, b] : {std::pair{0.0, 0.3}, std::pair{0.41, 0.52}, std::pair{0.7, 1.0}}) {
            const auto pi = l2_project(kSmooth, a, b, k);
            const auto pm = gauss_radau_minus(kSmooth, a, b, k);
            const auto pp = gauss_radau_plus(kSmooth, a, b, k);
            for (int m = 0; m <= k; ++m) {
                const ScalarField1D e = [&](double x) { return kSmooth(x) - as_field(pi, a, b)(x); };
                EXPECT_NEAR(moment(e, a, b, m), 0.0, 1e-12);
            }
            for (int m = 0; m < k; ++m) {
                const ScalarField1D em = [&](double x) { return kSmooth(x) - as_field(pm, a, b)(x); };
                const ScalarField1D ep = [&](double x) { return kSmooth(x) - as_field(pp, a, b)(x); };
                EXPECT_NEAR(moment(em, a, b, m), 0.0, 1e-12);
                EXPECT_NEAR(moment(ep, a, b, m), 0.0, 1e-12);
            }
            EXPECT_NEAR(pm(1.0), kSmooth(b), 1e-12);
            EXPECT_NEAR(pp(-1.0), kSmooth(a), 1e-12);
        }
    }
}

TEST(Composite1D, RegionTables)
{
    const auto mesh = test_util::mesh_1d(1e-8, 16);
    const int k = 2;
    const auto pu = composite_u_1d(kSmooth, mesh, k);
    const auto pq = composite_q_1d(kSmooth, mesh, k);
    for (int j = 1; j <= 16; ++j) {
        const double a = mesh.point(j - 1);
        const double b = mesh.point(j);
        const bool radau = j <= 4 || (j >= 13 && j <= 15);
        const auto expect_u = radau ? gauss_radau_minus(kSmooth, a, b, k) : l2_project(kSmooth, a, b, k);
        const auto expect_q = j == 1 ? l2_project(kSmooth, a, b, k) : gauss_radau_plus(kSmooth, a, b, k);
        for (int m = 0; m <= k; ++m) {
            EXPECT_DOUBLE_EQ(pu.cell_coeffs(j - 1)[m], expect_u.coeffs[m]) << "cell " << j;
            EXPECT_DOUBLE_EQ(pq.cell_coeffs(j - 1)[m], expect_q.coeffs[m]) << "cell " << j;
        }
    }
}

TEST(Composite1D, ReproducesGlobalPolynomials)
{
    const auto mesh = test_util::mesh_1d(1e-6, 32);
    const ScalarField1D poly = [](double x) { return 1.0 - 3.0 * x + 2.0 * x * x; };
    EXPECT_LE(measure_interp_error(poly, composite_u_1d(poly, mesh, 2), NormKind::Linf), 1e-13);
    EXPECT_LE(measure_interp_error(poly, composite_q_1d(poly, mesh, 2), NormKind::Linf), 1e-13);
    EXPECT_LE(measure_interp_error(poly, l2_project_mesh(poly, mesh, 2), NormKind::L2), 1e-13);
}

TEST(Composite1D, FluxErrorScalesLikeEpsThreeQuarters)
{
    const int n = 64;
    double err[2];
    int idx = 0;
    for (double eps : {1e-8, 1e-12}) {
        const auto mesh = test_util::mesh_1d(eps, n);
        const auto pb = layer1d(eps);
        err[idx++] = measure_interp_error(pb.q, composite_q_1d(pb.q, mesh, 1), NormKind::L2);
    }
    const double ratio = err[0] / err[1];
    EXPECT_GT(ratio, 1e3 / 2.0);
    EXPECT_LT(ratio, 1e3 * 2.0);
}

TEST(Projection2D, TensorFactorisation)
{
    const ScalarField1D ax = [](double x) { return std::cos(4.0 * x); };
    const ScalarField1D by = [](double y) { return std::exp(-y) + y; };
    const ScalarField2D z = [&](double x, double y) { return ax(x) * by(y); };
    const Rect c{0.2, 0.45, 0.1, 0.6};
    for (int k = 1; k <= 3; ++k) {
        const auto xm = gauss_radau_minus(ax, c.x0, c.x1, k);
        const auto xp = gauss_radau_plus(ax, c.x0, c.x1, k);
        const auto xl = l2_project(ax, c.x0, c.x1, k);
        const auto ym = gauss_radau_minus(by, c.y0, c.y1, k);
        const auto yp = gauss_radau_plus(by, c.y0, c.y1, k);
        const auto yl = l2_project(by, c.y0, c.y1, k);
        const auto pxm = radau_x_minus(z, c, k);
        const auto pxp = radau_x_plus(z, c, k);
        const auto pym = radau_y_minus(z, c, k);
        const auto pyp = radau_y_plus(z, c, k);
        const auto pl = l2_project_2d(z, c, k);
        for (int b = 0; b <= k; ++b) {
            for (int a = 0; a <= k; ++a) {
                const int l = a + (k + 1) * b;
                EXPECT_NEAR(pxm.coeffs[l], xm.coeffs[a] * yl.coeffs[b], 1e-13);
                EXPECT_NEAR(pxp.coeffs[l], xp.coeffs[a] * yl.coeffs[b], 1e-13);
                EXPECT_NEAR(pym.coeffs[l], xl.coeffs[a] * ym.coeffs[b], 1e-13);
                EXPECT_NEAR(pyp.coeffs[l], xl.coeffs[a] * yp.coeffs[b], 1e-13);
                EXPECT_NEAR(pl.coeffs[l], xl.coeffs[a] * yl.coeffs[b], 1e-13);
            }
        }
    }
}

TEST(Projection2D, MatchesDirectMomentSystem)
{
    // pi_x^-: volume moments against Q_{k-1,k} plus edge moments on the right edge.
    const Rect c{0.3, 0.55, 0.05, 0.2};
    for (int k = 1; k <= 3; ++k) {
        const int nb = k + 1;
        const auto rule = gauss_rule(20);
        std::vector<Triplet> t;
        std::vector<double> rhs;
        int row = 0;
        for (int b = 0; b <= k; ++b) {
            for (int a = 0; a < k; ++a, ++row) {
                // int P_a P_b P_a' P_b' = delta * 4 / ((2a+1)(2b+1)) on the reference square
                t.push_back({row, a + nb * b, 4.0 / ((2 * a + 1) * (2 * b + 1))});
                rhs.push_back(moment_2d(kSmooth2, c, a, b) * 4.0 / ((c.x1 - c.x0) * (c.y1 - c.y0)));
            }
        }
        for (int b = 0; b <= k; ++b, ++row) {
            for (int a = 0; a <= k; ++a) {
                t.push_back({row, a + nb * b, 2.0 / (2 * b + 1)});
            }
            double s = 0.0;
            for (std::size_t q = 0; q < rule.size(); ++q) {
                s += rule.weights[q] * kSmooth2(c.x1, from_reference(rule.nodes[q], c.y0, c.y1)) *
                     legendre_eval(b, rule.nodes[q]);
            }
            rhs.push_back(s);
        }
        const auto direct = lu_solve(SparseMatrix::from_triplets(nb * nb, t), rhs);
        const auto tensor = radau_x_minus(kSmooth2, c, k);
        for (int l = 0; l < nb * nb; ++l) {
            EXPECT_NEAR(tensor.coeffs[l], direct[l], 1e-12) << "k=" << k << " l=" << l;
        }
    }
}

TEST(Projection2D, VolumeAndEdgeConditions)
{
    const Rect c{0.1, 0.35, 0.6, 0.72};
    const auto rule = gauss_rule(20);
    for (int k = 1; k <= 3; ++k) {
        struct Case {
            LocalPoly2D p;
            bool x_dir;
            bool minus;
        };
        const Case cases[] = {{radau_x_minus(kSmooth2, c, k), true, true},
                              {radau_x_plus(kSmooth2, c, k), true, false},
                              {radau_y_minus(kSmooth2, c, k), false, true},
                              {radau_y_plus(kSmooth2, c, k), false, false}};
        for (const auto& cs : cases) {
            const auto pf = as_field(cs.p, c);
            const ScalarField2D e = [&](double x, double y) { return kSmooth2(x, y) - pf(x, y); };
            for (int b = 0; b <= k; ++b) {
                for (int a = 0; a <= k; ++a) {
                    if ((cs.x_dir && a == k) || (!cs.x_dir && b == k)) {
                        continue;
                    }
                    EXPECT_NEAR(moment_2d(e, c, a, b), 0.0, 1e-12);
                }
            }
            for (int m = 0; m <= k; ++m) {
                double s = 0.0;
                for (std::size_t q = 0; q < rule.size(); ++q) {
                    const double t = rule.nodes[q];
                    if (cs.x_dir) {
                        const double x = cs.minus ? c.x1 : c.x0;
                        s += rule.weights[q] * e(x, from_reference(t, c.y0, c.y1)) * legendre_eval(m, t);
                    } else {
                        const double y = cs.minus ? c.y1 : c.y0;
                        s += rule.weights[q] * e(from_reference(t, c.x0, c.x1), y) * legendre_eval(m, t);
                    }
                }
                EXPECT_NEAR(s, 0.0, 1e-12);
            }
        }
        const auto pl = as_field(l2_project_2d(kSmooth2, c, k), c);
        const ScalarField2D el = [&](double x, double y) { return kSmooth2(x, y) - pl(x, y); };
        for (int b = 0; b <= k; ++b) {
            for (int a = 0; a <= k; ++a) {
                EXPECT_NEAR(moment_2d(el, c, a, b), 0.0, 1e-12);
            }
        }
    }
}

TEST(Composite2D, RegionTables)
{
    const int n = 16;
    EXPECT_EQ(composite_u_rule(1, 1, n, n), LocalRule::L2);
    EXPECT_EQ(composite_u_rule(n, n, n, n), LocalRule::L2);
    EXPECT_EQ(composite_u_rule(8, 8, n, n), LocalRule::L2);
    EXPECT_EQ(composite_u_rule(2, 5, n, n), LocalRule::RadauXMinus);
    EXPECT_EQ(composite_u_rule(15, 12, n, n), LocalRule::RadauXMinus);
    EXPECT_EQ(composite_u_rule(n, 8, n, n), LocalRule::L2);
    EXPECT_EQ(composite_u_rule(5, 4, n, n), LocalRule::RadauYMinus);
    EXPECT_EQ(composite_u_rule(12, 13, n, n), LocalRule::RadauYMinus);
    EXPECT_EQ(composite_u_rule(8, n, n, n), LocalRule::L2);
    EXPECT_EQ(composite_px_rule(1, 7), LocalRule::L2);
    EXPECT_EQ(composite_px_rule(2, 1), LocalRule::RadauXPlus);
    EXPECT_EQ(composite_qy_rule(7, 1), LocalRule::L2);
    EXPECT_EQ(composite_qy_rule(1, 2), LocalRule::RadauYPlus);
}

TEST(Composite2D, AppliesRulesAndReproducesPolynomials)
{
    const auto mesh = test_util::mesh_2d(1e-6, 8);
    const int k = 2;
    const auto pu = composite_u_2d(kSmooth2, mesh, k);
    const Rect c = mesh.cell(2, 3);
    const auto expect = radau_x_minus(kSmooth2, c, k);
    for (int l = 0; l < 9; ++l) {
        EXPECT_DOUBLE_EQ(pu.cell_coeffs(1, 2)[l], expect.coeffs[l]);
    }
    const auto corner = l2_project_2d(kSmooth2, mesh.cell(1, 1), k);
    for (int l = 0; l < 9; ++l) {
        EXPECT_DOUBLE_EQ(pu.cell_coeffs(0, 0)[l], corner.coeffs[l]);
    }

    const ScalarField2D poly = [](double x, double y) { return x * x * y - 2.0 * x * y * y + 0.3; };
    EXPECT_LE(measure_interp_error(poly, composite_u_2d(poly, mesh, k), NormKind::Linf), 1e-13);
    EXPECT_LE(measure_interp_error(poly, composite_px_2d(poly, mesh, k), NormKind::Linf), 1e-13);
    EXPECT_LE(measure_interp_error(poly, composite_qy_2d(poly, mesh, k), NormKind::Linf), 1e-13);
}
