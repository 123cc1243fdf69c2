#include "ldg/problems.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace ldg;

namespace {

void expect_residual_1d(const ProblemSpec1D& pb)
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double fmax = 0.0;
    std::vector<double> xs(100);
    for (double& x : xs) {
        x = dist(rng);
        fmax = std::max(fmax, std::abs(pb.f(x)));
    }
    for (double x : xs) {
        const double r = -pb.eps * pb.u_xx(x) + pb.b(x) * pb.u(x) - pb.f(x);
        EXPECT_LE(std::abs(r), 1e-8 * fmax) << pb.name << " x=" << x;
    }
}

void expect_residual_2d(const ProblemSpec2D& pb)
{
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<std::pair<double, double>> pts(100);
    double fmax = 0.0;
    for (auto& [x, y] : pts) {
        x = dist(rng);
        y = dist(rng);
        fmax = std::max(fmax, std::abs(pb.f(x, y)));
    }
    for (const auto& [x, y] : pts) {
        const double r = -pb.eps * pb.laplacian(x, y) + pb.b(x, y) * pb.u(x, y) - pb.f(x, y);
        EXPECT_LE(std::abs(r), 1e-8 * fmax) << pb.name;
    }
}

}  // namespace

TEST(Layer1D, BoundaryValuesAndMidpoint)
{
    for (double eps : {1e-2, 1e-4, 1e-8, 1e-12}) {
        const auto pb = layer1d(eps);
        EXPECT_NEAR(pb.u(0.0), 0.0, 1e-12);
        EXPECT_NEAR(pb.u(1.0), 0.0, 1e-12);
        EXPECT_NEAR(pb.u(0.5), 0.0, 1e-15);
    }
}

TEST(Layer1D, FluxAtOrigin)
{
    const auto pb = layer1d(1e-4);
    EXPECT_NEAR(pb.q(0.0), -0.01, 1e-12);
}

TEST(Layer1D, ResidualAndFiniteDifferences)
{
    for (double eps : {1e-2, 1e-4, 1e-8}) {
        const auto pb = layer1d(eps);
        expect_residual_1d(pb);
        const double h = 1e-6 * std::sqrt(eps);
        for (double x : {0.3 * std::sqrt(eps), 2.0 * std::sqrt(eps), 0.37, 1.0 - std::sqrt(eps)}) {
            const double du = (pb.u(x + h) - pb.u(x - h)) / (2 * h);
            EXPECT_NEAR(pb.q(x), eps * du, 1e-4 * std::max(std::abs(pb.q(x)), eps));
            const double dq = (pb.q(x + h) - pb.q(x - h)) / (2 * h);
            EXPECT_NEAR(eps * pb.u_xx(x), dq, 1e-4 * std::max(std::abs(dq), eps));
        }
    }
}

TEST(Layer1D, UnderflowSafe)
{
    const auto pb = layer1d(1e-12);
    for (double x : {0.0, 1e-9, 0.5, 1.0 - 1e-9, 1.0}) {
        EXPECT_TRUE(std::isfinite(pb.u(x)));
        EXPECT_TRUE(std::isfinite(pb.q(x)));
        EXPECT_TRUE(std::isfinite(pb.f(x)));
    }
}

TEST(Poly1D, ValuesAndResidual)
{
    const auto pb = poly1d(1e-3);
    EXPECT_DOUBLE_EQ(pb.u(0.0), 0.0);
    EXPECT_DOUBLE_EQ(pb.u(1.0), 0.0);
    EXPECT_DOUBLE_EQ(pb.q(0.5), 0.0);
    EXPECT_NEAR(pb.f(0.0), 2e-3, 1e-18);
    expect_residual_1d(pb);
}

TEST(Layer2D, BoundaryAndCentre)
{
    const auto pb = layer2d(1e-6);
    for (double s : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        EXPECT_NEAR(pb.u(0.0, s), 0.0, 1e-12);
        EXPECT_NEAR(pb.u(1.0, s), 0.0, 1e-12);
        EXPECT_NEAR(pb.u(s, 0.0), 0.0, 1e-12);
        EXPECT_NEAR(pb.u(s, 1.0), 0.0, 1e-12);
    }
    EXPECT_NEAR(pb.u(0.5, 0.5), 0.0, 1e-15);
    EXPECT_NEAR(pb.p(0.0, 0.5), 0.0, 1e-15);
    EXPECT_GE(pb.b(0.3, 0.7), 2.0 * pb.beta * pb.beta);
}

TEST(Layer2D, ResidualAndFiniteDifferences)
{
    for (double eps : {1e-2, 1e-4, 1e-8}) {
        const auto pb = layer2d(eps);
        expect_residual_2d(pb);
        const double h = 1e-6 * std::sqrt(eps);
        const double x = 1.5 * std::sqrt(eps);
        const double y = 0.3;
        EXPECT_NEAR(pb.p(x, y), eps * (pb.u(x + h, y) - pb.u(x - h, y)) / (2 * h), 1e-4 * std::abs(pb.p(x, y)));
        EXPECT_NEAR(pb.q(y, x), eps * (pb.u(y, x + h) - pb.u(y, x - h)) / (2 * h), 1e-4 * std::abs(pb.q(y, x)));
    }
}

TEST(Poly2D, ValuesAndResidual)
{
    const auto pb = poly2d(1e-2);
    EXPECT_DOUBLE_EQ(pb.u(0.0, 0.3), 0.0);
    EXPECT_DOUBLE_EQ(pb.u(0.3, 1.0), 0.0);
    expect_residual_2d(pb);
}

TEST(Problems, LookupByName)
{
    EXPECT_EQ(make_problem_1d("layer1d", 1e-4).name, "layer1d");
    EXPECT_EQ(make_problem_2d("poly2d", 1e-4).name, "poly2d");
    EXPECT_THROW(make_problem_1d("layer2d", 1e-4), std::invalid_argument);
    EXPECT_THROW(layer1d(1.5), std::invalid_argument);
    EXPECT_EQ(problem_names().size(), 4u);
}
