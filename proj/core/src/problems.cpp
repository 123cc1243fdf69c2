#include "ldg/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldg {

namespace {

void check_eps(double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("problem: eps must lie in (0, 1)");
    }
}

/// Closed forms of the 1D layer solution and its derivatives. Each
/// exponential is evaluated directly so it underflows to zero inside the
/// interior instead of cancelling.
struct LayerProfile {
    double eps;
    double s;      // sqrt(eps)
    double denom;  // 1 - e^{-1/s}

    explicit LayerProfile(double e) : eps(e), s(std::sqrt(e)), denom(1.0 - std::exp(-1.0 / std::sqrt(e))) {}

    [[nodiscard]] double left(double x) const { return std::exp(-x / s); }
    [[nodiscard]] double right(double x) const { return std::exp(-(1.0 - x) / s); }

    [[nodiscard]] double u(double x) const
    {
        return (left(x) - right(x)) / denom - std::cos(std::numbers::pi * x);
    }
    [[nodiscard]] double du(double x) const
    {
        return -(left(x) + right(x)) / (s * denom) + std::numbers::pi * std::sin(std::numbers::pi * x);
    }
    [[nodiscard]] double d2u(double x) const
    {
        constexpr double pi2 = std::numbers::pi * std::numbers::pi;
        return (left(x) - right(x)) / (eps * denom) + pi2 * std::cos(std::numbers::pi * x);
    }
    /// -eps u'' + u collapses to the smooth part.
    [[nodiscard]] double f(double x) const
    {
        constexpr double pi2 = std::numbers::pi * std::numbers::pi;
        return -(1.0 + eps * pi2) * std::cos(std::numbers::pi * x);
    }
};

}  // namespace

ProblemSpec1D layer1d(double eps)
{
    check_eps(eps);
    const LayerProfile lp(eps);
    ProblemSpec1D p;
    p.name = "layer1d";
    p.eps = eps;
    p.beta = 1.0;
    p.b = [](double) { return 1.0; };
    p.f = [lp](double x) { return lp.f(x); };
    p.u = [lp](double x) { return lp.u(x); };
    p.q = [lp](double x) { return lp.eps * lp.du(x); };
    p.u_xx = [lp](double x) { return lp.d2u(x); };
    return p;
}

ProblemSpec2D layer2d(double eps)
{
    check_eps(eps);
    const LayerProfile lp(eps);
    ProblemSpec2D p;
    p.name = "layer2d";
    p.eps = eps;
    p.beta = 1.0;
    p.b = [](double, double) { return 2.0; };
    // -eps (u1'' v1 + u1 v1'') + 2 u1 v1 = f1(x) u1(y) + u1(x) f1(y)
    p.f = [lp](double x, double y) { return lp.f(x) * lp.u(y) + lp.u(x) * lp.f(y); };
    p.u = [lp](double x, double y) { return lp.u(x) * lp.u(y); };
    p.p = [lp](double x, double y) { return lp.eps * lp.du(x) * lp.u(y); };
    p.q = [lp](double x, double y) { return lp.eps * lp.u(x) * lp.du(y); };
    p.laplacian = [lp](double x, double y) { return lp.d2u(x) * lp.u(y) + lp.u(x) * lp.d2u(y); };
    return p;
}

ProblemSpec1D poly1d(double eps)
{
    check_eps(eps);
    ProblemSpec1D p;
    p.name = "poly1d";
    p.eps = eps;
    p.beta = 1.0;
    p.b = [](double) { return 1.0; };
    p.f = [eps](double x) { return 2.0 * eps + x - x * x; };
    p.u = [](double x) { return x * (1.0 - x); };
    p.q = [eps](double x) { return eps * (1.0 - 2.0 * x); };
    p.u_xx = [](double) { return -2.0; };
    return p;
}

ProblemSpec2D poly2d(double eps)
{
    check_eps(eps);
    ProblemSpec2D p;
    p.name = "poly2d";
    p.eps = eps;
    p.beta = 1.0;
    p.b = [](double, double) { return 2.0; };
    p.u = [](double x, double y) { return x * (1.0 - x) * y * (1.0 - y); };
    p.p = [eps](double x, double y) { return eps * (1.0 - 2.0 * x) * y * (1.0 - y); };
    p.q = [eps](double x, double y) { return eps * x * (1.0 - x) * (1.0 - 2.0 * y); };
    p.laplacian = [](double x, double y) { return -2.0 * y * (1.0 - y) - 2.0 * x * (1.0 - x); };
    p.f = [eps](double x, double y) {
        const double gx = x * (1.0 - x);
        const double gy = y * (1.0 - y);
        return 2.0 * eps * (gx + gy) + 2.0 * gx * gy;
    };
    return p;
}

ProblemSpec1D make_problem_1d(std::string_view name, double eps)
{
    if (name == "layer1d") {
        return layer1d(eps);
    }
    if (name == "poly1d") {
        return poly1d(eps);
    }
    throw std::invalid_argument("unknown 1D problem '" + std::string(name) + "'");
}

ProblemSpec2D make_problem_2d(std::string_view name, double eps)
{
    if (name == "layer2d") {
        return layer2d(eps);
    }
    if (name == "poly2d") {
        return poly2d(eps);
    }
    throw std::invalid_argument("unknown 2D problem '" + std::string(name) + "'");
}

std::vector<std::string> problem_names()
{
    return {"layer1d", "layer2d", "poly1d", "poly2d"};
}

}  // namespace ldg
