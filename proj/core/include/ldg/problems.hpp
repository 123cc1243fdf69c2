#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ldg {

using Function1D = std::function<double(double)>;
using Function2D = std::function<double(double, double)>;

/// -eps u'' + b u = f on (0,1), u(0) = u(1) = 0, with the exact solution and
/// its flux q = eps u'.
struct ProblemSpec1D {
    std::string name;
    double eps = 0.0;
    double beta = 1.0;
    Function1D b;
    Function1D f;
    Function1D u;
    Function1D q;
    Function1D u_xx;  ///< analytic second derivative, used by residual checks
};

/// -eps Lap u + b u = f on (0,1)^2, u = 0 on the boundary, with p = eps u_x
/// and q = eps u_y.
struct ProblemSpec2D {
    std::string name;
    double eps = 0.0;
    double beta = 1.0;
    Function2D b;
    Function2D f;
    Function2D u;
    Function2D p;
    Function2D q;
    Function2D laplacian;
};

/// Two-layer solution u = (e^{-x/sqrt(eps)} - e^{-(1-x)/sqrt(eps)}) / (1 - e^{-1/sqrt(eps)}) - cos(pi x)
/// with b = 1.
ProblemSpec1D layer1d(double eps);

/// u(x,y) = u1(x) u1(y) with u1 the 1D layer solution, b = 2.
ProblemSpec2D layer2d(double eps);

/// u = x(1-x), b = 1; lies in the discrete space for degree >= 2.
ProblemSpec1D poly1d(double eps);

/// u = x(1-x) y(1-y), b = 2.
ProblemSpec2D poly2d(double eps);

/// Lookup by CLI name ("layer1d", "poly1d"); throws std::invalid_argument otherwise.
ProblemSpec1D make_problem_1d(std::string_view name, double eps);
/// Lookup by CLI name ("layer2d", "poly2d").
ProblemSpec2D make_problem_2d(std::string_view name, double eps);

std::vector<std::string> problem_names();

}  // namespace ldg
