#pragma once

#include "ldg/mesh.hpp"
#include "ldg/polyspace.hpp"

#include <functional>

namespace ldg {

using ScalarField1D = std::function<double(double)>;
using ScalarField2D = std::function<double(double, double)>;

enum class NormKind { L2, Linf };

/// Gauss nodes used by every projection integral: degree + this many.
inline constexpr int kProjectionExtraNodes = 6;

/// Local L2 projection onto P_k([a, b]).
LocalPoly l2_project(const ScalarField1D& z, double a, double b, int k);

/// Gauss-Radau projection matching moments against P_{k-1} and the value at b.
/// Throws std::invalid_argument for k < 1.
LocalPoly gauss_radau_minus(const ScalarField1D& z, double a, double b, int k);
/// Gauss-Radau projection matching moments against P_{k-1} and the value at a.
LocalPoly gauss_radau_plus(const ScalarField1D& z, double a, double b, int k);

/// Cellwise L2 projection on the whole mesh.
PiecewisePoly1D l2_project_mesh(const ScalarField1D& z, const ShishkinMesh1D& mesh, int k);

/// P_N^- u: pi^- on cells 1..N/4 and 3N/4+1..N-1, pi on N/4+1..3N/4 and on N.
PiecewisePoly1D composite_u_1d(const ScalarField1D& u, const ShishkinMesh1D& mesh, int k);
/// P_N^+ q: pi on cell 1, pi^+ on cells 2..N.
PiecewisePoly1D composite_q_1d(const ScalarField1D& q, const ShishkinMesh1D& mesh, int k);

LocalPoly2D l2_project_2d(const ScalarField2D& z, const Rect& cell, int k);
/// Radau in x (trace matched on the right edge) tensored with L2 in y.
LocalPoly2D radau_x_minus(const ScalarField2D& z, const Rect& cell, int k);
/// Radau in x (trace matched on the left edge) tensored with L2 in y.
LocalPoly2D radau_x_plus(const ScalarField2D& z, const Rect& cell, int k);
/// Radau in y (trace matched on the top edge) tensored with L2 in x.
LocalPoly2D radau_y_minus(const ScalarField2D& z, const Rect& cell, int k);
/// Radau in y (trace matched on the bottom edge) tensored with L2 in x.
LocalPoly2D radau_y_plus(const ScalarField2D& z, const Rect& cell, int k);

PiecewisePoly2D l2_project_mesh_2d(const ScalarField2D& z, const TensorMesh2D& mesh, int k);

/// Which local rule the composite interpolants use on cell (i, j), 1-based.
enum class LocalRule { L2, RadauXMinus, RadauYMinus, RadauXPlus, RadauYPlus };
LocalRule composite_u_rule(int i, int j, int nx, int ny);
LocalRule composite_px_rule(int i, int j);
LocalRule composite_qy_rule(int i, int j);

/// P^- u
PiecewisePoly2D composite_u_2d(const ScalarField2D& u, const TensorMesh2D& mesh, int k);
/// P_x^+ p
PiecewisePoly2D composite_px_2d(const ScalarField2D& p, const TensorMesh2D& mesh, int k);
/// P_y^+ q
PiecewisePoly2D composite_qy_2d(const ScalarField2D& q, const TensorMesh2D& mesh, int k);

/// ||z - I||. L-infinity is sampled at the quadrature nodes and the cell corners/ends.
double measure_interp_error(const ScalarField1D& z, const PiecewisePoly1D& interp, NormKind norm,
                            int extra_nodes = 5);
double measure_interp_error(const ScalarField2D& z, const PiecewisePoly2D& interp, NormKind norm,
                            int extra_nodes = 5);

}  // namespace ldg
