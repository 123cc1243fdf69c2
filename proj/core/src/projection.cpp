#include "ldg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ldg {

namespace {

enum class Kind1D { L2, RadauMinus, RadauPlus };

void check_degree(int k, Kind1D kind)
{
    if (k < 0 || k > kMaxDegree) {
        throw std::invalid_argument("projection: degree out of range");
    }
    if (kind != Kind1D::L2 && k < 1) {
        throw std::invalid_argument("projection: Gauss-Radau projection needs k >= 1");
    }
}

/// Legendre coefficients from samples of g at the rule nodes plus its value at
/// the matched endpoint (ignored for L2).
std::vector<double> project_samples(const QuadratureRule& rule, const std::vector<double>& vals, double end_val,
                                    int k, Kind1D kind)
{
    std::vector<double> c(k + 1, 0.0);
    std::vector<double> p(k + 1);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        legendre_values(rule.nodes[q], p);
        for (int m = 0; m <= k; ++m) {
            c[m] += rule.weights[q] * vals[q] * p[m];
        }
    }
    for (int m = 0; m <= k; ++m) {
        c[m] *= 0.5 * (2 * m + 1);
    }
    if (kind == Kind1D::L2) {
        return c;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int m = 0; m < k; ++m) {
        sum += (kind == Kind1D::RadauMinus ? 1.0 : sign) * c[m];
        sign = -sign;
    }
    // sign now equals (-1)^k
    c[k] = kind == Kind1D::RadauMinus ? end_val - sum : sign * (end_val - sum);
    return c;
}

LocalPoly project_1d(const ScalarField1D& z, double a, double b, int k, Kind1D kind)
{
    check_degree(k, kind);
    const QuadratureRule rule = gauss_rule(k + kProjectionExtraNodes);
    std::vector<double> vals(rule.size());
    for (std::size_t q = 0; q < rule.size(); ++q) {
        vals[q] = z(from_reference(rule.nodes[q], a, b));
    }
    double end_val = 0.0;
    if (kind == Kind1D::RadauMinus) {
        end_val = z(b);
    } else if (kind == Kind1D::RadauPlus) {
        end_val = z(a);
    }
    return LocalPoly{k, project_samples(rule, vals, end_val, k, kind)};
}

/// Tensor projection: `kx` acts in x, `ky` in y. At most one of them is Radau.
LocalPoly2D project_2d(const ScalarField2D& z, const Rect& cell, int k, Kind1D kx, Kind1D ky)
{
    check_degree(k, kx);
    check_degree(k, ky);
    const QuadratureRule rule = gauss_rule(k + kProjectionExtraNodes);
    const std::size_t nq = rule.size();
    const int nb = k + 1;

    // Step 1: project in y along each x-sample (nodes plus the x endpoint).
    std::vector<double> xs(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        xs[q] = from_reference(rule.nodes[q], cell.x0, cell.x1);
    }
    const double x_end = kx == Kind1D::RadauMinus ? cell.x1 : cell.x0;
    xs.push_back(x_end);

    const double y_end = ky == Kind1D::RadauMinus ? cell.y1 : cell.y0;
    std::vector<std::vector<double>> gy(xs.size());  // gy[x-sample][b]
    std::vector<double> col(nq);
    for (std::size_t s = 0; s < xs.size(); ++s) {
        for (std::size_t q = 0; q < nq; ++q) {
            col[q] = z(xs[s], from_reference(rule.nodes[q], cell.y0, cell.y1));
        }
        const double end = ky == Kind1D::L2 ? 0.0 : z(xs[s], y_end);
        gy[s] = project_samples(rule, col, end, k, ky);
    }

    // Step 2: project each y-coefficient in x.
    LocalPoly2D out{k, std::vector<double>(nb * nb, 0.0)};
    std::vector<double> row(nq);
    for (int b = 0; b < nb; ++b) {
        for (std::size_t q = 0; q < nq; ++q) {
            row[q] = gy[q][b];
        }
        const std::vector<double> cx = project_samples(rule, row, gy[nq][b], k, kx);
        for (int a = 0; a < nb; ++a) {
            out.coeffs[a + nb * b] = cx[a];
        }
    }
    return out;
}

std::vector<double> breaks_of(const ShishkinMesh1D& mesh)
{
    return {mesh.points().begin(), mesh.points().end()};
}

bool in_layer_strip(int i, int n)
{
    return i <= n / 4 || (i >= 3 * n / 4 + 1 && i <= n - 1);
}

bool in_middle(int i, int n)
{
    return i >= n / 4 + 1 && i <= 3 * n / 4;
}

LocalPoly2D apply_rule(LocalRule rule, const ScalarField2D& z, const Rect& cell, int k)
{
    switch (rule) {
    case LocalRule::RadauXMinus:
        return radau_x_minus(z, cell, k);
    case LocalRule::RadauXPlus:
        return radau_x_plus(z, cell, k);
    case LocalRule::RadauYMinus:
        return radau_y_minus(z, cell, k);
    case LocalRule::RadauYPlus:
        return radau_y_plus(z, cell, k);
    case LocalRule::L2:
        break;
    }
    return l2_project_2d(z, cell, k);
}

template <class RuleFn>
PiecewisePoly2D composite_2d(const ScalarField2D& z, const TensorMesh2D& mesh, int k, RuleFn rule_of)
{
    PiecewisePoly2D out(breaks_of(mesh.mesh_x()), breaks_of(mesh.mesh_y()), k);
    for (int j = 1; j <= mesh.ny(); ++j) {
        for (int i = 1; i <= mesh.nx(); ++i) {
            out.set_cell(i - 1, j - 1, apply_rule(rule_of(i, j), z, mesh.cell(i, j), k));
        }
    }
    return out;
}

}  // namespace

LocalPoly l2_project(const ScalarField1D& z, double a, double b, int k)
{
    return project_1d(z, a, b, k, Kind1D::L2);
}

LocalPoly gauss_radau_minus(const ScalarField1D& z, double a, double b, int k)
{
    return project_1d(z, a, b, k, Kind1D::RadauMinus);
}

LocalPoly gauss_radau_plus(const ScalarField1D& z, double a, double b, int k)
{
    return project_1d(z, a, b, k, Kind1D::RadauPlus);
}

PiecewisePoly1D l2_project_mesh(const ScalarField1D& z, const ShishkinMesh1D& mesh, int k)
{
    PiecewisePoly1D out(breaks_of(mesh), k);
    for (int c = 0; c < mesh.num_cells(); ++c) {
        out.set_cell(c, l2_project(z, mesh.point(c), mesh.point(c + 1), k));
    }
    return out;
}

PiecewisePoly1D composite_u_1d(const ScalarField1D& u, const ShishkinMesh1D& mesh, int k)
{
    const int n = mesh.num_cells();
    PiecewisePoly1D out(breaks_of(mesh), k);
    for (int j = 1; j <= n; ++j) {
        const double a = mesh.point(j - 1);
        const double b = mesh.point(j);
        out.set_cell(j - 1, in_layer_strip(j, n) ? gauss_radau_minus(u, a, b, k) : l2_project(u, a, b, k));
    }
    return out;
}

PiecewisePoly1D composite_q_1d(const ScalarField1D& q, const ShishkinMesh1D& mesh, int k)
{
    const int n = mesh.num_cells();
    PiecewisePoly1D out(breaks_of(mesh), k);
    for (int j = 1; j <= n; ++j) {
        const double a = mesh.point(j - 1);
        const double b = mesh.point(j);
        out.set_cell(j - 1, j == 1 ? l2_project(q, a, b, k) : gauss_radau_plus(q, a, b, k));
    }
    return out;
}

LocalPoly2D l2_project_2d(const ScalarField2D& z, const Rect& cell, int k)
{
    return project_2d(z, cell, k, Kind1D::L2, Kind1D::L2);
}

LocalPoly2D radau_x_minus(const ScalarField2D& z, const Rect& cell, int k)
{
    return project_2d(z, cell, k, Kind1D::RadauMinus, Kind1D::L2);
}

LocalPoly2D radau_x_plus(const ScalarField2D& z, const Rect& cell, int k)
{
    return project_2d(z, cell, k, Kind1D::RadauPlus, Kind1D::L2);
}

LocalPoly2D radau_y_minus(const ScalarField2D& z, const Rect& cell, int k)
{
    return project_2d(z, cell, k, Kind1D::L2, Kind1D::RadauMinus);
}

LocalPoly2D radau_y_plus(const ScalarField2D& z, const Rect& cell, int k)
{
    return project_2d(z, cell, k, Kind1D::L2, Kind1D::RadauPlus);
}

PiecewisePoly2D l2_project_mesh_2d(const ScalarField2D& z, const TensorMesh2D& mesh, int k)
{
    return composite_2d(z, mesh, k, [](int, int) { return LocalRule::L2; });
}

LocalRule composite_u_rule(int i, int j, int nx, int ny)
{
    if (in_layer_strip(i, nx) && in_middle(j, ny)) {
        return LocalRule::RadauXMinus;
    }
    if (in_middle(i, nx) && in_layer_strip(j, ny)) {
        return LocalRule::RadauYMinus;
    }
    return LocalRule::L2;
}

LocalRule composite_px_rule(int i, int /*j*/)
{
    return i == 1 ? LocalRule::L2 : LocalRule::RadauXPlus;
}

LocalRule composite_qy_rule(int /*i*/, int j)
{
    return j == 1 ? LocalRule::L2 : LocalRule::RadauYPlus;
}

PiecewisePoly2D composite_u_2d(const ScalarField2D& u, const TensorMesh2D& mesh, int k)
{
    const int nx = mesh.nx();
    const int ny = mesh.ny();
    return composite_2d(u, mesh, k, [nx, ny](int i, int j) { return composite_u_rule(i, j, nx, ny); });
}

PiecewisePoly2D composite_px_2d(const ScalarField2D& p, const TensorMesh2D& mesh, int k)
{
    return composite_2d(p, mesh, k, composite_px_rule);
}

PiecewisePoly2D composite_qy_2d(const ScalarField2D& q, const TensorMesh2D& mesh, int k)
{
    return composite_2d(q, mesh, k, composite_qy_rule);
}

double measure_interp_error(const ScalarField1D& z, const PiecewisePoly1D& interp, NormKind norm, int extra_nodes)
{
    const QuadratureRule rule = gauss_rule(interp.degree() + extra_nodes);
    double sq = 0.0;
    double mx = 0.0;
    for (int c = 0; c < interp.num_cells(); ++c) {
        const double a = interp.cell_left(c);
        const double b = interp.cell_right(c);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double t = rule.nodes[q];
            const double e = z(from_reference(t, a, b)) - interp.eval_ref(c, t);
            sq += rule.weights[q] * 0.5 * (b - a) * e * e;
            mx = std::max(mx, std::abs(e));
        }
        mx = std::max(mx, std::abs(z(a) - interp.eval_ref(c, -1.0)));
        mx = std::max(mx, std::abs(z(b) - interp.eval_ref(c, 1.0)));
    }
    return norm == NormKind::L2 ? std::sqrt(sq) : mx;
}

double measure_interp_error(const ScalarField2D& z, const PiecewisePoly2D& interp, NormKind norm, int extra_nodes)
{
    const QuadratureRule rule = gauss_rule(interp.degree() + extra_nodes);
    std::vector<double> pts(rule.nodes);
    std::vector<double> wts(rule.weights);
    const std::size_t nq = pts.size();
    if (norm == NormKind::Linf) {
        pts.push_back(-1.0);
        pts.push_back(1.0);
        wts.push_back(0.0);
        wts.push_back(0.0);
    }
    const auto bx = interp.breaks_x();
    const auto by = interp.breaks_y();
    double sq = 0.0;
    double mx = 0.0;
    for (int j = 0; j < interp.ny(); ++j) {
        for (int i = 0; i < interp.nx(); ++i) {
            const double area4 = 0.25 * (bx[i + 1] - bx[i]) * (by[j + 1] - by[j]);
            for (std::size_t qy = 0; qy < pts.size(); ++qy) {
                const double y = from_reference(pts[qy], by[j], by[j + 1]);
                for (std::size_t qx = 0; qx < pts.size(); ++qx) {
                    const double x = from_reference(pts[qx], bx[i], bx[i + 1]);
                    const double e = z(x, y) - interp.eval_ref(i, j, pts[qx], pts[qy]);
                    if (qx < nq && qy < nq) {
                        sq += wts[qx] * wts[qy] * area4 * e * e;
                    }
                    mx = std::max(mx, std::abs(e));
                }
            }
        }
    }
    return norm == NormKind::L2 ? std::sqrt(sq) : mx;
}

}  // namespace ldg
