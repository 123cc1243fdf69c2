#include "ldg/assembly2d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldg {

FluxConfig2D FluxConfig2D::paper(double eps, int nx, int ny)
{
    const double s = std::sqrt(eps);
    return FluxConfig2D{s, 1.0 / s, 1.0 / s, 3 * nx / 4, 3 * ny / 4};
}

FluxConfig2D FluxConfig2D::classic(double eps, int nx, int ny)
{
    auto cfg = paper(eps, nx, ny);
    cfg.lambdaP = 0.0;
    cfg.lambdaQ = 0.0;
    return cfg;
}

FluxConfig2D FluxConfig2D::make(FluxKind kind, double eps, int nx, int ny)
{
    return kind == FluxKind::Paper ? paper(eps, nx, ny) : classic(eps, nx, ny);
}

namespace {

struct Term {
    int index;
    double weight;
};
using LinearForm = std::vector<Term>;

enum class Var { P, Q, U };

int var_index(const UnknownLayout2D& lay, Var var, int i, int j, int a, int b)
{
    switch (var) {
    case Var::P:
        return lay.p_index(i, j, a, b);
    case Var::Q:
        return lay.q_index(i, j, a, b);
    case Var::U:
        break;
    }
    return lay.u_index(i, j, a, b);
}

/// Mode `beta` (in y) of the trace of a variable on a vertical edge of cell (i, j).
void add_vtrace(LinearForm& form, const UnknownLayout2D& lay, Var var, int i, int j, bool right_end, int beta,
                double scale)
{
    double sign = 1.0;
    for (int a = 0; a <= lay.degree; ++a) {
        form.push_back({var_index(lay, var, i, j, a, beta), scale * (right_end ? 1.0 : sign)});
        sign = -sign;
    }
}

/// Mode `alpha` (in x) of the trace on a horizontal edge of cell (i, j).
void add_htrace(LinearForm& form, const UnknownLayout2D& lay, Var var, int i, int j, bool top_end, int alpha,
                double scale)
{
    double sign = 1.0;
    for (int b = 0; b <= lay.degree; ++b) {
        form.push_back({var_index(lay, var, i, j, alpha, b), scale * (top_end ? 1.0 : sign)});
        sign = -sign;
    }
}

// Vertical line x = x_e, cell row j.
LinearForm u_hat_v(const UnknownLayout2D& lay, int e, int j, int beta, const FluxConfig2D& cfg)
{
    LinearForm form;
    if (e == 0 || e == lay.nx) {
        return form;
    }
    add_vtrace(form, lay, Var::U, e - 1, j, true, beta, 1.0);
    if (e == cfg.special_x && cfg.lambdaP != 0.0) {
        add_vtrace(form, lay, Var::P, e - 1, j, true, beta, -cfg.lambdaP);
        add_vtrace(form, lay, Var::P, e, j, false, beta, cfg.lambdaP);
    }
    return form;
}

LinearForm p_hat_v(const UnknownLayout2D& lay, int e, int j, int beta, const FluxConfig2D& cfg)
{
    LinearForm form;
    if (e == 0) {
        add_vtrace(form, lay, Var::P, 0, j, false, beta, 1.0);
        add_vtrace(form, lay, Var::U, 0, j, false, beta, cfg.lambda_boundary);
    } else if (e == lay.nx) {
        add_vtrace(form, lay, Var::P, e - 1, j, true, beta, 1.0);
        add_vtrace(form, lay, Var::U, e - 1, j, true, beta, -cfg.lambda_boundary);
    } else {
        add_vtrace(form, lay, Var::P, e, j, false, beta, 1.0);
    }
    return form;
}

// Horizontal line y = y_e, cell column i.
LinearForm u_hat_h(const UnknownLayout2D& lay, int i, int e, int alpha, const FluxConfig2D& cfg)
{
    LinearForm form;
    if (e == 0 || e == lay.ny) {
        return form;
    }
    add_htrace(form, lay, Var::U, i, e - 1, true, alpha, 1.0);
    if (e == cfg.special_y && cfg.lambdaQ != 0.0) {
        add_htrace(form, lay, Var::Q, i, e - 1, true, alpha, -cfg.lambdaQ);
        add_htrace(form, lay, Var::Q, i, e, false, alpha, cfg.lambdaQ);
    }
    return form;
}

LinearForm q_hat_h(const UnknownLayout2D& lay, int i, int e, int alpha, const FluxConfig2D& cfg)
{
    LinearForm form;
    if (e == 0) {
        add_htrace(form, lay, Var::Q, i, 0, false, alpha, 1.0);
        add_htrace(form, lay, Var::U, i, 0, false, alpha, cfg.lambda_boundary);
    } else if (e == lay.ny) {
        add_htrace(form, lay, Var::Q, i, e - 1, true, alpha, 1.0);
        add_htrace(form, lay, Var::U, i, e - 1, true, alpha, -cfg.lambda_boundary);
    } else {
        add_htrace(form, lay, Var::Q, i, e, false, alpha, 1.0);
    }
    return form;
}

std::vector<double> stiffness_table(int k, const QuadratureRule& rule)
{
    const int nb = k + 1;
    std::vector<double> s(nb * nb, 0.0);
    std::vector<double> p(nb);
    std::vector<double> dp(nb);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        legendre_values(rule.nodes[q], p);
        legendre_derivatives(rule.nodes[q], dp);
        for (int n = 0; n < nb; ++n) {
            for (int m = 0; m < nb; ++m) {
                s[n * nb + m] += rule.weights[q] * p[n] * dp[m];
            }
        }
    }
    return s;
}

void validate_inputs(const TensorMesh2D& mesh, double eps, int k)
{
    if (k < 1 || k > kMaxDegree) {
        throw std::invalid_argument("LDG2D: degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    for (const ShishkinMesh1D* m : {&mesh.mesh_x(), &mesh.mesh_y()}) {
        const double mesh_eps = m->params().eps;
        if (std::abs(mesh_eps - eps) > 1e-12 * std::max(mesh_eps, eps)) {
            throw std::invalid_argument("LDG2D: problem eps does not match the mesh eps");
        }
    }
}

std::vector<double> breaks_of(const ShishkinMesh1D& mesh)
{
    return {mesh.points().begin(), mesh.points().end()};
}

/// Jump across vertical interface e (0..nx) in cell row j at reference y-coordinate t.
double vjump(const PiecewisePoly2D& f, int e, int j, double t)
{
    const double left = e > 0 ? f.eval_ref(e - 1, j, 1.0, t) : 0.0;
    const double right = e < f.nx() ? f.eval_ref(e, j, -1.0, t) : 0.0;
    return left - right;
}

/// Jump across horizontal interface e (0..ny) in cell column i at reference x-coordinate s.
double hjump(const PiecewisePoly2D& f, int i, int e, double s)
{
    const double below = e > 0 ? f.eval_ref(i, e - 1, s, 1.0) : 0.0;
    const double above = e < f.ny() ? f.eval_ref(i, e, s, -1.0) : 0.0;
    return below - above;
}

}  // namespace

SparseSystem2D assemble2d(const TensorMesh2D& mesh, const ProblemSpec2D& problem, int k, const FluxConfig2D& cfg)
{
    validate_inputs(mesh, problem.eps, k);
    const int nx = mesh.nx();
    const int ny = mesh.ny();
    const UnknownLayout2D lay{nx, ny, k};
    const int nb = k + 1;
    const double inv_eps = 1.0 / problem.eps;

    const QuadratureRule rule = gauss_rule(k + 2);
    const std::size_t nq = rule.size();
    const std::vector<double> stiff = stiffness_table(k, rule);
    std::vector<std::vector<double>> basis(nq, std::vector<double>(nb));
    for (std::size_t q = 0; q < nq; ++q) {
        legendre_values(rule.nodes[q], basis[q]);
    }

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(nx) * ny * nb * nb * (3 + 10 * nb + nb * nb));
    std::vector<double> rhs(lay.dimension(), 0.0);

    auto add_flux = [&](int row, const LinearForm& form, double scale) {
        for (const auto& t : form) {
            entries.push_back({row, t.index, scale * t.weight});
        }
    };

    std::vector<double> bvals(nq * nq);
    std::vector<double> fvals(nq * nq);
    std::vector<double> mass(nb * nb * nb * nb);

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Rect cell = mesh.cell(i + 1, j + 1);
            const double hx = cell.x1 - cell.x0;
            const double hy = cell.y1 - cell.y0;
            const double quarter_area = 0.25 * hx * hy;

            for (std::size_t qy = 0; qy < nq; ++qy) {
                const double y = from_reference(rule.nodes[qy], cell.y0, cell.y1);
                for (std::size_t qx = 0; qx < nq; ++qx) {
                    const double x = from_reference(rule.nodes[qx], cell.x0, cell.x1);
                    bvals[qx + nq * qy] = problem.b(x, y);
                    fvals[qx + nq * qy] = problem.f(x, y);
                }
            }
            // mass[row_local * nb^2 + col_local] = (b phi_col, phi_row)
            for (int r = 0; r < nb * nb; ++r) {
                const int ra = r % nb;
                const int rb = r / nb;
                for (int c = 0; c < nb * nb; ++c) {
                    const int ca = c % nb;
                    const int cb = c / nb;
                    double s = 0.0;
                    for (std::size_t qy = 0; qy < nq; ++qy) {
                        for (std::size_t qx = 0; qx < nq; ++qx) {
                            s += rule.weights[qx] * rule.weights[qy] * bvals[qx + nq * qy] * basis[qx][ra] *
                                 basis[qy][rb] * basis[qx][ca] * basis[qy][cb];
                        }
                    }
                    mass[r * nb * nb + c] = quarter_area * s;
                }
            }

            for (int beta = 0; beta < nb; ++beta) {
                for (int alpha = 0; alpha < nb; ++alpha) {
                    const double sa = (alpha % 2 == 0) ? 1.0 : -1.0;
                    const double sb = (beta % 2 == 0) ? 1.0 : -1.0;
                    const double vy = hy / (2.0 * beta + 1.0);   // <P_beta, P_beta> on J_j
                    const double vx = hx / (2.0 * alpha + 1.0);  // <P_alpha, P_alpha> on I_i
                    const double cell_mass = inv_eps * vx * vy;

                    // eps^{-1}(P,s) + (U,s_x) - <U-hat, s^-> + <U-hat, s^+> = 0
                    const int row_p = lay.p_index(i, j, alpha, beta);
                    entries.push_back({row_p, row_p, cell_mass});
                    for (int a = 0; a < nb; ++a) {
                        entries.push_back({row_p, lay.u_index(i, j, a, beta), stiff[a * nb + alpha] * vy});
                    }
                    add_flux(row_p, u_hat_v(lay, i + 1, j, beta, cfg), -vy);
                    add_flux(row_p, u_hat_v(lay, i, j, beta, cfg), sa * vy);

                    // eps^{-1}(Q,r) + (U,r_y) - <U-hat, r^-> + <U-hat, r^+> = 0
                    const int row_q = lay.q_index(i, j, alpha, beta);
                    entries.push_back({row_q, row_q, cell_mass});
                    for (int b = 0; b < nb; ++b) {
                        entries.push_back({row_q, lay.u_index(i, j, alpha, b), stiff[b * nb + beta] * vx});
                    }
                    add_flux(row_q, u_hat_h(lay, i, j + 1, alpha, cfg), -vx);
                    add_flux(row_q, u_hat_h(lay, i, j, alpha, cfg), sb * vx);

                    // (P,v_x) + (Q,v_y) + (bU,v) - edge fluxes = (f,v)
                    const int row_u = lay.u_index(i, j, alpha, beta);
                    for (int a = 0; a < nb; ++a) {
                        entries.push_back({row_u, lay.p_index(i, j, a, beta), stiff[a * nb + alpha] * vy});
                    }
                    for (int b = 0; b < nb; ++b) {
                        entries.push_back({row_u, lay.q_index(i, j, alpha, b), stiff[b * nb + beta] * vx});
                    }
                    const int r = lay.local(alpha, beta);
                    for (int c = 0; c < nb * nb; ++c) {
                        entries.push_back({row_u, lay.u_index(i, j, c % nb, c / nb), mass[r * nb * nb + c]});
                    }
                    add_flux(row_u, p_hat_v(lay, i + 1, j, beta, cfg), -vy);
                    add_flux(row_u, p_hat_v(lay, i, j, beta, cfg), sa * vy);
                    add_flux(row_u, q_hat_h(lay, i, j + 1, alpha, cfg), -vx);
                    add_flux(row_u, q_hat_h(lay, i, j, alpha, cfg), sb * vx);

                    double load = 0.0;
                    for (std::size_t qy = 0; qy < nq; ++qy) {
                        for (std::size_t qx = 0; qx < nq; ++qx) {
                            load += rule.weights[qx] * rule.weights[qy] * fvals[qx + nq * qy] * basis[qx][alpha] *
                                    basis[qy][beta];
                        }
                    }
                    rhs[row_u] = quarter_area * load;
                }
            }
        }
    }

    return SparseSystem2D{SparseMatrix::from_triplets(lay.dimension(), entries), std::move(rhs), lay};
}

LdgSolution2D unpack2d(const TensorMesh2D& mesh, const UnknownLayout2D& layout, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != layout.dimension()) {
        throw std::invalid_argument("unpack2d: coefficient vector has the wrong length");
    }
    const auto bx = breaks_of(mesh.mesh_x());
    const auto by = breaks_of(mesh.mesh_y());
    const int k = layout.degree;
    LdgSolution2D t{PiecewisePoly2D(bx, by, k), PiecewisePoly2D(bx, by, k), PiecewisePoly2D(bx, by, k)};
    for (int j = 0; j < layout.ny; ++j) {
        for (int i = 0; i < layout.nx; ++i) {
            auto uc = t.U.cell_coeffs(i, j);
            auto pc = t.P.cell_coeffs(i, j);
            auto qc = t.Q.cell_coeffs(i, j);
            for (int b = 0; b <= k; ++b) {
                for (int a = 0; a <= k; ++a) {
                    const int l = layout.local(a, b);
                    uc[l] = x[layout.u_index(i, j, a, b)];
                    pc[l] = x[layout.p_index(i, j, a, b)];
                    qc[l] = x[layout.q_index(i, j, a, b)];
                }
            }
        }
    }
    return t;
}

std::vector<double> pack2d(const LdgSolution2D& t)
{
    const UnknownLayout2D lay{t.U.nx(), t.U.ny(), t.U.degree()};
    std::vector<double> x(lay.dimension());
    for (int j = 0; j < lay.ny; ++j) {
        for (int i = 0; i < lay.nx; ++i) {
            const auto uc = t.U.cell_coeffs(i, j);
            const auto pc = t.P.cell_coeffs(i, j);
            const auto qc = t.Q.cell_coeffs(i, j);
            for (int b = 0; b <= lay.degree; ++b) {
                for (int a = 0; a <= lay.degree; ++a) {
                    const int l = lay.local(a, b);
                    x[lay.u_index(i, j, a, b)] = uc[l];
                    x[lay.p_index(i, j, a, b)] = pc[l];
                    x[lay.q_index(i, j, a, b)] = qc[l];
                }
            }
        }
    }
    return x;
}

LdgSolution2D solve_ldg_2d(const TensorMesh2D& mesh, const ProblemSpec2D& problem, int k,
                           const FluxConfig2D& cfg)
{
    const SparseSystem2D sys = assemble2d(mesh, problem, k, cfg);
    const std::vector<double> x = lu_solve(sys.matrix, sys.rhs);
    return unpack2d(mesh, sys.layout, x);
}

double bilinear_B2d(const LdgSolution2D& t, const LdgSolution2D& z, double eps, const Function2D& b,
                    const FluxConfig2D& cfg)
{
    const PiecewisePoly2D& U = t.U;
    const PiecewisePoly2D& P = t.P;
    const PiecewisePoly2D& Q = t.Q;
    const PiecewisePoly2D& v = z.U;
    const PiecewisePoly2D& s = z.P;
    const PiecewisePoly2D& r = z.Q;
    const int nx = U.nx();
    const int ny = U.ny();
    for (const PiecewisePoly2D* f : {&P, &Q, &v, &s, &r}) {
        if (f->nx() != nx || f->ny() != ny) {
            throw std::invalid_argument("bilinear_B2d: arguments live on different meshes");
        }
    }
    const QuadratureRule rule = gauss_rule(std::max(U.degree(), v.degree()) + 3);
    const auto bx = U.breaks_x();
    const auto by = U.breaks_y();

    double volume = 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double quarter_area = 0.25 * (bx[i + 1] - bx[i]) * (by[j + 1] - by[j]);
            for (std::size_t qy = 0; qy < rule.size(); ++qy) {
                const double ty = rule.nodes[qy];
                const double y = from_reference(ty, by[j], by[j + 1]);
                for (std::size_t qx = 0; qx < rule.size(); ++qx) {
                    const double tx = rule.nodes[qx];
                    const double x = from_reference(tx, bx[i], bx[i + 1]);
                    const double Uq = U.eval_ref(i, j, tx, ty);
                    const double Pq = P.eval_ref(i, j, tx, ty);
                    const double Qq = Q.eval_ref(i, j, tx, ty);
                    const double integrand = b(x, y) * Uq * v.eval_ref(i, j, tx, ty) +
                                             (Pq * s.eval_ref(i, j, tx, ty) + Qq * r.eval_ref(i, j, tx, ty)) / eps +
                                             Uq * (s.dx_ref(i, j, tx, ty) + r.dy_ref(i, j, tx, ty)) +
                                             Pq * v.dx_ref(i, j, tx, ty) + Qq * v.dy_ref(i, j, tx, ty);
                    volume += rule.weights[qx] * rule.weights[qy] * quarter_area * integrand;
                }
            }
        }
    }

    double edges = 0.0;
    // Vertical lines x = x_e, integrated along each J_j.
    for (int j = 0; j < ny; ++j) {
        const double half_h = 0.5 * (by[j + 1] - by[j]);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double tt = rule.nodes[q];
            double sum = 0.0;
            for (int e = 1; e < nx; ++e) {
                sum -= U.eval_ref(e - 1, j, 1.0, tt) * vjump(s, e, j, tt);
            }
            for (int e = 0; e < nx; ++e) {
                sum -= P.eval_ref(e, j, -1.0, tt) * vjump(v, e, j, tt);
            }
            sum -= P.eval_ref(nx - 1, j, 1.0, tt) * v.eval_ref(nx - 1, j, 1.0, tt);
            for (int e : {0, nx}) {
                sum += cfg.lambda_boundary * vjump(U, e, j, tt) * vjump(v, e, j, tt);
            }
            if (cfg.lambdaP != 0.0 && cfg.special_x > 0 && cfg.special_x < nx) {
                sum += cfg.lambdaP * vjump(P, cfg.special_x, j, tt) * vjump(s, cfg.special_x, j, tt);
            }
            edges += rule.weights[q] * half_h * sum;
        }
    }
    // Horizontal lines y = y_e, integrated along each I_i.
    for (int i = 0; i < nx; ++i) {
        const double half_h = 0.5 * (bx[i + 1] - bx[i]);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double tt = rule.nodes[q];
            double sum = 0.0;
            for (int e = 1; e < ny; ++e) {
                sum -= U.eval_ref(i, e - 1, tt, 1.0) * hjump(r, i, e, tt);
            }
            for (int e = 0; e < ny; ++e) {
                sum -= Q.eval_ref(i, e, tt, -1.0) * hjump(v, i, e, tt);
            }
            sum -= Q.eval_ref(i, ny - 1, tt, 1.0) * v.eval_ref(i, ny - 1, tt, 1.0);
            for (int e : {0, ny}) {
                sum += cfg.lambda_boundary * hjump(U, i, e, tt) * hjump(v, i, e, tt);
            }
            if (cfg.lambdaQ != 0.0 && cfg.special_y > 0 && cfg.special_y < ny) {
                sum += cfg.lambdaQ * hjump(Q, i, cfg.special_y, tt) * hjump(r, i, cfg.special_y, tt);
            }
            edges += rule.weights[q] * half_h * sum;
        }
    }
    return volume + edges;
}

double residual_check2d(const SparseSystem2D& system, std::span<const double> x)
{
    return residual_inf(system.matrix, x, system.rhs);
}

}  // namespace ldg
