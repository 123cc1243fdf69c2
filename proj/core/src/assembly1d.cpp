#include "ldg/assembly1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldg {

FluxConfig FluxConfig::paper(double eps, int N)
{
    const double s = std::sqrt(eps);
    return FluxConfig{s, s, 1.0 / s, 3 * N / 4};
}

FluxConfig FluxConfig::classic(double eps, int N)
{
    auto cfg = paper(eps, N);
    cfg.lambdaQ = 0.0;
    return cfg;
}

FluxConfig FluxConfig::make(FluxKind kind, double eps, int N)
{
    return kind == FluxKind::Paper ? paper(eps, N) : classic(eps, N);
}

namespace {

struct Term {
    int index;
    double weight;
};
using LinearForm = std::vector<Term>;

enum class Var { Q, U };

/// Trace of a variable from one cell: right end (t = +1) or left end (t = -1).
void add_trace(LinearForm& form, const UnknownLayout1D& lay, Var var, int cell, bool right_end, double scale)
{
    double sign = 1.0;
    for (int m = 0; m <= lay.degree; ++m) {
        const int idx = var == Var::Q ? lay.q_index(cell, m) : lay.u_index(cell, m);
        form.push_back({idx, scale * (right_end ? 1.0 : sign)});
        sign = -sign;
    }
}

LinearForm u_hat_form(const UnknownLayout1D& lay, int j, const FluxConfig& cfg)
{
    LinearForm form;
    const int n = lay.num_cells;
    if (j == 0 || j == n) {
        return form;
    }
    add_trace(form, lay, Var::U, j - 1, true, 1.0);
    if (j == cfg.special_interface && cfg.lambdaQ != 0.0) {
        // -lambdaQ (Q^- - Q^+)
        add_trace(form, lay, Var::Q, j - 1, true, -cfg.lambdaQ);
        add_trace(form, lay, Var::Q, j, false, cfg.lambdaQ);
    }
    return form;
}

LinearForm q_hat_form(const UnknownLayout1D& lay, int j, const FluxConfig& cfg)
{
    LinearForm form;
    const int n = lay.num_cells;
    if (j == 0) {
        add_trace(form, lay, Var::Q, 0, false, 1.0);
        add_trace(form, lay, Var::U, 0, false, cfg.lambda0);
    } else if (j == n) {
        add_trace(form, lay, Var::Q, n - 1, true, 1.0);
        add_trace(form, lay, Var::U, n - 1, true, -cfg.lambdaN);
    } else {
        add_trace(form, lay, Var::Q, j, false, 1.0);
    }
    return form;
}

/// S[n][m] = int_{-1}^{1} P_n P_m' dt
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

void validate_inputs(const ShishkinMesh1D& mesh, double eps, int k)
{
    if (k < 1 || k > kMaxDegree) {
        throw std::invalid_argument("LDG: degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    const double mesh_eps = mesh.params().eps;
    if (std::abs(mesh_eps - eps) > 1e-12 * std::max(mesh_eps, eps)) {
        throw std::invalid_argument("LDG: problem eps does not match the mesh eps");
    }
}

}  // namespace

double flux_u_hat(const LdgSolution1D& w, int j, const FluxConfig& cfg)
{
    const int n = w.U.num_cells();
    if (j < 0 || j > n) {
        throw std::out_of_range("flux_u_hat: interface index out of range");
    }
    if (j == 0 || j == n) {
        return 0.0;
    }
    double value = w.U.trace_left(j);
    if (j == cfg.special_interface && cfg.lambdaQ != 0.0) {
        value -= cfg.lambdaQ * w.Q.jump(j);
    }
    return value;
}

double flux_q_hat(const LdgSolution1D& w, int j, const FluxConfig& cfg)
{
    const int n = w.Q.num_cells();
    if (j < 0 || j > n) {
        throw std::out_of_range("flux_q_hat: interface index out of range");
    }
    if (j == 0) {
        return w.Q.trace_right(0) + cfg.lambda0 * w.U.trace_right(0);
    }
    if (j == n) {
        return w.Q.trace_left(n) - cfg.lambdaN * w.U.trace_left(n);
    }
    return w.Q.trace_right(j);
}

SparseSystem assemble(const ShishkinMesh1D& mesh, const ProblemSpec1D& problem, int k, const FluxConfig& cfg)
{
    validate_inputs(mesh, problem.eps, k);
    const int n = mesh.num_cells();
    const UnknownLayout1D lay{n, k};
    const int nb = k + 1;
    const double inv_eps = 1.0 / problem.eps;

    const QuadratureRule rule = gauss_rule(k + 2);
    const std::vector<double> stiff = stiffness_table(k, rule);

    std::vector<std::vector<double>> basis(rule.size(), std::vector<double>(nb));
    for (std::size_t q = 0; q < rule.size(); ++q) {
        legendre_values(rule.nodes[q], basis[q]);
    }

    std::vector<LinearForm> u_hat(n + 1);
    std::vector<LinearForm> q_hat(n + 1);
    for (int j = 0; j <= n; ++j) {
        u_hat[j] = u_hat_form(lay, j, cfg);
        q_hat[j] = q_hat_form(lay, j, cfg);
    }

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(n) * (4 * nb * nb + 8 * nb * nb));
    std::vector<double> rhs(lay.dimension(), 0.0);

    auto add_flux = [&](int row, const LinearForm& form, double scale) {
        for (const auto& t : form) {
            entries.push_back({row, t.index, scale * t.weight});
        }
    };

    for (int c = 0; c < n; ++c) {
        const double a = mesh.point(c);
        const double bnd = mesh.point(c + 1);
        const double h = bnd - a;

        std::vector<double> bvals(rule.size());
        std::vector<double> fvals(rule.size());
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double x = from_reference(rule.nodes[q], a, bnd);
            bvals[q] = problem.b(x);
            fvals[q] = problem.f(x);
        }

        for (int m = 0; m < nb; ++m) {
            const double left_sign = (m % 2 == 0) ? 1.0 : -1.0;

            // eps^{-1}<Q,r> + <U,r'> - U-hat_j r^-_j + U-hat_{j-1} r^+_{j-1} = 0
            const int row_q = lay.q_index(c, m);
            entries.push_back({row_q, lay.q_index(c, m), inv_eps * h / (2.0 * m + 1.0)});
            for (int nn = 0; nn < nb; ++nn) {
                entries.push_back({row_q, lay.u_index(c, nn), stiff[nn * nb + m]});
            }
            add_flux(row_q, u_hat[c + 1], -1.0);
            add_flux(row_q, u_hat[c], left_sign);

            // <Q,v'> + <bU,v> - Q-hat_j v^-_j + Q-hat_{j-1} v^+_{j-1} = <f,v>
            const int row_u = lay.u_index(c, m);
            for (int nn = 0; nn < nb; ++nn) {
                entries.push_back({row_u, lay.q_index(c, nn), stiff[nn * nb + m]});
            }
            for (int nn = 0; nn < nb; ++nn) {
                double mass = 0.0;
                for (std::size_t q = 0; q < rule.size(); ++q) {
                    mass += rule.weights[q] * bvals[q] * basis[q][nn] * basis[q][m];
                }
                entries.push_back({row_u, lay.u_index(c, nn), 0.5 * h * mass});
            }
            add_flux(row_u, q_hat[c + 1], -1.0);
            add_flux(row_u, q_hat[c], left_sign);

            double load = 0.0;
            for (std::size_t q = 0; q < rule.size(); ++q) {
                load += rule.weights[q] * fvals[q] * basis[q][m];
            }
            rhs[row_u] = 0.5 * h * load;
        }
    }

    return SparseSystem{SparseMatrix::from_triplets(lay.dimension(), entries), std::move(rhs), lay};
}

LdgSolution1D unpack(const ShishkinMesh1D& mesh, const UnknownLayout1D& layout, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != layout.dimension()) {
        throw std::invalid_argument("unpack: coefficient vector has the wrong length");
    }
    std::vector<double> br(mesh.points().begin(), mesh.points().end());
    LdgSolution1D w{PiecewisePoly1D(br, layout.degree), PiecewisePoly1D(br, layout.degree)};
    for (int c = 0; c < layout.num_cells; ++c) {
        auto qc = w.Q.cell_coeffs(c);
        auto uc = w.U.cell_coeffs(c);
        for (int m = 0; m <= layout.degree; ++m) {
            qc[m] = x[layout.q_index(c, m)];
            uc[m] = x[layout.u_index(c, m)];
        }
    }
    return w;
}

std::vector<double> pack(const LdgSolution1D& w)
{
    const UnknownLayout1D lay{w.U.num_cells(), w.U.degree()};
    std::vector<double> x(lay.dimension());
    for (int c = 0; c < lay.num_cells; ++c) {
        const auto qc = w.Q.cell_coeffs(c);
        const auto uc = w.U.cell_coeffs(c);
        for (int m = 0; m <= lay.degree; ++m) {
            x[lay.q_index(c, m)] = qc[m];
            x[lay.u_index(c, m)] = uc[m];
        }
    }
    return x;
}

LdgSolution1D solve_ldg_1d(const ShishkinMesh1D& mesh, const ProblemSpec1D& problem, int k,
                           const FluxConfig& cfg)
{
    const SparseSystem sys = assemble(mesh, problem, k, cfg);
    const std::vector<double> x = lu_solve(sys.matrix, sys.rhs);
    return unpack(mesh, sys.layout, x);
}

double bilinear_B(const LdgSolution1D& w, const LdgSolution1D& chi, double eps, const Function1D& b,
                  const FluxConfig& cfg)
{
    const PiecewisePoly1D& Q = w.Q;
    const PiecewisePoly1D& U = w.U;
    const PiecewisePoly1D& r = chi.Q;
    const PiecewisePoly1D& v = chi.U;
    const int n = U.num_cells();
    if (Q.num_cells() != n || r.num_cells() != n || v.num_cells() != n) {
        throw std::invalid_argument("bilinear_B: arguments live on different meshes");
    }
    const int k = std::max(U.degree(), v.degree());
    const QuadratureRule rule = gauss_rule(k + 3);

    double volume = 0.0;
    for (int c = 0; c < n; ++c) {
        const double a = U.cell_left(c);
        const double bb = U.cell_right(c);
        const double half_h = 0.5 * (bb - a);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double t = rule.nodes[q];
            const double x = from_reference(t, a, bb);
            const double Uq = U.eval_ref(c, t);
            const double Qq = Q.eval_ref(c, t);
            const double vq = v.eval_ref(c, t);
            const double rq = r.eval_ref(c, t);
            const double integrand = b(x) * Uq * vq + Qq * rq / eps + Uq * r.deriv_ref(c, t) +
                                     Qq * v.deriv_ref(c, t);
            volume += rule.weights[q] * half_h * integrand;
        }
    }

    double faces = 0.0;
    for (int j = 1; j <= n - 1; ++j) {
        faces -= U.trace_left(j) * r.jump(j);
    }
    for (int j = 0; j <= n - 1; ++j) {
        faces -= Q.trace_right(j) * v.jump(j);
    }
    faces -= Q.trace_left(n) * v.trace_left(n);

    double penalty = cfg.lambda0 * U.jump(0) * v.jump(0) + cfg.lambdaN * U.jump(n) * v.jump(n);
    const int s = cfg.special_interface;
    if (cfg.lambdaQ != 0.0 && s > 0 && s < n) {
        penalty += cfg.lambdaQ * Q.jump(s) * r.jump(s);
    }
    return volume + faces + penalty;
}

double residual_check(const SparseSystem& system, std::span<const double> x)
{
    return residual_inf(system.matrix, x, system.rhs);
}

}  // namespace ldg
