#include "ldg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ldg {

namespace {

struct Parts1D {
    double q_sq = 0.0;        // |q - Q|^2
    double u_sq = 0.0;        // |b^{1/2}(u - U)|^2
    double plain_u_sq = 0.0;  // |u - U|^2
    double linf_u = 0.0;
    double jump0 = 0.0;       // [[u - U]]_0
    double jumpN = 0.0;       // [[u - U]]_N
    double qjump = 0.0;       // [[q - Q]] at the special interface
};

Parts1D error_parts_1d(const LdgSolution1D& w, const ProblemSpec1D& pb, const FluxConfig& cfg, NormOptions opts)
{
    const int n = w.U.num_cells();
    const int k = w.U.degree();
    const QuadratureRule rule = gauss_rule(k + opts.extra_nodes);
    Parts1D parts;
    for (int c = 0; c < n; ++c) {
        const double a = w.U.cell_left(c);
        const double bb = w.U.cell_right(c);
        const double half_h = 0.5 * (bb - a);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double t = rule.nodes[q];
            const double x = from_reference(t, a, bb);
            const double eu = pb.u(x) - w.U.eval_ref(c, t);
            const double eq = pb.q(x) - w.Q.eval_ref(c, t);
            parts.q_sq += rule.weights[q] * half_h * eq * eq;
            parts.u_sq += rule.weights[q] * half_h * pb.b(x) * eu * eu;
            parts.plain_u_sq += rule.weights[q] * half_h * eu * eu;
            parts.linf_u = std::max(parts.linf_u, std::abs(eu));
        }
        parts.linf_u = std::max(parts.linf_u, std::abs(pb.u(a) - w.U.eval_ref(c, -1.0)));
        parts.linf_u = std::max(parts.linf_u, std::abs(pb.u(bb) - w.U.eval_ref(c, 1.0)));
    }
    const double x0 = w.U.cell_left(0);
    const double xN = w.U.cell_right(n - 1);
    parts.jump0 = -(pb.u(x0) - w.U.trace_right(0));
    parts.jumpN = pb.u(xN) - w.U.trace_left(n);
    const int s = cfg.special_interface;
    if (s > 0 && s < n) {
        const double xs = w.U.cell_right(s - 1);
        parts.qjump = (pb.q(xs) - w.Q.trace_left(s)) - (pb.q(xs) - w.Q.trace_right(s));
    }
    return parts;
}

double energy_from_parts(const Parts1D& p, double eps, const FluxConfig& cfg)
{
    return std::sqrt(p.q_sq / eps + p.u_sq + cfg.lambda0 * p.jump0 * p.jump0 + cfg.lambdaN * p.jumpN * p.jumpN +
                     cfg.lambdaQ * p.qjump * p.qjump);
}

double balanced_from_parts(const Parts1D& p, double eps)
{
    return std::sqrt(p.q_sq / (eps * std::sqrt(eps)) + p.u_sq + p.jump0 * p.jump0 + p.jumpN * p.jumpN +
                     p.qjump * p.qjump);
}

struct Parts2D {
    double p_sq = 0.0;
    double q_sq = 0.0;
    double u_sq = 0.0;         // |b^{1/2}(u - U)|^2
    double plain_u_sq = 0.0;
    double linf_u = 0.0;
    double boundary_sq = 0.0;  // jumps of u - U integrated over the four sides
    double pjump_sq = 0.0;     // [[p - P]]^2 along x = x_{special_x}
    double qjump_sq = 0.0;     // [[q - Q]]^2 along y = y_{special_y}
};

struct Exact2D {
    const Function2D& b;
    const Function2D& u;
    const Function2D& p;
    const Function2D& q;
};

Parts2D error_parts_2d(const LdgSolution2D& t, const Exact2D& ex, const FluxConfig2D& cfg, int nodes)
{
    const PiecewisePoly2D& U = t.U;
    const int nx = U.nx();
    const int ny = U.ny();
    const auto bx = U.breaks_x();
    const auto by = U.breaks_y();
    const QuadratureRule rule = gauss_rule(nodes);
    Parts2D parts;

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double quarter_area = 0.25 * (bx[i + 1] - bx[i]) * (by[j + 1] - by[j]);
            for (std::size_t qy = 0; qy < rule.size(); ++qy) {
                const double ty = rule.nodes[qy];
                const double y = from_reference(ty, by[j], by[j + 1]);
                for (std::size_t qx = 0; qx < rule.size(); ++qx) {
                    const double tx = rule.nodes[qx];
                    const double x = from_reference(tx, bx[i], bx[i + 1]);
                    const double w = rule.weights[qx] * rule.weights[qy] * quarter_area;
                    const double eu = ex.u(x, y) - U.eval_ref(i, j, tx, ty);
                    const double ep = ex.p(x, y) - t.P.eval_ref(i, j, tx, ty);
                    const double eq = ex.q(x, y) - t.Q.eval_ref(i, j, tx, ty);
                    parts.p_sq += w * ep * ep;
                    parts.q_sq += w * eq * eq;
                    parts.u_sq += w * ex.b(x, y) * eu * eu;
                    parts.plain_u_sq += w * eu * eu;
                    parts.linf_u = std::max(parts.linf_u, std::abs(eu));
                }
            }
            for (double cx : {-1.0, 1.0}) {
                for (double cy : {-1.0, 1.0}) {
                    const double x = from_reference(cx, bx[i], bx[i + 1]);
                    const double y = from_reference(cy, by[j], by[j + 1]);
                    parts.linf_u = std::max(parts.linf_u, std::abs(ex.u(x, y) - U.eval_ref(i, j, cx, cy)));
                }
            }
        }
    }

    // Vertical sides and the special vertical line.
    for (int j = 0; j < ny; ++j) {
        const double half_h = 0.5 * (by[j + 1] - by[j]);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double tt = rule.nodes[q];
            const double y = from_reference(tt, by[j], by[j + 1]);
            const double w = rule.weights[q] * half_h;
            const double j0 = -(ex.u(bx[0], y) - U.eval_ref(0, j, -1.0, tt));
            const double jN = ex.u(bx[nx], y) - U.eval_ref(nx - 1, j, 1.0, tt);
            parts.boundary_sq += w * (j0 * j0 + jN * jN);
            const int e = cfg.special_x;
            if (e > 0 && e < nx) {
                const double jp = t.P.eval_ref(e, j, -1.0, tt) - t.P.eval_ref(e - 1, j, 1.0, tt);
                parts.pjump_sq += w * jp * jp;
            }
        }
    }
    // Horizontal sides and the special horizontal line.
    for (int i = 0; i < nx; ++i) {
        const double half_h = 0.5 * (bx[i + 1] - bx[i]);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double tt = rule.nodes[q];
            const double x = from_reference(tt, bx[i], bx[i + 1]);
            const double w = rule.weights[q] * half_h;
            const double j0 = -(ex.u(x, by[0]) - U.eval_ref(i, 0, tt, -1.0));
            const double jN = ex.u(x, by[ny]) - U.eval_ref(i, ny - 1, tt, 1.0);
            parts.boundary_sq += w * (j0 * j0 + jN * jN);
            const int e = cfg.special_y;
            if (e > 0 && e < ny) {
                const double jq = t.Q.eval_ref(i, e, tt, -1.0) - t.Q.eval_ref(i, e - 1, tt, 1.0);
                parts.qjump_sq += w * jq * jq;
            }
        }
    }
    return parts;
}

double energy_sq_2d(const Parts2D& p, double eps, const FluxConfig2D& cfg)
{
    return (p.p_sq + p.q_sq) / eps + p.u_sq + cfg.lambda_boundary * p.boundary_sq + cfg.lambdaP * p.pjump_sq +
           cfg.lambdaQ * p.qjump_sq;
}

// Line penalties keep their 1/sqrt(eps) weights here, unlike the 1D balanced norm.
double balanced_sq_2d(const Parts2D& p, double eps)
{
    const double lam = 1.0 / std::sqrt(eps);
    return (p.p_sq + p.q_sq) / (eps * std::sqrt(eps)) + p.u_sq + p.boundary_sq + lam * (p.pjump_sq + p.qjump_sq);
}

Parts2D problem_parts_2d(const LdgSolution2D& t, const ProblemSpec2D& pb, const FluxConfig2D& cfg,
                         NormOptions opts)
{
    return error_parts_2d(t, Exact2D{pb.b, pb.u, pb.p, pb.q}, cfg, t.U.degree() + opts.extra_nodes);
}

}  // namespace

double energy_error_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                       NormOptions opts)
{
    return energy_from_parts(error_parts_1d(w, problem, cfg, opts), problem.eps, cfg);
}

double balanced_error_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                         NormOptions opts)
{
    return balanced_from_parts(error_parts_1d(w, problem, cfg, opts), problem.eps);
}

ErrorReport measure_errors_1d(const LdgSolution1D& w, const ProblemSpec1D& problem, const FluxConfig& cfg,
                              NormOptions opts)
{
    const Parts1D p = error_parts_1d(w, problem, cfg, opts);
    ErrorReport r;
    r.energy = energy_from_parts(p, problem.eps, cfg);
    r.balanced = balanced_from_parts(p, problem.eps);
    r.l2_u = std::sqrt(p.plain_u_sq);
    r.linf_u = p.linf_u;
    r.l2_q = std::sqrt(p.q_sq);
    return r;
}

double discrete_energy_sq(const LdgSolution1D& chi, double eps, const Function1D& b, const FluxConfig& cfg)
{
    const PiecewisePoly1D& r = chi.Q;
    const PiecewisePoly1D& v = chi.U;
    const int n = v.num_cells();
    const QuadratureRule rule = gauss_rule(v.degree() + 2);
    double sum = 0.0;
    for (int c = 0; c < n; ++c) {
        const double a = v.cell_left(c);
        const double bb = v.cell_right(c);
        const double half_h = 0.5 * (bb - a);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double t = rule.nodes[q];
            const double rv = r.eval_ref(c, t);
            const double vv = v.eval_ref(c, t);
            sum += rule.weights[q] * half_h * (rv * rv / eps + b(from_reference(t, a, bb)) * vv * vv);
        }
    }
    sum += cfg.lambda0 * v.jump(0) * v.jump(0) + cfg.lambdaN * v.jump(n) * v.jump(n);
    const int s = cfg.special_interface;
    if (s > 0 && s < n) {
        sum += cfg.lambdaQ * r.jump(s) * r.jump(s);
    }
    return sum;
}

double energy_error_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                       NormOptions opts)
{
    return std::sqrt(energy_sq_2d(problem_parts_2d(t, problem, cfg, opts), problem.eps, cfg));
}

double balanced_error_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                         NormOptions opts)
{
    return std::sqrt(balanced_sq_2d(problem_parts_2d(t, problem, cfg, opts), problem.eps));
}

ErrorReport measure_errors_2d(const LdgSolution2D& t, const ProblemSpec2D& problem, const FluxConfig2D& cfg,
                              NormOptions opts)
{
    const Parts2D p = problem_parts_2d(t, problem, cfg, opts);
    ErrorReport r;
    r.energy = std::sqrt(energy_sq_2d(p, problem.eps, cfg));
    r.balanced = std::sqrt(balanced_sq_2d(p, problem.eps));
    r.l2_u = std::sqrt(p.plain_u_sq);
    r.linf_u = p.linf_u;
    r.l2_q = std::sqrt(p.p_sq + p.q_sq);
    return r;
}

double discrete_energy_sq_2d(const LdgSolution2D& chi, double eps, const Function2D& b, const FluxConfig2D& cfg)
{
    const Function2D zero = [](double, double) { return 0.0; };
    const Parts2D p = error_parts_2d(chi, Exact2D{b, zero, zero, zero}, cfg, chi.U.degree() + 2);
    return energy_sq_2d(p, eps, cfg);
}

}  // namespace ldg
