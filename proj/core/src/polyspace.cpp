#include "ldg/polyspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ldg {

QuadratureRule gauss_rule(int n)
{
    if (n < 1) {
        throw std::invalid_argument("gauss_rule: node count must be >= 1, got " + std::to_string(n));
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton on P_n from the Tricomi initial guess; roots are symmetric so
    // only the first half is iterated.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = t;
            for (int d = 2; d <= n; ++d) {
                const double p2 = ((2.0 * d - 1.0) * t * p1 - (d - 1.0) * p0) / d;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? t : p1;
            const double pnm1 = (n == 1) ? 1.0 : p0;
            dp = n * (t * pn - pnm1) / (t * t - 1.0);
            const double dt = pn / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) {
                break;
            }
        }
        // Recompute derivative at the converged root for the weight.
        double p0 = 1.0;
        double p1 = t;
        for (int d = 2; d <= n; ++d) {
            const double p2 = ((2.0 * d - 1.0) * t * p1 - (d - 1.0) * p0) / d;
            p0 = p1;
            p1 = p2;
        }
        const double pn = (n == 1) ? t : p1;
        const double pnm1 = (n == 1) ? 1.0 : p0;
        dp = n * (t * pn - pnm1) / (t * t - 1.0);
        const double w = 2.0 / ((1.0 - t * t) * dp * dp);

        rule.nodes[i] = -t;
        rule.nodes[n - 1 - i] = t;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

double legendre_eval(int degree, double t)
{
    if (degree == 0) {
        return 1.0;
    }
    double p0 = 1.0;
    double p1 = t;
    for (int d = 2; d <= degree; ++d) {
        const double p2 = ((2.0 * d - 1.0) * t * p1 - (d - 1.0) * p0) / d;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

void legendre_values(double t, std::span<double> out)
{
    const int k = static_cast<int>(out.size()) - 1;
    if (k < 0) {
        return;
    }
    out[0] = 1.0;
    if (k >= 1) {
        out[1] = t;
    }
    for (int d = 2; d <= k; ++d) {
        out[d] = ((2.0 * d - 1.0) * t * out[d - 1] - (d - 1.0) * out[d - 2]) / d;
    }
}

void legendre_derivatives(double t, std::span<double> out)
{
    // P_d' = P_{d-2}' + (2d-1) P_{d-1}; avoids the 1/(1-t^2) singularity at the endpoints.
    const int k = static_cast<int>(out.size()) - 1;
    if (k < 0) {
        return;
    }
    std::vector<double> p(k + 1);
    legendre_values(t, p);
    out[0] = 0.0;
    if (k >= 1) {
        out[1] = 1.0;
    }
    for (int d = 2; d <= k; ++d) {
        out[d] = out[d - 2] + (2.0 * d - 1.0) * p[d - 1];
    }
}

double LocalPoly::operator()(double t) const
{
    double sum = 0.0;
    for (int m = 0; m <= degree; ++m) {
        sum += coeffs[m] * legendre_eval(m, t);
    }
    return sum;
}

double LocalPoly2D::operator()(double s, double t) const
{
    const int n = degree + 1;
    std::vector<double> ps(n);
    std::vector<double> pt(n);
    legendre_values(s, ps);
    legendre_values(t, pt);
    double sum = 0.0;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            sum += coeffs[a + n * b] * ps[a] * pt[b];
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------

PiecewisePoly1D::PiecewisePoly1D(std::vector<double> breakpoints, int degree)
    : breaks_(std::move(breakpoints)), degree_(degree)
{
    if (breaks_.size() < 2) {
        throw std::invalid_argument("PiecewisePoly1D: need at least one cell");
    }
    if (degree_ < 0 || degree_ > kMaxDegree) {
        throw std::invalid_argument("PiecewisePoly1D: degree must lie in [0, 8]");
    }
    coeffs_.assign(static_cast<std::size_t>(num_cells()) * dofs_per_cell(), 0.0);
}

std::span<double> PiecewisePoly1D::cell_coeffs(int c)
{
    return std::span<double>(coeffs_).subspan(static_cast<std::size_t>(c) * dofs_per_cell(), dofs_per_cell());
}

std::span<const double> PiecewisePoly1D::cell_coeffs(int c) const
{
    return std::span<const double>(coeffs_).subspan(static_cast<std::size_t>(c) * dofs_per_cell(),
                                                    dofs_per_cell());
}

void PiecewisePoly1D::set_cell(int c, const LocalPoly& p)
{
    if (p.degree != degree_) {
        throw std::invalid_argument("PiecewisePoly1D::set_cell: degree mismatch");
    }
    std::copy(p.coeffs.begin(), p.coeffs.end(), cell_coeffs(c).begin());
}

LocalPoly PiecewisePoly1D::cell(int c) const
{
    const auto cc = cell_coeffs(c);
    return LocalPoly{degree_, std::vector<double>(cc.begin(), cc.end())};
}

int PiecewisePoly1D::locate(double x) const
{
    if (x < breaks_.front() || x > breaks_.back()) {
        throw std::out_of_range("PiecewisePoly1D::locate: point outside the partition");
    }
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const int c = static_cast<int>(it - breaks_.begin()) - 1;
    return std::clamp(c, 0, num_cells() - 1);
}

double PiecewisePoly1D::eval_ref(int c, double t) const
{
    const auto cc = cell_coeffs(c);
    double p0 = 1.0;
    double p1 = t;
    double sum = cc[0];
    if (degree_ >= 1) {
        sum += cc[1] * t;
    }
    for (int d = 2; d <= degree_; ++d) {
        const double p2 = ((2.0 * d - 1.0) * t * p1 - (d - 1.0) * p0) / d;
        sum += cc[d] * p2;
        p0 = p1;
        p1 = p2;
    }
    return sum;
}

double PiecewisePoly1D::deriv_ref(int c, double t) const
{
    std::vector<double> dp(degree_ + 1);
    legendre_derivatives(t, dp);
    const auto cc = cell_coeffs(c);
    double sum = 0.0;
    for (int m = 0; m <= degree_; ++m) {
        sum += cc[m] * dp[m];
    }
    return sum * 2.0 / cell_width(c);
}

double PiecewisePoly1D::eval(double x) const
{
    const int c = locate(x);
    return eval_ref(c, to_reference(x, cell_left(c), cell_right(c)));
}

double PiecewisePoly1D::trace_left(int j) const
{
    if (j <= 0 || j > num_cells()) {
        throw std::out_of_range("trace_left: no cell to the left of interface " + std::to_string(j));
    }
    const auto cc = cell_coeffs(j - 1);
    double sum = 0.0;
    for (double v : cc) {
        sum += v;
    }
    return sum;
}

double PiecewisePoly1D::trace_right(int j) const
{
    if (j < 0 || j >= num_cells()) {
        throw std::out_of_range("trace_right: no cell to the right of interface " + std::to_string(j));
    }
    const auto cc = cell_coeffs(j);
    double sum = 0.0;
    double sign = 1.0;
    for (double v : cc) {
        sum += sign * v;
        sign = -sign;
    }
    return sum;
}

double PiecewisePoly1D::jump(int j) const
{
    if (j == 0) {
        return -trace_right(0);
    }
    if (j == num_cells()) {
        return trace_left(j);
    }
    return trace_left(j) - trace_right(j);
}

// ---------------------------------------------------------------------------

PiecewisePoly2D::PiecewisePoly2D(std::vector<double> breaks_x, std::vector<double> breaks_y, int degree)
    : bx_(std::move(breaks_x)), by_(std::move(breaks_y)), degree_(degree)
{
    if (bx_.size() < 2 || by_.size() < 2) {
        throw std::invalid_argument("PiecewisePoly2D: need at least one cell per direction");
    }
    if (degree_ < 0 || degree_ > kMaxDegree) {
        throw std::invalid_argument("PiecewisePoly2D: degree must lie in [0, 8]");
    }
    coeffs_.assign(static_cast<std::size_t>(nx()) * ny() * dofs_per_cell(), 0.0);
}

std::span<double> PiecewisePoly2D::cell_coeffs(int i, int j)
{
    return std::span<double>(coeffs_).subspan(static_cast<std::size_t>(cell_index(i, j)) * dofs_per_cell(),
                                              dofs_per_cell());
}

std::span<const double> PiecewisePoly2D::cell_coeffs(int i, int j) const
{
    return std::span<const double>(coeffs_).subspan(
        static_cast<std::size_t>(cell_index(i, j)) * dofs_per_cell(), dofs_per_cell());
}

void PiecewisePoly2D::set_cell(int i, int j, const LocalPoly2D& p)
{
    if (p.degree != degree_) {
        throw std::invalid_argument("PiecewisePoly2D::set_cell: degree mismatch");
    }
    std::copy(p.coeffs.begin(), p.coeffs.end(), cell_coeffs(i, j).begin());
}

LocalPoly2D PiecewisePoly2D::cell(int i, int j) const
{
    const auto cc = cell_coeffs(i, j);
    return LocalPoly2D{degree_, std::vector<double>(cc.begin(), cc.end())};
}

double PiecewisePoly2D::eval_ref(int i, int j, double s, double t) const
{
    const int n = degree_ + 1;
    double ps[kMaxDegree + 1];
    double pt[kMaxDegree + 1];
    legendre_values(s, std::span<double>(ps, n));
    legendre_values(t, std::span<double>(pt, n));
    const auto cc = cell_coeffs(i, j);
    double sum = 0.0;
    for (int b = 0; b < n; ++b) {
        double row = 0.0;
        for (int a = 0; a < n; ++a) {
            row += cc[a + n * b] * ps[a];
        }
        sum += row * pt[b];
    }
    return sum;
}

double PiecewisePoly2D::dx_ref(int i, int j, double s, double t) const
{
    const int n = degree_ + 1;
    double dps[kMaxDegree + 1];
    double pt[kMaxDegree + 1];
    legendre_derivatives(s, std::span<double>(dps, n));
    legendre_values(t, std::span<double>(pt, n));
    const auto cc = cell_coeffs(i, j);
    double sum = 0.0;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            sum += cc[a + n * b] * dps[a] * pt[b];
        }
    }
    return sum * 2.0 / (bx_[i + 1] - bx_[i]);
}

double PiecewisePoly2D::dy_ref(int i, int j, double s, double t) const
{
    const int n = degree_ + 1;
    double ps[kMaxDegree + 1];
    double dpt[kMaxDegree + 1];
    legendre_values(s, std::span<double>(ps, n));
    legendre_derivatives(t, std::span<double>(dpt, n));
    const auto cc = cell_coeffs(i, j);
    double sum = 0.0;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            sum += cc[a + n * b] * ps[a] * dpt[b];
        }
    }
    return sum * 2.0 / (by_[j + 1] - by_[j]);
}

double PiecewisePoly2D::eval(double x, double y) const
{
    auto locate = [](const std::vector<double>& br, double v) {
        if (v < br.front() || v > br.back()) {
            throw std::out_of_range("PiecewisePoly2D::eval: point outside the partition");
        }
        const auto it = std::upper_bound(br.begin(), br.end(), v);
        return std::clamp(static_cast<int>(it - br.begin()) - 1, 0, static_cast<int>(br.size()) - 2);
    };
    const int i = locate(bx_, x);
    const int j = locate(by_, y);
    return eval_ref(i, j, to_reference(x, bx_[i], bx_[i + 1]), to_reference(y, by_[j], by_[j + 1]));
}

}  // namespace ldg
