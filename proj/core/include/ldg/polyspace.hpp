#pragma once

#include <span>
#include <vector>

namespace ldg {

/// Highest polynomial degree supported by the discrete spaces.
inline constexpr int kMaxDegree = 8;

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Classical n-point Gauss-Legendre rule; exact for polynomials of degree 2n-1.
/// Throws std::invalid_argument for n < 1.
QuadratureRule gauss_rule(int n);

/// Value of the Legendre polynomial of the given degree at t (three-term recurrence).
double legendre_eval(int degree, double t);

/// Fills out[0..k] with P_0(t)..P_k(t). out.size() must be k+1.
void legendre_values(double t, std::span<double> out);

/// Fills out[0..k] with P_0'(t)..P_k'(t) (derivative in the reference variable).
void legendre_derivatives(double t, std::span<double> out);

/// Reference-cell polynomial in the Legendre basis: p(t) = sum_m c_m P_m(t).
struct LocalPoly {
    int degree = 0;
    std::vector<double> coeffs;

    [[nodiscard]] double operator()(double t) const;
};

/// Tensor-product reference polynomial: p(s,t) = sum_{a,b} c[a + (k+1) b] P_a(s) P_b(t).
struct LocalPoly2D {
    int degree = 0;
    std::vector<double> coeffs;

    [[nodiscard]] double operator()(double s, double t) const;
};

/// Discontinuous piecewise polynomial of degree k on a 1D partition.
///
/// Cells are 0-based internally; interface j (0..N) sits at breakpoint j.
/// trace_left(j) is the limit from the cell to the left of x_j, trace_right(j)
/// the limit from the cell to the right.
class PiecewisePoly1D {
public:
    PiecewisePoly1D() = default;
    PiecewisePoly1D(std::vector<double> breakpoints, int degree);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] int num_cells() const noexcept { return static_cast<int>(breaks_.size()) - 1; }
    [[nodiscard]] int dofs_per_cell() const noexcept { return degree_ + 1; }
    [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breaks_; }
    [[nodiscard]] double cell_left(int c) const { return breaks_[c]; }
    [[nodiscard]] double cell_right(int c) const { return breaks_[c + 1]; }
    [[nodiscard]] double cell_width(int c) const { return breaks_[c + 1] - breaks_[c]; }

    [[nodiscard]] std::span<double> cell_coeffs(int c);
    [[nodiscard]] std::span<const double> cell_coeffs(int c) const;
    [[nodiscard]] std::span<double> coeffs() noexcept { return coeffs_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }

    void set_cell(int c, const LocalPoly& p);
    [[nodiscard]] LocalPoly cell(int c) const;

    /// Cell containing x; x on an interior breakpoint belongs to the right cell.
    [[nodiscard]] int locate(double x) const;
    /// Evaluation on a given cell at the reference coordinate t in [-1,1].
    [[nodiscard]] double eval_ref(int c, double t) const;
    /// d/dx on a given cell at reference coordinate t.
    [[nodiscard]] double deriv_ref(int c, double t) const;
    [[nodiscard]] double eval(double x) const;

    [[nodiscard]] double trace_left(int j) const;
    [[nodiscard]] double trace_right(int j) const;
    /// [[v]]_j = v^-_j - v^+_j, with [[v]]_0 = -v^+_0 and [[v]]_N = v^-_N.
    [[nodiscard]] double jump(int j) const;

private:
    std::vector<double> breaks_;
    int degree_ = 0;
    std::vector<double> coeffs_;
};

/// Discontinuous tensor-product piecewise polynomial (Q_k per cell) on a
/// rectangular partition. Cell (i, j) with i the x-index; storage is
/// lexicographic with i fastest.
class PiecewisePoly2D {
public:
    PiecewisePoly2D() = default;
    PiecewisePoly2D(std::vector<double> breaks_x, std::vector<double> breaks_y, int degree);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] int nx() const noexcept { return static_cast<int>(bx_.size()) - 1; }
    [[nodiscard]] int ny() const noexcept { return static_cast<int>(by_.size()) - 1; }
    [[nodiscard]] int dofs_per_cell() const noexcept { return (degree_ + 1) * (degree_ + 1); }
    [[nodiscard]] int cell_index(int i, int j) const noexcept { return i + nx() * j; }
    [[nodiscard]] std::span<const double> breaks_x() const noexcept { return bx_; }
    [[nodiscard]] std::span<const double> breaks_y() const noexcept { return by_; }

    [[nodiscard]] std::span<double> cell_coeffs(int i, int j);
    [[nodiscard]] std::span<const double> cell_coeffs(int i, int j) const;
    [[nodiscard]] std::span<double> coeffs() noexcept { return coeffs_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }

    void set_cell(int i, int j, const LocalPoly2D& p);
    [[nodiscard]] LocalPoly2D cell(int i, int j) const;

    [[nodiscard]] double eval_ref(int i, int j, double s, double t) const;
    /// Partial derivatives in physical coordinates at reference point (s, t).
    [[nodiscard]] double dx_ref(int i, int j, double s, double t) const;
    [[nodiscard]] double dy_ref(int i, int j, double s, double t) const;
    [[nodiscard]] double eval(double x, double y) const;

private:
    std::vector<double> bx_;
    std::vector<double> by_;
    int degree_ = 0;
    std::vector<double> coeffs_;
};

/// Reference coordinate of x in [a, b].
inline double to_reference(double x, double a, double b) noexcept
{
    return (2.0 * x - a - b) / (b - a);
}

/// Physical coordinate of reference point t in [a, b].
inline double from_reference(double t, double a, double b) noexcept
{
    return 0.5 * (a + b) + 0.5 * (b - a) * t;
}

}  // namespace ldg
