#pragma once

#include <span>
#include <vector>

namespace ldg {

/// Parameters of a piecewise-uniform Shishkin mesh on [0, 1].
struct MeshParams {
    double eps = 1e-8;   ///< perturbation parameter, 0 < eps < 1
    double beta = 1.0;   ///< layer-strength constant, b >= beta^2
    double sigma = 2.0;  ///< grading constant, normally k + 1
    int N = 32;          ///< cell count, a positive multiple of 4

    /// Transition point sigma * sqrt(eps) * ln(N) / beta.
    [[nodiscard]] double tau() const;

    /// Throws std::invalid_argument unless N is a positive multiple of 4,
    /// eps in (0,1), beta > 0, sigma > 0 and tau <= 1/4.
    void validate() const;
};

/// Shishkin mesh: N/4 uniform cells in [0, tau], N/2 in [tau, 1 - tau] and
/// N/4 in [1 - tau, 1]. Immutable after construction.
class ShishkinMesh1D {
public:
    explicit ShishkinMesh1D(const MeshParams& params);

    [[nodiscard]] const MeshParams& params() const noexcept { return params_; }
    [[nodiscard]] int num_cells() const noexcept { return params_.N; }
    [[nodiscard]] double tau() const noexcept { return tau_; }
    [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
    [[nodiscard]] std::span<const double> widths() const noexcept { return widths_; }
    [[nodiscard]] double point(int j) const { return points_[j]; }
    /// Width of the 1-based cell I_j = [x_{j-1}, x_j].
    [[nodiscard]] double width(int j) const { return widths_[j - 1]; }

private:
    MeshParams params_;
    double tau_;
    std::vector<double> points_;
    std::vector<double> widths_;
};

ShishkinMesh1D build_shishkin_1d(const MeshParams& params);

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
    double x0, x1, y0, y1;
    [[nodiscard]] double area() const noexcept { return (x1 - x0) * (y1 - y0); }
};

/// Tensor product of two 1D Shishkin meshes on the unit square.
class TensorMesh2D {
public:
    TensorMesh2D(ShishkinMesh1D mesh_x, ShishkinMesh1D mesh_y);

    [[nodiscard]] const ShishkinMesh1D& mesh_x() const noexcept { return mx_; }
    [[nodiscard]] const ShishkinMesh1D& mesh_y() const noexcept { return my_; }
    [[nodiscard]] int nx() const noexcept { return mx_.num_cells(); }
    [[nodiscard]] int ny() const noexcept { return my_.num_cells(); }
    [[nodiscard]] int num_cells() const noexcept { return nx() * ny(); }
    /// Cell K_ij = I_i x J_j with 1-based indices.
    [[nodiscard]] Rect cell(int i, int j) const;

private:
    ShishkinMesh1D mx_;
    ShishkinMesh1D my_;
};

TensorMesh2D build_tensor_2d(const ShishkinMesh1D& mx, const ShishkinMesh1D& my);

}  // namespace ldg
