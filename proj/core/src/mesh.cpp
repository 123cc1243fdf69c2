#include "ldg/mesh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ldg {

double MeshParams::tau() const
{
    return sigma * std::sqrt(eps) * std::log(static_cast<double>(N)) / beta;
}

void MeshParams::validate() const
{
    if (N < 4 || N % 4 != 0) {
        throw std::invalid_argument("Shishkin mesh: N must be a positive multiple of 4, got " +
                                    std::to_string(N));
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("Shishkin mesh: eps must lie in (0, 1)");
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("Shishkin mesh: beta must be positive");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("Shishkin mesh: sigma must be positive");
    }
    if (tau() > 0.25) {
        std::ostringstream msg;
        msg << "Shishkin mesh: transition point tau = " << tau() << " exceeds 1/4 (eps = " << eps
            << ", sigma = " << sigma << ", N = " << N << "); eps is too large for this mesh";
        throw std::invalid_argument(msg.str());
    }
}

ShishkinMesh1D::ShishkinMesh1D(const MeshParams& params) : params_(params)
{
    params_.validate();
    const int n = params_.N;
    tau_ = params_.tau();
    const double layer = 4.0 * params_.sigma * std::sqrt(params_.eps) / params_.beta *
                         std::log(static_cast<double>(n));

    points_.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double t = static_cast<double>(j) / n;
        if (4 * j <= n) {
            points_[j] = layer * t;
        } else if (4 * j <= 3 * n) {
            points_[j] = tau_ + 2.0 * (1.0 - 2.0 * tau_) * (t - 0.25);
        } else {
            points_[j] = 1.0 - layer * (1.0 - t);
        }
    }
    widths_.resize(n);
    for (int j = 1; j <= n; ++j) {
        widths_[j - 1] = points_[j] - points_[j - 1];
    }
}

ShishkinMesh1D build_shishkin_1d(const MeshParams& params)
{
    return ShishkinMesh1D(params);
}

TensorMesh2D::TensorMesh2D(ShishkinMesh1D mesh_x, ShishkinMesh1D mesh_y)
    : mx_(std::move(mesh_x)), my_(std::move(mesh_y))
{
}

Rect TensorMesh2D::cell(int i, int j) const
{
    if (i < 1 || i > nx() || j < 1 || j > ny()) {
        throw std::out_of_range("TensorMesh2D::cell: index out of range");
    }
    return Rect{mx_.point(i - 1), mx_.point(i), my_.point(j - 1), my_.point(j)};
}

TensorMesh2D build_tensor_2d(const ShishkinMesh1D& mx, const ShishkinMesh1D& my)
{
    return TensorMesh2D(mx, my);
}

}  // namespace ldg
