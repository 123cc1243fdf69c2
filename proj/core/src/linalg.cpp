#include "ldg/linalg.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

namespace ldg {

SparseMatrix SparseMatrix::from_triplets(int dimension, std::span<const Triplet> entries)
{
    if (dimension < 0) {
        throw std::invalid_argument("SparseMatrix: negative dimension");
    }
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= dimension || t.col < 0 || t.col >= dimension) {
            throw std::invalid_argument("SparseMatrix: entry index out of range");
        }
    }
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ta = entries[a];
        const auto& tb = entries[b];
        return ta.row != tb.row ? ta.row < tb.row : ta.col < tb.col;
    });

    SparseMatrix m;
    m.n_ = dimension;
    m.row_ptr_.assign(dimension + 1, 0);
    m.cols_.reserve(entries.size());
    m.values_.reserve(entries.size());
    int prev_row = -1;
    int prev_col = -1;
    for (std::size_t idx : order) {
        const auto& t = entries[idx];
        if (t.row == prev_row && t.col == prev_col) {
            m.values_.back() += t.value;
            continue;
        }
        m.cols_.push_back(t.col);
        m.values_.push_back(t.value);
        m.row_ptr_[t.row + 1] += 1;
        prev_row = t.row;
        prev_col = t.col;
    }
    std::partial_sum(m.row_ptr_.begin(), m.row_ptr_.end(), m.row_ptr_.begin());
    return m;
}

SparseMatrix SparseMatrix::identity(int dimension)
{
    std::vector<Triplet> t;
    t.reserve(dimension);
    for (int i = 0; i < dimension; ++i) {
        t.push_back({i, i, 1.0});
    }
    return from_triplets(dimension, t);
}

double SparseMatrix::at(int r, int c) const
{
    const auto begin = cols_.begin() + row_ptr_[r];
    const auto end = cols_.begin() + row_ptr_[r + 1];
    const auto it = std::lower_bound(begin, end, c);
    return (it != end && *it == c) ? values_[it - cols_.begin()] : 0.0;
}

std::vector<double> matvec(const SparseMatrix& a, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != a.dimension()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    const auto rp = a.row_offsets();
    const auto ci = a.column_indices();
    const auto v = a.values();
    std::vector<double> y(a.dimension(), 0.0);
    for (int r = 0; r < a.dimension(); ++r) {
        double sum = 0.0;
        for (int k = rp[r]; k < rp[r + 1]; ++k) {
            sum += v[k] * x[ci[k]];
        }
        y[r] = sum;
    }
    return y;
}

double residual_inf(const SparseMatrix& a, std::span<const double> x, std::span<const double> rhs)
{
    if (rhs.size() != x.size()) {
        throw std::invalid_argument("residual_inf: dimension mismatch");
    }
    const auto ax = matvec(a, x);
    double r = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        r = std::max(r, std::abs(ax[i] - rhs[i]));
    }
    return r;
}

namespace {

int trailing_index(const std::string& msg)
{
    static const std::regex number(R"((\d+)\s*$)");
    std::smatch m;
    if (std::regex_search(msg, m, number)) {
        return std::stoi(m[1].str());
    }
    return -1;
}

}  // namespace

std::vector<double> lu_solve(const SparseMatrix& a, std::span<const double> rhs)
{
    const int n = a.dimension();
    if (static_cast<int>(rhs.size()) != n) {
        throw std::invalid_argument("lu_solve: dimension mismatch");
    }
    const auto vals = a.values();
    if (!std::all_of(vals.begin(), vals.end(), [](double v) { return std::isfinite(v); }) ||
        !std::all_of(rhs.begin(), rhs.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument("lu_solve: non-finite matrix or right-hand side entry");
    }

    const auto rp = a.row_offsets();
    const auto ci = a.column_indices();
    std::vector<double> row_scale(n, 1.0);
    for (int r = 0; r < n; ++r) {
        double mx = 0.0;
        for (int k = rp[r]; k < rp[r + 1]; ++k) {
            mx = std::max(mx, std::abs(vals[k]));
        }
        if (mx == 0.0) {
            throw SingularMatrixError("lu_solve: row " + std::to_string(r) + " is empty", r);
        }
        row_scale[r] = 1.0 / mx;
    }

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(vals.size());
    for (int r = 0; r < n; ++r) {
        for (int k = rp[r]; k < rp[r + 1]; ++k) {
            trip.emplace_back(r, ci[k], vals[k] * row_scale[r]);
        }
    }
    Eigen::SparseMatrix<double> m(n, n);
    m.setFromTriplets(trip.begin(), trip.end());
    m.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(m);
    lu.factorize(m);
    if (lu.info() != Eigen::Success) {
        const std::string msg = lu.lastErrorMessage();
        throw SingularMatrixError("lu_solve: factorisation failed: " + msg, trailing_index(msg));
    }

    Eigen::VectorXd b(n);
    for (int r = 0; r < n; ++r) {
        b[r] = rhs[r] * row_scale[r];
    }
    Eigen::VectorXd x = lu.solve(b);
    if (lu.info() != Eigen::Success) {
        throw SingularMatrixError("lu_solve: back substitution failed", -1);
    }

    std::vector<double> out(x.data(), x.data() + n);
    double rhs_norm = 0.0;
    for (double v : rhs) {
        rhs_norm = std::max(rhs_norm, std::abs(v));
    }
    const double tol = 1e-10 * std::max(1.0, rhs_norm);
    if (residual_inf(a, out, rhs) > tol) {
        const auto ax = matvec(a, out);
        Eigen::VectorXd r(n);
        for (int i = 0; i < n; ++i) {
            r[i] = (rhs[i] - ax[i]) * row_scale[i];
        }
        const Eigen::VectorXd dx = lu.solve(r);
        for (int i = 0; i < n; ++i) {
            out[i] += dx[i];
        }
    }
    for (double v : out) {
        if (!std::isfinite(v)) {
            throw SingularMatrixError("lu_solve: solution is not finite", -1);
        }
    }
    return out;
}

}  // namespace ldg
