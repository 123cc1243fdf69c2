#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldg {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Square matrix in compressed-row storage. Column indices are sorted and
/// unique within each row.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Builds from (row, col, value) entries; duplicates are summed in the
    /// order given, so identical input yields bit-identical storage.
    static SparseMatrix from_triplets(int dimension, std::span<const Triplet> entries);
    static SparseMatrix identity(int dimension);

    [[nodiscard]] int dimension() const noexcept { return n_; }
    [[nodiscard]] std::size_t nonzeros() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const int> row_offsets() const noexcept { return row_ptr_; }
    [[nodiscard]] std::span<const int> column_indices() const noexcept { return cols_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// Entry (r, c), zero if not stored.
    [[nodiscard]] double at(int r, int c) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int> row_ptr_{0};
    std::vector<int> cols_;
    std::vector<double> values_;
};

/// Raised when factorisation hits a zero pivot. index() is the row/column
/// reported by the factorisation, or -1 when unknown.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, int index) : std::runtime_error(what), index_(index) {}
    [[nodiscard]] int index() const noexcept { return index_; }

private:
    int index_;
};

/// Assembled system A x = rhs together with its unknown-ordering descriptor.
template <class Layout>
struct LinearSystem {
    SparseMatrix matrix;
    std::vector<double> rhs;
    Layout layout;
};

/// y = A x. Throws std::invalid_argument on dimension mismatch.
std::vector<double> matvec(const SparseMatrix& a, std::span<const double> x);

/// max_i |(A x - rhs)_i|
double residual_inf(const SparseMatrix& a, std::span<const double> x, std::span<const double> rhs);

/// Direct sparse LU with partial pivoting. Rows are equilibrated before
/// factorisation; one step of iterative refinement is applied when the
/// residual exceeds 1e-10 * max(1, |rhs|_inf).
/// Throws SingularMatrixError or std::invalid_argument (non-finite input).
std::vector<double> lu_solve(const SparseMatrix& a, std::span<const double> rhs);

}  // namespace ldg
