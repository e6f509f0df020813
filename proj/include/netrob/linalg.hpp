#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace netrob {

/// Row-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Default pivot tolerance used by numeric_rank: 1e-8 * max(rows, cols) * max|A|.
double default_rank_tolerance(const DenseMatrix& a);

/// Rank by Gaussian elimination with partial pivoting; pivots with magnitude
/// <= tolerance count as zero.
std::size_t numeric_rank(DenseMatrix a, std::optional<double> tolerance = std::nullopt);

struct SymmetricEigen {
    std::vector<double> values;  // descending
    DenseMatrix vectors;         // column k pairs with values[k]
};

/// Cyclic Jacobi rotations for a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below tol * ||A||_F.
SymmetricEigen jacobi_eigen(DenseMatrix a, double tol = 1e-14, int max_sweeps = 100);

}  // namespace netrob
