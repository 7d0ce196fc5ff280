#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "ncg/scalars.hpp"

namespace ncg {

/// Dense matrix over the Gaussian rationals. Row-major storage. All rank and
/// null-space computations are exact Gaussian elimination; no tolerances.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    bool isZero() const;
    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const GaussianRational& s) const;
    ExactMatrix transpose() const;
    ExactMatrix conjugateTranspose() const;
    ExactMatrix kron(const ExactMatrix& o) const;

    /// Columns of `o` appended on the right.
    ExactMatrix hstack(const ExactMatrix& o) const;

    std::size_t rank() const;

    /// Basis of the right null space, returned as matrix columns.
    ExactMatrix nullspaceBasis() const;

    bool isInvertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Apply to a coordinate vector (length cols()).
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    Eigen::MatrixXcd toComplex() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// rank([A | B]) without materialising the stack twice at call sites.
std::size_t rankOfUnion(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace ncg
