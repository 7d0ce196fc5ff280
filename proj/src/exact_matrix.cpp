#include "ncg/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ncg {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

bool ExactMatrix::isZero() const {
    for (const auto& x : data_)
        if (!x.isZero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in +");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in -");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = (*this)(i, k);
            if (a.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const GaussianRational& b = o(k, j);
                if (b.isZero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const GaussianRational& s) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ExactMatrix ExactMatrix::conjugateTranspose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    ExactMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const GaussianRational& a = (*this)(i, j);
            if (a.isZero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
        }
    return r;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("ExactMatrix: row mismatch in hstack");
    ExactMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

namespace {

// In-place row echelon. Returns pivot columns. Pivot choice favours small
// entries (limb count) to keep intermediate fractions from blowing up.
std::vector<std::size_t> echelon(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t bestBulk = 0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).isZero()) continue;
            std::size_t b = m(r, col).bulk();
            if (best == m.rows() || b < bestBulk) {
                best = r;
                bestBulk = b;
                if (b <= 2) break;  // unit-ish pivot, good enough
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
        GaussianRational inv = GaussianRational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).isZero()) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).isZero()) continue;
            GaussianRational f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).isZero()) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t ExactMatrix::rank() const {
    ExactMatrix work = *this;
    return echelon(work).size();
}

ExactMatrix ExactMatrix::nullspaceBasis() const {
    ExactMatrix work = *this;
    std::vector<std::size_t> pivots = echelon(work);
    std::vector<bool> isPivot(cols_, false);
    for (std::size_t p : pivots) isPivot[p] = true;
    std::size_t nfree = cols_ - pivots.size();
    ExactMatrix basis(cols_, nfree);
    std::size_t k = 0;
    for (std::size_t freeCol = 0; freeCol < cols_; ++freeCol) {
        if (isPivot[freeCol]) continue;
        basis(freeCol, k) = GaussianRational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -work(r, freeCol);
        ++k;
    }
    return basis;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("ExactMatrix: vector length mismatch");
    std::vector<GaussianRational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).isZero() && !v[j].isZero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Eigen::MatrixXcd ExactMatrix::toComplex() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).toComplex();
    return m;
}

std::size_t rankOfUnion(const ExactMatrix& a, const ExactMatrix& b) {
    return a.hstack(b).rank();
}

}  // namespace ncg
