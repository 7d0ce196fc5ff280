#include "ncg/algebra.hpp"

#include <stdexcept>

namespace ncg::alg {

FiniteAlgebra::FiniteAlgebra(int dim, std::vector<GaussianRational> structure,
                             std::vector<GaussianRational> unit,
                             std::optional<ExactMatrix> automorphism)
    : dim_(dim), structure_(std::move(structure)), unit_(std::move(unit)),
      sigma_(std::move(automorphism)) {
    if (dim_ < 1) throw std::invalid_argument("FiniteAlgebra: dimension must be positive");
    if (structure_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
        throw std::invalid_argument("FiniteAlgebra: structure constant count mismatch");
    if (unit_.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("FiniteAlgebra: unit vector length mismatch");
    validate();
}

const ExactMatrix& FiniteAlgebra::automorphism() const {
    if (!sigma_) throw std::logic_error("FiniteAlgebra: no automorphism attached");
    return *sigma_;
}

std::vector<GaussianRational> FiniteAlgebra::multiply(
    const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b) const {
    std::vector<GaussianRational> out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].isZero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].isZero()) continue;
            GaussianRational f = a[i] * b[j];
            for (int k = 0; k < dim_; ++k)
                if (!c(i, j, k).isZero()) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

std::vector<GaussianRational> FiniteAlgebra::basisProduct(int i, int j) const {
    std::vector<GaussianRational> out(dim_);
    for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

std::vector<GaussianRational> FiniteAlgebra::applySigma(
    const std::vector<GaussianRational>& a) const {
    return automorphism().apply(a);
}

void FiniteAlgebra::validate() const {
    // associativity on basis triples
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            std::vector<GaussianRational> ij = basisProduct(i, j);
            for (int k = 0; k < dim_; ++k) {
                std::vector<GaussianRational> ek(dim_);
                ek[k] = GaussianRational(1);
                std::vector<GaussianRational> lhs = multiply(ij, ek);
                std::vector<GaussianRational> ei(dim_);
                ei[i] = GaussianRational(1);
                std::vector<GaussianRational> rhs = multiply(ei, basisProduct(j, k));
                if (lhs != rhs)
                    throw std::invalid_argument("FiniteAlgebra: structure constants not associative");
            }
        }
    // unit laws
    for (int i = 0; i < dim_; ++i) {
        std::vector<GaussianRational> ei(dim_);
        ei[i] = GaussianRational(1);
        if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
            throw std::invalid_argument("FiniteAlgebra: unit laws fail");
    }
    if (sigma_) {
        if (sigma_->rows() != static_cast<std::size_t>(dim_) ||
            sigma_->cols() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("FiniteAlgebra: automorphism shape mismatch");
        if (!sigma_->isInvertible())
            throw std::invalid_argument("FiniteAlgebra: automorphism not invertible");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                std::vector<GaussianRational> lhs = sigma_->apply(basisProduct(i, j));
                std::vector<GaussianRational> si(dim_), sj(dim_);
                for (int r = 0; r < dim_; ++r) {
                    si[r] = (*sigma_)(r, i);
                    sj[r] = (*sigma_)(r, j);
                }
                if (lhs != multiply(si, sj))
                    throw std::invalid_argument("FiniteAlgebra: automorphism not multiplicative");
            }
    }
}

FiniteAlgebra FiniteAlgebra::changeBasis(const ExactMatrix& p) const {
    if (p.rows() != static_cast<std::size_t>(dim_) || p.cols() != static_cast<std::size_t>(dim_) ||
        !p.isInvertible())
        throw std::invalid_argument("changeBasis: invertible d x d matrix required");
    // f_i = sum_r p_{ri} e_r ; express f_i f_j in the f-basis.
    // Solve p * x = coords by elimination once: build p^{-1} via nullspace-free
    // route: augmented solve.
    ExactMatrix aug = p.hstack(ExactMatrix::identity(dim_));
    // Row reduce [p | I] -> [I | p^{-1}]
    // reuse rank machinery by a local elimination
    ExactMatrix inv(dim_, dim_);
    {
        ExactMatrix w = aug;
        // forward elimination with partial pivoting (exact)
        std::size_t row = 0;
        for (std::size_t col = 0; col < static_cast<std::size_t>(dim_); ++col) {
            std::size_t piv = row;
            while (piv < w.rows() && w(piv, col).isZero()) ++piv;
            if (piv == w.rows()) throw std::logic_error("changeBasis: singular despite rank check");
            if (piv != row)
                for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(row, j), w(piv, j));
            GaussianRational d = w(row, col);
            for (std::size_t j = 0; j < w.cols(); ++j) w(row, j) = w(row, j) / d;
            for (std::size_t r = 0; r < w.rows(); ++r) {
                if (r == row || w(r, col).isZero()) continue;
                GaussianRational f = w(r, col);
                for (std::size_t j = 0; j < w.cols(); ++j) w(r, j) -= f * w(row, j);
            }
            ++row;
        }
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) inv(i, j) = w(i, dim_ + j);
    }
    std::vector<GaussianRational> structure(static_cast<std::size_t>(dim_) * dim_ * dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            std::vector<GaussianRational> fi(dim_), fj(dim_);
            for (int r = 0; r < dim_; ++r) {
                fi[r] = p(r, i);
                fj[r] = p(r, j);
            }
            std::vector<GaussianRational> prod = inv.apply(multiply(fi, fj));
            for (int k = 0; k < dim_; ++k)
                structure[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = prod[k];
        }
    std::vector<GaussianRational> unitNew = inv.apply(unit_);
    std::optional<ExactMatrix> sigmaNew;
    if (sigma_) sigmaNew = inv * (*sigma_) * p;
    return FiniteAlgebra(dim_, std::move(structure), std::move(unitNew), std::move(sigmaNew));
}

FiniteAlgebra complex_numbers() {
    return FiniteAlgebra(1, {GaussianRational(1)}, {GaussianRational(1)});
}

FiniteAlgebra functions_on_points(int k) {
    if (k < 1) throw std::invalid_argument("functions_on_points: k must be positive");
    std::vector<GaussianRational> structure(static_cast<std::size_t>(k) * k * k);
    for (int i = 0; i < k; ++i)
        structure[(static_cast<std::size_t>(i) * k + i) * k + i] = GaussianRational(1);
    std::vector<GaussianRational> unit(k, GaussianRational(1));
    return FiniteAlgebra(k, std::move(structure), std::move(unit));
}

FiniteAlgebra matrix_algebra(int m) {
    if (m < 1) throw std::invalid_argument("matrix_algebra: m must be positive");
    int d = m * m;
    auto idx = [m](int r, int s) { return r * m + s; };
    std::vector<GaussianRational> structure(static_cast<std::size_t>(d) * d * d);
    // e_{rs} e_{tu} = delta_{st} e_{ru}
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int u = 0; u < m; ++u)
                structure[(static_cast<std::size_t>(idx(r, s)) * d + idx(s, u)) * d + idx(r, u)] =
                    GaussianRational(1);
    std::vector<GaussianRational> unit(d);
    for (int r = 0; r < m; ++r) unit[idx(r, r)] = GaussianRational(1);
    return FiniteAlgebra(d, std::move(structure), std::move(unit));
}

FiniteAlgebra swap_algebra() {
    FiniteAlgebra base = functions_on_points(2);
    ExactMatrix swap(2, 2);
    swap(0, 1) = GaussianRational(1);
    swap(1, 0) = GaussianRational(1);
    return FiniteAlgebra(2,
                         // same structure constants as C^2
                         [] {
                             std::vector<GaussianRational> s(8);
                             s[(0 * 2 + 0) * 2 + 0] = GaussianRational(1);
                             s[(1 * 2 + 1) * 2 + 1] = GaussianRational(1);
                             return s;
                         }(),
                         {GaussianRational(1), GaussianRational(1)}, swap);
}

}  // namespace ncg::alg
