#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncg/exact_matrix.hpp"
#include "ncg/scalars.hpp"

namespace ncg::alg {

/// Finite-dimensional associative unital algebra over the Gaussian rationals,
/// given by structure constants e_i e_j = sum_k c_{ij}^k e_k, with an optional
/// algebra automorphism. Validated on construction: associativity, unit laws,
/// sigma invertible and multiplicative.
class FiniteAlgebra {
  public:
    FiniteAlgebra(int dim, std::vector<GaussianRational> structure,
                  std::vector<GaussianRational> unit,
                  std::optional<ExactMatrix> automorphism = std::nullopt);

    int dim() const { return dim_; }

    const GaussianRational& c(int i, int j, int k) const {
        return structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    const std::vector<GaussianRational>& unit() const { return unit_; }

    bool hasAutomorphism() const { return sigma_.has_value(); }
    const ExactMatrix& automorphism() const;

    /// Coordinates of (a * b) for coordinate vectors a, b.
    std::vector<GaussianRational> multiply(const std::vector<GaussianRational>& a,
                                           const std::vector<GaussianRational>& b) const;

    /// Coordinates of e_i e_j.
    std::vector<GaussianRational> basisProduct(int i, int j) const;

    std::vector<GaussianRational> applySigma(const std::vector<GaussianRational>& a) const;

    /// Same algebra expressed in the basis given by the columns of p.
    FiniteAlgebra changeBasis(const ExactMatrix& p) const;

  private:
    int dim_;
    std::vector<GaussianRational> structure_;
    std::vector<GaussianRational> unit_;
    std::optional<ExactMatrix> sigma_;

    void validate() const;
};

/// A = C (one-dimensional).
FiniteAlgebra complex_numbers();

/// Functions on k points: C^k with pointwise product.
FiniteAlgebra functions_on_points(int k);

/// Full matrix algebra M_m over the Gaussian rationals (dimension m^2),
/// basis = matrix units e_{rs} in row-major order.
FiniteAlgebra matrix_algebra(int m);

/// C^2 with the coordinate-swap automorphism attached.
FiniteAlgebra swap_algebra();

}  // namespace ncg::alg
