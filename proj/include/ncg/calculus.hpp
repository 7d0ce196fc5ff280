#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/exact_matrix.hpp"

namespace ncg::calculus {

using ExactVector = std::vector<GaussianRational>;

/// Universal differential calculus over A, truncated at maxDegree. Degree-k
/// component is modelled as Atilde (x) A^{(x)k} with basis index
/// atilde * d^k + (row-major slot tuple); atilde in 0..d-1 is the e_i part,
/// atilde = d is the adjoined-unit part. Everything is exact.
class UniversalForms {
  public:
    UniversalForms(alg::FiniteAlgebra a, int maxDegree);

    const alg::FiniteAlgebra& algebra() const { return a_; }
    int maxDegree() const { return maxDegree_; }

    std::size_t dim(int degree) const;

    /// Differential matrix deg -> deg+1.
    const ExactMatrix& d(int degree) const;

    /// Left action of the algebra element x (coordinates) on a degree-k form.
    ExactVector leftAction(const ExactVector& x, int degree, const ExactVector& form) const;

    /// Right action of the algebra element y on a degree-k form (Leibniz
    /// expansion of (a_0 da_1 ... da_k) y).
    ExactVector rightAction(int degree, const ExactVector& form, const ExactVector& y) const;

    /// Product Omega^p x Omega^q -> Omega^{p+q}; throws on degree overflow.
    ExactVector product(int p, const ExactVector& u, int q, const ExactVector& v) const;

    /// Basis vector (atilde index, slot tuple index).
    ExactVector basis(int degree, std::size_t index) const;

  private:
    alg::FiniteAlgebra a_;
    int maxDegree_;
    std::vector<ExactMatrix> d_;
};

UniversalForms universal_forms(const alg::FiniteAlgebra& a, int maxDegree);

/// Basis of Der(A): solutions of X(e_i e_j) = X(e_i) e_j + e_i X(e_j),
/// computed by exact null-space elimination.
std::vector<ExactMatrix> derivations(const alg::FiniteAlgebra& a);

/// Complex-valued multilinear functional on A^{(n+1)}, coefficients in the
/// chain tensor basis.
struct MultilinearFunctional {
    int degree = 0;
    ExactVector coeffs;  // length d^{degree+1}
};

/// Closed graded trace (as a functional on top-degree universal forms) ->
/// cyclic cocycle phi(a_0,...,a_n) = integral of a_0 da_1 ... da_n.
/// Preconditions (closedness, graded-trace identity on spanning pairs) are
/// checked exactly; violations name the offending pair.
MultilinearFunctional cocycle_from_trace(const UniversalForms& forms, const ExactVector& integral,
                                         int n);

struct TraceData {
    UniversalForms forms;
    ExactVector integral;  // functional on degree-n forms
};

/// Cyclic cocycle -> the degree-n truncation of the universal calculus with
/// the induced closed graded trace. With sigma present, verifies the twisted
/// trace identity  integral(sigma(a) w) = integral(w a)  instead.
TraceData trace_from_cocycle(const MultilinearFunctional& psi, const alg::FiniteAlgebra& a,
                             const std::optional<ExactMatrix>& sigma = std::nullopt);

/// b_sigma phi = 0 and lambda_sigma phi = phi, exactly.
bool twisted_cocycle_check(const MultilinearFunctional& phi, const ExactMatrix& sigma,
                           const alg::FiniteAlgebra& a);

/// Ordinary cyclic-cocycle conditions (lambda phi = phi, b phi = 0), exactly.
bool cyclic_cocycle_check(const MultilinearFunctional& phi, const alg::FiniteAlgebra& a);

}  // namespace ncg::calculus
