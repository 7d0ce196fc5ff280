#pragma once

#include <cstddef>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/exact_matrix.hpp"

namespace ncg::homology {

/// Chain spaces are C_n = A^{tensor (n+1)} with row-major tensor-index basis.
/// Guard: d^(n+1) must stay at or below this cap.
inline constexpr std::size_t kSizeLimit = 1000000;

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t chain_dim(const alg::FiniteAlgebra& a, int n);

/// Hochschild boundary b: C_n -> C_{n-1} (bar part plus the wrap-around term).
ExactMatrix hochschild_boundary(const alg::FiniteAlgebra& a, int n);

/// Bar boundary b': C_n -> C_{n-1}.
ExactMatrix bar_boundary(const alg::FiniteAlgebra& a, int n);

/// s: C_n -> C_{n+1}, x -> 1 (x) x; satisfies b's + sb' = 1 exactly.
ExactMatrix contracting_homotopy(const alg::FiniteAlgebra& a, int n);

/// Signed cyclic rotation on C_n; twisted variant applies sigma to the slot
/// wrapped to the front.
ExactMatrix cyclic_operator(const alg::FiniteAlgebra& a, int n, bool twisted = false);

/// sigma^{tensor (n+1)} acting diagonally on C_n.
ExactMatrix sigma_diagonal(const alg::FiniteAlgebra& a, int n);

/// Twisted Hochschild boundary b_sigma = b' + (-1)^n (sigma(a_n) a_0 (x) ...).
ExactMatrix twisted_boundary(const alg::FiniteAlgebra& a, int n);

enum class Variant { Hochschild, Cyclic, TwistedHochschild, TwistedCyclic };
enum class Side { Homology, Cohomology };

/// Dimensions of the requested groups in degrees 0..N, by exact rank-nullity.
/// Cyclic homology is computed on the quotient C_n / im(1 - lambda); cyclic
/// cohomology on the fixed cochain subspace ker(1 - lambda^T). Twisted
/// Hochschild homology takes the quotient by im(1 - sigma^{tensor}) with the
/// ordinary boundary; the twisted cochain side uses b_sigma on the
/// sigma-invariant cochains.
std::vector<int> homology_dims(const alg::FiniteAlgebra& a, int N, Variant variant, Side side);

/// dim A/[A,A]; always equals homology_dims(A, 0, Hochschild, Homology)[0].
int commutator_quotient(const alg::FiniteAlgebra& a);

}  // namespace ncg::homology
