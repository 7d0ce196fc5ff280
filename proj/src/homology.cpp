#include "ncg/homology.hpp"

#include <stdexcept>

namespace ncg::homology {

namespace {

std::size_t powst(std::size_t base, int e) {
    std::size_t r = 1;
    while (e-- > 0) {
        if (r > kSizeLimit) return r;
        r *= base;
    }
    return r;
}

void decodeTuple(std::size_t index, int d, int len, std::vector<int>& out) {
    out.resize(len);
    for (int k = len - 1; k >= 0; --k) {
        out[k] = static_cast<int>(index % d);
        index /= d;
    }
}

std::size_t encodeTuple(const std::vector<int>& t, int d) {
    std::size_t idx = 0;
    for (int v : t) idx = idx * d + v;
    return idx;
}

}  // namespace

std::size_t chain_dim(const alg::FiniteAlgebra& a, int n) {
    std::size_t dim = powst(a.dim(), n + 1);
    if (dim > kSizeLimit)
        throw SizeLimitError("chain space dimension d^(n+1) exceeds the 10^6 guard");
    return dim;
}

namespace {

// Shared assembly for b, b' and b_sigma: the boundary with faces 0..n-1 and,
// optionally, the wrap-around face (with or without sigma on the last slot).
ExactMatrix boundary_matrix(const alg::FiniteAlgebra& a, int n, bool wrap, bool twisted) {
    if (n < 1) throw std::invalid_argument("boundary: degree must be >= 1");
    const int d = a.dim();
    std::size_t cols = chain_dim(a, n);
    std::size_t rows = chain_dim(a, n - 1);
    ExactMatrix m(rows, cols);
    std::vector<int> t, s;
    for (std::size_t col = 0; col < cols; ++col) {
        decodeTuple(col, d, n + 1, t);
        for (int face = 0; face < n; ++face) {
            GaussianRational sign((face % 2 == 0) ? 1 : -1);
            s.clear();
            s.reserve(n);
            for (int k = 0; k < face; ++k) s.push_back(t[k]);
            s.push_back(0);  // placeholder for the merged slot
            for (int k = face + 2; k <= n; ++k) s.push_back(t[k]);
            for (int k = 0; k < d; ++k) {
                const GaussianRational& coeff = a.c(t[face], t[face + 1], k);
                if (coeff.isZero()) continue;
                s[face] = k;
                m(encodeTuple(s, d), col) += sign * coeff;
            }
        }
        if (wrap) {
            GaussianRational sign((n % 2 == 0) ? 1 : -1);
            s.assign(t.begin(), t.begin() + n);  // (placeholder, t1, ..., t_{n-1})
            if (!twisted) {
                for (int k = 0; k < d; ++k) {
                    const GaussianRational& coeff = a.c(t[n], t[0], k);
                    if (coeff.isZero()) continue;
                    s[0] = k;
                    m(encodeTuple(s, d), col) += sign * coeff;
                }
            } else {
                const ExactMatrix& sigma = a.automorphism();
                for (int r = 0; r < d; ++r) {
                    if (sigma(r, t[n]).isZero()) continue;
                    for (int k = 0; k < d; ++k) {
                        const GaussianRational& coeff = a.c(r, t[0], k);
                        if (coeff.isZero()) continue;
                        s[0] = k;
                        m(encodeTuple(s, d), col) += sign * sigma(r, t[n]) * coeff;
                    }
                }
            }
        }
    }
    return m;
}

}  // namespace

ExactMatrix hochschild_boundary(const alg::FiniteAlgebra& a, int n) {
    return boundary_matrix(a, n, /*wrap=*/true, /*twisted=*/false);
}

ExactMatrix bar_boundary(const alg::FiniteAlgebra& a, int n) {
    return boundary_matrix(a, n, /*wrap=*/false, /*twisted=*/false);
}

ExactMatrix twisted_boundary(const alg::FiniteAlgebra& a, int n) {
    return boundary_matrix(a, n, /*wrap=*/true, /*twisted=*/true);
}

ExactMatrix contracting_homotopy(const alg::FiniteAlgebra& a, int n) {
    const int d = a.dim();
    std::size_t cols = chain_dim(a, n);
    std::size_t rows = chain_dim(a, n + 1);
    ExactMatrix m(rows, cols);
    const auto& unit = a.unit();
    for (std::size_t col = 0; col < cols; ++col)
        for (int r = 0; r < d; ++r)
            if (!unit[r].isZero())
                m(static_cast<std::size_t>(r) * cols + col, col) += unit[r];
    return m;
}

ExactMatrix cyclic_operator(const alg::FiniteAlgebra& a, int n, bool twisted) {
    const int d = a.dim();
    std::size_t dim = chain_dim(a, n);
    ExactMatrix m(dim, dim);
    GaussianRational sign((n % 2 == 0) ? 1 : -1);
    std::vector<int> t, s;
    for (std::size_t col = 0; col < dim; ++col) {
        decodeTuple(col, d, n + 1, t);
        s.resize(n + 1);
        for (int k = 0; k < n; ++k) s[k + 1] = t[k];
        if (!twisted) {
            s[0] = t[n];
            m(encodeTuple(s, d), col) += sign;
        } else {
            const ExactMatrix& sigma = a.automorphism();
            for (int r = 0; r < d; ++r) {
                if (sigma(r, t[n]).isZero()) continue;
                s[0] = r;
                m(encodeTuple(s, d), col) += sign * sigma(r, t[n]);
            }
        }
    }
    return m;
}

ExactMatrix sigma_diagonal(const alg::FiniteAlgebra& a, int n) {
    chain_dim(a, n);  // size guard
    ExactMatrix m = a.automorphism();
    ExactMatrix out = m;
    for (int k = 0; k < n; ++k) out = out.kron(m);
    return out;
}

namespace {

struct QuotientData {
    std::vector<ExactMatrix> relation;  // R_n on C_n, n = 0..N+1 (empty matrix => none)
    std::vector<ExactMatrix> boundary;  // beta_n : C_n -> C_{n-1}, n = 1..N+1
};

std::vector<int> quotient_dims(const alg::FiniteAlgebra& a, int N, const QuotientData& q) {
    std::vector<std::size_t> rankR(N + 2, 0);
    std::vector<std::size_t> dimV(N + 2, 0);
    for (int n = 0; n <= N + 1; ++n) {
        std::size_t cd = chain_dim(a, n);
        rankR[n] = q.relation[n].cols() == 0 ? 0 : q.relation[n].rank();
        dimV[n] = cd - rankR[n];
    }
    std::vector<std::size_t> rbar(N + 2, 0);  // rank of induced boundary V_n -> V_{n-1}
    for (int n = 1; n <= N + 1; ++n) {
        const ExactMatrix& beta = q.boundary[n];
        if (q.relation[n - 1].cols() == 0) {
            rbar[n] = beta.rank();
        } else {
            // descent check: beta maps im(R_n) into im(R_{n-1})
            if (q.relation[n].cols() != 0) {
                ExactMatrix image = beta * q.relation[n];
                if (rankOfUnion(q.relation[n - 1], image) != rankR[n - 1])
                    throw std::logic_error("quotient boundary does not descend");
            }
            rbar[n] = rankOfUnion(beta, q.relation[n - 1]) - rankR[n - 1];
        }
    }
    std::vector<int> dims(N + 1);
    for (int n = 0; n <= N; ++n)
        dims[n] = static_cast<int>(dimV[n] - rbar[n] - rbar[n + 1]);
    return dims;
}

std::vector<int> subspace_dims(const alg::FiniteAlgebra& a, int N,
                               const std::vector<ExactMatrix>& subspaceOf,
                               const std::vector<ExactMatrix>& coboundary) {
    // subspaceOf[n]: matrix whose kernel is the invariant cochain subspace K_n
    // (empty => all of C^n); coboundary[n]: C^n -> C^{n+1}, n = 0..N.
    std::vector<ExactMatrix> kernel(N + 2);
    std::vector<std::size_t> kdim(N + 2, 0);
    for (int n = 0; n <= N + 1; ++n) {
        std::size_t cd = chain_dim(a, n);
        if (subspaceOf[n].cols() == 0) {
            kernel[n] = ExactMatrix::identity(cd);
        } else {
            kernel[n] = subspaceOf[n].nullspaceBasis();
        }
        kdim[n] = kernel[n].cols();
    }
    std::vector<std::size_t> rrest(N + 1, 0);  // rank of coboundary restricted to K_n
    for (int n = 0; n <= N; ++n) {
        ExactMatrix restricted = coboundary[n] * kernel[n];
        if (subspaceOf[n + 1].cols() != 0) {
            if (!(subspaceOf[n + 1] * restricted).isZero())
                throw std::logic_error("coboundary does not preserve the invariant subspace");
        }
        rrest[n] = restricted.rank();
    }
    std::vector<int> dims(N + 1);
    for (int n = 0; n <= N; ++n) {
        std::size_t below = (n == 0) ? 0 : rrest[n - 1];
        dims[n] = static_cast<int>(kdim[n] - rrest[n] - below);
    }
    return dims;
}

}  // namespace

std::vector<int> homology_dims(const alg::FiniteAlgebra& a, int N, Variant variant, Side side) {
    if (N < 0) throw std::invalid_argument("homology_dims: N must be >= 0");
    bool twisted = variant == Variant::TwistedHochschild || variant == Variant::TwistedCyclic;
    if (twisted && !a.hasAutomorphism())
        throw std::invalid_argument("homology_dims: twisted variant requires an automorphism");
    chain_dim(a, N + 1);  // size guard up front

    if (side == Side::Homology) {
        QuotientData q;
        q.relation.resize(N + 2);
        q.boundary.resize(N + 2);
        for (int n = 0; n <= N + 1; ++n) {
            switch (variant) {
                case Variant::Hochschild:
                    q.relation[n] = ExactMatrix();
                    break;
                case Variant::Cyclic:
                    q.relation[n] =
                        ExactMatrix::identity(chain_dim(a, n)) - cyclic_operator(a, n, false);
                    break;
                case Variant::TwistedHochschild:
                    q.relation[n] = ExactMatrix::identity(chain_dim(a, n)) - sigma_diagonal(a, n);
                    break;
                case Variant::TwistedCyclic:
                    q.relation[n] =
                        ExactMatrix::identity(chain_dim(a, n)) - cyclic_operator(a, n, true);
                    break;
            }
            if (n >= 1)
                q.boundary[n] = (variant == Variant::TwistedCyclic) ? twisted_boundary(a, n)
                                                                    : hochschild_boundary(a, n);
        }
        return quotient_dims(a, N, q);
    }

    // Cohomology: transposed operators on cochains.
    std::vector<ExactMatrix> subspaceOf(N + 2);
    std::vector<ExactMatrix> coboundary(N + 1);
    for (int n = 0; n <= N + 1; ++n) {
        switch (variant) {
            case Variant::Hochschild:
                subspaceOf[n] = ExactMatrix();
                break;
            case Variant::Cyclic:
                subspaceOf[n] = ExactMatrix::identity(chain_dim(a, n)) -
                                cyclic_operator(a, n, false).transpose();
                break;
            case Variant::TwistedHochschild:
                subspaceOf[n] = ExactMatrix::identity(chain_dim(a, n)) -
                                sigma_diagonal(a, n).transpose();
                break;
            case Variant::TwistedCyclic:
                subspaceOf[n] = ExactMatrix::identity(chain_dim(a, n)) -
                                cyclic_operator(a, n, true).transpose();
                break;
        }
        if (n <= N)
            coboundary[n] = (variant == Variant::Hochschild || variant == Variant::Cyclic)
                                ? hochschild_boundary(a, n + 1).transpose()
                                : twisted_boundary(a, n + 1).transpose();
    }
    return subspace_dims(a, N, subspaceOf, coboundary);
}

int commutator_quotient(const alg::FiniteAlgebra& a) {
    const int d = a.dim();
    ExactMatrix commutators(d, static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<GaussianRational> ij = a.basisProduct(i, j);
            std::vector<GaussianRational> ji = a.basisProduct(j, i);
            for (int k = 0; k < d; ++k)
                commutators(k, static_cast<std::size_t>(i) * d + j) = ij[k] - ji[k];
        }
    return d - static_cast<int>(commutators.rank());
}

}  // namespace ncg::homology
