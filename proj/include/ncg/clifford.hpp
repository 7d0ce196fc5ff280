#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ncg/exact_matrix.hpp"
#include "ncg/scalars.hpp"

namespace ncg::clifford {

/// Clifford algebra over a diagonal bilinear form: e_i^2 = -B(e_i,e_i),
/// e_i e_j = -e_j e_i. Basis: the 2^n square-free monomials as bitmasks
/// (bit i set = e_{i+1} present), multiplication by normal ordering with
/// sign counting. All scalars exact.
class CliffordAlgebra {
  public:
    CliffordAlgebra(int n, std::vector<Rational> form);

    int generators() const { return n_; }
    std::size_t dimension() const { return std::size_t(1) << n_; }
    const Rational& form(int i) const { return form_.at(i); }

    /// Product of two basis monomials: (coefficient, result monomial).
    std::pair<GaussianRational, std::uint32_t> monomialProduct(std::uint32_t a,
                                                               std::uint32_t b) const;

    using Element = std::map<std::uint32_t, GaussianRational>;

    Element multiply(const Element& x, const Element& y) const;

    /// Grading automorphism chi: monomial of length k -> (-1)^k monomial.
    Element grading(const Element& x) const;

  private:
    int n_;
    std::vector<Rational> form_;
};

CliffordAlgebra clifford(int n, std::vector<Rational> form);

/// Spin representation of Cl(C^{2k}): generators c(e_1)..c(e_{2k}) as exact
/// 2^k x 2^k matrices (tensor products of Pauli blocks times i), so that
/// c(e_i)^2 = -1 and all relations hold exactly. Odd generator counts are
/// rejected (Cl(C^{2k+1}) splits and is out of scope).
std::vector<ExactMatrix> spin_representation(int k);

/// Matrix of polynomials in the commuting symbols del_1..del_n.
struct SymbolOperator {
    int symbols = 0;
    std::size_t rows = 0, cols = 0;
    // entry(r,c): exponent-vector -> coefficient
    std::vector<std::map<std::vector<int>, GaussianRational>> entries;

    std::map<std::vector<int>, GaussianRational>& at(std::size_t r, std::size_t c) {
        return entries[r * cols + c];
    }
    const std::map<std::vector<int>, GaussianRational>& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }

    SymbolOperator multiply(const SymbolOperator& o) const;
    bool operator==(const SymbolOperator& o) const = default;
};

/// D = sum_i c(e_i) del_i and its square. Verifies the Clifford relations of
/// the supplied matrices first; D^2 must come out as -(sum del_i^2) * identity.
std::pair<SymbolOperator, SymbolOperator> dirac_square(const std::vector<ExactMatrix>& rep);

/// -(del_1^2 + ... + del_n^2) * identity on m components.
SymbolOperator minus_laplacian(int symbols, std::size_t m);

}  // namespace ncg::clifford
