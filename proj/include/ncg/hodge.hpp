#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ncg/calculus.hpp"

namespace ncg::calculus {

/// Finite graded differential calculus with per-degree inner products.
/// Degrees 0..N; d[k] maps degree k to k+1 (the top map may be empty);
/// gram[k] is Hermitian positive definite.
struct GradedCalculus {
    std::vector<int> dims;
    std::vector<Eigen::MatrixXcd> d;
    std::vector<Eigen::MatrixXcd> gram;
};

GradedCalculus validated(GradedCalculus c);

/// Truncated universal calculus over A as a numeric GradedCalculus with the
/// supplied Gram matrices (identity when omitted).
GradedCalculus from_universal(const UniversalForms& forms,
                              const std::vector<Eigen::MatrixXcd>& grams = {});

struct HodgeReport {
    std::vector<double> diracEigenvalues;
    std::vector<double> laplaceEigenvalues;
    // per degree: columns span the subspace, coordinates in the original basis
    std::vector<Eigen::MatrixXcd> harmonic;
    std::vector<Eigen::MatrixXcd> exact;    // im d
    std::vector<Eigen::MatrixXcd> coexact;  // im d*
    double orthogonalityResidual = 0.0;     // worst Gram inner product across subspaces
    bool dimensionsAdditive = false;
    int totalDimension = 0;
};

/// Hodge decomposition Omega = ker(nabla) + im(d) + im(d*) for D = d + d*,
/// nabla = D^2, with d* the Gram adjoint of d. Eigen-solves run per degree.
HodgeReport hodge(const GradedCalculus& c);

}  // namespace ncg::calculus
