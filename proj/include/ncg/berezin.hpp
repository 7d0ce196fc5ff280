#pragma once

#include <Eigen/Dense>

#include <functional>

#include "ncg/su2.hpp"

namespace ncg::berezin {

/// Fuzzy sphere S^2_n: coordinate matrices x_i = J_i / sqrt(n^2-1); zero for n=1.
struct FuzzySphere {
    su2::SpinRep rep;
    Eigen::MatrixXcd x1, x2, x3;

    const Eigen::MatrixXcd& x(int k) const;
};

FuzzySphere fuzzy_sphere(int n);

/// Function on the sphere given by its values at quadrature nodes.
struct SampledFunction {
    su2::SphereQuadrature quad;
    Eigen::VectorXcd values;
};

SampledFunction sample(const su2::SphereQuadrature& quad,
                       const std::function<std::complex<double>(double, double)>& f);

/// Coherent states U_{s(p)} xi for a fixed rep, with the J2 eigendecomposition
/// cached so each node costs O(n^2).
class CoherentFrame {
  public:
    explicit CoherentFrame(const su2::SpinRep& rep);

    /// U_{s(theta,phi)} applied to the highest-weight vector.
    Eigen::VectorXcd vector(double theta, double phi) const;

    const su2::SpinRep& rep() const { return rep_; }

  private:
    su2::SpinRep rep_;
    Eigen::MatrixXcd v_;      // eigenvectors of J2
    Eigen::VectorXd lambda_;  // eigenvalues of J2
    Eigen::VectorXcd vxi_;    // V^* xi
    Eigen::VectorXd j3diag_;
};

/// Covariant symbol sigma_T(p) = trace(T alpha_{s(p)}(P)).
SampledFunction covariant_symbol(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                                 const su2::SphereQuadrature& quad);

/// Contravariant symbol n * integral f(p) alpha_{s(p)}(P) dmu(p).
Eigen::MatrixXcd contravariant_symbol(const SampledFunction& f, const su2::SpinRep& rep);

/// k_P(theta) = n |<U_{s(theta,0)} xi, xi>|^2; equals n cos^{2(n-1)}(theta/2).
double berezin_kernel(const su2::SpinRep& rep, double theta);

/// sigma(contravariant(f)): the Berezin transform, computed by composing the
/// two transforms. The kernel-convolution identity is a test-side cross-check.
SampledFunction berezin_transform(const SampledFunction& f, const su2::SpinRep& rep);

}  // namespace ncg::berezin
