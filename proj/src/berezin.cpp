#include "ncg/berezin.hpp"

#include <cmath>
#include <stdexcept>

#include "ncg/parallel.hpp"

namespace ncg::berezin {

using Complex = std::complex<double>;

const Eigen::MatrixXcd& FuzzySphere::x(int k) const {
    switch (k) {
        case 1: return x1;
        case 2: return x2;
        case 3: return x3;
        default: throw std::invalid_argument("FuzzySphere::x: index must be 1..3");
    }
}

FuzzySphere fuzzy_sphere(int n) {
    FuzzySphere s;
    s.rep = su2::spin_rep(n);
    if (n == 1) {
        s.x1 = s.x2 = s.x3 = Eigen::MatrixXcd::Zero(1, 1);
        return s;
    }
    double scale = 1.0 / std::sqrt(double(n) * n - 1.0);
    s.x1 = scale * s.rep.J1;
    s.x2 = scale * s.rep.J2;
    s.x3 = scale * s.rep.J3;
    return s;
}

SampledFunction sample(const su2::SphereQuadrature& quad,
                       const std::function<Complex(double, double)>& f) {
    SampledFunction s;
    s.quad = quad;
    s.values.resize(quad.nodes.size());
    for (std::size_t k = 0; k < quad.nodes.size(); ++k)
        s.values(k) = f(quad.nodes[k].theta, quad.nodes[k].phi);
    return s;
}

CoherentFrame::CoherentFrame(const su2::SpinRep& rep) : rep_(rep) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.J2);
    v_ = es.eigenvectors();
    lambda_ = es.eigenvalues();
    auto [xi, p] = su2::highest_weight(rep);
    vxi_ = v_.adjoint() * xi;
    j3diag_.resize(rep.n);
    for (int k = 0; k < rep.n; ++k) j3diag_(k) = rep.J3(k, k).real();
}

Eigen::VectorXcd CoherentFrame::vector(double theta, double phi) const {
    // U_{s(theta,phi)} = Rz(phi) exp(-i theta J2 / 2) Rz(phi)^*, Rz diagonal.
    Eigen::VectorXcd w(rep_.n);
    for (int k = 0; k < rep_.n; ++k)
        w(k) = std::exp(Complex(0, -theta / 2.0 * lambda_(k))) * vxi_(k);
    Eigen::VectorXcd u = v_ * w;
    // xi is a J3 eigenvector, so Rz(phi)^* contributes only a phase; keep it
    // so that vector() is exactly U_{s(p)} xi.
    Complex backPhase = std::exp(Complex(0, phi / 2.0 * j3diag_(0)));
    for (int k = 0; k < rep_.n; ++k)
        u(k) *= backPhase * std::exp(Complex(0, -phi / 2.0 * j3diag_(k)));
    return u;
}

SampledFunction covariant_symbol(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                                 const su2::SphereQuadrature& quad) {
    if (T.rows() != rep.n || T.cols() != rep.n)
        throw std::invalid_argument("covariant_symbol: matrix dimension mismatch");
    CoherentFrame frame(rep);
    SampledFunction out;
    out.quad = quad;
    out.values.resize(quad.nodes.size());
    parallelFor(quad.nodes.size(), [&](std::size_t k) {
        Eigen::VectorXcd v = frame.vector(quad.nodes[k].theta, quad.nodes[k].phi);
        out.values(k) = v.dot(T * v);  // trace(T vv*)
    });
    return out;
}

Eigen::MatrixXcd contravariant_symbol(const SampledFunction& f, const su2::SpinRep& rep) {
    if (static_cast<std::size_t>(f.values.size()) != f.quad.nodes.size())
        throw std::invalid_argument("contravariant_symbol: sample/node count mismatch");
    CoherentFrame frame(rep);
    std::vector<Eigen::MatrixXcd> terms(f.quad.nodes.size());
    parallelFor(f.quad.nodes.size(), [&](std::size_t k) {
        Eigen::VectorXcd v = frame.vector(f.quad.nodes[k].theta, f.quad.nodes[k].phi);
        terms[k] = (double(rep.n) * f.quad.weights[k] * f.values(k)) * (v * v.adjoint());
    });
    return pairwiseSum(std::move(terms));
}

double berezin_kernel(const su2::SpinRep& rep, double theta) {
    CoherentFrame frame(rep);
    Eigen::VectorXcd v = frame.vector(theta, 0.0);
    return rep.n * std::norm(v(0));  // |<U xi, xi>|^2 = |(U xi)_0|^2
}

SampledFunction berezin_transform(const SampledFunction& f, const su2::SpinRep& rep) {
    Eigen::MatrixXcd t = contravariant_symbol(f, rep);
    return covariant_symbol(rep, t, f.quad);
}

}  // namespace ncg::berezin
