#include "ncg/su2.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ncg/parallel.hpp"

namespace ncg::su2 {

using std::numbers::pi;
using Complex = std::complex<double>;

const Eigen::MatrixXcd& SpinRep::J(int k) const {
    switch (k) {
        case 1: return J1;
        case 2: return J2;
        case 3: return J3;
        default: throw std::invalid_argument("SpinRep::J: index must be 1..3");
    }
}

SpinRep spin_rep(int n) {
    if (n < 1) throw std::invalid_argument("spin_rep: dimension must be a positive integer");
    const double j = (n - 1) / 2.0;
    Eigen::MatrixXcd lp = Eigen::MatrixXcd::Zero(n, n);  // ladder L+
    Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double m = j - k;  // descending weights
        j3(k, k) = 2.0 * m;
        if (k >= 1) lp(k - 1, k) = std::sqrt((j - (m)) * (j + m + 1.0));  // L+ |m> -> |m+1>
    }
    Eigen::MatrixXcd lm = lp.adjoint();
    SpinRep rep;
    rep.n = n;
    rep.J1 = lp + lm;                     // 2 L1
    rep.J2 = Complex(0, -1) * (lp - lm);  // 2 L2
    rep.J3 = j3;
    return rep;
}

GroupPoint group_point(const Eigen::Vector3d& axis, double angle) {
    double nrm = axis.norm();
    if (nrm < 1e-14) throw std::invalid_argument("group_point: axis must be nonzero");
    GroupPoint g;
    g.axis = axis / nrm;
    // wrap into [0, 4pi) then fold sign: angle and axis flip together
    double a = std::fmod(angle, 4.0 * pi);
    if (a < 0) a += 4.0 * pi;
    if (a > 2.0 * pi) {
        a = 4.0 * pi - a;
        g.axis = -g.axis;
    }
    g.angle = a;
    if (g.angle == 0.0 || g.angle == 2.0 * pi) g.axis = Eigen::Vector3d(0, 0, 1);
    return g;
}

GroupPoint group_identity() { return GroupPoint{}; }

Eigen::Vector4d quaternion(const GroupPoint& g) {
    Eigen::Vector4d q;
    q(0) = std::cos(g.angle / 2.0);
    q.tail<3>() = std::sin(g.angle / 2.0) * g.axis;
    return q;
}

namespace {

GroupPoint fromQuaternion(double w, Eigen::Vector3d v) {
    double s = v.norm();
    GroupPoint g;
    if (s < 1e-15) {
        g.axis = Eigen::Vector3d(0, 0, 1);
        g.angle = (w >= 0) ? 0.0 : 2.0 * pi;
        return g;
    }
    g.axis = v / s;
    g.angle = 2.0 * std::atan2(s, w);  // in (0, 2pi)
    return g;
}

}  // namespace

GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b) {
    Eigen::Vector4d qa = quaternion(a), qb = quaternion(b);
    double w = qa(0) * qb(0) - qa.tail<3>().dot(qb.tail<3>());
    Eigen::Vector3d v =
        qa(0) * qb.tail<3>() + qb(0) * qa.tail<3>() + qa.tail<3>().cross(qb.tail<3>());
    return fromQuaternion(w, v);
}

GroupPoint group_inverse(const GroupPoint& g) {
    Eigen::Vector4d q = quaternion(g);
    return fromQuaternion(q(0), -q.tail<3>().eval());
}

Eigen::MatrixXcd unitary(const SpinRep& rep, const GroupPoint& g) {
    // exp(-i H) with H = (angle/2) axis.J Hermitian
    Eigen::MatrixXcd h = (g.angle / 2.0) *
                         (g.axis(0) * rep.J1 + g.axis(1) * rep.J2 + g.axis(2) * rep.J3);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(rep.n);
    for (int k = 0; k < rep.n; ++k) phases(k) = std::exp(Complex(0, -es.eigenvalues()(k)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> highest_weight(const SpinRep& rep) {
    // Ladder basis: J3 is diagonal with descending entries, top entry n-1.
    const int n = rep.n;
    if (std::abs(rep.J3(0, 0).real() - (n - 1)) > 1e-12)
        throw std::logic_error("highest_weight: basis not in ladder form");
    if (n >= 2 && rep.J3(0, 0).real() - rep.J3(1, 1).real() < 1.0)
        throw std::logic_error("highest_weight: degenerate top eigenvalue");
    Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(n);
    xi(0) = 1.0;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    p(0, 0) = 1.0;
    return {xi, p};
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
}

SphereQuadrature sphere_quadrature(int level) {
    if (level < 1) throw std::invalid_argument("sphere_quadrature: level must be >= 1");
    std::vector<double> x, w;
    gauss_legendre(level, x, w);
    const int m = 2 * level;
    SphereQuadrature q;
    q.level = level;
    q.nodes.reserve(static_cast<std::size_t>(level) * m);
    q.weights.reserve(static_cast<std::size_t>(level) * m);
    for (int i = 0; i < level; ++i) {
        double theta = std::acos(x[i]);
        for (int jphi = 0; jphi < m; ++jphi) {
            q.nodes.push_back({theta, 2.0 * pi * jphi / m});
            q.weights.push_back(w[i] / 2.0 / m);
        }
    }
    return q;
}

GroupPoint section(double theta, double phi) {
    if (theta == 0.0) return group_identity();
    return group_point(Eigen::Vector3d(-std::sin(phi), std::cos(phi), 0.0), theta);
}

Eigen::MatrixXcd haar_average(const SpinRep& rep, const Eigen::MatrixXcd& T,
                              const SphereQuadrature& quad) {
    if (T.rows() != rep.n || T.cols() != rep.n)
        throw std::invalid_argument("haar_average: matrix dimension mismatch");
    const int m = 2 * quad.level;  // right-R circle resolution
    const std::size_t nn = quad.nodes.size();
    std::vector<Eigen::MatrixXcd> terms(nn);
    parallelFor(nn, [&](std::size_t k) {
        const auto& node = quad.nodes[k];
        Eigen::MatrixXcd us = unitary(rep, section(node.theta, node.phi));
        // inner average over the stabiliser circle: conjugation by
        // exp(-i psi J3 / 2) is diagonal in the ladder basis
        Eigen::MatrixXcd inner = Eigen::MatrixXcd::Zero(rep.n, rep.n);
        for (int jpsi = 0; jpsi < m; ++jpsi) {
            double psi = 2.0 * pi * jpsi / m;
            Eigen::VectorXcd d(rep.n);
            for (int r = 0; r < rep.n; ++r)
                d(r) = std::exp(Complex(0, -psi / 2.0 * rep.J3(r, r).real()));
            inner += d.asDiagonal() * T * d.asDiagonal().inverse();
        }
        inner /= m;
        terms[k] = quad.weights[k] * (us * inner * us.adjoint());
    });
    return pairwiseSum(std::move(terms));
}

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace ncg::su2
