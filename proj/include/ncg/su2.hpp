#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace ncg::su2 {

/// Irreducible SU(2) representation of dimension n in the ladder basis:
/// J3 = diag(n-1, n-3, ..., -(n-1)), J_i = 2 L_i, so that
/// [J_j, J_k] = 2i eps_{jkl} J_l  and  J1^2 + J2^2 + J3^2 = (n^2-1) 1.
struct SpinRep {
    int n = 0;
    Eigen::MatrixXcd J1, J2, J3;

    const Eigen::MatrixXcd& J(int k) const;
};

SpinRep spin_rep(int n);

/// SU(2) element in axis-angle form: exp(-(i/2) * angle * axis.J) in any rep.
/// angle lives in [0, 2*pi]; angle = 2*pi is the centre element -1 (axis then
/// irrelevant, canonicalised to +z).
struct GroupPoint {
    Eigen::Vector3d axis{0, 0, 1};
    double angle = 0.0;
};

GroupPoint group_point(const Eigen::Vector3d& axis, double angle);
GroupPoint group_identity();
GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b);
GroupPoint group_inverse(const GroupPoint& g);

/// Unit quaternion (w, xyz) of g; two-sheet representative with sin >= 0.
Eigen::Vector4d quaternion(const GroupPoint& g);

Eigen::MatrixXcd unitary(const SpinRep& rep, const GroupPoint& g);

/// Highest-weight vector (unit eigenvector of J3 for eigenvalue n-1) and its
/// rank-one projection.
std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> highest_weight(const SpinRep& rep);

/// Product rule on S^2 = SU(2)/R: Gauss-Legendre nodes in cos(theta) times a
/// uniform grid in phi; weights sum to one (normalised measure). Integrates
/// spherical harmonics exactly up to degree 2*level - 1.
struct SphereQuadrature {
    struct Node {
        double theta;
        double phi;
    };
    int level = 0;
    std::vector<Node> nodes;
    std::vector<double> weights;
};

SphereQuadrature sphere_quadrature(int level);

/// Gauss-Legendre rule on [-1, 1] (Newton on the three-term recurrence).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Group average of T over SU(2): the sphere rule augmented with a circle of
/// right rotations about +z, so the full Haar measure is covered. Converges to
/// (trace(T)/n) * 1 by Schur.
Eigen::MatrixXcd haar_average(const SpinRep& rep, const Eigen::MatrixXcd& T,
                              const SphereQuadrature& quad);

/// Coset section s: S^2 -> SU(2), rotation by theta about (-sin phi, cos phi, 0).
/// Maps the north pole to the identity; U_{s(p)} carries the highest-weight
/// vector to the coherent state at p.
GroupPoint section(double theta, double phi);

double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace ncg::su2
