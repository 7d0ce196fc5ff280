#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ncg/su2.hpp"

using namespace ncg;
using namespace ncg::su2;
using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd m;
    switch (k) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

GroupPoint random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
    std::uniform_real_distribution<double> unif(0.05, 2.0 * pi - 0.05);
    return group_point(axis, unif(rng));
}

}  // namespace

TEST_CASE("spin_rep rejects dimension zero") {
    CHECK_THROWS_AS(spin_rep(0), std::invalid_argument);
}

TEST_CASE("spin_rep(2) gives the Pauli matrices") {
    SpinRep rep = spin_rep(2);
    CHECK((rep.J1 - pauli(1)).norm() < 1e-14);
    CHECK((rep.J2 - pauli(2)).norm() < 1e-14);
    CHECK((rep.J3 - pauli(3)).norm() < 1e-14);
}

TEST_CASE("spin_rep(1) is the trivial representation") {
    SpinRep rep = spin_rep(1);
    CHECK(rep.J1.norm() == 0.0);
    CHECK((rep.J1 * rep.J1 + rep.J2 * rep.J2 + rep.J3 * rep.J3).norm() == 0.0);
}

TEST_CASE("spin_rep(3) casimir is 8") {
    SpinRep rep = spin_rep(3);
    Eigen::MatrixXcd cas = rep.J1 * rep.J1 + rep.J2 * rep.J2 + rep.J3 * rep.J3;
    CHECK((cas - 8.0 * Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("spin rep invariants across dimensions") {
    for (int n : {2, 3, 5, 8, 16}) {
        SpinRep rep = spin_rep(n);
        Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
        for (int k = 1; k <= 3; ++k)
            CHECK((rep.J(k) - rep.J(k).adjoint()).cwiseAbs().maxCoeff() < 1e-13);
        auto comm = [&](int a, int b) { return rep.J(a) * rep.J(b) - rep.J(b) * rep.J(a); };
        CHECK((comm(1, 2) - Complex(0, 2) * rep.J3).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm(2, 3) - Complex(0, 2) * rep.J1).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm(3, 1) - Complex(0, 2) * rep.J2).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::MatrixXcd cas = rep.J1 * rep.J1 + rep.J2 * rep.J2 + rep.J3 * rep.J3;
        CHECK((cas - double(n * n - 1) * eye).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("unitary at the identity and the z-axis closed forms") {
    SpinRep rep = spin_rep(2);
    CHECK((unitary(rep, group_identity()) - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-14);

    // rotation by 2pi about z: exp(-i pi sigma_3) = -1
    GroupPoint full = group_point({0, 0, 1}, 2.0 * pi);
    CHECK((unitary(rep, full) + Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);

    // rotation by pi about z: diag(-i, i)
    GroupPoint half = group_point({0, 0, 1}, pi);
    Eigen::Matrix2cd expected;
    expected << Complex(0, -1), 0, 0, Complex(0, 1);
    CHECK((unitary(rep, half) - expected).norm() < 1e-12);
}

TEST_CASE("unitary is unitary and an exact homomorphism on random pairs") {
    std::mt19937_64 rng(31337);
    for (int n : {2, 3, 6}) {
        SpinRep rep = spin_rep(n);
        Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
        for (int trial = 0; trial < 100; ++trial) {
            GroupPoint g = random_point(rng);
            GroupPoint h = random_point(rng);
            Eigen::MatrixXcd ug = unitary(rep, g);
            if (trial < 20) CHECK((ug * ug.adjoint() - eye).norm() < 1e-12);
            Eigen::MatrixXcd uh = unitary(rep, h);
            Eigen::MatrixXcd ugh = unitary(rep, group_compose(g, h));
            CHECK(operator_norm(ug * uh - ugh) < 1e-10);
        }
    }
}

TEST_CASE("highest weight vector and projection") {
    SpinRep rep2 = spin_rep(2);
    auto [xi, p] = highest_weight(rep2);
    CHECK(std::abs(xi(0) - 1.0) < 1e-14);
    CHECK(std::abs(xi(1)) < 1e-14);
    CHECK((p * p - p).norm() < 1e-14);
    CHECK((p - p.adjoint()).norm() < 1e-14);
    CHECK(std::abs(p.trace().real() - 1.0) < 1e-14);

    SpinRep rep3 = spin_rep(3);
    auto [xi3, p3] = highest_weight(rep3);
    CHECK((rep3.J3 * xi3 - 2.0 * xi3).norm() < 1e-13);
    CHECK(std::abs(p3.trace().real() - 1.0) < 1e-14);
}

TEST_CASE("sphere quadrature basic integrals") {
    for (int level : {2, 4, 9}) {
        SphereQuadrature q = sphere_quadrature(level);
        double total = 0.0, cosInt = 0.0, cos2Int = 0.0;
        for (std::size_t k = 0; k < q.nodes.size(); ++k) {
            CHECK(q.weights[k] > 0.0);
            total += q.weights[k];
            cosInt += q.weights[k] * std::cos(q.nodes[k].theta);
            cos2Int += q.weights[k] * std::cos(q.nodes[k].theta) * std::cos(q.nodes[k].theta);
        }
        CHECK(std::abs(total - 1.0) < 1e-13);
        CHECK(std::abs(cosInt) < 1e-13);
        if (level >= 2) CHECK(std::abs(cos2Int - 1.0 / 3.0) < 1e-13);
    }
}

TEST_CASE("sphere quadrature integrates spherical harmonics exactly") {
    for (int level : {2, 3, 5}) {
        SphereQuadrature q = sphere_quadrature(level);
        for (int l = 0; l <= 2 * level - 1; ++l)
            for (int m = 0; m <= l; ++m) {
                Complex total = 0.0;
                for (std::size_t k = 0; k < q.nodes.size(); ++k) {
                    double ylm = std::sph_legendre(l, m, q.nodes[k].theta);
                    total += q.weights[k] * ylm *
                             std::exp(Complex(0, m * q.nodes[k].phi));
                }
                double expected = (l == 0) ? 1.0 / (2.0 * std::sqrt(pi)) : 0.0;
                CHECK(std::abs(total.real() - expected) < 1e-12);
                CHECK(std::abs(total.imag()) < 1e-12);
            }
    }
}

TEST_CASE("haar average projects onto the scalar part") {
    SUBCASE("identity stays put") {
        SpinRep rep = spin_rep(3);
        SphereQuadrature q = sphere_quadrature(4);
        Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(3, 3);
        CHECK((haar_average(rep, eye, q) - eye).norm() < 1e-12);
    }
    SUBCASE("traceless sigma_3 averages to zero") {
        SpinRep rep = spin_rep(2);
        SphereQuadrature q = sphere_quadrature(4);
        CHECK(haar_average(rep, rep.J3, q).norm() < 1e-12);
    }
    SUBCASE("random hermitian at n=4, level 8") {
        std::mt19937_64 rng(99);
        std::normal_distribution<double> gauss;
        SpinRep rep = spin_rep(4);
        Eigen::MatrixXcd t(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t(i, j) = Complex(gauss(rng), gauss(rng));
        t = (t + t.adjoint()).eval();
        SphereQuadrature q = sphere_quadrature(8);
        Eigen::MatrixXcd avg = haar_average(rep, t, q);
        Eigen::MatrixXcd expected =
            (t.trace() / 4.0) * Eigen::MatrixXcd::Identity(4, 4);
        CHECK((avg - expected).cwiseAbs().maxCoeff() < 1e-10);
        // averages commute with every sampled unitary
        std::mt19937_64 rng2(5);
        for (int k = 0; k < 10; ++k) {
            Eigen::MatrixXcd u = unitary(rep, random_point(rng2));
            CHECK(operator_norm(u * avg - avg * u) < 1e-10);
        }
    }
    SUBCASE("dimension mismatch is rejected") {
        SpinRep rep = spin_rep(3);
        CHECK_THROWS_AS(haar_average(rep, Eigen::MatrixXcd::Identity(2, 2), sphere_quadrature(2)),
                        std::invalid_argument);
    }
}

TEST_CASE("group points are canonical") {
    CHECK_THROWS_AS(group_point({0, 0, 0}, 1.0), std::invalid_argument);
    GroupPoint g = group_point({0, 3, 0}, 1.25);
    CHECK(std::abs(g.axis.norm() - 1.0) < 1e-13);
    GroupPoint gi = group_compose(g, group_inverse(g));
    CHECK(gi.angle < 1e-12);
    // quaternion of the section at the north pole is the identity
    CHECK(section(0.0, 1.0).angle == 0.0);
}
