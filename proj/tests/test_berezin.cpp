#include "doctest.h"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

#include "ncg/berezin.hpp"
#include "ncg/su2.hpp"

using namespace ncg;
using namespace ncg::berezin;
using su2::SphereQuadrature;
using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (t + t.adjoint());
}

Eigen::Matrix3d rotation_matrix(const su2::GroupPoint& g) {
    return Eigen::AngleAxisd(g.angle, g.axis).toRotationMatrix();
}

}  // namespace

TEST_CASE("fuzzy sphere identities") {
    SUBCASE("n=2 coordinates are sigma_i/sqrt(3)") {
        FuzzySphere s = fuzzy_sphere(2);
        CHECK((s.x1 * std::sqrt(3.0) - s.rep.J1).norm() < 1e-13);
        Eigen::MatrixXcd sum = s.x1 * s.x1 + s.x2 * s.x2 + s.x3 * s.x3;
        CHECK((sum - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("n=16 commutator relation") {
        FuzzySphere s = fuzzy_sphere(16);
        double scale = 2.0 / std::sqrt(255.0);
        Eigen::MatrixXcd lhs = s.x1 * s.x2 - s.x2 * s.x1;
        CHECK((lhs - Complex(0, scale) * s.x3).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("n=1 degenerates to zero coordinates") {
        FuzzySphere s = fuzzy_sphere(1);
        CHECK(s.x1.norm() == 0.0);
    }
}

TEST_CASE("covariant symbol") {
    su2::SpinRep rep = su2::spin_rep(2);
    SphereQuadrature quad = su2::sphere_quadrature(8);
    SUBCASE("identity maps to the constant one") {
        SampledFunction f =
            covariant_symbol(rep, Eigen::MatrixXcd::Identity(2, 2), quad);
        for (int k = 0; k < f.values.size(); ++k)
            CHECK(std::abs(f.values(k) - 1.0) < 1e-13);
    }
    SUBCASE("sup bound by operator norm") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd t = random_hermitian(2, rng);
            SampledFunction f = covariant_symbol(rep, t, quad);
            double nrm = su2::operator_norm(t);
            for (int k = 0; k < f.values.size(); ++k)
                CHECK(std::abs(f.values(k)) <= nrm + 1e-12);
        }
    }
    SUBCASE("x3 has symbol cos(theta)/sqrt(3)") {
        FuzzySphere s = fuzzy_sphere(2);
        SampledFunction f = covariant_symbol(rep, s.x3, quad);
        for (std::size_t k = 0; k < quad.nodes.size(); ++k)
            CHECK(std::abs(f.values(k) - std::cos(quad.nodes[k].theta) / std::sqrt(3.0)) < 1e-12);
    }
}

TEST_CASE("contravariant symbol") {
    su2::SpinRep rep = su2::spin_rep(2);
    SphereQuadrature quad = su2::sphere_quadrature(8);
    SUBCASE("constant one quantises to the identity") {
        SampledFunction one = sample(quad, [](double, double) { return 1.0; });
        Eigen::MatrixXcd t = contravariant_symbol(one, rep);
        CHECK((t - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("zero quantises to zero") {
        SampledFunction zero = sample(quad, [](double, double) { return 0.0; });
        CHECK(contravariant_symbol(zero, rep).norm() == 0.0);
    }
    SUBCASE("cos(theta) quantises to sigma_3/3 (oracle: exact trig integrals)") {
        // n int f alpha(P) dmu has diagonal entries
        //   2 * (1/4) int (cos t + cos^2 t) sin t dt = 1/3 (top), -1/3 (bottom)
        SampledFunction f = sample(quad, [](double th, double) { return std::cos(th); });
        Eigen::MatrixXcd t = contravariant_symbol(f, rep);
        Eigen::Matrix2cd expected;
        expected << 1.0 / 3.0, 0, 0, -1.0 / 3.0;
        CHECK((t - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("real samples give hermitian matrices") {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        double a = unif(rng), b = unif(rng);
        SampledFunction f = sample(quad, [&](double th, double ph) {
            return a * std::cos(th) + b * std::sin(th) * std::cos(ph);
        });
        Eigen::MatrixXcd t = contravariant_symbol(f, rep);
        CHECK((t - t.adjoint()).norm() < 1e-13);
    }
}

TEST_CASE("berezin kernel") {
    SUBCASE("value n at the north pole") {
        for (int n : {2, 3, 7}) CHECK(std::abs(berezin_kernel(su2::spin_rep(n), 0.0) - n) < 1e-12);
    }
    SUBCASE("n=2 closed form 2cos^2(theta/2)") {
        su2::SpinRep rep = su2::spin_rep(2);
        for (double th : {0.1, 0.7, 1.9, 3.0})
            CHECK(std::abs(berezin_kernel(rep, th) - 2.0 * std::pow(std::cos(th / 2), 2)) < 1e-12);
    }
    SUBCASE("closed form n cos^{2(n-1)}(theta/2) up to n=16") {
        for (int n = 2; n <= 16; ++n) {
            su2::SpinRep rep = su2::spin_rep(n);
            for (double th : {0.05, 0.6, 1.3, 2.2, 3.1}) {
                double expected = n * std::pow(std::cos(th / 2), 2.0 * (n - 1));
                CHECK(std::abs(berezin_kernel(rep, th) - expected) < 1e-10);
            }
        }
    }
    SUBCASE("kernel integrates to one") {
        for (int n : {2, 5, 12}) {
            su2::SpinRep rep = su2::spin_rep(n);
            SphereQuadrature quad = su2::sphere_quadrature(std::max(8, n));
            double total = 0.0;
            for (std::size_t k = 0; k < quad.nodes.size(); ++k)
                total += quad.weights[k] * berezin_kernel(rep, quad.nodes[k].theta);
            CHECK(std::abs(total - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("berezin transform") {
    SUBCASE("fixes constants, kills zero") {
        su2::SpinRep rep = su2::spin_rep(3);
        SphereQuadrature quad = su2::sphere_quadrature(8);
        SampledFunction one = sample(quad, [](double, double) { return 1.0; });
        SampledFunction out = berezin_transform(one, rep);
        for (int k = 0; k < out.values.size(); ++k) CHECK(std::abs(out.values(k) - 1.0) < 1e-11);
        SampledFunction zero = sample(quad, [](double, double) { return 0.0; });
        CHECK(berezin_transform(zero, rep).values.norm() == 0.0);
    }
    SUBCASE("agrees with kernel convolution at n=8") {
        int n = 8;
        su2::SpinRep rep = su2::spin_rep(n);
        SphereQuadrature quad = su2::sphere_quadrature(std::max(8, n));
        SampledFunction f = sample(quad, [](double th, double) { return std::cos(th); });
        SampledFunction composed = berezin_transform(f, rep);
        // independent route: (sigma breve f)[h] = int f(g) k_P(g^-1 h) dg with
        // k_P(g^-1 h) = n |<v_g, v_h>|^2
        CoherentFrame frame(rep);
        std::vector<Eigen::VectorXcd> vs(quad.nodes.size());
        for (std::size_t k = 0; k < quad.nodes.size(); ++k)
            vs[k] = frame.vector(quad.nodes[k].theta, quad.nodes[k].phi);
        for (std::size_t h = 0; h < quad.nodes.size(); ++h) {
            Complex total = 0.0;
            for (std::size_t g = 0; g < quad.nodes.size(); ++g) {
                double kval = n * std::norm(vs[g].dot(vs[h]));
                total += quad.weights[g] * f.values(g) * kval;
            }
            CHECK(std::abs(composed.values(h) - total) < 1e-8);
        }
    }
}

TEST_CASE("equivariance of the covariant symbol") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss;
    int n = 3;
    su2::SpinRep rep = su2::spin_rep(n);
    SphereQuadrature quad = su2::sphere_quadrature(6);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXcd t = random_hermitian(n, rng);
        Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
        su2::GroupPoint h = su2::group_point(axis, 0.3 + 1.4 * std::abs(gauss(rng)));
        Eigen::MatrixXcd uh = su2::unitary(rep, h);
        SampledFunction lhs = covariant_symbol(rep, uh * t * uh.adjoint(), quad);
        // lambda_h sigma_T: evaluate sigma_T at h^{-1} p
        Eigen::Matrix3d rinv = rotation_matrix(su2::group_inverse(h));
        CoherentFrame frame(rep);
        double worst = 0.0;
        for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
            double th = quad.nodes[k].theta, ph = quad.nodes[k].phi;
            Eigen::Vector3d p(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                              std::cos(th));
            Eigen::Vector3d q = rinv * p;
            double thq = std::acos(std::clamp(q(2), -1.0, 1.0));
            double phq = std::atan2(q(1), q(0));
            Eigen::VectorXcd v = frame.vector(thq, phq);
            Complex expected = v.dot(t * v);
            worst = std::max(worst, std::abs(lhs.values(k) - expected));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("adjointness of the two transforms") {
    std::mt19937_64 rng(55);
    int n = 4;
    su2::SpinRep rep = su2::spin_rep(n);
    SphereQuadrature quad = su2::sphere_quadrature(8);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXcd t = random_hermitian(n, rng);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        double a = unif(rng), b = unif(rng), c = unif(rng);
        SampledFunction f = sample(quad, [&](double th, double ph) {
            return a + b * std::cos(th) + c * std::sin(th) * std::sin(ph);
        });
        SampledFunction st = covariant_symbol(rep, t, quad);
        Complex lhs = 0.0;
        for (std::size_t k = 0; k < quad.nodes.size(); ++k)
            lhs += quad.weights[k] * st.values(k) * std::conj(f.values(k));
        Eigen::MatrixXcd breve = contravariant_symbol(f, rep);
        Complex rhs = (t * breve.adjoint()).trace() / double(n);
        // <sigma_T, f>_{L2} = <T, breve f>_{HS}
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("positivity and norm contraction of the quantisation") {
    int n = 5;
    su2::SpinRep rep = su2::spin_rep(n);
    SphereQuadrature quad = su2::sphere_quadrature(8);
    SampledFunction f =
        sample(quad, [](double th, double ph) { return 1.1 + std::cos(th) * std::sin(ph); });
    Eigen::MatrixXcd breve = contravariant_symbol(f, rep);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(breve, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()(0) > -1e-12);  // f >= 0 at nodes
    double sup = 0.0;
    for (int k = 0; k < f.values.size(); ++k) sup = std::max(sup, std::abs(f.values(k)));
    CHECK(su2::operator_norm(breve) <= sup + 1e-9);
}

TEST_CASE("section independence of the covariant symbol") {
    // re-running with a phi-rotated section must not change sigma_T
    int n = 3;
    su2::SpinRep rep = su2::spin_rep(n);
    std::mt19937_64 rng(8);
    Eigen::MatrixXcd t = random_hermitian(n, rng);
    CoherentFrame frame(rep);
    auto [xi, p0] = su2::highest_weight(rep);
    for (double th : {0.4, 1.2, 2.8})
        for (double ph : {0.0, 1.0, 4.4}) {
            // rotated section: s'(p) = s(p) r with r a right stabiliser turn
            Eigen::MatrixXcd us = su2::unitary(rep, su2::section(th, ph));
            Eigen::MatrixXcd r = su2::unitary(rep, su2::group_point({0, 0, 1}, 0.77));
            Complex direct = (t * (us * p0 * us.adjoint())).trace();
            Eigen::MatrixXcd usr = us * r;
            Complex viaRotated = (t * (usr * p0 * usr.adjoint())).trace();
            CHECK(std::abs(direct - viaRotated) < 1e-12);
            Eigen::VectorXcd v = frame.vector(th, ph);
            CHECK(std::abs(direct - v.dot(t * v)) < 1e-12);
        }
}
