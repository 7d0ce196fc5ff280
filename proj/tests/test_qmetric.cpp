#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ncg/berezin.hpp"
#include "ncg/qmetric.hpp"
#include "ncg/su2.hpp"

using namespace ncg;
using namespace ncg::qmetric;
using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

su2::GroupPoint random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
    std::uniform_real_distribution<double> unif(0.05, 2.0 * pi - 0.05);
    return su2::group_point(axis, unif(rng));
}

Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (t + t.adjoint());
}

State random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::MatrixXcd rho = a * a.adjoint();
    rho /= rho.trace().real();
    return make_state(0.5 * (rho + rho.adjoint()));
}

}  // namespace

TEST_CASE("length function properties") {
    CHECK(length(su2::group_identity()) == 0.0);
    // the centre -1 is the trivial rotation
    CHECK(length(su2::group_point({0, 0, 1}, 2.0 * pi)) < 1e-14);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        su2::GroupPoint g = random_point(rng), h = random_point(rng);
        CHECK(length(su2::group_inverse(g)) == doctest::Approx(length(g)).epsilon(1e-12));
        // conjugation invariance (the paper display has a typo; the class
        // function reading is tested)
        su2::GroupPoint conj = su2::group_compose(su2::group_compose(h, g), su2::group_inverse(h));
        CHECK(std::abs(length(conj) - length(g)) < 1e-10);
        CHECK(length(su2::group_compose(g, h)) <= length(g) + length(h) + 1e-12);
    }
}

TEST_CASE("lip norm") {
    su2::SpinRep rep = su2::spin_rep(2);
    LipConstraintSample dense = lip_sample(32, 32);  // ~10^3 grid points
    SUBCASE("vanishes on the identity") {
        CHECK(lip_norm(rep, Eigen::MatrixXcd::Identity(2, 2), dense) == 0.0);
    }
    SUBCASE("sigma_3 has lip norm one") {
        double value = lip_norm(rep, rep.J3, dense);
        CHECK(value >= 0.9);
        CHECK(value <= 1.0 + 1e-9);
        // dense-grid oracle: quotients (2 sin(w/2)/w) |(R-1)z-hat| stay below
        // the infinitesimal limit, which is exactly one
        CHECK(value == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("fuzzy coordinate scales by 1/sqrt(3)") {
        double value = lip_norm(rep, rep.J3 / std::sqrt(3.0), dense);
        CHECK(value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
    }
    SUBCASE("homogeneity") {
        std::mt19937_64 rng(3);
        Eigen::MatrixXcd t = random_hermitian(2, rng);
        LipConstraintSample sample = lip_sample(6, 6);
        double base = lip_norm(rep, t, sample);
        CHECK(lip_norm(rep, (2.0 * t).eval(), sample) == doctest::Approx(2.0 * base).epsilon(1e-12));
        CHECK(lip_norm(rep, (-3.0 * t).eval(), sample) ==
              doctest::Approx(3.0 * base).epsilon(1e-12));
    }
    SUBCASE("non-hermitian input rejected") {
        Eigen::MatrixXcd bad(2, 2);
        bad << 0, 1, 0, 0;
        CHECK_THROWS_AS(lip_norm(rep, bad, dense), std::domain_error);
    }
    SUBCASE("seminorm triangle inequality on random pairs") {
        std::mt19937_64 rng(11);
        LipConstraintSample sample = lip_sample(8, 8);
        su2::SpinRep rep3 = su2::spin_rep(3);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd a = random_hermitian(3, rng), b = random_hermitian(3, rng);
            CHECK(lip_norm(rep3, (a + b).eval(), sample) <=
                  lip_norm(rep3, a, sample) + lip_norm(rep3, b, sample) + 1e-10);
        }
    }
}

TEST_CASE("classical lip norm") {
    su2::SphereQuadrature quad = su2::sphere_quadrature(8);
    SUBCASE("constants give zero") {
        berezin::SampledFunction one =
            berezin::sample(quad, [](double, double) { return 1.0; });
        CHECK(classical_lip_norm(one) == 0.0);
    }
    SUBCASE("cos(theta) is 1-lipschitz, bound in [0.9, 1]") {
        berezin::SampledFunction f =
            berezin::sample(quad, [](double th, double) { return std::cos(th); });
        double value = classical_lip_norm(f);
        CHECK(value >= 0.9);
        CHECK(value <= 1.0 + 1e-12);
        berezin::SampledFunction g =
            berezin::sample(quad, [](double th, double) { return 2.0 * std::cos(th); });
        CHECK(classical_lip_norm(g) == doctest::Approx(2.0 * value).epsilon(1e-14));
    }
}

TEST_CASE("kantorovich maximization on the two-point model") {
    // diagonal 2x2 algebra; |a_1 - a_2| <= r expressed as conjugation by the
    // swap unitary; hand oracle: the optimum is exactly r
    double r = 0.73;
    Eigen::MatrixXcd d(2, 2);
    d << 1, 0, 0, -1;  // delta_x - delta_y
    SpectralConstraint swap;
    swap.basis.resize(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    swap.basis << s, s, s, -s;  // eigenvectors of sigma_x
    swap.factors.resize(2, 2);
    swap.factors << 0.0, -2.0, -2.0, 0.0;  // v_i conj(v_j) - 1 for phases (1,-1)
    swap.bound = r;
    swap.commutator = false;
    MetricResult res = kantorovich_maximize(d, {swap}, 1e-8);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(r).epsilon(1e-6));
    // reported value ties to the certificate exactly
    double fromCert = (d.cwiseProduct(res.certificate.conjugate())).sum().real();
    CHECK(res.value == fromCert);
}

TEST_CASE("state metric") {
    su2::SpinRep rep = su2::spin_rep(2);
    LipConstraintSample sample = lip_sample(8, 8);
    SUBCASE("coinciding states at distance zero") {
        State mu = coherent_state(rep, 0.3, 1.0);
        MetricResult res = state_metric(mu, mu, rep, sample, 1e-7);
        CHECK(res.value == 0.0);
        CHECK(res.certificate.norm() == 0.0);
    }
    SUBCASE("coherent versus maximally mixed against the brute-force oracle") {
        State mu = coherent_state(rep, 0.0, 0.0);
        State nu = mixed_state(2);
        MetricResult res = state_metric(mu, nu, rep, sample, 1e-7);
        CHECK(res.converged);
        // randomized oracle: 10^4 feasible directions, best objective
        auto constraints = compile_constraints(rep, sample);
        std::mt19937_64 rng(12345);
        std::normal_distribution<double> gauss;
        double best = 0.0;
        Eigen::MatrixXcd diff = mu.rho - nu.rho;
        for (int trial = 0; trial < 10000; ++trial) {
            Eigen::MatrixXcd a = random_hermitian(2, rng);
            double scale = 1e18;
            for (const auto& c : constraints) {
                Eigen::MatrixXcd y =
                    c.factors.cwiseProduct(c.basis.adjoint() * a * c.basis);
                double nrm = su2::operator_norm(y);
                if (nrm > 1e-14) scale = std::min(scale, c.bound / nrm);
            }
            double val = (diff.cwiseProduct((scale * a).conjugate())).sum().real();
            best = std::max(best, val);
        }
        CHECK(res.value == doctest::Approx(best).epsilon(2e-3));
        CHECK(res.value >= best - 1e-6);  // ascent should dominate random search
    }
    SUBCASE("symmetry and triangle inequality at n=3") {
        su2::SpinRep rep3 = su2::spin_rep(3);
        LipConstraintSample s3 = lip_sample(6, 5);
        const double tol = 1e-4;
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 20; ++trial) {
            State a = random_state(3, rng), b = random_state(3, rng), c = random_state(3, rng);
            double ab = state_metric(a, b, rep3, s3, tol).value;
            double ba = state_metric(b, a, rep3, s3, tol).value;
            CHECK(std::abs(ab - ba) <= tol);
            double ac = state_metric(a, c, rep3, s3, tol).value;
            double cb = state_metric(c, b, rep3, s3, tol).value;
            CHECK(ab <= ac + cb + 2.0 * tol);
        }
    }
    SUBCASE("dimension mismatch rejected") {
        State mu = mixed_state(2), nu = mixed_state(3);
        CHECK_THROWS_AS(state_metric(mu, nu, rep, sample, 1e-6), std::invalid_argument);
    }
}

TEST_CASE("gamma") {
    SUBCASE("gamma_2 equals 3pi/8 (oracle: analytic 1-d integral)") {
        double g2 = gamma(su2::spin_rep(2), su2::sphere_quadrature(16));
        CHECK(std::abs(g2 - 3.0 * pi / 8.0) < 1e-6);
    }
    SUBCASE("pipeline matches the closed-form kernel integral up to n=16") {
        // oracle: (n/2) int theta cos^{2(n-1)}(theta/2) sin(theta) dtheta by a
        // 400-point rule, independent of the matrix pipeline
        std::vector<double> x, w;
        su2::gauss_legendre(400, x, w);
        for (int n : {2, 3, 8, 16}) {
            double oracle = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                double th = pi * (x[k] + 1.0) / 2.0;
                oracle += w[k] * (pi / 2.0) * 0.5 * std::sin(th) * th * n *
                          std::pow(std::cos(th / 2.0), 2.0 * (n - 1));
            }
            double value = gamma(su2::spin_rep(n), su2::sphere_quadrature(std::max(16, n)));
            CHECK(std::abs(value - oracle) < 1e-10);
        }
    }
    SUBCASE("strictly decreasing in n") {
        double prev = 1e300;
        for (int n : {2, 4, 8, 16, 32, 64}) {
            double g = gamma(su2::spin_rep(n), su2::sphere_quadrature(std::max(16, n)));
            CHECK(g < prev);
            prev = g;
        }
    }
    SUBCASE("level below n is rejected") {
        CHECK_THROWS_AS(gamma(su2::spin_rep(8), su2::sphere_quadrature(4)),
                        std::invalid_argument);
    }
}

TEST_CASE("berezin defect") {
    SUBCASE("identity: zero lip norm flag, near-zero defect") {
        DefectResult res = berezin_defect(su2::spin_rep(4), Eigen::MatrixXcd::Identity(4, 4));
        CHECK_FALSE(res.normalized);
        CHECK(res.value < 1e-9);
    }
    SUBCASE("x3 defect positive and decreasing in n") {
        double prev = 1e300;
        for (int n : {4, 8, 16, 32}) {
            berezin::FuzzySphere s = berezin::fuzzy_sphere(n);
            DefectResult res = berezin_defect(s.rep, s.x3);
            CHECK(res.normalized);
            CHECK(res.value > 0.0);
            CHECK(res.value < prev);
            prev = res.value;
        }
    }
    SUBCASE("scaling invariance through normalisation") {
        berezin::FuzzySphere s = berezin::fuzzy_sphere(6);
        DefectResult a = berezin_defect(s.rep, s.x3);
        DefectResult b = berezin_defect(s.rep, (5.0 * s.x3).eval());
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
    }
}

TEST_CASE("gh upper bound") {
    SUBCASE("identity probe gives gamma") {
        su2::SpinRep rep = su2::spin_rep(4);
        su2::SphereQuadrature quad = su2::sphere_quadrature(16);
        double bound = gh_upper_bound(rep, quad, {Eigen::MatrixXcd::Identity(4, 4)});
        CHECK(std::abs(bound - gamma(rep, quad)) < 1e-9);
        CHECK(bound >= gamma(rep, quad));
    }
    SUBCASE("empty probe set rejected") {
        CHECK_THROWS_AS(gh_upper_bound(su2::spin_rep(2), su2::sphere_quadrature(2), {}),
                        std::invalid_argument);
    }
}

TEST_CASE("lip contraction in both directions") {
    SUBCASE("identity and constants") {
        su2::SpinRep rep = su2::spin_rep(3);
        su2::SphereQuadrature quad = su2::sphere_quadrature(8);
        berezin::SampledFunction one =
            berezin::sample(quad, [](double, double) { return 1.0; });
        auto [first, second] =
            lip_contraction_check(rep, Eigen::MatrixXcd::Identity(3, 3), one);
        CHECK(first);
        CHECK(second);
    }
    SUBCASE("random hermitian probes at n=4") {
        su2::SpinRep rep = su2::spin_rep(4);
        su2::SphereQuadrature quad = su2::sphere_quadrature(8);
        std::mt19937_64 rng(21);
        berezin::SampledFunction f =
            berezin::sample(quad, [](double th, double) { return std::cos(th); });
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd t = random_hermitian(4, rng);
            auto [first, second] = lip_contraction_check(rep, t, f);
            CHECK(first);
            CHECK(second);
        }
    }
    SUBCASE("cos(theta) at n=8") {
        su2::SpinRep rep = su2::spin_rep(8);
        su2::SphereQuadrature quad = su2::sphere_quadrature(8);
        berezin::SampledFunction f =
            berezin::sample(quad, [](double th, double) { return std::cos(th); });
        auto [first, second] =
            lip_contraction_check(rep, berezin::fuzzy_sphere(8).x3, f);
        CHECK(first);
        CHECK(second);
    }
}

TEST_CASE("gamma dominates the transform defect on functions") {
    for (int n : {4, 8}) {
        su2::SpinRep rep = su2::spin_rep(n);
        su2::SphereQuadrature quad = su2::sphere_quadrature(std::max(16, n));
        double g = gamma(rep, quad);
        auto probe = [&](const std::function<double(double, double)>& fn) {
            berezin::SampledFunction f = berezin::sample(
                quad, [&](double th, double ph) { return Complex(fn(th, ph), 0.0); });
            berezin::SampledFunction back = berezin::berezin_transform(f, rep);
            double worst = 0.0;
            for (int k = 0; k < f.values.size(); ++k)
                worst = std::max(worst, std::abs(f.values(k) - back.values(k)));
            CHECK(worst <= g * classical_lip_norm(f) * (1.0 + 1e-6) + 1e-8);
        };
        probe([](double th, double) { return std::cos(th); });
        probe([](double th, double ph) { return std::sin(th) * std::cos(ph); });
    }
}
