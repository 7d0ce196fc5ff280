#include "ncg/qmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncg/parallel.hpp"

namespace ncg::qmetric {

using std::numbers::pi;
using Complex = std::complex<double>;

double length(const su2::GroupPoint& g) {
    // SU(2) parameter in [0, 2pi] -> SO(3) angle folded into [0, pi]
    return pi - std::abs(pi - g.angle);
}

double geodesic(double theta1, double phi1, double theta2, double phi2) {
    double c = std::sin(theta1) * std::sin(theta2) * std::cos(phi1 - phi2) +
               std::cos(theta1) * std::cos(theta2);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

LipConstraintSample lip_sample(int axes, int angles) {
    if (axes < 1 || angles < 1) throw std::invalid_argument("lip_sample: counts must be positive");
    LipConstraintSample s;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < axes; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / axes;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * i;
        Eigen::Vector3d axis(r * std::cos(phi), r * std::sin(phi), z);
        for (int j = 1; j <= angles; ++j) {
            double ang = pi * j / angles;  // SO(3) angles in (0, pi]
            su2::GroupPoint g = su2::group_point(axis, ang);
            s.points.emplace_back(g, length(g));
        }
    }
    return s;
}

namespace {

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& a) { return 0.5 * (a + a.adjoint()); }

double hermitian_norm(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
}

}  // namespace

double lip_norm(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                const LipConstraintSample& sample) {
    if (T.rows() != rep.n || T.cols() != rep.n)
        throw std::invalid_argument("lip_norm: matrix dimension mismatch");
    if (!T.isApprox(T.adjoint(), 1e-10))
        throw std::domain_error("lip_norm: input must be Hermitian");
    std::vector<double> quotients(sample.points.size(), 0.0);
    parallelFor(sample.points.size(), [&](std::size_t k) {
        const auto& [g, len] = sample.points[k];
        if (len <= 0.0) return;
        Eigen::MatrixXcd u = su2::unitary(rep, g);
        quotients[k] = hermitian_norm(u * T * u.adjoint() - T) / len;
    });
    double best = 0.0;
    for (double q : quotients) best = std::max(best, q);
    if (sample.infinitesimal) {
        for (int k = 1; k <= 3; ++k) {
            Eigen::MatrixXcd comm = rep.J(k) * T - T * rep.J(k);
            best = std::max(best, 0.5 * su2::operator_norm(comm));
        }
    }
    return best;
}

double classical_lip_norm(const berezin::SampledFunction& f) {
    const auto& nodes = f.quad.nodes;
    double best = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            double rho = geodesic(nodes[i].theta, nodes[i].phi, nodes[j].theta, nodes[j].phi);
            if (rho < 1e-12) continue;
            best = std::max(best, std::abs(f.values(i) - f.values(j)) / rho);
        }
    return best;
}

State make_state(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("make_state: square matrix required");
    if (!rho.isApprox(rho.adjoint(), 1e-10)) throw std::domain_error("make_state: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::domain_error("make_state: trace must be one");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-12) throw std::domain_error("make_state: not positive semidefinite");
    return State{rho};
}

State coherent_state(const su2::SpinRep& rep, double theta, double phi) {
    berezin::CoherentFrame frame(rep);
    Eigen::VectorXcd v = frame.vector(theta, phi);
    return State{v * v.adjoint()};
}

State mixed_state(int n) {
    return State{Eigen::MatrixXcd::Identity(n, n) / double(n)};
}

SpectralConstraint conjugation_constraint(const su2::SpinRep& rep, const su2::GroupPoint& g,
                                          double bound) {
    // U = exp(-iH); in H's eigenbasis the map a -> UaU* - a multiplies entry
    // (i,j) by exp(-i(h_i - h_j)) - 1.
    Eigen::MatrixXcd h = (g.angle / 2.0) *
                         (g.axis(0) * rep.J1 + g.axis(1) * rep.J2 + g.axis(2) * rep.J3);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    SpectralConstraint c;
    c.basis = es.eigenvectors();
    c.factors.resize(rep.n, rep.n);
    for (int i = 0; i < rep.n; ++i)
        for (int j = 0; j < rep.n; ++j)
            c.factors(i, j) =
                std::exp(Complex(0, -(es.eigenvalues()(i) - es.eigenvalues()(j)))) - 1.0;
    c.bound = bound;
    c.commutator = false;
    return c;
}

SpectralConstraint commutator_constraint(const Eigen::MatrixXcd& hermitian, double scale,
                                         double bound) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
    const int n = hermitian.rows();
    SpectralConstraint c;
    c.basis = es.eigenvectors();
    c.factors.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.factors(i, j) = scale * (es.eigenvalues()(i) - es.eigenvalues()(j));
    c.bound = bound;
    c.commutator = true;
    return c;
}

std::vector<SpectralConstraint> compile_constraints(const su2::SpinRep& rep,
                                                    const LipConstraintSample& sample) {
    std::vector<SpectralConstraint> cs;
    std::vector<std::pair<su2::GroupPoint, double>> pts = sample.points;
    // fixed processing order: sorted by length (determinism across runs)
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [g, len] : pts) {
        if (len <= 1e-12) continue;
        cs.push_back(conjugation_constraint(rep, g, len));
    }
    if (sample.infinitesimal)
        for (int k = 1; k <= 3; ++k) cs.push_back(commutator_constraint(rep.J(k), 0.5, 1.0));
    return cs;
}

namespace {

// ||L(a)||_op for a constraint, via the transformed matrix.
double constraint_norm(const SpectralConstraint& c, const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd at = c.basis.adjoint() * a * c.basis;
    Eigen::MatrixXcd y = c.factors.cwiseProduct(at);
    Eigen::MatrixXcd h = c.commutator ? Eigen::MatrixXcd(Complex(0, 1) * y) : y;
    return hermitian_norm(h);
}

// Projection onto {a : ||L(a)|| <= bound} in the diagonal coordinates of L:
// clip the eigenvalues of the transformed matrix and pull back through the
// entrywise pseudo-inverse.
Eigen::MatrixXcd constraint_project(const SpectralConstraint& c, const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd at = c.basis.adjoint() * a * c.basis;
    Eigen::MatrixXcd y = c.factors.cwiseProduct(at);
    Eigen::MatrixXcd h = c.commutator ? Eigen::MatrixXcd(Complex(0, 1) * y) : y;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    double top = std::max(std::abs(es.eigenvalues()(0)),
                          std::abs(es.eigenvalues()(h.rows() - 1)));
    if (top <= c.bound) return a;
    Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(-c.bound).cwiseMin(c.bound);
    Eigen::MatrixXcd hNew =
        es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    Eigen::MatrixXcd yNew = c.commutator ? Eigen::MatrixXcd(Complex(0, -1) * hNew) : hNew;
    Eigen::MatrixXcd delta = yNew - y;
    Eigen::MatrixXcd atNew = at;
    for (int i = 0; i < at.rows(); ++i)
        for (int j = 0; j < at.cols(); ++j)
            if (std::abs(c.factors(i, j)) > 1e-12)
                atNew(i, j) += delta(i, j) / c.factors(i, j);
    Eigen::MatrixXcd out = c.basis * atNew * c.basis.adjoint();
    return hermitize(out);
}

double max_violation(const std::vector<SpectralConstraint>& cs, const Eigen::MatrixXcd& a) {
    double v = 0.0;
    for (const auto& c : cs) v = std::max(v, constraint_norm(c, a) - c.bound);
    return v;
}

// Largest s in [0,1] with s*a feasible; constraints are homogeneous, so this
// always lands inside the set.
double feasibility_scale(const std::vector<SpectralConstraint>& cs, const Eigen::MatrixXcd& a) {
    double s = 1.0;
    for (const auto& c : cs) {
        double nrm = constraint_norm(c, a);
        if (nrm > c.bound) s = std::min(s, c.bound / nrm);
    }
    return s;
}

// Dykstra sweeps over the constraint cycle until the iterate is feasible to
// tolerance or the sweep budget runs out.
Eigen::MatrixXcd dykstra(const std::vector<SpectralConstraint>& cs, Eigen::MatrixXcd a,
                         std::vector<Eigen::MatrixXcd>& corrections, int maxSweeps,
                         double feasTol) {
    for (int sweep = 0; sweep < maxSweeps; ++sweep) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            Eigen::MatrixXcd shifted = a + corrections[j];
            Eigen::MatrixXcd projected = constraint_project(cs[j], shifted);
            corrections[j] = shifted - projected;
            a = projected;
        }
        if (max_violation(cs, a) <= feasTol) break;
    }
    return a;
}

}  // namespace

MetricResult kantorovich_maximize(const Eigen::MatrixXcd& D,
                                  const std::vector<SpectralConstraint>& constraints, double tol,
                                  int maxOuter) {
    const int n = D.rows();
    Eigen::MatrixXcd grad = hermitize(D);
    grad -= (grad.trace() / double(n)) * Eigen::MatrixXcd::Identity(n, n);

    MetricResult best;
    best.certificate = Eigen::MatrixXcd::Zero(n, n);
    best.value = 0.0;

    double gnorm = grad.norm();
    if (gnorm < 1e-15 || constraints.empty()) {
        best.converged = true;
        return best;
    }

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    std::vector<Eigen::MatrixXcd> corrections(constraints.size(),
                                              Eigen::MatrixXcd::Zero(n, n));
    double step = 1.0 / gnorm;
    const double stepMin = tol / (gnorm * 100.0);
    int sinceImprove = 0;
    int it = 0;
    for (; it < maxOuter; ++it) {
        Eigen::MatrixXcd trial = a + step * grad;
        std::fill(corrections.begin(), corrections.end(), Eigen::MatrixXcd::Zero(n, n));
        a = dykstra(constraints, trial, corrections, 60, 1e-13);
        Eigen::MatrixXcd feasible = feasibility_scale(constraints, a) * a;
        double val = (grad.cwiseProduct(feasible.conjugate())).sum().real();
        if (val > best.value + tol) {
            best.value = val;
            best.certificate = feasible;
            sinceImprove = 0;
        } else {
            ++sinceImprove;
        }
        if (sinceImprove >= 50) {  // objective improvement < tol over 50 steps
            step *= 0.5;
            sinceImprove = 0;
            if (step < stepMin) {
                best.converged = true;
                break;
            }
        }
    }
    best.iterations = it;
    if (it >= maxOuter) best.converged = false;
    // exact agreement between reported value and certificate
    best.value = (grad.cwiseProduct(best.certificate.conjugate())).sum().real();
    return best;
}

MetricResult state_metric(const State& mu, const State& nu, const su2::SpinRep& rep,
                          const LipConstraintSample& sample, double tol) {
    if (mu.rho.rows() != nu.rho.rows())
        throw std::invalid_argument("state_metric: state dimension mismatch");
    if (mu.rho.rows() != rep.n)
        throw std::invalid_argument("state_metric: state/rep dimension mismatch");
    Eigen::MatrixXcd d = mu.rho - nu.rho;
    auto cs = compile_constraints(rep, sample);
    return kantorovich_maximize(d, cs, tol);
}

MetricResult state_metric_refined(const State& mu, const State& nu, const su2::SpinRep& rep,
                                  double tol) {
    int axes = 8, angles = 8;
    MetricResult prev = state_metric(mu, nu, rep, lip_sample(axes, angles), tol);
    for (int round = 0; round < 4; ++round) {
        axes *= 2;
        angles *= 2;
        MetricResult next = state_metric(mu, nu, rep, lip_sample(axes, angles), tol);
        if (std::abs(next.value - prev.value) < tol) return next;
        prev = next;
    }
    prev.converged = false;
    return prev;
}

double gamma(const su2::SpinRep& rep, const su2::SphereQuadrature& quad) {
    if (quad.level < rep.n)
        throw std::invalid_argument("gamma: quadrature level must be at least n");
    // gamma = n \int theta sigma_P dmu = (n/2) int_0^pi theta sigma_P(theta) sin(theta) dtheta.
    // theta = arccos(x) is not polynomial in x, so integrate in theta directly.
    std::vector<double> x, w;
    su2::gauss_legendre(quad.level, x, w);
    berezin::CoherentFrame frame(rep);
    std::vector<double> terms(x.size());
    parallelFor(x.size(), [&](std::size_t k) {
        double theta = pi * (x[k] + 1.0) / 2.0;
        Eigen::VectorXcd v = frame.vector(theta, 0.0);
        double sigmaP = std::norm(v(0));  // trace(P alpha(P)) = |<U xi, xi>|^2
        terms[k] = w[k] * (pi / 2.0) * 0.5 * std::sin(theta) * theta * sigmaP;
    });
    return rep.n * pairwiseSum(std::move(terms));
}

DefectResult berezin_defect(const su2::SpinRep& rep, const Eigen::MatrixXcd& T) {
    LipConstraintSample sample = lip_sample(24, 24);
    double lip = lip_norm(rep, T, sample);
    DefectResult out;
    Eigen::MatrixXcd probe = T;
    if (lip > 1e-12) {
        probe /= lip;
        out.normalized = true;
    }
    su2::SphereQuadrature quad = su2::sphere_quadrature(std::max(8, rep.n));
    berezin::SampledFunction sym = berezin::covariant_symbol(rep, probe, quad);
    Eigen::MatrixXcd back = berezin::contravariant_symbol(sym, rep);
    out.value = su2::operator_norm(back - probe);
    return out;
}

double gh_upper_bound(const su2::SpinRep& rep, const su2::SphereQuadrature& quad,
                      const std::vector<Eigen::MatrixXcd>& probes) {
    if (probes.empty()) throw std::invalid_argument("gh_upper_bound: probe set must be nonempty");
    double worst = 0.0;
    for (const auto& t : probes) worst = std::max(worst, berezin_defect(rep, t).value);
    return gamma(rep, quad) + worst;
}

std::pair<bool, bool> lip_contraction_check(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                                            const berezin::SampledFunction& f) {
    LipConstraintSample sample = lip_sample(24, 24);
    const double slack = 1.0 + 1e-6;
    berezin::SampledFunction symT = berezin::covariant_symbol(rep, T, f.quad);
    bool first = classical_lip_norm(symT) <= lip_norm(rep, T, sample) * slack;
    Eigen::MatrixXcd breve = contravariant_symbol(f, rep);
    bool second =
        lip_norm(rep, hermitize(breve), sample) <= classical_lip_norm(f) * slack + 1e-9;
    return {first, second};
}

}  // namespace ncg::qmetric
