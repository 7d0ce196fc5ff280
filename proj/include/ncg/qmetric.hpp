#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "ncg/berezin.hpp"
#include "ncg/su2.hpp"

namespace ncg::qmetric {

/// SO(3) rotation angle of g, in [0, pi]. Conjugation-invariant; the induced
/// quotient metric on SU(2)/R = S^2 is the unit-radius round geodesic metric.
double length(const su2::GroupPoint& g);

/// Round geodesic distance between (theta1,phi1) and (theta2,phi2).
double geodesic(double theta1, double phi1, double theta2, double phi2);

/// Finite relaxation of the sup over the group: sampled points with their
/// lengths, plus the three coordinate-axis infinitesimal directions.
struct LipConstraintSample {
    std::vector<std::pair<su2::GroupPoint, double>> points;
    bool infinitesimal = true;
};

/// Deterministic sample: Fibonacci-sphere axes times a uniform angle grid.
LipConstraintSample lip_sample(int axes, int angles);

/// Lower bound of L(T) = sup ||alpha_g(T) - T|| / l(g): max over the sampled
/// quotients and the small-angle commutator limits (1/2)||[J_k, T]||.
double lip_norm(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                const LipConstraintSample& sample);

/// Lower bound of the geodesic Lipschitz seminorm from node pairs.
double classical_lip_norm(const berezin::SampledFunction& f);

/// Density matrix state on M_n.
struct State {
    Eigen::MatrixXcd rho;
};

State make_state(const Eigen::MatrixXcd& rho);
State coherent_state(const su2::SpinRep& rep, double theta, double phi);
State mixed_state(int n);

/// One spectral-norm-ball constraint ||L(a)||_op <= bound, where L is either
/// conjugation-minus-identity by a group unitary or a fixed commutator map.
/// Both are entrywise-diagonal in the stored eigenbasis.
struct SpectralConstraint {
    Eigen::MatrixXcd basis;    // unitary W
    Eigen::MatrixXcd factors;  // F: L(a) = W (F .* (W* a W)) W*
    double bound = 1.0;
    bool commutator = false;   // F antisymmetric (transformed matrix anti-Hermitian)
};

SpectralConstraint conjugation_constraint(const su2::SpinRep& rep, const su2::GroupPoint& g,
                                          double bound);
SpectralConstraint commutator_constraint(const Eigen::MatrixXcd& hermitian, double scale,
                                         double bound);
std::vector<SpectralConstraint> compile_constraints(const su2::SpinRep& rep,
                                                    const LipConstraintSample& sample);

struct MetricResult {
    double value = 0.0;
    Eigen::MatrixXcd certificate;
    bool converged = false;
    int iterations = 0;
};

/// Maximise Re trace(D a) over Hermitian a subject to the constraints, by
/// projected supergradient ascent with cyclic Dykstra corrections. The
/// returned iterate is exactly feasible (final homogeneous scaling), so the
/// value is a lower bound of the sampled relaxation and equals
/// Re trace(D * certificate).
MetricResult kantorovich_maximize(const Eigen::MatrixXcd& D,
                                  const std::vector<SpectralConstraint>& constraints, double tol,
                                  int maxOuter = 4000);

/// State metric rho_L(mu, nu) for the sampled Lip constraints.
MetricResult state_metric(const State& mu, const State& nu, const su2::SpinRep& rep,
                          const LipConstraintSample& sample, double tol);

/// Doubling refinement: grows the sample until the value moves by < tol.
MetricResult state_metric_refined(const State& mu, const State& nu, const su2::SpinRep& rep,
                                  double tol);

/// gamma_n = n * integral of rho([e],[g]) sigma_P(g) over the sphere. The
/// radial factor theta is not polynomial in cos(theta), so this uses a
/// Gauss-Legendre rule in theta itself (same node count as quad.level).
double gamma(const su2::SpinRep& rep, const su2::SphereQuadrature& quad);

struct DefectResult {
    double value = 0.0;
    bool normalized = false;  // false: T had (numerically) zero Lip norm
};

/// ||contravariant(covariant(T)) - T||_op after rescaling T to unit Lip norm.
DefectResult berezin_defect(const su2::SpinRep& rep, const Eigen::MatrixXcd& T);

/// gamma_n + max probe defect: estimate of the paper's upper bound for the
/// quantum Gromov-Hausdorff distance, restricted to the probe set.
double gh_upper_bound(const su2::SpinRep& rep, const su2::SphereQuadrature& quad,
                      const std::vector<Eigen::MatrixXcd>& probes);

/// (classical_lip_norm(sigma_T) <= lip_norm(T), lip_norm(contravariant(f)) <=
///  classical_lip_norm(f)) with the spec's slack factors.
std::pair<bool, bool> lip_contraction_check(const su2::SpinRep& rep, const Eigen::MatrixXcd& T,
                                            const berezin::SampledFunction& f);

}  // namespace ncg::qmetric
