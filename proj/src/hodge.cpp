#include "ncg/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg::calculus {

GradedCalculus validated(GradedCalculus c) {
    const std::size_t n = c.dims.size();
    if (n == 0) throw std::invalid_argument("GradedCalculus: no degrees");
    if (c.gram.size() != n) throw std::invalid_argument("GradedCalculus: gram count mismatch");
    if (c.d.size() != n && c.d.size() != n - 1)
        throw std::invalid_argument("GradedCalculus: differential count mismatch");
    c.d.resize(n);  // top differential defaults to the empty map
    for (std::size_t k = 0; k < n; ++k) {
        if (c.gram[k].rows() != c.dims[k] || c.gram[k].cols() != c.dims[k])
            throw std::invalid_argument("GradedCalculus: gram shape mismatch");
        if (!c.gram[k].isApprox(c.gram[k].adjoint(), 1e-10))
            throw std::invalid_argument("GradedCalculus: gram not Hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c.gram[k], Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(0) <= 1e-12)
            throw std::domain_error("GradedCalculus: gram not positive definite");
        int next = (k + 1 < n) ? c.dims[k + 1] : 0;
        if (c.d[k].size() == 0) c.d[k] = Eigen::MatrixXcd::Zero(next, c.dims[k]);
        if (c.d[k].rows() != next || c.d[k].cols() != c.dims[k])
            throw std::invalid_argument("GradedCalculus: differential shape mismatch");
    }
    // d^2 = 0
    for (std::size_t k = 0; k + 1 < n; ++k)
        if ((c.d[k + 1] * c.d[k]).norm() > 1e-10)
            throw std::invalid_argument("GradedCalculus: d^2 != 0");
    return c;
}

GradedCalculus from_universal(const UniversalForms& forms,
                              const std::vector<Eigen::MatrixXcd>& grams) {
    GradedCalculus c;
    const int n = forms.maxDegree();
    for (int k = 0; k <= n; ++k) {
        c.dims.push_back(static_cast<int>(forms.dim(k)));
        if (k < n) c.d.push_back(forms.d(k).toComplex());
        if (grams.empty())
            c.gram.push_back(Eigen::MatrixXcd::Identity(c.dims[k], c.dims[k]));
        else
            c.gram.push_back(grams.at(k));
    }
    return validated(std::move(c));
}

HodgeReport hodge(const GradedCalculus& input) {
    GradedCalculus c = validated(input);
    const std::size_t n = c.dims.size();

    // Orthonormal coordinates per degree: G = L L^H, u = L^H x.
    std::vector<Eigen::MatrixXcd> lh(n), lhInv(n);
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::LLT<Eigen::MatrixXcd> llt(c.gram[k]);
        if (llt.info() != Eigen::Success)
            throw std::domain_error("hodge: gram factorisation failed");
        Eigen::MatrixXcd l = llt.matrixL();
        lh[k] = l.adjoint();
        lhInv[k] = lh[k].inverse();
    }
    std::vector<Eigen::MatrixXcd> dt(n);  // transformed differentials
    for (std::size_t k = 0; k + 1 < n; ++k) dt[k] = lh[k + 1] * c.d[k] * lhInv[k];
    if (n >= 1) dt[n - 1] = Eigen::MatrixXcd::Zero(0, c.dims[n - 1]);

    HodgeReport report;
    report.totalDimension = 0;
    for (int dim : c.dims) report.totalDimension += dim;

    // Dirac operator on the direct sum (orthonormal coordinates)
    {
        Eigen::MatrixXcd dirac =
            Eigen::MatrixXcd::Zero(report.totalDimension, report.totalDimension);
        std::vector<int> offsets(n + 1, 0);
        for (std::size_t k = 0; k < n; ++k) offsets[k + 1] = offsets[k] + c.dims[k];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            dirac.block(offsets[k + 1], offsets[k], c.dims[k + 1], c.dims[k]) = dt[k];
            dirac.block(offsets[k], offsets[k + 1], c.dims[k], c.dims[k + 1]) = dt[k].adjoint();
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dirac, Eigen::EigenvaluesOnly);
        report.diracEigenvalues.assign(es.eigenvalues().data(),
                                       es.eigenvalues().data() + report.totalDimension);
    }

    report.harmonic.resize(n);
    report.exact.resize(n);
    report.coexact.resize(n);
    double maxLap = 1.0;
    std::vector<Eigen::MatrixXcd> harmonicT(n), exactT(n), coexactT(n);
    std::vector<int> rankD(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::MatrixXcd lap = dt[k].adjoint() * dt[k];
        if (k >= 1) lap += dt[k - 1] * dt[k - 1].adjoint();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lap);
        for (int i = 0; i < c.dims[k]; ++i) {
            report.laplaceEigenvalues.push_back(es.eigenvalues()(i));
            maxLap = std::max(maxLap, std::abs(es.eigenvalues()(i)));
        }
        // harmonic = kernel of nabla; threshold relative to the top eigenvalue
        double thr = 1e-10 * std::max(es.eigenvalues().size() ? es.eigenvalues().maxCoeff() : 1.0, 1.0);
        int hdim = 0;
        while (hdim < c.dims[k] && es.eigenvalues()(hdim) < thr) ++hdim;
        harmonicT[k] = es.eigenvectors().leftCols(hdim);

        // im d into degree k (from k-1) and im d* into degree k (from k+1)
        if (k >= 1) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dt[k - 1],
                                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
            double tol = 1e-10 * (svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
            int r = 0;
            while (r < svd.singularValues().size() && svd.singularValues()(r) > tol) ++r;
            exactT[k] = svd.matrixU().leftCols(r);
            rankD[k - 1] = r;
        } else {
            exactT[k] = Eigen::MatrixXcd::Zero(c.dims[k], 0);
        }
        if (k + 1 < n && dt[k].rows() > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(dt[k].adjoint()),
                                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
            double tol = 1e-10 * (svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
            int r = 0;
            while (r < svd.singularValues().size() && svd.singularValues()(r) > tol) ++r;
            coexactT[k] = svd.matrixU().leftCols(r);
        } else {
            coexactT[k] = Eigen::MatrixXcd::Zero(c.dims[k], 0);
        }
    }

    // orthogonality residuals in the Gram inner product, and back-transform
    double residual = 0.0;
    bool additive = true;
    for (std::size_t k = 0; k < n; ++k) {
        auto gramDot = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
            if (a.cols() == 0 || b.cols() == 0) return 0.0;
            return (a.adjoint() * b).cwiseAbs().maxCoeff();
        };
        residual = std::max(residual, gramDot(harmonicT[k], exactT[k]));
        residual = std::max(residual, gramDot(harmonicT[k], coexactT[k]));
        residual = std::max(residual, gramDot(exactT[k], coexactT[k]));
        if (harmonicT[k].cols() + exactT[k].cols() + coexactT[k].cols() != c.dims[k])
            additive = false;
        report.harmonic[k] = lhInv[k] * harmonicT[k];
        report.exact[k] = lhInv[k] * exactT[k];
        report.coexact[k] = lhInv[k] * coexactT[k];
    }
    report.orthogonalityResidual = residual;
    report.dimensionsAdditive = additive;
    std::sort(report.laplaceEigenvalues.begin(), report.laplaceEigenvalues.end());
    std::sort(report.diracEigenvalues.begin(), report.diracEigenvalues.end());
    return report;
}

}  // namespace ncg::calculus
