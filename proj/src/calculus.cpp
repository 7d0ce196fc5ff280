#include "ncg/calculus.hpp"

#include <stdexcept>
#include <string>

#include "ncg/homology.hpp"

namespace ncg::calculus {

namespace {

constexpr std::size_t kSizeLimit = 1000000;

std::size_t powst(std::size_t base, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

UniversalForms::UniversalForms(alg::FiniteAlgebra a, int maxDegree)
    : a_(std::move(a)), maxDegree_(maxDegree) {
    if (maxDegree_ < 0) throw std::invalid_argument("UniversalForms: negative degree");
    const int d = a_.dim();
    if ((static_cast<std::size_t>(d) + 1) * powst(d, maxDegree_) > kSizeLimit)
        throw homology::SizeLimitError("UniversalForms: (d+1)d^N exceeds the 10^6 guard");
    d_.resize(maxDegree_ + 1);
    for (int k = 0; k < maxDegree_; ++k) {
        std::size_t slots = powst(d, k);
        ExactMatrix m(dim(k + 1), dim(k));
        // d((a, lambda) (x) u) = (0, 1) (x) a (x) u ; the lambda part dies.
        for (int at = 0; at < d; ++at)
            for (std::size_t u = 0; u < slots; ++u) {
                std::size_t src = static_cast<std::size_t>(at) * slots + u;
                std::size_t dst = static_cast<std::size_t>(d) * slots * d +
                                  static_cast<std::size_t>(at) * slots + u;
                m(dst, src) = GaussianRational(1);
            }
        d_[k] = std::move(m);
    }
    if (maxDegree_ >= 0) d_[maxDegree_] = ExactMatrix(0, dim(maxDegree_));  // top degree: d = 0
}

std::size_t UniversalForms::dim(int degree) const {
    if (degree < 0 || degree > maxDegree_) return 0;
    return (static_cast<std::size_t>(a_.dim()) + 1) * powst(a_.dim(), degree);
}

const ExactMatrix& UniversalForms::d(int degree) const {
    if (degree < 0 || degree > maxDegree_)
        throw std::invalid_argument("UniversalForms::d: degree out of range");
    return d_[degree];
}

ExactVector UniversalForms::basis(int degree, std::size_t index) const {
    ExactVector v(dim(degree));
    v.at(index) = GaussianRational(1);
    return v;
}

ExactVector UniversalForms::leftAction(const ExactVector& x, int degree,
                                       const ExactVector& form) const {
    const int d = a_.dim();
    std::size_t slots = powst(d, degree);
    ExactVector out(dim(degree));
    for (std::size_t idx = 0; idx < form.size(); ++idx) {
        if (form[idx].isZero()) continue;
        std::size_t at = idx / slots;
        std::size_t u = idx % slots;
        // x (a + lambda 1) = x a + lambda x, landing in the e_i components
        if (at < static_cast<std::size_t>(d)) {
            for (int i = 0; i < d; ++i) {
                if (x[i].isZero()) continue;
                for (int m = 0; m < d; ++m) {
                    const GaussianRational& coeff = a_.c(i, static_cast<int>(at), m);
                    if (!coeff.isZero())
                        out[static_cast<std::size_t>(m) * slots + u] += x[i] * coeff * form[idx];
                }
            }
        } else {
            for (int i = 0; i < d; ++i)
                if (!x[i].isZero())
                    out[static_cast<std::size_t>(i) * slots + u] += x[i] * form[idx];
        }
    }
    return out;
}

ExactVector UniversalForms::rightAction(int degree, const ExactVector& form,
                                        const ExactVector& y) const {
    const int d = a_.dim();
    const std::size_t slots = powst(d, degree);
    ExactVector out(dim(degree));
    std::vector<int> tuple(degree);
    for (std::size_t idx = 0; idx < form.size(); ++idx) {
        if (form[idx].isZero()) continue;
        std::size_t at = idx / slots;
        std::size_t u = idx % slots;
        {
            std::size_t tmp = u;
            for (int k = degree - 1; k >= 0; --k) {
                tuple[k] = static_cast<int>(tmp % d);
                tmp /= d;
            }
        }
        if (degree == 0) {
            // unitization product (a + lambda)(b) = ab + lambda b
            if (at < static_cast<std::size_t>(d)) {
                for (int j = 0; j < d; ++j) {
                    if (y[j].isZero()) continue;
                    for (int m = 0; m < d; ++m) {
                        const GaussianRational& coeff = a_.c(static_cast<int>(at), j, m);
                        if (!coeff.isZero()) out[m] += form[idx] * y[j] * coeff;
                    }
                }
            } else {
                for (int j = 0; j < d; ++j)
                    if (!y[j].isZero()) out[j] += form[idx] * y[j];
            }
            continue;
        }
        GaussianRational lead((degree % 2 == 0) ? 1 : -1);  // (-1)^k term
        // (a + lambda 1) a_1: multiply the Atilde part into the first slot
        for (int j = 0; j < d; ++j) {
            if (y[j].isZero()) continue;
            // new slots: (u_2, ..., u_k, j)
            std::size_t base = 0;
            for (int k = 1; k < degree; ++k) base = base * d + tuple[k];
            base = base * d + j;
            if (at < static_cast<std::size_t>(d)) {
                for (int m = 0; m < d; ++m) {
                    const GaussianRational& coeff = a_.c(static_cast<int>(at), tuple[0], m);
                    if (!coeff.isZero())
                        out[static_cast<std::size_t>(m) * slots + base] +=
                            lead * form[idx] * y[j] * coeff;
                }
            } else {
                out[static_cast<std::size_t>(tuple[0]) * slots + base] += lead * form[idx] * y[j];
            }
        }
        // sum over r = 1..k: merge slot r with its successor (a_{k+1} = y)
        for (int r = 1; r <= degree; ++r) {
            GaussianRational sign(((degree - r) % 2 == 0) ? 1 : -1);
            for (int j = 0; j < d; ++j) {
                if (y[j].isZero()) continue;
                int mergeWith = (r < degree) ? tuple[r] : j;  // slot r merges a_r a_{r+1}
                for (int m = 0; m < d; ++m) {
                    const GaussianRational& coeff = a_.c(tuple[r - 1], mergeWith, m);
                    if (coeff.isZero()) continue;
                    std::size_t enc = 0;
                    for (int k = 0; k < r - 1; ++k) enc = enc * d + tuple[k];
                    enc = enc * d + m;
                    for (int k = r + 1; k < degree; ++k) enc = enc * d + tuple[k];
                    if (r < degree) enc = enc * d + j;
                    out[at * slots + enc] += sign * form[idx] * y[j] * coeff;
                }
            }
        }
    }
    return out;
}

ExactVector UniversalForms::product(int p, const ExactVector& u, int q,
                                    const ExactVector& v) const {
    if (p + q > maxDegree_) throw std::invalid_argument("UniversalForms::product: degree overflow");
    const int d = a_.dim();
    const std::size_t slotsQ = powst(d, q);
    const std::size_t slotsOut = powst(d, p + q);
    ExactVector out(dim(p + q));
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].isZero()) continue;
        std::size_t bt = idx / slotsQ;
        std::size_t w = idx % slotsQ;
        ExactVector left;
        if (bt < static_cast<std::size_t>(d)) {
            ExactVector y(d);
            y[bt] = GaussianRational(1);
            left = rightAction(p, u, y);
        } else {
            left = u;  // multiply by the adjoined unit
        }
        // append the q differential slots of v
        const std::size_t slotsP = powst(d, p);
        for (std::size_t lidx = 0; lidx < left.size(); ++lidx) {
            if (left[lidx].isZero()) continue;
            std::size_t lat = lidx / slotsP;
            std::size_t lu = lidx % slotsP;
            out[lat * slotsOut + lu * slotsQ + w] += left[lidx] * v[idx];
        }
    }
    return out;
}

UniversalForms universal_forms(const alg::FiniteAlgebra& a, int maxDegree) {
    return UniversalForms(a, maxDegree);
}

std::vector<ExactMatrix> derivations(const alg::FiniteAlgebra& a) {
    const int d = a.dim();
    // unknowns X_{k,m} = k-th coordinate of X(e_m); row per (i, j, k)
    ExactMatrix system(static_cast<std::size_t>(d) * d * d, static_cast<std::size_t>(d) * d);
    auto var = [d](int k, int m) { return static_cast<std::size_t>(k) * d + m; };
    std::size_t row = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k, ++row) {
                for (int m = 0; m < d; ++m) {
                    if (!a.c(i, j, m).isZero()) system(row, var(k, m)) += a.c(i, j, m);
                    if (!a.c(m, j, k).isZero()) system(row, var(m, i)) -= a.c(m, j, k);
                    if (!a.c(i, m, k).isZero()) system(row, var(m, j)) -= a.c(i, m, k);
                }
            }
    ExactMatrix basis = system.nullspaceBasis();
    std::vector<ExactMatrix> out;
    for (std::size_t col = 0; col < basis.cols(); ++col) {
        ExactMatrix x(d, d);
        for (int k = 0; k < d; ++k)
            for (int m = 0; m < d; ++m) x(k, m) = basis(var(k, m), col);
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

void check_cyclic_and_closed(const MultilinearFunctional& phi, const alg::FiniteAlgebra& a,
                             bool twisted, const char* what) {
    const int n = phi.degree;
    ExactMatrix lambda = homology::cyclic_operator(a, n, twisted).transpose();
    ExactVector rotated = lambda.apply(phi.coeffs);
    if (rotated != phi.coeffs)
        throw std::invalid_argument(std::string(what) + ": functional is not cyclic");
    ExactMatrix b = (twisted ? homology::twisted_boundary(a, n + 1)
                             : homology::hochschild_boundary(a, n + 1))
                        .transpose();
    ExactVector cob = b.apply(phi.coeffs);
    for (const auto& z : cob)
        if (!z.isZero())
            throw std::invalid_argument(std::string(what) + ": functional is not b-closed");
}

}  // namespace

MultilinearFunctional cocycle_from_trace(const UniversalForms& forms, const ExactVector& integral,
                                         int n) {
    const alg::FiniteAlgebra& a = forms.algebra();
    const int d = a.dim();
    if (n < 0 || n > forms.maxDegree())
        throw std::invalid_argument("cocycle_from_trace: degree out of range");
    if (integral.size() != forms.dim(n))
        throw std::invalid_argument("cocycle_from_trace: functional length mismatch");
    // closedness: integral vanishes on d(Omega^{n-1})
    if (n >= 1) {
        const ExactMatrix& dd = forms.d(n - 1);
        for (std::size_t col = 0; col < dd.cols(); ++col) {
            GaussianRational v;
            for (std::size_t rrow = 0; rrow < dd.rows(); ++rrow)
                if (!dd(rrow, col).isZero()) v += dd(rrow, col) * integral[rrow];
            if (!v.isZero())
                throw std::invalid_argument(
                    "cocycle_from_trace: functional is not closed (basis form " +
                    std::to_string(col) + " of degree " + std::to_string(n - 1) + ")");
        }
    }
    // graded trace on spanning pairs
    auto evaluate = [&](const ExactVector& w) {
        GaussianRational v;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].isZero()) v += w[i] * integral[i];
        return v;
    };
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        GaussianRational sign(((p * q) % 2 == 0) ? 1 : -1);
        for (std::size_t i = 0; i < forms.dim(p); ++i)
            for (std::size_t j = 0; j < forms.dim(q); ++j) {
                ExactVector bi = forms.basis(p, i);
                ExactVector bj = forms.basis(q, j);
                GaussianRational lhs = evaluate(forms.product(p, bi, q, bj));
                GaussianRational rhs = sign * evaluate(forms.product(q, bj, p, bi));
                if (lhs != rhs)
                    throw std::invalid_argument(
                        "cocycle_from_trace: graded-trace identity fails on pair (deg " +
                        std::to_string(p) + " #" + std::to_string(i) + ", deg " +
                        std::to_string(q) + " #" + std::to_string(j) + ")");
            }
    }
    // phi(a_{i0},...,a_{in}) = integral(e_{i0} d e_{i1} ... d e_{in})
    MultilinearFunctional phi;
    phi.degree = n;
    std::size_t slots = powst(d, n);
    phi.coeffs.resize(powst(d, n + 1));
    for (int at = 0; at < d; ++at)
        for (std::size_t u = 0; u < slots; ++u)
            phi.coeffs[static_cast<std::size_t>(at) * slots + u] =
                integral[static_cast<std::size_t>(at) * slots + u];
    check_cyclic_and_closed(phi, a, false, "cocycle_from_trace(post)");
    return phi;
}

TraceData trace_from_cocycle(const MultilinearFunctional& psi, const alg::FiniteAlgebra& a,
                             const std::optional<ExactMatrix>& sigma) {
    const int n = psi.degree;
    const int d = a.dim();
    if (psi.coeffs.size() != powst(d, n + 1))
        throw std::invalid_argument("trace_from_cocycle: coefficient length mismatch");
    alg::FiniteAlgebra checkAlg = a;
    if (sigma) {
        checkAlg = alg::FiniteAlgebra(
            d,
            [&] {
                std::vector<GaussianRational> s(static_cast<std::size_t>(d) * d * d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        for (int k = 0; k < d; ++k)
                            s[(static_cast<std::size_t>(i) * d + j) * d + k] = a.c(i, j, k);
                return s;
            }(),
            a.unit(), *sigma);
    }
    check_cyclic_and_closed(psi, checkAlg, sigma.has_value(), "trace_from_cocycle");

    UniversalForms forms(a, n);
    std::size_t slots = powst(d, n);
    ExactVector integral(forms.dim(n));
    for (int at = 0; at < d; ++at)
        for (std::size_t u = 0; u < slots; ++u)
            integral[static_cast<std::size_t>(at) * slots + u] =
                psi.coeffs[static_cast<std::size_t>(at) * slots + u];
    // lambda-part rows stay zero: integral(d a_1 ... d a_n) = 0.

    auto evaluate = [&](const ExactVector& w) {
        GaussianRational v;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].isZero()) v += w[i] * integral[i];
        return v;
    };
    // closedness (exact, by construction; verified anyway)
    if (n >= 1) {
        const ExactMatrix& dd = forms.d(n - 1);
        for (std::size_t col = 0; col < dd.cols(); ++col) {
            GaussianRational v;
            for (std::size_t rrow = 0; rrow < dd.rows(); ++rrow)
                if (!dd(rrow, col).isZero()) v += dd(rrow, col) * integral[rrow];
            if (!v.isZero()) throw std::logic_error("trace_from_cocycle: closedness failed");
        }
    }
    if (!sigma) {
        // graded-trace identity, exact on spanning pairs
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            GaussianRational sign(((p * q) % 2 == 0) ? 1 : -1);
            for (std::size_t i = 0; i < forms.dim(p); ++i)
                for (std::size_t j = 0; j < forms.dim(q); ++j) {
                    GaussianRational lhs =
                        evaluate(forms.product(p, forms.basis(p, i), q, forms.basis(q, j)));
                    GaussianRational rhs =
                        sign * evaluate(forms.product(q, forms.basis(q, j), p, forms.basis(p, i)));
                    if (lhs != rhs)
                        throw std::logic_error(
                            "trace_from_cocycle: graded-trace identity failed on pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ") degrees (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
                }
        }
    } else {
        // twisted trace: integral(sigma(e_i) w) = integral(w e_i) on spanning pairs
        for (int i = 0; i < d; ++i) {
            ExactVector ei(d);
            ei[i] = GaussianRational(1);
            ExactVector si(d);
            for (int r = 0; r < d; ++r) si[r] = (*sigma)(r, i);
            for (std::size_t j = 0; j < forms.dim(n); ++j) {
                ExactVector w = forms.basis(n, j);
                GaussianRational lhs = evaluate(forms.leftAction(si, n, w));
                GaussianRational rhs = evaluate(forms.rightAction(n, w, ei));
                if (lhs != rhs)
                    throw std::logic_error(
                        "trace_from_cocycle: twisted trace identity failed at generator " +
                        std::to_string(i) + ", form " + std::to_string(j));
            }
        }
    }
    return TraceData{std::move(forms), std::move(integral)};
}

bool twisted_cocycle_check(const MultilinearFunctional& phi, const ExactMatrix& sigma,
                           const alg::FiniteAlgebra& a) {
    const int d = a.dim();
    alg::FiniteAlgebra withSigma(
        d,
        [&] {
            std::vector<GaussianRational> s(static_cast<std::size_t>(d) * d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        s[(static_cast<std::size_t>(i) * d + j) * d + k] = a.c(i, j, k);
            return s;
        }(),
        a.unit(), sigma);
    const int n = phi.degree;
    ExactMatrix lambda = homology::cyclic_operator(withSigma, n, true).transpose();
    if (lambda.apply(phi.coeffs) != phi.coeffs) return false;
    ExactMatrix b = homology::twisted_boundary(withSigma, n + 1).transpose();
    for (const auto& z : b.apply(phi.coeffs))
        if (!z.isZero()) return false;
    return true;
}

bool cyclic_cocycle_check(const MultilinearFunctional& phi, const alg::FiniteAlgebra& a) {
    const int n = phi.degree;
    ExactMatrix lambda = homology::cyclic_operator(a, n, false).transpose();
    if (lambda.apply(phi.coeffs) != phi.coeffs) return false;
    ExactMatrix b = homology::hochschild_boundary(a, n + 1).transpose();
    for (const auto& z : b.apply(phi.coeffs))
        if (!z.isZero()) return false;
    return true;
}

}  // namespace ncg::calculus
