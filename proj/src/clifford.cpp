#include "ncg/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace ncg::clifford {

CliffordAlgebra::CliffordAlgebra(int n, std::vector<Rational> form)
    : n_(n), form_(std::move(form)) {
    if (n < 0 || n > 12)
        throw std::invalid_argument("CliffordAlgebra: generator count must be in 0..12");
    if (form_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("CliffordAlgebra: form must list one diagonal entry per generator");
}

CliffordAlgebra clifford(int n, std::vector<Rational> form) {
    return CliffordAlgebra(n, std::move(form));
}

std::pair<GaussianRational, std::uint32_t> CliffordAlgebra::monomialProduct(
    std::uint32_t a, std::uint32_t b) const {
    GaussianRational coeff(1);
    std::uint32_t acc = a;
    for (int t = 0; t < n_; ++t) {
        if (!(b & (1u << t))) continue;
        // move e_t from the left of the remaining b-part past the tail of acc
        std::uint32_t greater = acc & ~((2u << t) - 1u);
        if (std::popcount(greater) % 2 == 1) coeff = -coeff;
        if (acc & (1u << t)) {
            coeff *= GaussianRational(-form_[t]);  // e_t e_t = -B(e_t, e_t)
            acc &= ~(1u << t);
        } else {
            acc |= (1u << t);
        }
    }
    return {coeff, acc};
}

CliffordAlgebra::Element CliffordAlgebra::multiply(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [ma, ca] : x)
        for (const auto& [mb, cb] : y) {
            auto [coeff, mono] = monomialProduct(ma, mb);
            GaussianRational v = ca * cb * coeff;
            if (v.isZero()) continue;
            auto it = out.find(mono);
            if (it == out.end()) {
                out.emplace(mono, v);
            } else {
                it->second += v;
                if (it->second.isZero()) out.erase(it);
            }
        }
    return out;
}

CliffordAlgebra::Element CliffordAlgebra::grading(const Element& x) const {
    Element out;
    for (const auto& [mono, c] : x) {
        if (std::popcount(mono) % 2 == 1)
            out[mono] = -c;
        else
            out[mono] = c;
    }
    return out;
}

namespace {

// 2x2 blocks: pauli1/2/3 and identity, exact
ExactMatrix pauli(int which) {
    ExactMatrix m(2, 2);
    switch (which) {
        case 0:
            m(0, 0) = GaussianRational(1);
            m(1, 1) = GaussianRational(1);
            break;
        case 1:
            m(0, 1) = GaussianRational(1);
            m(1, 0) = GaussianRational(1);
            break;
        case 2:
            m(0, 1) = -GaussianRational::i();
            m(1, 0) = GaussianRational::i();
            break;
        case 3:
            m(0, 0) = GaussianRational(1);
            m(1, 1) = GaussianRational(-1);
            break;
        default:
            throw std::logic_error("pauli: bad index");
    }
    return m;
}

}  // namespace

std::vector<ExactMatrix> spin_representation(int k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("spin_representation: k must be in 1..6 (2^k x 2^k matrices)");
    std::vector<ExactMatrix> gens;
    for (int j = 1; j <= k; ++j) {
        for (int which : {1, 2}) {
            ExactMatrix m = ExactMatrix::identity(1);
            for (int slot = 1; slot <= k; ++slot) {
                int block;
                if (slot < j)
                    block = 3;  // sigma_3 tail keeps earlier generators anticommuting
                else if (slot == j)
                    block = which;
                else
                    block = 0;
                m = m.kron(pauli(block));
            }
            gens.push_back(m * GaussianRational::i());  // i * sigma-block: squares to -1
        }
    }
    return gens;
}

SymbolOperator SymbolOperator::multiply(const SymbolOperator& o) const {
    if (cols != o.rows || symbols != o.symbols)
        throw std::invalid_argument("SymbolOperator: shape mismatch in multiply");
    SymbolOperator r;
    r.symbols = symbols;
    r.rows = rows;
    r.cols = o.cols;
    r.entries.resize(rows * o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& left = at(i, k);
            if (left.empty()) continue;
            for (std::size_t j = 0; j < o.cols; ++j) {
                const auto& right = o.at(k, j);
                if (right.empty()) continue;
                auto& target = r.at(i, j);
                for (const auto& [ea, ca] : left)
                    for (const auto& [eb, cb] : right) {
                        std::vector<int> e(symbols);
                        for (int s = 0; s < symbols; ++s) e[s] = ea[s] + eb[s];
                        GaussianRational v = ca * cb;
                        auto it = target.find(e);
                        if (it == target.end()) {
                            target.emplace(std::move(e), v);
                        } else {
                            it->second += v;
                            if (it->second.isZero()) target.erase(it);
                        }
                    }
            }
        }
    return r;
}

SymbolOperator minus_laplacian(int symbols, std::size_t m) {
    SymbolOperator r;
    r.symbols = symbols;
    r.rows = r.cols = m;
    r.entries.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (int s = 0; s < symbols; ++s) {
            std::vector<int> e(symbols, 0);
            e[s] = 2;
            r.at(i, i)[e] = GaussianRational(-1);
        }
    return r;
}

std::pair<SymbolOperator, SymbolOperator> dirac_square(const std::vector<ExactMatrix>& rep) {
    if (rep.empty()) throw std::invalid_argument("dirac_square: empty representation");
    const std::size_t m = rep[0].rows();
    const int n = static_cast<int>(rep.size());
    for (const auto& g : rep)
        if (g.rows() != m || g.cols() != m)
            throw std::invalid_argument("dirac_square: matrices must share a square shape");
    // verify the Clifford relations first; report the offending pair
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ExactMatrix anti = rep[i] * rep[j] + rep[j] * rep[i];
            ExactMatrix expected =
                (i == j) ? ExactMatrix::identity(m) * GaussianRational(-2) : ExactMatrix(m, m);
            if (!(anti - expected).isZero())
                throw std::invalid_argument("dirac_square: Clifford relation fails for pair (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
        }
    SymbolOperator dirac;
    dirac.symbols = n;
    dirac.rows = dirac.cols = m;
    dirac.entries.resize(m * m);
    for (int s = 0; s < n; ++s) {
        std::vector<int> e(n, 0);
        e[s] = 1;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                const GaussianRational& v = rep[s](r, c);
                if (v.isZero()) continue;
                auto& entry = dirac.at(r, c);
                auto it = entry.find(e);
                if (it == entry.end()) {
                    entry.emplace(e, v);
                } else {
                    it->second += v;
                    if (it->second.isZero()) entry.erase(it);
                }
            }
    }
    SymbolOperator square = dirac.multiply(dirac);
    if (!(square == minus_laplacian(n, m)))
        throw std::logic_error("dirac_square: D^2 is not minus the Laplacian");
    return {dirac, square};
}

}  // namespace ncg::clifford
