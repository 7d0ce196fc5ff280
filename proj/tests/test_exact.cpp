#include "doctest.h"

#include "ncg/exact_matrix.hpp"
#include "ncg/scalars.hpp"

using namespace ncg;

TEST_CASE("gaussian rational field operations") {
    GaussianRational a(Rational(1, 2), Rational(3));
    GaussianRational b(Rational(-2), Rational(1, 5));
    CHECK(a + b - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.conj() == GaussianRational(Rational(1, 4) + Rational(9)));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK_THROWS_AS(a / GaussianRational(), std::domain_error);
}

TEST_CASE("scalar printing") {
    CHECK(GaussianRational(Rational(3, 4)).str() == "3/4");
    CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-1i");
    CHECK(GaussianRational(Rational(1), Rational(2)).str() == "1+2i");
}

TEST_CASE("rank and nullspace on a hand-solved system") {
    // rows: x + y + z = 0 twice, plus x - z = 0  => rank 2, kernel (1,-2,1)
    ExactMatrix m(3, 3);
    for (int j = 0; j < 3; ++j) {
        m(0, j) = GaussianRational(1);
        m(1, j) = GaussianRational(2);
    }
    m(2, 0) = GaussianRational(1);
    m(2, 2) = GaussianRational(-1);
    CHECK(m.rank() == 2);
    ExactMatrix basis = m.nullspaceBasis();
    REQUIRE(basis.cols() == 1);
    // verify m * basis = 0
    CHECK((m * basis).isZero());
}

TEST_CASE("rank of random integer matrices matches float estimate") {
    std::srand(7);
    for (int rep = 0; rep < 10; ++rep) {
        ExactMatrix m(5, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                m(i, j) = GaussianRational(std::rand() % 7 - 3, std::rand() % 5 - 2);
        ExactMatrix basis = m.nullspaceBasis();
        CHECK(m.rank() + basis.cols() == 7);
        CHECK((m * basis).isZero());
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.toComplex());
        int frank = 0;
        for (int k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > 1e-9) ++frank;
        CHECK(m.rank() == static_cast<std::size_t>(frank));
    }
}

TEST_CASE("kron and hstack shapes") {
    ExactMatrix a = ExactMatrix::identity(2);
    ExactMatrix b(1, 3);
    b(0, 1) = GaussianRational(5);
    ExactMatrix k = a.kron(b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 6);
    CHECK(k(1, 4) == GaussianRational(5));
    CHECK(rankOfUnion(a, a) == 2);
}
