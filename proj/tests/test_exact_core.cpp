#include <random>

#include <gtest/gtest.h>

#include "hesslcp/matrix.hpp"
#include "hesslcp/rational.hpp"
#include "test_support.hpp"

namespace hesslcp {
namespace {

using testing::cofactor_inverse;
using testing::cyclic_instance;
using testing::leibniz_determinant;

TEST(Rational, ParsesLiteralsIntoCanonicalForm) {
    EXPECT_EQ(parse_rational("-81"), Scalar(-81));
    EXPECT_EQ(parse_rational("+4"), Scalar(4));
    const Scalar x = parse_rational("-6/4");
    EXPECT_EQ(x.get_num(), -3);
    EXPECT_EQ(x.get_den(), 2);
    EXPECT_EQ(to_string(parse_rational("14/7")), "2");
}

TEST(Rational, RejectsFloatsAndMalformedLiterals) {
    for (const char* bad : {"1.5", "1e3", "", "-", "3/", "/3", "3/0", "3/-4", " 3", "0x10"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(GaussSolve, IdentityAndDiagonal) {
    EXPECT_EQ(gauss_solve(Matrix::identity(2), Vector{3, -5}), (Vector{3, -5}));
    const Matrix d{{2, 0}, {0, 4}};
    EXPECT_EQ(gauss_solve(d, Vector{1, 1}), (Vector{Scalar(1, 2), Scalar(1, 4)}));
}

TEST(GaussSolve, BasisMatrixOfCyclicInstanceMatchesCofactorInverse) {
    // Basis {3}: column 3 replaced by -M_{.3}.
    const LCPInstance inst = cyclic_instance();
    Matrix a = Matrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) a(i, 2) = -inst.matrix()(i, 2);

    const Vector x = gauss_solve(a, inst.rhs());
    EXPECT_EQ(x, testing::times(cofactor_inverse(a), inst.rhs()));
    // Frozen from the cofactor oracle.
    EXPECT_EQ(x, (Vector{1, Scalar(-23, 14), Scalar(1, 28), Scalar(-5, 28)}));
}

TEST(GaussSolve, MultiColumnRhs) {
    std::mt19937_64 rng(7);
    Matrix a;
    do a = testing::random_integer_matrix(4, 4, rng);
    while (leibniz_determinant(a) == 0);
    const Matrix b = testing::random_integer_matrix(4, 3, rng);
    EXPECT_EQ(a * gauss_solve(a, b), b);
}

TEST(GaussSolve, SingularAndShapeErrors) {
    EXPECT_THROW(gauss_solve(Matrix{{1, 2}, {2, 4}}, Vector{1, 1}), SingularMatrix);
    EXPECT_THROW(gauss_solve(Matrix(2, 3), Matrix(2, 1)), NotSquare);
    EXPECT_THROW(gauss_solve(Matrix::identity(2), Matrix(3, 1)), DimensionMismatch);
}

TEST(GaussSolve, PivotsPastLeadingZero) {
    const Matrix a{{0, 1}, {1, 0}};
    EXPECT_EQ(gauss_solve(a, Vector{2, 3}), (Vector{3, 2}));
}

TEST(GaussSolve, RandomInvertibleTimesInverseIsIdentity) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    int checked = 0;
    while (checked < 60) {
        const std::size_t n = dim(rng);
        const Matrix a = testing::random_integer_matrix(n, n, rng);
        if (determinant(a) == 0) continue;
        const Matrix inv = gauss_solve(a, Matrix::identity(n));
        EXPECT_EQ(a * inv, Matrix::identity(n));
        EXPECT_EQ(determinant(a) * determinant(inv), Scalar(1));
        ++checked;
    }
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(Matrix::identity(3)), Scalar(1));
    EXPECT_EQ(determinant(Matrix{{36}}), Scalar(36));
    const Scalar full = determinant(cyclic_instance().matrix());
    EXPECT_GT(full, 0);
    EXPECT_EQ(full, leibniz_determinant(cyclic_instance().matrix()));
    EXPECT_EQ(full, Scalar(117473409));
    EXPECT_EQ(determinant(Matrix{{1, 2}, {2, 4}}), Scalar(0));
    EXPECT_EQ(determinant(Matrix{{0, 1}, {1, 0}}), Scalar(-1));
}

TEST(Determinant, AgreesWithLeibnizExpansion) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        Matrix a = testing::random_integer_matrix(n, n, rng, -4, 4);
        // Mix in rational entries.
        a(0, 0) /= 3;
        EXPECT_EQ(determinant(a), leibniz_determinant(a)) << a;
    }
}

TEST(Submatrix, PrincipalSubmatrixAndSubvector) {
    const LCPInstance inst = cyclic_instance();
    const IndexSet k2 = leading(2);
    EXPECT_EQ(principal_submatrix(inst.matrix(), k2), (Matrix{{36, -81}, {147, 16}}));
    EXPECT_EQ(principal_submatrix(inst.matrix(), leading(4)), inst.matrix());
    EXPECT_EQ(subvector(inst.rhs(), leading(3)), (Vector{1, 1, -1}));
    const IndexSet odd{0, 2};
    EXPECT_EQ(principal_submatrix(inst.matrix(), odd), (Matrix{{36, 0}, {0, 28}}));
}

TEST(Submatrix, Errors) {
    const Matrix m = Matrix::identity(3);
    EXPECT_THROW(principal_submatrix(m, IndexSet{}), EmptyIndexSet);
    EXPECT_THROW(principal_submatrix(m, IndexSet{0, 3}), IndexOutOfRange);
    EXPECT_THROW(subvector(Vector{1, 2}, IndexSet{}), EmptyIndexSet);
}

} // namespace
} // namespace hesslcp
