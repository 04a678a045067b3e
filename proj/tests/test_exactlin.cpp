#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/exactlin.hpp"

using namespace wb;

TEST_CASE("rational rref ranks") {
    RationalField Q;
    Matrix<RationalField> M(3, 3);
    // rows (1,2,3), (2,4,6), (0,1,1): rank 2
    long vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M(i, j) = vals[i][j];
    CHECK(rank(Q, M) == 2);
    auto ker = kernel_basis(Q, M);
    CHECK(ker.nrows == 1);
    // M * k == 0
    for (std::size_t i = 0; i < 3; ++i) {
        bigrat s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += M(i, j) * ker(0, j);
        CHECK(s == 0);
    }
}

TEST_CASE("rank over F_p differs from rank over Q when p divides pivots") {
    RationalField Q;
    Matrix<RationalField> M(2, 2);
    M(0, 0) = 2; M(0, 1) = 0; M(1, 0) = 0; M(1, 1) = 3;
    CHECK(rank(Q, M) == 2);
    CHECK(rank_mod_p(M, 2) == 1);
    CHECK(rank_mod_p(M, 3) == 1);
    CHECK(rank_mod_p(M, 5) == 2);
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    for (std::int64_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(6), validation_error);
    CHECK_THROWS_AS(PrimeField(1), validation_error);
}

TEST_CASE("solve: consistent and inconsistent systems") {
    RationalField Q;
    Matrix<RationalField> A(2, 2);
    A(0, 0) = 1; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = 1;
    auto sol = solve(Q, A, {bigrat(2), bigrat(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] + (*sol)[1] == 2);
    CHECK_FALSE(solve(Q, A, {bigrat(2), bigrat(3)}).has_value());
}

TEST_CASE("solve over F_p") {
    PrimeField F(5);
    Matrix<PrimeField> A(2, 2);
    A(0, 0) = 2; A(0, 1) = 1; A(1, 0) = 0; A(1, 1) = 3;
    auto sol = solve(F, A, {1, 2});
    REQUIRE(sol.has_value());
    CHECK(F.add(F.mul(2, (*sol)[0]), (*sol)[1]) == 1);
    CHECK(F.mul(3, (*sol)[1]) == 2);
}

TEST_CASE("kernel of a wide matrix has expected dimension") {
    RationalField Q;
    Matrix<RationalField> M(2, 5);
    for (std::size_t j = 0; j < 5; ++j) { M(0, j) = 1; M(1, j) = static_cast<long>(j); }
    auto ker = kernel_basis(Q, M);
    CHECK(ker.nrows == 3);
    CHECK(rank(Q, ker) == 3);
}
