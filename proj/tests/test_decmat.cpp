#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "wb/decmat.hpp"
#include "wb/partition.hpp"
#include "wb/weyl.hpp"

using namespace wb;

namespace {

std::size_t row_of(const QuotientMatrix& M, const Partition& lam) {
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        if (M.rows[i].lambda == lam) return i;
    REQUIRE(false);
    return 0;
}

std::size_t row_of_q(const std::vector<BlockLabel>& v, const PQuotient& q) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].quotient == q) return i;
    REQUIRE(false);
    return 0;
}

long weyl_at(const LabeledDecMatrix& M, const Partition& r, const Partition& c) {
    std::size_t i = 0, j = 0;
    while (i < M.row_labels.size() && M.row_labels[i] != r) ++i;
    while (j < M.col_labels.size() && M.col_labels[j] != c) ++j;
    REQUIRE(i < M.row_labels.size());
    REQUIRE(j < M.col_labels.size());
    return M.entry[i][j];
}

/* Column labels are a subset of row labels; each column has entry 1 on its
 * own row, zeros strictly above, and support dominated by the column label. */
void check_unitriangular(const QuotientMatrix& M) {
    for (std::size_t j = 0; j < M.cols.size(); ++j) {
        const std::size_t d = row_of(M, M.cols[j].lambda);
        CHECK(M.entry[d][j] == 1);
        for (std::size_t i = 0; i < d; ++i) CHECK(M.entry[i][j] == 0);
        for (std::size_t i = 0; i < M.rows.size(); ++i) {
            if (M.entry[i][j] == 0) continue;
            CHECK(M.entry[i][j] > 0);
            const Dominance cmp = dominance(M.cols[j].lambda, M.rows[i].lambda);
            CHECK((cmp == Dominance::greater || cmp == Dominance::equal));
        }
    }
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < M.cols.size(); ++j) s += M.entry[i][j];
        CHECK(s >= 1);
    }
}

void check_equal_entries(const QuotientMatrix& A, const QuotientMatrix& B) {
    REQUIRE(A.rows.size() == B.rows.size());
    REQUIRE(A.cols.size() == B.cols.size());
    for (std::size_t i = 0; i < A.rows.size(); ++i) {
        CHECK(A.rows[i].lambda == B.rows[i].lambda);
        for (std::size_t j = 0; j < A.cols.size(); ++j) CHECK(A.entry[i][j] == B.entry[i][j]);
    }
}

/* Row conjugation against column Mullineux leaves the matrix invariant.
 * Finding the conjugate row by partition rather than by label also pins
 * conjugate_label to the abacus. */
void check_mullineux(const QuotientMatrix& M) {
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        const std::size_t ic = row_of(M, conjugate(M.rows[i].lambda));
        CHECK(M.rows[ic].quotient == conjugate_label(M.rows[i].quotient));
        CHECK(conjugate_label(M.rows[ic].quotient) == M.rows[i].quotient);
        for (std::size_t j = 0; j < M.cols.size(); ++j) {
            const std::size_t jm = row_of_q(M.cols, rock_mullineux(M.cols[j].quotient));
            CHECK(M.entry[i][j] == M.entry[ic][jm]);
        }
    }
}

}  // namespace

TEST_CASE("enumerate_tuples counts and contents") {
    auto t32 = enumerate_tuples(3, 2);
    CHECK(t32.size() == 9);
    auto t23 = enumerate_tuples(2, 3);
    CHECK(t23.size() == 10);
    for (const auto& tup : t23) {
        REQUIRE(tup.size() == 2);
        CHECK(part_sum(tup[0]) + part_sum(tup[1]) == 3);
    }
    std::sort(t23.begin(), t23.end());
    CHECK(std::adjacent_find(t23.begin(), t23.end()) == t23.end());
    CHECK(enumerate_tuples(4, 0).size() == 1);
    CHECK_THROWS_AS(enumerate_tuples(0, 1), validation_error);
}

TEST_CASE("rock_decnumber single box") {
    CHECK(rock_decnumber({{1}, {}}, {{}, {1}}, 2) == 1);
    CHECK(rock_decnumber({{}, {1}}, {{}, {1}}, 2) == 1);
    CHECK(rock_decnumber({{}, {}, {1}}, {{}, {}, {1}}, 3) == 1);
    CHECK(rock_decnumber({{1}, {}, {}}, {{}, {1}, {}}, 3) == 1);
    CHECK(rock_decnumber({{1}, {}, {}}, {{}, {}, {1}}, 3) == 0);
    CHECK_THROWS_AS(rock_decnumber({{1}, {}}, {{1}, {}}, 2), validation_error);
    CHECK_THROWS_AS(rock_decnumber({{1}, {}}, {{}, {1}}, 3), validation_error);
}

TEST_CASE("rock matrix, p=2 weight 1") {
    const QuotientMatrix M = rock_decmatrix(2, 1);
    REQUIRE(M.rows.size() == 2);
    REQUIRE(M.cols.size() == 1);
    CHECK(M.core == Partition{});
    CHECK(M.rows[0].lambda == Partition{2});
    CHECK(M.rows[1].lambda == Partition{1, 1});
    CHECK(M.cols[0].lambda == Partition{2});
    CHECK(M.entry[0][0] == 1);
    CHECK(M.entry[1][0] == 1);
    check_unitriangular(M);
}

TEST_CASE("rock matrix, p=3 weight 1 is the Brauer line") {
    const QuotientMatrix M = rock_decmatrix(3, 1);
    REQUIRE(M.rows.size() == 3);
    REQUIRE(M.cols.size() == 2);
    CHECK(M.rows[0].lambda == Partition{3});
    CHECK(M.rows[1].lambda == Partition{2, 1});
    CHECK(M.rows[2].lambda == Partition{1, 1, 1});
    const std::vector<std::vector<long>> want = {{1, 0}, {1, 1}, {0, 1}};
    CHECK(M.entry == want);
    check_unitriangular(M);
    check_mullineux(M);
}

TEST_CASE("rock matrix, p=2 weight 2") {
    const QuotientMatrix M = rock_decmatrix(2, 2);
    REQUIRE(M.rows.size() == 5);
    REQUIRE(M.cols.size() == 2);
    CHECK(M.core == Partition{1});
    const std::vector<Partition> lam = {{5}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}};
    const std::vector<PQuotient> q = {
        {{}, {2}}, {{}, {1, 1}}, {{1}, {1}}, {{2}, {}}, {{1, 1}, {}}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(M.rows[i].lambda == lam[i]);
        CHECK(M.rows[i].quotient == q[i]);
    }
    const std::vector<std::vector<long>> want = {{1, 0}, {0, 1}, {1, 1}, {0, 1}, {1, 0}};
    CHECK(M.entry == want);
    check_unitriangular(M);
}

TEST_CASE("adjustment and full matrix, p=2 weight 2") {
    const DecProvider prov = weyl_provider();
    const QuotientMatrix A = adjustment_matrix(2, 2, prov);
    REQUIRE(A.rows.size() == 2);
    CHECK(A.rows[0].lambda == Partition{5});
    CHECK(A.rows[1].lambda == Partition{3, 2});
    const std::vector<std::vector<long>> wantA = {{1, 0}, {1, 1}};
    CHECK(A.entry == wantA);
    check_unitriangular(A);

    const QuotientMatrix F = full_decmatrix(2, 2, prov);
    const std::vector<std::vector<long>> wantF = {{1, 0}, {1, 1}, {2, 1}, {1, 1}, {1, 0}};
    CHECK(F.entry == wantF);
    check_unitriangular(F);
    check_mullineux(F);
}

TEST_CASE("full matrix matches the Weyl oracle through conjugation") {
    /* [S^lam : D^mu] = [Delta(lam') : L(mu')], compared entry by entry on
     * the weight two block over F_2 against the tableau-built Gram ranks. */
    const QuotientMatrix F = full_decmatrix(2, 2, weyl_provider());
    const LabeledDecMatrix W = block_submatrix(schur_decmatrix(5, 5, 2), 2, {1});
    REQUIRE(W.row_labels.size() == 5);
    for (std::size_t i = 0; i < F.rows.size(); ++i)
        for (std::size_t j = 0; j < F.cols.size(); ++j)
            CHECK(F.entry[i][j] ==
                  weyl_at(W, conjugate(F.rows[i].lambda), conjugate(F.cols[j].lambda)));
}

TEST_CASE("structural checks at larger weight") {
    const DecProvider prov = weyl_provider();
    for (const auto& [p, w] : {std::pair<long, long>{2, 3}, {3, 2}}) {
        const QuotientMatrix R = rock_decmatrix(p, w);
        check_unitriangular(R);
        check_equal_entries(R, rock_decmatrix_serial(p, w));
        const QuotientMatrix A = adjustment_matrix(p, w, prov);
        check_unitriangular(A);
        const QuotientMatrix F = full_decmatrix(p, w, prov);
        check_unitriangular(F);
        check_mullineux(F);
        /* adjustment only couples labels with matching component sizes */
        for (std::size_t i = 0; i < A.rows.size(); ++i)
            for (std::size_t j = 0; j < A.cols.size(); ++j) {
                if (A.entry[i][j] == 0) continue;
                for (long c = 0; c < p; ++c)
                    CHECK(part_sum(A.rows[i].quotient[static_cast<std::size_t>(c)]) ==
                          part_sum(A.cols[j].quotient[static_cast<std::size_t>(c)]));
            }
    }
    CHECK(rock_decmatrix(3, 2).rows.size() == 9);
    CHECK(rock_decmatrix(3, 2).cols.size() == 5);
}

TEST_CASE("adjustment is trivial when the weight stays below p") {
    const QuotientMatrix A = adjustment_matrix(5, 2, weyl_provider());
    REQUIRE(A.rows.size() == 14);
    for (std::size_t i = 0; i < A.rows.size(); ++i)
        for (std::size_t j = 0; j < A.cols.size(); ++j)
            CHECK(A.entry[i][j] == (i == j ? 1 : 0));
    const QuotientMatrix R = rock_decmatrix(5, 2);
    const QuotientMatrix F = full_decmatrix(5, 2, weyl_provider());
    check_equal_entries(R, F);
    check_unitriangular(F);
}

TEST_CASE("matrix constructors validate input") {
    CHECK_THROWS_AS(rock_decmatrix(2, 0), validation_error);
    CHECK_THROWS_AS(rock_decmatrix(4, 1), validation_error);
    CHECK_THROWS_AS(adjustment_matrix(2, 0, weyl_provider()), validation_error);
}
