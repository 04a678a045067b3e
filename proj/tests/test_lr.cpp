#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "wb/lr.hpp"

using namespace wb;

TEST_CASE("littlewood-richardson basics") {
    CHECK(lr_coeff({2}, {1}, {1}) == 1);
    CHECK(lr_coeff({1, 1}, {1}, {1}) == 1);
    CHECK(lr_coeff({2}, {2}, {}) == 1);
    CHECK(lr_coeff({2}, {1, 1}, {}) == 0);
    CHECK(lr_coeff({3}, {1}, {1}) == 0);      // size mismatch
    CHECK(lr_coeff({2, 2}, {2, 1}, {1}) == 1);
    CHECK(lr_coeff({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coeff({4, 2}, {2, 1}, {2, 1}) == 1);
    CHECK(lr_coeff({2, 2, 2}, {2, 1}, {2, 1}) == 1);
}

TEST_CASE("s_21 squared expands with the classical multiplicities") {
    const auto prod = lr_expand({2, 1}, {2, 1});
    std::map<Partition, long> m(prod.begin(), prod.end());
    CHECK(m.at({4, 2}) == 1);
    CHECK(m.at({4, 1, 1}) == 1);
    CHECK(m.at({3, 3}) == 1);
    CHECK(m.at({3, 2, 1}) == 2);
    CHECK(m.at({3, 1, 1, 1}) == 1);
    CHECK(m.at({2, 2, 2}) == 1);
    CHECK(m.at({2, 2, 1, 1}) == 1);
    CHECK(m.size() == 7);
}

TEST_CASE("symmetry and conjugation") {
    const auto parts5 = partitions_of(5);
    for (const Partition& mu : partitions_of(2))
        for (const Partition& nu : partitions_of(3))
            for (const Partition& lam : parts5) {
                CHECK(lr_coeff(lam, mu, nu) == lr_coeff(lam, nu, mu));
                CHECK(lr_coeff(lam, mu, nu) ==
                      lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu)));
            }
}

TEST_CASE("pieri rule: multiplying by a row gives horizontal strips") {
    const auto prod = lr_expand({3, 1}, {2});
    std::map<Partition, long> m(prod.begin(), prod.end());
    CHECK(m == std::map<Partition, long>{
        {{5, 1}, 1}, {{4, 2}, 1}, {{4, 1, 1}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 1}});
}

TEST_CASE("dimension identity binom(m+n,m) f_mu f_nu = sum c f_lam") {
    for (const Partition& mu : partitions_of(3))
        for (const Partition& nu : partitions_of(2)) {
            bigint lhs = 10 * syt_count(mu) * syt_count(nu);  // binom(5,3) = 10
            bigint rhs = 0;
            for (const auto& [lam, c] : lr_expand(mu, nu)) rhs += c * syt_count(lam);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("hooks and standard tableau counts") {
    const auto h = hook_lengths({3, 2});
    REQUIRE(h.size() == 2);
    CHECK(h[0] == std::vector<long>{4, 3, 1});
    CHECK(h[1] == std::vector<long>{2, 1});
    CHECK(syt_count({3, 2}) == 5);
    CHECK(syt_count({2, 1}) == 2);
    CHECK(syt_count({1, 1, 1}) == 1);
    CHECK(syt_count({}) == 1);
    CHECK(syt_count({4, 3, 2, 1}) == 768);
    // sum over lam of f_lam^2 = n!
    bigint sum = 0;
    for (const Partition& lam : partitions_of(5)) sum += syt_count(lam) * syt_count(lam);
    CHECK(sum == 120);
}
