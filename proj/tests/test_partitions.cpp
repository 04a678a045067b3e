#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/partition.hpp"

using namespace wb;

TEST_CASE("conjugate and basic stats") {
    CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate(conjugate({6, 4, 2, 2, 1, 1})) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(part_sum({3, 2}) == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    // lex-descending: (5) first, (1^5) last
    CHECK(partitions_of(5).front() == Partition{5});
    CHECK(partitions_of(5).back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("dominance order") {
    CHECK(dominance({3, 1, 1}, {2, 2, 1}) == Dominance::greater);
    CHECK(dominance({2, 2, 1}, {3, 1, 1}) == Dominance::less);
    CHECK(dominance({3, 2}, {3, 2}) == Dominance::equal);
    CHECK(dominance({3, 1, 1, 1}, {2, 2, 2}) == Dominance::incomparable);
    CHECK_THROWS_AS(dominance({2}, {1}), validation_error);
}

TEST_CASE("regular and restricted") {
    CHECK(is_p_regular({5}, 2));
    CHECK_FALSE(is_p_regular({2, 2, 1}, 2));
    CHECK_FALSE(is_p_regular({1, 1, 1, 1, 1}, 2));
    CHECK(is_p_regular({6, 4, 4, 3, 1, 1}, 3));
    CHECK_FALSE(is_p_regular({6, 4, 2, 2, 1, 1, 1, 1, 1}, 3));
    CHECK(is_p_restricted({2, 2, 1}, 2));
    CHECK_FALSE(is_p_restricted({5}, 2));
    // conjugation swaps the two notions
    for (const Partition& lam : partitions_of(6))
        for (long p : {2L, 3L})
            CHECK(is_p_regular(lam, p) == is_p_restricted(conjugate(lam), p));
}

TEST_CASE("cores, weights, quotients: worked p=3 example") {
    const Partition lam{9, 4, 2, 2, 1, 1};
    CHECK(p_core(lam, 3) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(p_weight(lam, 3) == 1);
    const PQuotient q = p_quotient(lam, 3, 15);
    REQUIRE(q.size() == 3);
    CHECK(q[0] == Partition{});
    CHECK(q[1] == Partition{});
    CHECK(q[2] == Partition{1});
}

TEST_CASE("quotient depends on bead count only mod p") {
    for (const Partition& lam : partitions_of(7)) {
        for (long p : {2L, 3L}) {
            const long m0 = static_cast<long>(lam.size()) + p;
            CHECK(p_quotient(lam, p, m0) == p_quotient(lam, p, m0 + p));
            CHECK(p_quotient(lam, p, m0) == p_quotient(lam, p, m0 + 3 * p));
        }
    }
}

TEST_CASE("core/quotient/reconstruct round trip") {
    for (long n = 0; n <= 8; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (long p : {2L, 3L, 5L}) {
                const long m = static_cast<long>(lam.size()) + 2 * p;
                const Partition core = p_core(lam, p);
                const PQuotient q = p_quotient(lam, p, m);
                long qsize = 0;
                for (const auto& comp : q) qsize += part_sum(comp);
                CHECK(qsize == p_weight(lam, p));
                CHECK(part_sum(lam) == part_sum(core) + p * qsize);
                CHECK(reconstruct(core, q, p, m) == lam);
            }
        }
    }
}

TEST_CASE("canonical bead count and the last-runner rule") {
    // with the canonical m, core + p*nu on the leading rows has quotient
    // [-,...,-,nu]
    const Partition rho{6, 4, 2, 2, 1, 1};
    const long m = canonical_m(rho, 3, 1);
    CHECK(m % 3 == 0);
    CHECK(reconstruct(rho, {{}, {}, {1}}, 3, m) == Partition{9, 4, 2, 2, 1, 1});

    for (long p : {2L, 3L}) {
        for (long w = 1; w <= 3; ++w) {
            const Partition core = rouquier_core(p, w);
            const long mc = canonical_m(core, p, w);
            for (const Partition& nu : partitions_of(w)) {
                PQuotient q(static_cast<std::size_t>(p));
                q[static_cast<std::size_t>(p - 1)] = nu;
                Partition expect = core;
                expect.resize(std::max(expect.size(), nu.size()), 0);
                for (std::size_t i = 0; i < nu.size(); ++i) expect[i] += p * nu[i];
                CHECK(reconstruct(core, q, p, mc) == strip_zeros(expect));
            }
        }
    }
}

TEST_CASE("rouquier cores") {
    CHECK(rouquier_core(2, 1) == Partition{});
    CHECK(rouquier_core(3, 1) == Partition{});
    CHECK(rouquier_core(2, 2) == Partition{1});
    CHECK(rouquier_core(3, 3) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(is_rouquier({1}, 2, 2));
    CHECK_FALSE(is_rouquier({1}, 3, 3));
    for (long p : {2L, 3L, 5L})
        for (long w = 0; w <= 3; ++w)
            CHECK(is_rouquier(rouquier_core(p, w), p, w));
    CHECK_THROWS_AS(is_rouquier({2, 1, 1}, 2, 1), validation_error);  // not a 2-core
}

TEST_CASE("the p=2 weight-2 block around core (1)") {
    const Partition core{1};
    const long m = canonical_m(core, 2, 2);
    CHECK(m % 2 == 1);
    auto q = [&](const Partition& lam) { return p_quotient(lam, 2, m); };
    CHECK(q({5}) == PQuotient{{}, {2}});
    CHECK(q({3, 2}) == PQuotient{{}, {1, 1}});
    CHECK(q({3, 1, 1}) == PQuotient{{1}, {1}});
    CHECK(q({2, 2, 1}) == PQuotient{{2}, {}});
    CHECK(q({1, 1, 1, 1, 1}) == PQuotient{{1, 1}, {}});

    const auto block = block_partitions(core, 2, 2);
    REQUIRE(block.size() == 5);
    CHECK(block[0].lambda == Partition{5});
    CHECK(block[1].lambda == Partition{3, 2});
    CHECK(block[2].lambda == Partition{3, 1, 1});
    CHECK(block[3].lambda == Partition{2, 2, 1});
    CHECK(block[4].lambda == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("regularity reads off component 0 in Rock blocks") {
    for (long w = 1; w <= 3; ++w) {
        const Partition core = rouquier_core(3, w);
        for (const BlockLabel& bl : block_partitions(core, 3, w))
            CHECK(is_p_regular(bl.lambda, 3) == bl.quotient[0].empty());
    }
}

TEST_CASE("quotient_vector order refines dominance in Rock blocks") {
    for (long p : {2L, 3L}) {
        for (long w = 1; w <= 3; ++w) {
            const auto block = block_partitions(rouquier_core(p, w), p, w);
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = 0; j < block.size(); ++j) {
                    const Dominance d = dominance(block[i].lambda, block[j].lambda);
                    if (d == Dominance::greater)
                        CHECK(quotient_vector(block[i].quotient, w) >
                              quotient_vector(block[j].quotient, w));
                    if (d == Dominance::less)
                        CHECK(quotient_vector(block[i].quotient, w) <
                              quotient_vector(block[j].quotient, w));
                }
        }
    }
}

TEST_CASE("k_set filters by component sizes") {
    const auto ks = k_set({1}, 2, 2, {1, 1});
    REQUIRE(ks.size() == 1);
    CHECK(ks[0].lambda == Partition{3, 1, 1});
    const auto all = k_set({1}, 2, 2, {0, 2});
    REQUIRE(all.size() == 2);
    CHECK(all[0].lambda == Partition{5});
    CHECK(all[1].lambda == Partition{3, 2});
    CHECK_THROWS_AS(k_set({1}, 2, 2, {1, 2}), validation_error);
}

TEST_CASE("rock mullineux") {
    CHECK(rock_mullineux({{}, {2, 1}, {1}}) == PQuotient{{}, {1}, {2, 1}});
    CHECK(rock_mullineux({{}, {3}}) == PQuotient{{}, {3}});
    CHECK_THROWS_AS(rock_mullineux({{1}, {}}), validation_error);
    // involution on regular labels
    for (const PQuotient& q : all_quotient_tuples(3, 3))
        if (q[0].empty()) CHECK(rock_mullineux(rock_mullineux(q)) == q);
}

TEST_CASE("text forms") {
    CHECK(to_string(Partition{6, 4, 2, 2, 1, 1}) == "6,4,2,2,1,1");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("6,4,2,2,1,1") == Partition{6, 4, 2, 2, 1, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK_THROWS_AS(parse_partition("3,4"), validation_error);
    CHECK_THROWS_AS(parse_partition("a"), validation_error);
    CHECK_THROWS_AS(parse_partition("3,,1"), validation_error);
    CHECK(to_string(PQuotient{{}, {2}}) == "[-|2]");
}

TEST_CASE("abacus rendering") {
    const auto ab = abacus_of({2, 1}, 2, 3);
    const std::string art = abacus_ascii(ab);
    CHECK(art.find('@') != std::string::npos);
    // beta numbers of (2,1) on 3 beads: 4, 2, 0 -> all on runner 0
    CHECK(runner_counts(ab) == std::vector<long>{3, 0});
}
