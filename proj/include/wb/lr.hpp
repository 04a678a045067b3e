#pragma once

#include <map>
#include <vector>

#include "wb/exactlin.hpp"
#include "wb/partition.hpp"

namespace wb {

inline bool contains_shape(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

/* c^lam_{mu nu}: number of skew tableaux of shape lam/mu and content nu whose
 * reverse reading word is a lattice word.  Cells are filled in reverse
 * reading order (right to left along each row, top row first), which makes
 * every constraint checkable as the fill proceeds. */
inline long lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    check_partition(lam);
    check_partition(mu);
    check_partition(nu);
    if (part_sum(lam) != part_sum(mu) + part_sum(nu)) return 0;
    if (!contains_shape(lam, mu)) return 0;
    if (nu.empty()) return 1;

    const std::size_t nrows = lam.size();
    const std::size_t nvals = nu.size();
    std::vector<std::vector<long>> t(nrows);
    for (std::size_t r = 0; r < nrows; ++r) t[r].assign(static_cast<std::size_t>(lam[r]), 0);
    std::vector<long> cnt(nvals + 1, 0);

    struct Cell { std::size_t r, c; };
    std::vector<Cell> order;
    for (std::size_t r = 0; r < nrows; ++r) {
        const long lo = r < mu.size() ? mu[r] : 0;
        for (long c = lam[r] - 1; c >= lo; --c)
            order.push_back({r, static_cast<std::size_t>(c)});
    }

    long total = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) { ++total; return; }
        const auto [r, c] = order[k];
        const long inner_r = r < mu.size() ? mu[r] : 0;
        /* upper bound: value at the cell to the right (row weakly increases) */
        long hi = static_cast<long>(nvals);
        if (static_cast<long>(c) + 1 < lam[r]) hi = t[r][c + 1];
        /* lower bound: strictly below the cell above */
        long lo = 1;
        if (r > 0 && static_cast<long>(c) >= (r - 1 < mu.size() ? mu[r - 1] : 0) &&
            static_cast<long>(c) < lam[r - 1])
            lo = t[r - 1][c] + 1;
        (void)inner_r;
        for (long v = lo; v <= hi; ++v) {
            if (cnt[static_cast<std::size_t>(v)] >= nu[static_cast<std::size_t>(v - 1)]) continue;
            /* lattice: after placing v, #v must not exceed #(v-1) */
            if (v > 1 && cnt[static_cast<std::size_t>(v)] + 1 > cnt[static_cast<std::size_t>(v - 1)])
                continue;
            t[r][c] = v;
            ++cnt[static_cast<std::size_t>(v)];
            self(self, k + 1);
            --cnt[static_cast<std::size_t>(v)];
            t[r][c] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

/* s_mu * s_nu = sum of c^lam_{mu nu} s_lam; keys in lex-descending order. */
inline std::vector<std::pair<Partition, long>> lr_expand(const Partition& mu, const Partition& nu) {
    std::vector<std::pair<Partition, long>> out;
    for (const Partition& lam : partitions_of(part_sum(mu) + part_sum(nu))) {
        const long c = lr_coeff(lam, mu, nu);
        if (c != 0) out.emplace_back(lam, c);
    }
    return out;
}

inline std::vector<std::vector<long>> hook_lengths(const Partition& lam) {
    check_partition(lam);
    const Partition conj = conjugate(lam);
    std::vector<std::vector<long>> h(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        h[i].resize(static_cast<std::size_t>(lam[i]));
        for (long j = 0; j < lam[i]; ++j)
            h[i][static_cast<std::size_t>(j)] =
                (lam[i] - 1 - j) + (conj[static_cast<std::size_t>(j)] - 1 - static_cast<long>(i)) + 1;
    }
    return h;
}

/* Standard Young tableaux of shape lam, by the hook length formula. */
inline bigint syt_count(const Partition& lam) {
    const long n = part_sum(lam);
    bigint num = 1;
    for (long k = 2; k <= n; ++k) num *= k;
    bigint den = 1;
    for (const auto& row : hook_lengths(lam))
        for (long h : row) den *= h;
    invariant(num % den == 0, "syt_count: hook product does not divide n!");
    return num / den;
}

}  // namespace wb
