#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wb/error.hpp"

namespace wb {

/* A partition is a weakly decreasing vector of positive parts; the empty
 * vector is the empty partition.  All functions below keep this normal form
 * (no trailing zeros), and validate it on entry where input can come from
 * outside the library. */
using Partition = std::vector<long>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline void check_partition(const Partition& p) {
    require(is_partition(p), "not a partition (parts must be positive and weakly decreasing)");
}

inline long part_sum(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

inline Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(static_cast<std::size_t>(p[0]), 0);
    for (long part : p)
        for (long j = 0; j < part; ++j) ++q[static_cast<std::size_t>(j)];
    return q;
}

inline Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/* All partitions of n, in lexicographically descending order, so (n) comes
 * first and (1^n) last.  For equal sizes this order refines dominance. */
inline std::vector<Partition> partitions_of(long n) {
    require(n >= 0, "partitions_of: negative size");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        for (long k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

enum class Dominance { less, equal, greater, incomparable };

/* Dominance order on partitions of equal size.  Comparing partitions of
 * different sizes is a caller error, not an "incomparable" result. */
inline Dominance dominance(const Partition& lam, const Partition& mu) {
    check_partition(lam);
    check_partition(mu);
    require(part_sum(lam) == part_sum(mu), "dominance: partitions of different sizes");
    bool le = true, ge = true;
    long sl = 0, sm = 0;
    const std::size_t n = std::max(lam.size(), mu.size());
    for (std::size_t i = 0; i < n; ++i) {
        sl += i < lam.size() ? lam[i] : 0;
        sm += i < mu.size() ? mu[i] : 0;
        if (sl < sm) ge = false;
        if (sl > sm) le = false;
    }
    if (le && ge) return Dominance::equal;
    if (ge) return Dominance::greater;
    if (le) return Dominance::less;
    return Dominance::incomparable;
}

inline bool is_p_regular(const Partition& lam, long p) {
    check_partition(lam);
    require(p >= 2, "is_p_regular: p must be >= 2");
    for (std::size_t i = 0; i + p <= lam.size(); ++i)
        if (lam[i] == lam[i + static_cast<std::size_t>(p) - 1]) return false;
    return true;
}

inline bool is_p_restricted(const Partition& lam, long p) {
    check_partition(lam);
    require(p >= 2, "is_p_restricted: p must be >= 2");
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const long next = i + 1 < lam.size() ? lam[i + 1] : 0;
        if (lam[i] - next >= p) return false;
    }
    return true;
}

/* ---- abacus ---------------------------------------------------------- */

/* Beta-numbers lam_i + m - i for i = 1..m, strictly decreasing, all >= 0.
 * The bead count m is part of the data: the same partition on m and m+1
 * beads is a different configuration (every runner statistic shifts). */
struct AbacusConfig {
    long p = 0;
    long m = 0;
    std::vector<long> beta;  // strictly decreasing
};

inline AbacusConfig abacus_of(const Partition& lam, long p, long m) {
    check_partition(lam);
    require(p >= 2, "abacus_of: p must be >= 2");
    require(m >= static_cast<long>(lam.size()), "abacus_of: fewer beads than parts");
    AbacusConfig ab;
    ab.p = p;
    ab.m = m;
    ab.beta.resize(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        const long part = i <= static_cast<long>(lam.size()) ? lam[static_cast<std::size_t>(i - 1)] : 0;
        ab.beta[static_cast<std::size_t>(i - 1)] = part + m - i;
    }
    return ab;
}

inline Partition partition_of_beta(std::vector<long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    const long m = static_cast<long>(beta.size());
    Partition lam;
    for (long i = 1; i <= m; ++i) {
        const long part = beta[static_cast<std::size_t>(i - 1)] - (m - i);
        invariant(part >= 0, "partition_of_beta: repeated beta-number");
        if (part > 0) lam.push_back(part);
    }
    return lam;
}

/* Bead counts per runner; runner of beta is beta mod p, row is beta div p. */
inline std::vector<long> runner_counts(const AbacusConfig& ab) {
    std::vector<long> cnt(static_cast<std::size_t>(ab.p), 0);
    for (long b : ab.beta) ++cnt[static_cast<std::size_t>(b % ab.p)];
    return cnt;
}

/* Sliding every bead fully up its runner yields the p-core.  The result is
 * independent of the bead count used, so none is taken. */
inline Partition p_core(const Partition& lam, long p) {
    const long m = static_cast<long>(lam.size()) + p;
    const AbacusConfig ab = abacus_of(lam, p, m);
    const std::vector<long> cnt = runner_counts(ab);
    std::vector<long> beta;
    for (long r = 0; r < p; ++r)
        for (long t = 0; t < cnt[static_cast<std::size_t>(r)]; ++t)
            beta.push_back(r + p * t);
    return partition_of_beta(std::move(beta));
}

inline long p_weight(const Partition& lam, long p) {
    const Partition core = p_core(lam, p);
    return (part_sum(lam) - part_sum(core)) / p;
}

using PQuotient = std::vector<Partition>;  // p components, index = runner

/* Component i of the quotient reads runner i as a one-runner abacus: the
 * j-th lowest bead, sitting in row t_j, contributes part t_j - (j-1).
 * The result depends on m only through m mod p (components rotate). */
inline PQuotient p_quotient(const Partition& lam, long p, long m) {
    const AbacusConfig ab = abacus_of(lam, p, m);
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(p));
    for (long b : ab.beta) rows[static_cast<std::size_t>(b % p)].push_back(b / p);
    PQuotient q(static_cast<std::size_t>(p));
    for (long r = 0; r < p; ++r) {
        auto& t = rows[static_cast<std::size_t>(r)];
        std::sort(t.begin(), t.end());
        Partition comp;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const long part = t[j] - static_cast<long>(j);
            if (part > 0) comp.push_back(part);
        }
        std::reverse(comp.begin(), comp.end());
        q[static_cast<std::size_t>(r)] = comp;
    }
    return q;
}

/* Inverse of (p_core, p_quotient) at a fixed bead count. */
inline Partition reconstruct(const Partition& core, const PQuotient& components, long p, long m) {
    check_partition(core);
    require(p >= 2, "reconstruct: p must be >= 2");
    require(static_cast<long>(components.size()) == p, "reconstruct: need exactly p components");
    require(p_core(core, p) == core, "reconstruct: core argument is not a p-core");
    const AbacusConfig ab = abacus_of(core, p, m);
    const std::vector<long> cnt = runner_counts(ab);
    std::vector<long> beta;
    for (long r = 0; r < p; ++r) {
        const Partition& comp = components[static_cast<std::size_t>(r)];
        check_partition(comp);
        const long k = cnt[static_cast<std::size_t>(r)];
        require(static_cast<long>(comp.size()) <= k,
                "reconstruct: m leaves too few beads on a runner for its component");
        /* j-th lowest of k beads moves to row (j-1) + comp[k-j] */
        for (long j = 1; j <= k; ++j) {
            const long idx = k - j;  // comp index from the top, 0-based
            const long extra = idx < static_cast<long>(comp.size()) ? comp[static_cast<std::size_t>(idx)] : 0;
            beta.push_back(r + p * (j - 1 + extra));
        }
    }
    return partition_of_beta(std::move(beta));
}

/* Canonical bead count for a block: the smallest m that (a) hosts every
 * partition of the block, with at least w beads on each runner, and (b) puts
 * the largest beta-number of the core on runner p-1.  With this choice the
 * quotient of core + p*nu (nu added to the first rows) is [∅,...,∅,nu], and
 * a partition in the block is p-regular exactly when component 0 is empty. */
inline long canonical_m(const Partition& core, long p, long w) {
    check_partition(core);
    require(p >= 2, "canonical_m: p must be >= 2");
    require(w >= 0, "canonical_m: negative weight");
    require(p_core(core, p) == core, "canonical_m: not a p-core");
    const long lead = core.empty() ? 0 : core[0];
    long m = static_cast<long>(core.size()) + p * w;
    if (m == 0) m = p;  // empty block of weight 0 still needs a configuration
    while ((lead + m - 1) % p != p - 1) ++m;
    return m;
}

/* ---- Rouquier cores --------------------------------------------------- */

/* The staircase-like core whose abacus has i*(w-1) beads on runner i. */
inline Partition rouquier_core(long p, long w) {
    require(p >= 2, "rouquier_core: p must be >= 2");
    require(w >= 0, "rouquier_core: negative weight");
    std::vector<long> beta;
    for (long r = 0; r < p; ++r)
        for (long t = 0; t < r * (w - 1); ++t) beta.push_back(r + p * t);
    return partition_of_beta(std::move(beta));
}

/* A core is Rouquier for weight w when, for some rotation of the runners
 * (equivalently some residue of the bead count), consecutive runner counts
 * increase by at least w-1.  The property per residue class is stable under
 * m -> m+p, so checking p consecutive bead counts is exhaustive. */
inline bool is_rouquier(const Partition& tau, long p, long w) {
    check_partition(tau);
    require(p >= 2, "is_rouquier: p must be >= 2");
    require(w >= 0, "is_rouquier: negative weight");
    require(p_core(tau, p) == tau, "is_rouquier: not a p-core");
    if (w <= 1) return true;
    const long m0 = static_cast<long>(tau.size());
    for (long shift = 0; shift < p; ++shift) {
        const AbacusConfig ab = abacus_of(tau, p, m0 + p + shift);
        const std::vector<long> cnt = runner_counts(ab);
        bool ok = true;
        for (long r = 1; r < p && ok; ++r)
            ok = cnt[static_cast<std::size_t>(r)] - cnt[static_cast<std::size_t>(r - 1)] >= w - 1;
        if (ok) return true;
    }
    return false;
}

/* ---- block labels ----------------------------------------------------- */

using CompositionVector = std::vector<long>;

/* <lambda>: the quotient components in runner order p-1, p-2, ..., 0, each
 * padded to exactly w entries.  Lex-descending on these vectors refines the
 * dominance order of the underlying partitions in a Rouquier block. */
inline CompositionVector quotient_vector(const PQuotient& q, long w) {
    CompositionVector v;
    v.reserve(q.size() * static_cast<std::size_t>(w));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Partition& comp = q[i];
        require(static_cast<long>(comp.size()) <= w, "quotient_vector: component longer than w");
        for (long j = 0; j < w; ++j)
            v.push_back(j < static_cast<long>(comp.size()) ? comp[static_cast<std::size_t>(j)] : 0);
    }
    return v;
}

/* Rock-block Mullineux: reverse the nonzero components of a p-regular
 * quotient label.  Requires component 0 empty, which is what p-regularity
 * means for these labels. */
inline PQuotient rock_mullineux(const PQuotient& q) {
    require(!q.empty() && q[0].empty(),
            "rock_mullineux: label is not p-regular (component 0 must be empty)");
    PQuotient out(q.size());
    for (std::size_t i = 1; i < q.size(); ++i) out[i] = q[q.size() - i];
    return out;
}

struct BlockLabel {
    Partition lambda;
    PQuotient quotient;
};

/* All p-tuples of partitions with total size w. */
inline std::vector<PQuotient> all_quotient_tuples(long p, long w) {
    std::vector<PQuotient> out;
    PQuotient cur(static_cast<std::size_t>(p));
    auto rec = [&](auto&& self, long slot, long rest) -> void {
        if (slot == p) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long s = 0; s <= rest; ++s)
            for (const Partition& part : partitions_of(s)) {
                cur[static_cast<std::size_t>(slot)] = part;
                self(self, slot + 1, rest - s);
            }
        cur[static_cast<std::size_t>(slot)] = {};
    };
    rec(rec, 0, w);
    return out;
}

/* The partitions with the given core and weight, labelled by their canonical
 * quotients and sorted lex-descending on quotient_vector. */
inline std::vector<BlockLabel> block_partitions(const Partition& core, long p, long w) {
    const long m = canonical_m(core, p, w);
    std::vector<BlockLabel> out;
    for (const PQuotient& q : all_quotient_tuples(p, w))
        out.push_back({reconstruct(core, q, p, m), q});
    std::sort(out.begin(), out.end(), [w](const BlockLabel& a, const BlockLabel& b) {
        return quotient_vector(a.quotient, w) > quotient_vector(b.quotient, w);
    });
    return out;
}

/* Members of the block whose quotient has component sizes a_0..a_{p-1}. */
inline std::vector<BlockLabel> k_set(const Partition& core, long p, long w,
                                     const CompositionVector& a) {
    require(static_cast<long>(a.size()) == p, "k_set: need exactly p component sizes");
    long total = 0;
    for (long x : a) {
        require(x >= 0, "k_set: negative component size");
        total += x;
    }
    require(total == w, "k_set: component sizes must sum to w");
    std::vector<BlockLabel> out;
    for (const BlockLabel& bl : block_partitions(core, p, w)) {
        bool match = true;
        for (long i = 0; i < p && match; ++i)
            match = part_sum(bl.quotient[static_cast<std::size_t>(i)]) == a[static_cast<std::size_t>(i)];
        if (match) out.push_back(bl);
    }
    return out;
}

/* ---- text forms ------------------------------------------------------- */

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline std::string to_string(const PQuotient& q) {
    std::string s = "[";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) s += '|';
        s += to_string(q[i]);
    }
    s += ']';
    return s;
}

inline Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return {};
    Partition p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        require(!tok.empty(), "parse_partition: empty part in '" + text + "'");
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw validation_error("parse_partition: bad part '" + tok + "'");
        }
        require(used == tok.size(), "parse_partition: bad part '" + tok + "'");
        p.push_back(v);
        pos = next + 1;
    }
    check_partition(p);
    return p;
}

/* Runners as columns, row 0 on top; '@' marks a bead.  Meant for terminals,
 * so pure ASCII. */
inline std::string abacus_ascii(const AbacusConfig& ab) {
    long maxrow = 0;
    for (long b : ab.beta) maxrow = std::max(maxrow, b / ab.p);
    std::vector<std::vector<bool>> bead(static_cast<std::size_t>(maxrow + 1),
                                        std::vector<bool>(static_cast<std::size_t>(ab.p), false));
    for (long b : ab.beta)
        bead[static_cast<std::size_t>(b / ab.p)][static_cast<std::size_t>(b % ab.p)] = true;
    std::string s;
    for (long r = 0; r < ab.p; ++r) {
        s += std::to_string(r % 10);
        s += r + 1 < ab.p ? ' ' : '\n';
    }
    for (const auto& row : bead) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            s += row[c] ? '@' : '.';
            s += c + 1 < row.size() ? ' ' : '\n';
        }
    }
    return s;
}

}  // namespace wb
