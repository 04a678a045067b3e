#include "wb/decmat.hpp"

#include <algorithm>
#include <string>

#include "wb/lr.hpp"

#if defined(WB_HAVE_OPENMP)
#include <omp.h>
#endif

namespace wb {

std::vector<std::vector<Partition>> enumerate_tuples(long a, long w) {
    require(a >= 1, "enumerate_tuples: need at least one slot");
    require(w >= 0, "enumerate_tuples: negative size");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(static_cast<std::size_t>(a));
    auto rec = [&](auto&& self, long slot, long rest) -> void {
        if (slot == a) {
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

namespace {

void require_prime(long p, const char* who) {
    require(p >= 2, std::string(who) + ": characteristic must be >= 2");
    for (long d = 2; d * d <= p; ++d)
        require(p % d != 0, std::string(who) + ": characteristic must be prime");
}

/* Sizes in the formula are forced: |A^j| + |B^j| = |lam^j| and
 * |B^j| + |A^{j+1}| = |mu^j|, so choosing |A^0| determines the rest.
 * For each consistent size chain, sum the product over all partitions of
 * those sizes. */
long decnumber_on(const std::vector<Partition>& lam, const std::vector<Partition>& mu, long p) {
    long total = 0;
    const long a0max = part_sum(lam[0]);
    for (long a0 = 0; a0 <= a0max; ++a0) {
        std::vector<long> asz(static_cast<std::size_t>(p) + 1), bsz(static_cast<std::size_t>(p));
        asz[0] = a0;
        bool ok = true;
        for (long j = 0; j < p && ok; ++j) {
            bsz[static_cast<std::size_t>(j)] = part_sum(lam[static_cast<std::size_t>(j)]) - asz[static_cast<std::size_t>(j)];
            if (bsz[static_cast<std::size_t>(j)] < 0) { ok = false; break; }
            asz[static_cast<std::size_t>(j) + 1] =
                part_sum(mu[static_cast<std::size_t>(j)]) - bsz[static_cast<std::size_t>(j)];
            if (asz[static_cast<std::size_t>(j) + 1] < 0) ok = false;
        }
        if (!ok) continue;

        /* accumulate over the chain A^0, B^0, A^1, B^1, ..., B^{p-1}, A^p;
         * the two LR factors at slot j couple (A^j, B^j, A^{j+1}) */
        auto rec = [&](auto&& self, long j, const Partition& aj) -> long {
            if (j == p) return 1;
            long acc = 0;
            for (const Partition& bj : partitions_of(bsz[static_cast<std::size_t>(j)])) {
                const long c1 = lr_coeff(lam[static_cast<std::size_t>(j)], aj, bj);
                if (c1 == 0) continue;
                for (const Partition& anext : partitions_of(asz[static_cast<std::size_t>(j) + 1])) {
                    const long c2 =
                        lr_coeff(mu[static_cast<std::size_t>(j)], bj, conjugate(anext));
                    if (c2 == 0) continue;
                    acc += c1 * c2 * self(self, j + 1, anext);
                }
            }
            return acc;
        };
        for (const Partition& a0p : partitions_of(a0)) total += rec(rec, 0, a0p);
    }
    return total;
}

std::vector<Partition> reversed(const PQuotient& q) {
    std::vector<Partition> r(q.rbegin(), q.rend());
    return r;
}

QuotientMatrix rock_matrix_impl(long p, long w, bool parallel) {
    require_prime(p, "rock_decmatrix");
    require(w >= 1, "rock_decmatrix: weight must be >= 1");
    QuotientMatrix M;
    M.p = p;
    M.w = w;
    M.core = rouquier_core(p, w);
    M.rows = block_partitions(M.core, p, w);
    for (const BlockLabel& bl : M.rows)
        if (bl.quotient[0].empty()) M.cols.push_back(bl);
    M.entry.assign(M.rows.size(), std::vector<long>(M.cols.size(), 0));
    const long nr = static_cast<long>(M.rows.size());
    const long nc = static_cast<long>(M.cols.size());
#if defined(WB_HAVE_OPENMP)
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j)
            M.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rock_decnumber(
                M.rows[static_cast<std::size_t>(i)].quotient,
                M.cols[static_cast<std::size_t>(j)].quotient, p);
    (void)parallel;
    return M;
}

}  // namespace

long rock_decnumber(const PQuotient& lam, const PQuotient& mu, long p) {
    require_prime(p, "rock_decnumber");
    require(static_cast<long>(lam.size()) == p && static_cast<long>(mu.size()) == p,
            "rock_decnumber: quotients must have exactly p components");
    require(mu[0].empty(), "rock_decnumber: column label must be p-regular (component 0 empty)");
    for (const Partition& c : lam) check_partition(c);
    for (const Partition& c : mu) check_partition(c);
    return decnumber_on(reversed(lam), reversed(mu), p);
}

QuotientMatrix rock_decmatrix(long p, long w) { return rock_matrix_impl(p, w, true); }
QuotientMatrix rock_decmatrix_serial(long p, long w) { return rock_matrix_impl(p, w, false); }

DecProvider weyl_provider() {
    return [](long n, long r, long p) { return schur_decmatrix(n, r, p); };
}

PQuotient conjugate_label(const PQuotient& q) {
    PQuotient out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = conjugate(q[q.size() - 1 - i]);
    return out;
}

QuotientMatrix adjustment_matrix(long p, long w, const DecProvider& provider) {
    require_prime(p, "adjustment_matrix");
    require(w >= 1, "adjustment_matrix: weight must be >= 1");
    QuotientMatrix M;
    M.p = p;
    M.w = w;
    M.core = rouquier_core(p, w);
    for (const BlockLabel& bl : block_partitions(M.core, p, w))
        if (bl.quotient[0].empty()) M.cols.push_back(bl);
    M.rows = M.cols;
    const std::size_t k = M.rows.size();
    M.entry.assign(k, std::vector<long>(k, 0));

    /* cache of Dec S(a,a) keyed by a */
    std::vector<LabeledDecMatrix> cache(static_cast<std::size_t>(w) + 1);
    std::vector<bool> have(static_cast<std::size_t>(w) + 1, false);
    auto dec = [&](long a) -> const LabeledDecMatrix& {
        if (!have[static_cast<std::size_t>(a)]) {
            cache[static_cast<std::size_t>(a)] = provider(a, a, p);
            have[static_cast<std::size_t>(a)] = true;
        }
        return cache[static_cast<std::size_t>(a)];
    };
    auto dec_entry = [&](long a, const Partition& x, const Partition& y) -> long {
        const LabeledDecMatrix& D = dec(a);
        std::size_t i = 0, j = 0;
        while (i < D.row_labels.size() && D.row_labels[i] != x) ++i;
        while (j < D.col_labels.size() && D.col_labels[j] != y) ++j;
        invariant(i < D.row_labels.size() && j < D.col_labels.size(),
                  "adjustment_matrix: provider matrix is missing a label");
        return D.entry[i][j];
    };

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const PQuotient& lam = M.rows[i].quotient;
            const PQuotient& mu = M.cols[j].quotient;
            long e = 1;
            for (long c = 1; c < p && e != 0; ++c) {
                const Partition& lc = lam[static_cast<std::size_t>(c)];
                const Partition& mc = mu[static_cast<std::size_t>(c)];
                if (part_sum(lc) != part_sum(mc)) { e = 0; break; }
                if (lc.empty()) continue;
                const bool conj = (p - 1 - c) % 2 == 0;
                const Partition x = conj ? conjugate(lc) : lc;
                const Partition y = conj ? conjugate(mc) : mc;
                e *= dec_entry(part_sum(lc), x, y);
            }
            M.entry[i][j] = e;
        }
    return M;
}

QuotientMatrix full_decmatrix(long p, long w, const DecProvider& provider) {
    QuotientMatrix rock = rock_decmatrix(p, w);
    const QuotientMatrix adj = adjustment_matrix(p, w, provider);
    QuotientMatrix M;
    M.p = p;
    M.w = w;
    M.core = rock.core;
    M.rows = rock.rows;
    M.cols = rock.cols;
    M.entry.assign(M.rows.size(), std::vector<long>(M.cols.size(), 0));
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        for (std::size_t j = 0; j < M.cols.size(); ++j) {
            long s = 0;
            for (std::size_t t = 0; t < rock.cols.size(); ++t)
                s += rock.entry[i][t] * adj.entry[t][j];
            M.entry[i][j] = s;
        }
    return M;
}

}  // namespace wb
