#include "wb/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wb/lr.hpp"

#if defined(WB_HAVE_OPENMP)
#include <omp.h>
#endif

/* The Weyl module Delta(lam) is realized inside (Z^n)^{tensor r} as the
 * span of the vectors
 *
 *     f_T = a_lam . m_T,     T semistandard of shape lam,
 *
 * where m_T sums the distinct row-rearrangements of the basis tensor of T
 * and a_lam is the signed column symmetrizer acting on tensor slots.  The
 * highest-weight vector is f of the tableau whose row i is filled with i.
 *
 * The contravariant form is inherited from the bilinear form on tensor
 * space that makes the letter tensors orthonormal.  Restricted to the span
 * it equals |column stabilizer| times a form that takes value 1 on the
 * highest-weight vector; the normalized Gram matrix has the closed form
 *
 *     G(T, T') = < m_T , f_{T'} >,
 *
 * which is integral with G(hw, hw) = 1 and needs no division.  Simple
 * weight multiplicities are F_p-ranks of G restricted to a content, since
 * the radical of the contravariant form on Delta is the radical of Delta
 * and the form pairs distinct contents to zero. */

namespace wb {

namespace {

using Word = std::vector<long>;  // letter per slot, slots in row-major order

struct Shape {
    Partition lam;
    long nslots = 0;
    std::vector<std::vector<std::size_t>> row_slots;
    std::vector<std::vector<std::size_t>> col_slots;
};

Shape make_shape(const Partition& lam) {
    Shape sh;
    sh.lam = lam;
    sh.row_slots.resize(lam.size());
    if (!lam.empty()) sh.col_slots.resize(static_cast<std::size_t>(lam[0]));
    std::size_t slot = 0;
    for (std::size_t r = 0; r < lam.size(); ++r)
        for (long c = 0; c < lam[r]; ++c, ++slot) {
            sh.row_slots[r].push_back(slot);
            sh.col_slots[static_cast<std::size_t>(c)].push_back(slot);
        }
    sh.nslots = static_cast<long>(slot);
    return sh;
}

/* semistandard: rows weakly increase, columns strictly increase */
std::vector<Word> ssyt_words(const Shape& sh, long n) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(sh.nslots), 0);
    std::vector<std::pair<std::size_t, std::size_t>> cell_of_slot;
    for (std::size_t r = 0; r < sh.row_slots.size(); ++r)
        for (std::size_t c = 0; c < sh.row_slots[r].size(); ++c)
            cell_of_slot.emplace_back(r, c);
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == w.size()) { out.push_back(w); return; }
        const auto [r, c] = cell_of_slot[slot];
        long lo = 1;
        if (c > 0) lo = std::max(lo, w[sh.row_slots[r][c - 1]]);
        if (r > 0) lo = std::max(lo, w[sh.row_slots[r - 1][c]] + 1);
        for (long v = lo; v <= n; ++v) {
            w[slot] = v;
            self(self, slot + 1);
        }
        w[slot] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<long> content_of(const Word& w, long n) {
    std::vector<long> c(static_cast<std::size_t>(n), 0);
    for (long v : w) ++c[static_cast<std::size_t>(v - 1)];
    return c;
}

/* all distinct words obtained by permuting entries within each row */
template <class F>
void for_each_row_rearrangement(const Shape& sh, const Word& w, F&& visit) {
    std::vector<std::vector<long>> rows(sh.row_slots.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t s : sh.row_slots[r]) rows[r].push_back(w[s]);
        std::sort(rows[r].begin(), rows[r].end());
    }
    Word cur(w.size());
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == rows.size()) { visit(const_cast<const Word&>(cur)); return; }
        std::vector<long> row = rows[r];
        do {
            for (std::size_t c = 0; c < row.size(); ++c) cur[sh.row_slots[r][c]] = row[c];
            self(self, r + 1);
        } while (std::next_permutation(row.begin(), row.end()));
    };
    rec(rec, 0);
}

/* the signed column symmetrizer applied to a single word, visiting each
 * (permuted word, sign) pair; slots move within their column only */
template <class F>
void for_each_column_perm(const Shape& sh, const Word& w, F&& visit) {
    const std::size_t ncols = sh.col_slots.size();
    std::vector<std::vector<std::size_t>> perm(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        perm[c].resize(sh.col_slots[c].size());
        std::iota(perm[c].begin(), perm[c].end(), 0);
    }
    Word cur = w;
    auto parity = [](const std::vector<std::size_t>& p) {
        int s = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++s;
        return s % 2 == 0 ? 1 : -1;
    };
    auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
        if (c == ncols) { visit(const_cast<const Word&>(cur), sign); return; }
        std::vector<std::size_t> p = perm[c];
        std::sort(p.begin(), p.end());
        do {
            for (std::size_t i = 0; i < p.size(); ++i)
                cur[sh.col_slots[c][i]] = w[sh.col_slots[c][p[i]]];
            self(self, c + 1, sign * parity(p));
        } while (std::next_permutation(p.begin(), p.end()));
        for (std::size_t i = 0; i < perm[c].size(); ++i) cur[sh.col_slots[c][i]] = w[sh.col_slots[c][i]];
    };
    rec(rec, 0, 1);
}

std::map<Word, long> f_expansion(const Shape& sh, const Word& T) {
    std::map<Word, long> f;
    for_each_row_rearrangement(sh, T, [&](const Word& S) {
        for_each_column_perm(sh, S, [&](const Word& W, int sign) { f[W] += sign; });
    });
    return f;
}

/* normalized Gram matrix on a list of tableau words of equal content */
Matrix<RationalField> gram_matrix(const Shape& sh, const std::vector<Word>& tabs) {
    const std::size_t k = tabs.size();
    std::vector<std::map<Word, long>> f(k);
    for (std::size_t j = 0; j < k; ++j) f[j] = f_expansion(sh, tabs[j]);
    Matrix<RationalField> G(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for_each_row_rearrangement(sh, tabs[i], [&](const Word& S) {
            for (std::size_t j = 0; j < k; ++j) {
                auto it = f[j].find(S);
                if (it != f[j].end()) G(i, j) += it->second;
            }
        });
    return G;
}

std::vector<Word> ssyt_of_content(const Shape& sh, long n, const std::vector<long>& content) {
    std::vector<Word> out;
    for (const Word& w : ssyt_words(sh, n))
        if (content_of(w, n) == content) out.push_back(w);
    return out;
}

std::vector<long> normalize_content(long n, long r, const std::vector<long>& content) {
    std::vector<long> c(static_cast<std::size_t>(n), 0);
    long sum = 0;
    for (std::size_t i = 0; i < content.size(); ++i) {
        require(content[i] >= 0, "content entries must be nonnegative");
        sum += content[i];
        if (content[i] > 0) {
            require(i < static_cast<std::size_t>(n), "content uses more than n letters");
            c[i] = content[i];
        }
    }
    require(sum == r, "content does not sum to |lambda|");
    return c;
}

/* all compositions of r into exactly n nonnegative parts */
std::vector<std::vector<long>> all_contents(long n, long r) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, long i, long rest) -> void {
        if (i == n - 1) { cur[static_cast<std::size_t>(i)] = rest; out.push_back(cur); return; }
        for (long v = rest; v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, rest - v);
        }
    };
    if (n > 0) rec(rec, 0, r);
    return out;
}

std::vector<Partition> schur_labels(long n, long r) {
    std::vector<Partition> labels;
    for (const Partition& lam : partitions_of(r))
        if (static_cast<long>(lam.size()) <= n) labels.push_back(lam);
    return labels;  // partitions_of is lex-descending already
}

LabeledDecMatrix schur_decmatrix_impl(long n, long r, long p, bool parallel) {
    require(n >= 1, "schur_decmatrix: n must be >= 1");
    require(r >= 0, "schur_decmatrix: r must be >= 0");
    PrimeField F(p);  // validates p

    const std::vector<Partition> labels = schur_labels(n, r);
    const long k = static_cast<long>(labels.size());

    /* mult[i][j] = dim L(labels[i]) at content labels[j]; zero unless
     * labels[j] <= labels[i] in dominance, hence unless j >= i in the lex
     * order.  This table is the expensive part: every entry is an
     * independent Gram rank, so the sweep parallelizes cleanly. */
    std::vector<std::vector<long>> mult(static_cast<std::size_t>(k),
                                        std::vector<long>(static_cast<std::size_t>(k), 0));
    std::vector<std::pair<long, long>> jobs;
    for (long i = 0; i < k; ++i)
        for (long j = i; j < k; ++j)
            if (dominance(labels[static_cast<std::size_t>(j)], labels[static_cast<std::size_t>(i)]) !=
                Dominance::incomparable)
                jobs.emplace_back(i, j);

#if defined(WB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long t = 0; t < static_cast<long>(jobs.size()); ++t) {
        const auto [i, j] = jobs[static_cast<std::size_t>(t)];
        const Partition& lam = labels[static_cast<std::size_t>(i)];
        const Partition& muc = labels[static_cast<std::size_t>(j)];
        std::vector<long> content(muc.begin(), muc.end());
        mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            simple_weight_mult(lam, n, content, p);
    }
    (void)parallel;

    LabeledDecMatrix M;
    M.row_labels = labels;
    M.col_labels = labels;
    M.entry.assign(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
    for (long i = 0; i < k; ++i) {
        M.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (long j = i + 1; j < k; ++j) {
            /* probe the character at content labels[j]:
             * K(lam_i, mu_j) = sum_{i <= j' <= j} d[i][j'] * mult[j'][j] */
            const long kostka = weyl_weight_mult(
                labels[static_cast<std::size_t>(i)], n,
                std::vector<long>(labels[static_cast<std::size_t>(j)].begin(),
                                  labels[static_cast<std::size_t>(j)].end()));
            long acc = 0;
            for (long jp = i; jp < j; ++jp)
                acc += M.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(jp)] *
                       mult[static_cast<std::size_t>(jp)][static_cast<std::size_t>(j)];
            const long d = kostka - acc;
            invariant(d >= 0, "schur_decmatrix: negative multiplicity");
            M.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
        }
    }
    return M;
}

}  // namespace

bigint weyl_dim(const Partition& lam, long n) {
    check_partition(lam);
    require(n >= 1, "weyl_dim: n must be >= 1");
    if (static_cast<long>(lam.size()) > n) return 0;
    bigint num = 1, den = 1;
    const auto hooks = hook_lengths(lam);
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (long j = 0; j < lam[i]; ++j) {
            num *= n + j - static_cast<long>(i);
            den *= hooks[i][static_cast<std::size_t>(j)];
        }
    invariant(num % den == 0, "weyl_dim: hook product does not divide");
    return num / den;
}

long weyl_weight_mult(const Partition& lam, long n, const std::vector<long>& content) {
    check_partition(lam);
    const auto c = normalize_content(n, part_sum(lam), content);
    const Shape sh = make_shape(lam);
    return static_cast<long>(ssyt_of_content(sh, n, c).size());
}

long simple_weight_mult(const Partition& lam, long n, const std::vector<long>& content, long p) {
    check_partition(lam);
    const auto c = normalize_content(n, part_sum(lam), content);
    const Shape sh = make_shape(lam);
    const auto tabs = ssyt_of_content(sh, n, c);
    if (tabs.empty()) return 0;
    const auto G = gram_matrix(sh, tabs);
    return static_cast<long>(rank_mod_p(G, p));
}

bigint simple_dim(const Partition& lam, long n, long p) {
    check_partition(lam);
    const long r = part_sum(lam);
    bigint total = 0;
    for (const auto& c : all_contents(n, r)) {
        /* contents are permutation-symmetric; only those whose sorted form
         * is dominated by lam can appear, but filtering is not needed for
         * correctness, simple_weight_mult returns 0 there anyway */
        total += simple_weight_mult(lam, n, c, p);
    }
    return total;
}

LabeledDecMatrix schur_decmatrix(long n, long r, long p) {
    return schur_decmatrix_impl(n, r, p, true);
}

LabeledDecMatrix schur_decmatrix_serial(long n, long r, long p) {
    return schur_decmatrix_impl(n, r, p, false);
}

LabeledDecMatrix block_submatrix(const LabeledDecMatrix& M, long p, const Partition& core) {
    check_partition(core);
    require(p_core(core, p) == core, "block_submatrix: not a p-core");
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < M.row_labels.size(); ++i)
        if (p_core(M.row_labels[i], p) == core) rows.push_back(i);
    for (std::size_t j = 0; j < M.col_labels.size(); ++j)
        if (p_core(M.col_labels[j], p) == core) cols.push_back(j);
    LabeledDecMatrix B;
    for (std::size_t i : rows) B.row_labels.push_back(M.row_labels[i]);
    for (std::size_t j : cols) B.col_labels.push_back(M.col_labels[j]);
    B.entry.resize(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            B.entry[a].push_back(M.entry[rows[a]][cols[b]]);
    return B;
}

void validate_weyl_construction(long n, long r) {
    RationalField Q;
    for (long s = 0; s <= r; ++s) {
        for (const Partition& lam : partitions_of(s)) {
            if (static_cast<long>(lam.size()) > n) continue;
            const Shape sh = make_shape(lam);
            const auto tabs = ssyt_words(sh, n);
            invariant(bigint(tabs.size()) == weyl_dim(lam, n),
                      "weyl model: tableau count disagrees with the product formula");
            /* group by content and check independence of the f_T per group */
            std::map<std::vector<long>, std::vector<Word>> by_content;
            for (const Word& w : tabs) by_content[content_of(w, n)].push_back(w);
            for (const auto& [c, group] : by_content) {
                std::vector<std::map<Word, long>> f(group.size());
                std::map<Word, std::size_t> coords;
                for (std::size_t i = 0; i < group.size(); ++i) {
                    f[i] = f_expansion(sh, group[i]);
                    for (const auto& [w, coeff] : f[i])
                        if (coeff != 0) coords.emplace(w, coords.size());
                }
                Matrix<RationalField> A(group.size(), coords.size());
                for (std::size_t i = 0; i < group.size(); ++i)
                    for (const auto& [w, coeff] : f[i])
                        if (coeff != 0) A(i, coords[w]) = coeff;
                invariant(rank(Q, A) == group.size(),
                          "weyl model: semistandard vectors are dependent");
            }
        }
    }
}

}  // namespace wb
