#pragma once

#include <vector>

#include "wb/exactlin.hpp"
#include "wb/partition.hpp"

namespace wb {

/* Decomposition data for highest-weight algebras: rows and columns are
 * labelled by partitions, entries are multiplicities. */
struct LabeledDecMatrix {
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;
    std::vector<std::vector<long>> entry;
};

/* dim of the Weyl module of highest weight lam for GL_n, by the
 * factorial-free product formula prod (n + j - i) / hook(i,j).  Zero when
 * lam has more than n rows. */
bigint weyl_dim(const Partition& lam, long n);

/* Number of semistandard tableaux of shape lam, entries bounded by n, with
 * the given content (trailing zeros in the content allowed). */
long weyl_weight_mult(const Partition& lam, long n, const std::vector<long>& content);

/* dim of the content-weight space of the simple head L(lam) in
 * characteristic p, computed as the F_p-rank of the contravariant Gram
 * matrix on the semistandard basis of that weight space of the Weyl module. */
long simple_weight_mult(const Partition& lam, long n, const std::vector<long>& content, long p);

/* dim L(lam) over F_p: sum of simple_weight_mult over all contents. */
bigint simple_dim(const Partition& lam, long n, long p);

/* [Delta(lambda) : L(mu)] for the Schur algebra S(n,r) in characteristic p.
 * Labels are the partitions of r with at most n rows, sorted lex-descending
 * (a refinement of dominance); the matrix is upper unitriangular in the
 * sense that nonzero entries require mu <= lambda in dominance. */
LabeledDecMatrix schur_decmatrix(long n, long r, long p);

/* Restriction of a labelled matrix to the rows and columns whose labels
 * have the given p-core. */
LabeledDecMatrix block_submatrix(const LabeledDecMatrix& M, long p, const Partition& core);

/* Self-checks of the tableau model: for every partition of every size up to
 * r (at most n rows), the semistandard vectors must be linearly independent
 * over Q, and their count must agree with the product formula.  Throws
 * internal_error on any mismatch. */
void validate_weyl_construction(long n, long r);

/* Serial reference for the Gram-rank sweep behind schur_decmatrix; the
 * default entry point parallelizes the sweep when OpenMP is available.
 * Both must agree; the benchmark and the tests compare them. */
LabeledDecMatrix schur_decmatrix_serial(long n, long r, long p);

}  // namespace wb
