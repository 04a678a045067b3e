#pragma once

#include <functional>
#include <vector>

#include "wb/partition.hpp"
#include "wb/weyl.hpp"

namespace wb {

/* All a-tuples of partitions with total size w, components varying
 * rightmost-fastest, each slot running through partitions_of in order. */
std::vector<std::vector<Partition>> enumerate_tuples(long a, long w);

/* Decomposition number of a Rouquier block in quotient coordinates, by the
 * closed Littlewood-Richardson formula
 *
 *   d = sum over (p+1)-tuples A and p-tuples B of partitions of
 *       prod_j c(lam^j; A^j, B^j) * c(mu^j; B^j, (A^{j+1})')
 *
 * evaluated on component-reversed quotients (the formula's runner reading
 * is opposite to the one p_quotient uses; the reversal is validated against
 * the Weyl-module oracle and the weight-one Brauer tree shape).  The sum is
 * finitely supported: tuple sizes are forced slot by slot.  mu must be a
 * p-regular label, i.e. have empty component 0. */
long rock_decnumber(const PQuotient& lam, const PQuotient& mu, long p);

struct QuotientMatrix {
    long p = 0, w = 0;
    Partition core;                 // the Rouquier core of the block
    std::vector<BlockLabel> rows;   // lex-descending on quotient_vector
    std::vector<BlockLabel> cols;   // the p-regular subset, same order
    std::vector<std::vector<long>> entry;
};

/* Rows: the whole block; columns: the p-regular labels.  Entries by
 * rock_decnumber. */
QuotientMatrix rock_decmatrix(long p, long w);
QuotientMatrix rock_decmatrix_serial(long p, long w);

/* Supplier of Schur-algebra decomposition matrices, injected so the
 * adjustment can be driven by any oracle.  Called as provider(n, r, p). */
using DecProvider = std::function<LabeledDecMatrix(long, long, long)>;

DecProvider weyl_provider();

/* Square matrix on the p-regular labels.  Block diagonal over the
 * composition (|lam^1|, ..., |lam^{p-1}|); the block is the Kronecker
 * product of Dec S(a_i, a_i), applied through the index map that
 * conjugates component i exactly when p-1-i is even.  The same map is
 * applied to rows and columns. */
QuotientMatrix adjustment_matrix(long p, long w, const DecProvider& provider);

/* Product rock * adjustment: the modular decomposition matrix of the
 * block. */
QuotientMatrix full_decmatrix(long p, long w, const DecProvider& provider);

/* Conjugation on labels: the quotient of the conjugate partition, i.e.
 * components reversed and conjugated entrywise.  Sends the block of a
 * self-conjugate core to itself. */
PQuotient conjugate_label(const PQuotient& q);

}  // namespace wb
