#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "wb/error.hpp"

namespace wb {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/* Field objects.  Everything downstream is templated on one of these two;
 * the element type is exact in both cases (no floating point anywhere). */

struct RationalField {
    using elem = bigrat;
    static elem zero() { return 0; }
    static elem one() { return 1; }
    static elem add(const elem& a, const elem& b) { return a + b; }
    static elem sub(const elem& a, const elem& b) { return a - b; }
    static elem mul(const elem& a, const elem& b) { return a * b; }
    static elem neg(const elem& a) { return -a; }
    static elem inv(const elem& a) {
        invariant(a != 0, "RationalField: inverse of zero");
        return elem(1) / a;
    }
    static bool is_zero(const elem& a) { return a == 0; }
    static elem from_int(const bigint& n) { return elem(n); }
};

struct PrimeField {
    using elem = std::int64_t;
    std::int64_t p;

    explicit PrimeField(std::int64_t p_) : p(p_) {
        require(p_ >= 2, "characteristic must be >= 2");
        for (std::int64_t d = 2; d * d <= p_; ++d)
            require(p_ % d != 0, "characteristic must be prime");
    }

    elem zero() const { return 0; }
    elem one() const { return 1 % p; }
    elem add(elem a, elem b) const { return (a + b) % p; }
    elem sub(elem a, elem b) const { return ((a - b) % p + p) % p; }
    elem mul(elem a, elem b) const { return (a * b) % p; }
    elem neg(elem a) const { return (p - a % p) % p; }
    elem inv(elem a) const {
        a = ((a % p) + p) % p;
        invariant(a != 0, "PrimeField: inverse of zero");
        /* extended Euclid */
        std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        invariant(r0 == 1, "PrimeField: gcd(a, p) != 1");
        return ((s0 % p) + p) % p;
    }
    bool is_zero(elem a) const { return a % p == 0; }
    elem from_int(const bigint& n) const {
        return static_cast<elem>(((n % p) + p).convert_to<std::int64_t>() % p);
    }
};

template <class K>
struct Matrix {
    using elem = typename K::elem;
    std::size_t nrows = 0, ncols = 0;
    std::vector<elem> a;  // row major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, elem fill = elem{})
        : nrows(r), ncols(c), a(r * c, fill) {}

    elem& operator()(std::size_t i, std::size_t j) { return a[i * ncols + j]; }
    const elem& operator()(std::size_t i, std::size_t j) const { return a[i * ncols + j]; }

    static Matrix identity(const K& F, std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
        return m;
    }
};

template <class K>
Matrix<K> matmul(const K& F, const Matrix<K>& A, const Matrix<K>& B) {
    invariant(A.ncols == B.nrows, "matmul: shape mismatch");
    Matrix<K> C(A.nrows, B.ncols, F.zero());
    for (std::size_t i = 0; i < A.nrows; ++i)
        for (std::size_t k = 0; k < A.ncols; ++k) {
            const auto& aik = A(i, k);
            if (F.is_zero(aik)) continue;
            for (std::size_t j = 0; j < B.ncols; ++j)
                C(i, j) = F.add(C(i, j), F.mul(aik, B(k, j)));
        }
    return C;
}

/* Row reduction with deterministic pivoting: columns are scanned left to
 * right and the first row (in index order) with a nonzero entry becomes the
 * pivot row.  Returns the pivot columns; M is replaced by its reduced row
 * echelon form.  Every consumer below goes through this one routine. */
template <class K>
std::vector<std::size_t> rref_in_place(const K& F, Matrix<K>& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.ncols && row < M.nrows; ++col) {
        std::size_t pr = row;
        while (pr < M.nrows && F.is_zero(M(pr, col))) ++pr;
        if (pr == M.nrows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < M.ncols; ++j) std::swap(M(row, j), M(pr, j));
        const auto piv_inv = F.inv(M(row, col));
        for (std::size_t j = col; j < M.ncols; ++j) M(row, j) = F.mul(M(row, j), piv_inv);
        for (std::size_t i = 0; i < M.nrows; ++i) {
            if (i == row || F.is_zero(M(i, col))) continue;
            const auto f = M(i, col);
            for (std::size_t j = col; j < M.ncols; ++j)
                M(i, j) = F.sub(M(i, j), F.mul(f, M(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(const K& F, Matrix<K> M) {
    return rref_in_place(F, M).size();
}

/* Basis of the right kernel {x : Mx = 0}, one vector per row of the result.
 * Rows are produced in increasing order of their free column. */
template <class K>
Matrix<K> kernel_basis(const K& F, Matrix<K> M) {
    const auto pivots = rref_in_place(F, M);
    std::vector<bool> is_pivot(M.ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<K> ker(M.ncols - pivots.size(), M.ncols, F.zero());
    std::size_t r = 0;
    for (std::size_t free_col = 0; free_col < M.ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        ker(r, free_col) = F.one();
        for (std::size_t k = 0; k < pivots.size(); ++k)
            ker(r, pivots[k]) = F.neg(M(k, free_col));
        ++r;
    }
    return ker;
}

/* One solution of Ax = b, or nullopt if inconsistent. */
template <class K>
std::optional<std::vector<typename K::elem>>
solve(const K& F, const Matrix<K>& A, const std::vector<typename K::elem>& b) {
    invariant(A.nrows == b.size(), "solve: shape mismatch");
    Matrix<K> aug(A.nrows, A.ncols + 1, F.zero());
    for (std::size_t i = 0; i < A.nrows; ++i) {
        for (std::size_t j = 0; j < A.ncols; ++j) aug(i, j) = A(i, j);
        aug(i, A.ncols) = b[i];
    }
    const auto pivots = rref_in_place(F, aug);
    if (!pivots.empty() && pivots.back() == A.ncols) return std::nullopt;
    std::vector<typename K::elem> x(A.ncols, F.zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, A.ncols);
    return x;
}

/* Rank of an integer matrix over F_p without building a PrimeField matrix by
 * hand at every call site.  Used for Gram ranks. */
inline std::size_t rank_mod_p(const Matrix<RationalField>& M, std::int64_t p) {
    PrimeField F(p);
    Matrix<PrimeField> R(M.nrows, M.ncols, 0);
    for (std::size_t i = 0; i < M.nrows; ++i)
        for (std::size_t j = 0; j < M.ncols; ++j) {
            const bigrat& q = M(i, j);
            invariant(boost::multiprecision::denominator(q) == 1,
                      "rank_mod_p: matrix entry is not an integer");
            R(i, j) = F.from_int(boost::multiprecision::numerator(q));
        }
    return rank(F, R);
}

}  // namespace wb
