#pragma once

/* Graded super-bialgebras with a chosen homogeneous basis, and the double
 * construction: pair an algebra with the graded dual of a partner algebra
 * through an anti-homomorphism sigma, and equip the pairs with a twisted
 * convolution product and a bilinear form.  All coefficients are exact
 * (RationalField or PrimeField). */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wb/exactlin.hpp"

namespace wb {

/* ---- sparse linear combinations over an indexed basis ----------------- */

template <class K>
using LinComb = std::map<std::size_t, typename K::elem>;

template <class K>
void lin_add(const K& F, LinComb<K>& acc, std::size_t i, const typename K::elem& c) {
    if (F.is_zero(c)) return;
    auto it = acc.find(i);
    if (it == acc.end()) {
        acc.emplace(i, c);
        return;
    }
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) acc.erase(it);
}

template <class K>
typename K::elem lin_coeff(const K& F, const LinComb<K>& v, std::size_t i) {
    auto it = v.find(i);
    return it == v.end() ? F.zero() : it->second;
}

template <class K>
void lin_axpy(const K& F, LinComb<K>& acc, const typename K::elem& c, const LinComb<K>& v) {
    if (F.is_zero(c)) return;
    for (const auto& [i, x] : v) lin_add(F, acc, i, F.mul(c, x));
}

template <class K>
bool lin_equal(const K& F, const LinComb<K>& a, const LinComb<K>& b) {
    for (const auto& [i, x] : a)
        if (!F.is_zero(F.sub(x, lin_coeff(F, b, i)))) return false;
    for (const auto& [i, x] : b)
        if (!F.is_zero(F.sub(x, lin_coeff(F, a, i)))) return false;
    return true;
}

inline std::string elem_str(const RationalField&, const RationalField::elem& x) { return x.str(); }
inline std::string elem_str(const PrimeField&, PrimeField::elem x) { return std::to_string(x); }

/* ---- super-sign bookkeeping ------------------------------------------- */

/* Every Koszul sign in this module and its clients goes through these two
 * helpers, so the parity-zero case degenerates to "no signs" in one place. */
inline bool sign_is_minus(long exponent) { return (exponent & 1) != 0; }

template <class K>
typename K::elem apply_sign(const K& F, long exponent, const typename K::elem& c) {
    return sign_is_minus(exponent) ? F.neg(c) : c;
}

/* Exponent of the sign in the twisted product
 *   (a (x) alpha)(b (x) beta)
 * where a has been split into a1 (x) a2, b into b1 (x) b2, and alpha into
 * alpha1 (x) alpha2.  Arguments are parities. */
inline long double_sign_exponent(long pa1, long pa2, long pb1, long palpha, long palpha1,
                                 long pbeta) {
    return pa1 * (pa2 + pb1) + pb1 * palpha + palpha1 * pbeta;
}

/* ---- graded super-bialgebra with basis -------------------------------- */

/* Grading contract:
 *   - each piece B(r) is a subalgebra and products across distinct degrees
 *     vanish, so the product table keys only equal-degree pairs;
 *   - the coproduct of a degree-r element lies in sum_d B(r-d) (x) B(d);
 *   - B(0) is spanned by a single even idempotent u0, and the coefficient
 *     of u0 is the counit;
 *   - odd_degree counts odd tensor letters and is additive under products
 *     and coproducts; the super parity of a basis element is its low bit.
 * verify_bialgebra checks all of this plus (co)associativity and the
 * compatibility of product and coproduct. */
template <class K>
struct FiniteBasisBialgebra {
    using elem = typename K::elem;

    K field;
    std::string name;
    std::vector<std::string> label;
    std::vector<long> degree;
    std::vector<long> odd_degree;

    /* b_i b_j = sum_k product[{i,j}][k] b_k; an absent pair means zero */
    std::map<std::pair<std::size_t, std::size_t>, LinComb<K>> product;
    /* Delta b_i = sum coproduct[i][{j,k}] b_j (x) b_k */
    std::vector<std::map<std::pair<std::size_t, std::size_t>, elem>> coproduct;
    /* optional anti-automorphism; empty vector when the algebra has none */
    std::vector<LinComb<K>> sigma;

    explicit FiniteBasisBialgebra(K F, std::string nm = "") : field(std::move(F)), name(std::move(nm)) {}

    std::size_t dim() const { return label.size(); }
    int parity(std::size_t i) const { return static_cast<int>(odd_degree[i] & 1); }
    bool has_sigma() const { return !sigma.empty(); }

    std::size_t add_basis(std::string lab, long deg, long odd) {
        label.push_back(std::move(lab));
        degree.push_back(deg);
        odd_degree.push_back(odd);
        coproduct.emplace_back();
        return label.size() - 1;
    }

    long max_degree() const {
        long m = 0;
        for (long d : degree) m = std::max(m, d);
        return m;
    }

    std::vector<std::size_t> piece(long r) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (degree[i] == r) out.push_back(i);
        return out;
    }

    /* index of the unique degree-0 basis element */
    std::size_t unit_index() const {
        const auto p0 = piece(0);
        invariant(p0.size() == 1, "bialgebra: degree-0 piece is not one-dimensional");
        return p0[0];
    }

    const LinComb<K>& mult(std::size_t i, std::size_t j) const {
        static const LinComb<K> empty;
        auto it = product.find({i, j});
        return it == product.end() ? empty : it->second;
    }

    void set_product(std::size_t i, std::size_t j, std::size_t k, const elem& c) {
        lin_add(field, product[{i, j}], k, c);
    }

    void set_coproduct(std::size_t i, std::size_t j, std::size_t k, const elem& c) {
        if (field.is_zero(c)) return;
        auto& m = coproduct[i];
        auto it = m.find({j, k});
        if (it == m.end())
            m.emplace(std::make_pair(j, k), c);
        else {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) m.erase(it);
        }
    }
};

template <class K>
LinComb<K> mult_lin(const FiniteBasisBialgebra<K>& B, const LinComb<K>& x, const LinComb<K>& y) {
    LinComb<K> out;
    for (const auto& [i, cx] : x)
        for (const auto& [j, cy] : y) lin_axpy(B.field, out, B.field.mul(cx, cy), B.mult(i, j));
    return out;
}

template <class K>
LinComb<K> apply_linear(const K& F, const std::vector<LinComb<K>>& M, const LinComb<K>& v) {
    LinComb<K> out;
    for (const auto& [i, c] : v) lin_axpy(F, out, c, M[i]);
    return out;
}

template <class K>
std::string lin_str(const FiniteBasisBialgebra<K>& B, const LinComb<K>& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : v) {
        if (!s.empty()) s += " + ";
        s += elem_str(B.field, c) + "*" + B.label[i];
    }
    return s;
}

/* Delta = tau . Delta with the super twist tau(x (x) y) = +-(y (x) x). */
template <class K>
bool is_cocommutative(const FiniteBasisBialgebra<K>& B) {
    const K& F = B.field;
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (const auto& [jk, c] : B.coproduct[i]) {
            const auto [j, k] = jk;
            auto it = B.coproduct[i].find({k, j});
            const auto c2 = it == B.coproduct[i].end() ? F.zero() : it->second;
            const auto twisted = apply_sign(F, static_cast<long>(B.parity(j)) * B.parity(k), c2);
            if (!F.is_zero(F.sub(c, twisted))) return false;
        }
    return true;
}

/* Reduction of integral rational structure constants to F_p.  Rejects
 * coefficients whose denominator is divisible by p. */
inline PrimeField::elem reduce_elem(const PrimeField& F, const bigrat& q) {
    const bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    require(F.from_int(den) != 0, "reduce_mod_p: denominator divisible by p");
    return F.mul(F.from_int(num), F.inv(F.from_int(den)));
}

inline LinComb<PrimeField> reduce_lin(const PrimeField& F, const LinComb<RationalField>& v) {
    LinComb<PrimeField> out;
    for (const auto& [i, c] : v) lin_add(F, out, i, reduce_elem(F, c));
    return out;
}

inline FiniteBasisBialgebra<PrimeField> reduce_mod_p(const FiniteBasisBialgebra<RationalField>& B,
                                                     std::int64_t p) {
    PrimeField F(p);
    FiniteBasisBialgebra<PrimeField> out(F, B.name + " mod " + std::to_string(p));
    out.label = B.label;
    out.degree = B.degree;
    out.odd_degree = B.odd_degree;
    for (const auto& [ij, v] : B.product) {
        LinComb<PrimeField> w = reduce_lin(F, v);
        if (!w.empty()) out.product.emplace(ij, std::move(w));
    }
    out.coproduct.resize(B.dim());
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (const auto& [jk, c] : B.coproduct[i]) {
            const auto r = reduce_elem(F, c);
            if (r != 0) out.coproduct[i].emplace(jk, r);
        }
    for (const auto& v : B.sigma) out.sigma.push_back(reduce_lin(F, v));
    return out;
}

/* ---- verification reports --------------------------------------------- */

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string subject;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    std::string summary() const {
        std::string s = subject + "\n";
        for (const auto& c : checks) {
            s += c.pass ? "  [pass] " : "  [FAIL] ";
            s += c.name;
            if (!c.detail.empty()) s += ": " + c.detail;
            s += "\n";
        }
        return s;
    }
};

std::string report_json(const VerifyReport& rep);

/* ---- bialgebra axioms ------------------------------------------------- */

template <class K>
VerifyReport verify_bialgebra(const FiniteBasisBialgebra<K>& B) {
    const K& F = B.field;
    VerifyReport rep;
    rep.subject = "bialgebra " + B.name;

    bool shape = B.degree.size() == B.dim() && B.odd_degree.size() == B.dim() &&
                 B.coproduct.size() == B.dim() && (!B.has_sigma() || B.sigma.size() == B.dim());
    for (std::size_t i = 0; i < B.dim() && shape; ++i)
        shape = B.degree[i] >= 0 && B.odd_degree[i] >= 0;
    rep.add("shape", shape);
    if (!shape) return rep;

    {
        const auto p0 = B.piece(0);
        bool ok = p0.size() == 1 && B.odd_degree[p0[0]] == 0;
        if (ok) {
            const std::size_t u0 = p0[0];
            ok = lin_equal(F, B.mult(u0, u0), LinComb<K>{{u0, F.one()}});
        }
        rep.add("degree-zero piece", ok,
                ok ? "" : "B(0) must be one-dimensional, even, spanned by an idempotent");
    }
    if (!rep.all_pass()) return rep;
    const std::size_t u0 = B.unit_index();

    {
        bool ok = true;
        std::string bad;
        for (const auto& [ij, v] : B.product) {
            const auto [i, j] = ij;
            if (B.degree[i] != B.degree[j]) { ok = false; }
            for (const auto& [k, c] : v) {
                (void)c;
                if (B.degree[k] != B.degree[i] || B.odd_degree[k] != B.odd_degree[i] + B.odd_degree[j])
                    ok = false;
            }
            if (!ok) { bad = B.label[i] + " * " + B.label[j]; break; }
        }
        rep.add("product grading", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i)
            for (const auto& [jk, c] : B.coproduct[i]) {
                (void)c;
                const auto [j, k] = jk;
                if (B.degree[j] + B.degree[k] != B.degree[i] ||
                    B.odd_degree[j] + B.odd_degree[k] != B.odd_degree[i]) {
                    ok = false;
                    bad = "Delta " + B.label[i];
                    break;
                }
            }
        rep.add("coproduct grading", ok, bad);
    }

    {
        /* counit: the degree-0 splits of Delta x are exactly u0 (x) x and
         * x (x) u0, each with coefficient 1 */
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i) {
            LinComb<K> left, right;
            for (const auto& [jk, c] : B.coproduct[i]) {
                const auto [j, k] = jk;
                if (j == u0) lin_add(F, left, k, c);
                if (k == u0) lin_add(F, right, j, c);
            }
            const LinComb<K> self{{i, F.one()}};
            if (!lin_equal(F, left, self) || !lin_equal(F, right, self)) {
                ok = false;
                bad = B.label[i];
            }
        }
        rep.add("counit", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i)
            for (std::size_t j = 0; j < B.dim() && ok; ++j) {
                if (B.degree[i] != B.degree[j]) continue;
                const LinComb<K>& ij = B.mult(i, j);
                for (std::size_t k = 0; k < B.dim() && ok; ++k) {
                    if (B.degree[k] != B.degree[i]) continue;
                    LinComb<K> lhs = mult_lin(B, ij, LinComb<K>{{k, F.one()}});
                    LinComb<K> rhs = mult_lin(B, LinComb<K>{{i, F.one()}}, B.mult(j, k));
                    if (!lin_equal(F, lhs, rhs)) {
                        ok = false;
                        bad = B.label[i] + ", " + B.label[j] + ", " + B.label[k];
                    }
                }
            }
        rep.add("associativity", ok, bad);
    }

    {
        /* (Delta (x) 1)Delta = (1 (x) Delta)Delta */
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i) {
            std::map<std::tuple<std::size_t, std::size_t, std::size_t>, typename K::elem> lhs, rhs;
            auto acc = [&F](auto& m, std::size_t a, std::size_t b, std::size_t c,
                            const typename K::elem& v) {
                auto key = std::make_tuple(a, b, c);
                auto it = m.find(key);
                if (it == m.end())
                    m.emplace(key, v);
                else {
                    it->second = F.add(it->second, v);
                    if (F.is_zero(it->second)) m.erase(it);
                }
            };
            for (const auto& [jk, c] : B.coproduct[i]) {
                const auto [j, k] = jk;
                for (const auto& [ab, d] : B.coproduct[j]) acc(lhs, ab.first, ab.second, k, F.mul(c, d));
                for (const auto& [ab, d] : B.coproduct[k]) acc(rhs, j, ab.first, ab.second, F.mul(c, d));
            }
            if (lhs != rhs) {
                /* maps hold no explicit zeros, so direct comparison is sound */
                ok = false;
                bad = B.label[i];
            }
        }
        rep.add("coassociativity", ok, bad);
    }

    {
        /* Delta(xy) = sum +- x1 y1 (x) x2 y2 with sign (-1)^{|x2||y1|} */
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i)
            for (std::size_t j = 0; j < B.dim() && ok; ++j) {
                if (B.degree[i] != B.degree[j]) continue;
                std::map<std::pair<std::size_t, std::size_t>, typename K::elem> lhs, rhs;
                auto acc = [&F](auto& m, std::size_t a, std::size_t b, const typename K::elem& v) {
                    if (F.is_zero(v)) return;
                    auto key = std::make_pair(a, b);
                    auto it = m.find(key);
                    if (it == m.end())
                        m.emplace(key, v);
                    else {
                        it->second = F.add(it->second, v);
                        if (F.is_zero(it->second)) m.erase(it);
                    }
                };
                for (const auto& [k, c] : B.mult(i, j))
                    for (const auto& [ab, d] : B.coproduct[k]) acc(lhs, ab.first, ab.second, F.mul(c, d));
                for (const auto& [x12, cx] : B.coproduct[i])
                    for (const auto& [y12, cy] : B.coproduct[j]) {
                        const long s = static_cast<long>(B.parity(x12.second)) * B.parity(y12.first);
                        const auto c = apply_sign(F, s, F.mul(cx, cy));
                        for (const auto& [a, ca] : B.mult(x12.first, y12.first))
                            for (const auto& [b, cb] : B.mult(x12.second, y12.second))
                                acc(rhs, a, b, F.mul(c, F.mul(ca, cb)));
                    }
                if (lhs != rhs) {
                    ok = false;
                    bad = B.label[i] + ", " + B.label[j];
                }
            }
        rep.add("product-coproduct compatibility", ok, bad);
    }

    if (B.has_sigma()) {
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < B.dim() && ok; ++i)
            for (const auto& [j, c] : B.sigma[i]) {
                (void)c;
                if (B.degree[j] != B.degree[i] || B.odd_degree[j] != B.odd_degree[i]) {
                    ok = false;
                    bad = "sigma " + B.label[i];
                }
            }
        rep.add("sigma degree", ok, bad);

        ok = true;
        bad.clear();
        for (std::size_t i = 0; i < B.dim() && ok; ++i)
            for (std::size_t j = 0; j < B.dim() && ok; ++j) {
                if (B.degree[i] != B.degree[j]) continue;
                LinComb<K> lhs = apply_linear(F, B.sigma, B.mult(i, j));
                LinComb<K> rhs = mult_lin(B, B.sigma[j], B.sigma[i]);
                if (!lin_equal(F, lhs, rhs)) {
                    ok = false;
                    bad = B.label[i] + ", " + B.label[j];
                }
            }
        rep.add("sigma algebra anti-homomorphism", ok, bad);

        ok = true;
        bad.clear();
        for (std::size_t i = 0; i < B.dim() && ok; ++i) {
            std::map<std::pair<std::size_t, std::size_t>, typename K::elem> lhs, rhs;
            auto acc = [&F](auto& m, std::size_t a, std::size_t b, const typename K::elem& v) {
                if (F.is_zero(v)) return;
                auto key = std::make_pair(a, b);
                auto it = m.find(key);
                if (it == m.end())
                    m.emplace(key, v);
                else {
                    it->second = F.add(it->second, v);
                    if (F.is_zero(it->second)) m.erase(it);
                }
            };
            for (const auto& [j, c] : B.sigma[i])
                for (const auto& [ab, d] : B.coproduct[j]) acc(lhs, ab.first, ab.second, F.mul(c, d));
            for (const auto& [ab, d] : B.coproduct[i])
                for (const auto& [x, cx] : B.sigma[ab.second])
                    for (const auto& [y, cy] : B.sigma[ab.first])
                        acc(rhs, x, y, F.mul(d, F.mul(cx, cy)));
            if (lhs != rhs) {
                ok = false;
                bad = "sigma " + B.label[i];
            }
        }
        rep.add("sigma coalgebra anti-homomorphism", ok, bad);
    }

    return rep;
}

/* ---- the double ------------------------------------------------------- */

/* Basis pairs (b_i, b_j^*) with b_i from `left` and b_j^* the dual basis of
 * `right`, kept for all total degrees <= rmax.  The graded piece D(r) is
 * the span of the pairs of total degree r; products across distinct total
 * degrees vanish identically.
 *
 * The dual carries the transposed structures: the product of B*(d) and
 * B*(e) is the transpose of the coproduct component B(d+e) -> B(d) (x) B(e)
 * and adds degrees, the coproduct of B*(t) is the transpose of the
 * degree-t product and is degree-diagonal. */
template <class K>
struct DoubleAlgebra {
    using elem = typename K::elem;

    K field;
    std::string name;
    long rmax = 0;
    FiniteBasisBialgebra<K> left, right;
    std::vector<LinComb<K>> sigma;  // basis of left -> combination in right

    std::vector<std::pair<std::size_t, std::size_t>> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;

    /* caches for the product formula */
    std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, elem>>>> rp_first;
    std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, elem>>>> rp_second;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, elem>>> rc_pairs;

    DoubleAlgebra(K F, FiniteBasisBialgebra<K> L, FiniteBasisBialgebra<K> R)
        : field(std::move(F)), left(std::move(L)), right(std::move(R)) {}

    std::size_t dim() const { return basis.size(); }
    long pair_degree(std::size_t t) const { return right.degree[basis[t].second]; }
    long total_degree(std::size_t t) const {
        return left.degree[basis[t].first] + right.degree[basis[t].second];
    }
    int parity(std::size_t t) const {
        return (left.parity(basis[t].first) + right.parity(basis[t].second)) & 1;
    }
    /* bidegree (odd(a) + d - odd(alpha), d) where d is the pair degree */
    std::pair<long, long> bidegree(std::size_t t) const {
        const auto [i, j] = basis[t];
        const long d = right.degree[j];
        return {left.odd_degree[i] + d - right.odd_degree[j], d};
    }
    std::string label(std::size_t t) const {
        const auto [i, j] = basis[t];
        return left.label[i] + "(x)" + right.label[j] + "*";
    }
    std::vector<std::size_t> piece(long r) const {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < dim(); ++t)
            if (total_degree(t) == r) out.push_back(t);
        return out;
    }
};

template <class K>
DoubleAlgebra<K> make_double(const FiniteBasisBialgebra<K>& B1, const FiniteBasisBialgebra<K>& B2,
                             const std::vector<LinComb<K>>& sigma, long rmax,
                             const std::string& name = "") {
    require(rmax >= 0, "make_double: negative degree bound");
    require(sigma.size() == B1.dim(), "make_double: sigma must be defined on every basis element");
    DoubleAlgebra<K> D(B1.field, B1, B2);
    D.rmax = rmax;
    D.sigma = sigma;
    D.name = name.empty() ? "double(" + B1.name + ")" : name;
    D.left.unit_index();
    D.right.unit_index();

    for (std::size_t i = 0; i < B1.dim(); ++i)
        for (std::size_t j = 0; j < B2.dim(); ++j)
            if (B1.degree[i] + B2.degree[j] <= rmax) D.basis.push_back({i, j});
    std::sort(D.basis.begin(), D.basis.end(),
              [&](const std::pair<std::size_t, std::size_t>& a,
                  const std::pair<std::size_t, std::size_t>& b) {
                  const long ta = B1.degree[a.first] + B2.degree[a.second];
                  const long tb = B1.degree[b.first] + B2.degree[b.second];
                  if (ta != tb) return ta < tb;
                  if (B2.degree[a.second] != B2.degree[b.second])
                      return B2.degree[a.second] < B2.degree[b.second];
                  return a < b;
              });
    for (std::size_t t = 0; t < D.basis.size(); ++t) D.index[D.basis[t]] = t;

    D.rp_first.resize(B2.dim());
    D.rp_second.resize(B2.dim());
    for (const auto& [lm, v] : B2.product) {
        const auto [l1, l2] = lm;
        for (const auto& [t, c] : v) {
            D.rp_first[t][l1].push_back({l2, c});
            D.rp_second[t][l2].push_back({l1, c});
        }
    }
    for (std::size_t w = 0; w < B2.dim(); ++w)
        for (const auto& [uv, c] : B2.coproduct[w]) D.rc_pairs[uv].push_back({w, c});
    return D;
}

/* Classical case: the partner algebra is B itself and sigma is the stored
 * anti-automorphism of B. */
template <class K>
DoubleAlgebra<K> make_double(const FiniteBasisBialgebra<K>& B, long rmax) {
    require(B.has_sigma(), "make_double: bialgebra carries no sigma");
    return make_double(B, B, B.sigma, rmax);
}

/* (a (x) alpha)(b (x) beta) = sum (-1)^s  a2 b1 (x) beta2 alpha1
 *                                  <sigma a1, beta1> <alpha2, sigma b2>
 * with s = |a1|(|a2| + |b1|) + |b1||alpha| + |alpha1||beta|.  The pairing
 * forces deg a1 = deg beta and deg b2 = deg alpha, so the sum is tiny. */
template <class K>
LinComb<K> double_product(const DoubleAlgebra<K>& D, std::size_t x, std::size_t y) {
    const K& F = D.field;
    const auto [ia, ja] = D.basis[x];
    const auto [ib, jb] = D.basis[y];
    LinComb<K> res;
    const long d = D.right.degree[ja];
    const long e = D.right.degree[jb];
    const long palpha = D.right.parity(ja);
    const long pbeta = D.right.parity(jb);

    for (const auto& [a12, ca] : D.left.coproduct[ia]) {
        const auto [k1, k2] = a12;
        if (D.left.degree[k1] != e) continue;
        const LinComb<K>& sa1 = D.sigma[k1];
        if (sa1.empty()) continue;
        for (const auto& [b12, cb] : D.left.coproduct[ib]) {
            const auto [n1, n2] = b12;
            if (D.left.degree[n2] != d) continue;
            auto pit = D.left.product.find({k2, n1});
            if (pit == D.left.product.end()) continue;
            const LinComb<K>& sb2 = D.sigma[n2];
            if (sb2.empty()) continue;
            const long sbase = static_cast<long>(D.left.parity(k1)) *
                                   (D.left.parity(k2) + D.left.parity(n1)) +
                               static_cast<long>(D.left.parity(n1)) * palpha;
            const auto cab = F.mul(ca, cb);
            /* beta1 runs over supp sigma(a1), beta2 over the matching
             * transposed products landing on beta */
            for (const auto& [l1, t1] : sa1) {
                auto itb = D.rp_first[jb].find(l1);
                if (itb == D.rp_first[jb].end()) continue;
                for (const auto& [m2, t2] : sb2) {
                    auto ita = D.rp_second[ja].find(m2);
                    if (ita == D.rp_second[ja].end()) continue;
                    const auto ct = F.mul(cab, F.mul(t1, t2));
                    for (const auto& [l2, cbeta] : itb->second)
                        for (const auto& [m1, calpha] : ita->second) {
                            const long s = sbase + static_cast<long>(D.right.parity(m1)) * pbeta;
                            const auto scal =
                                apply_sign(F, s, F.mul(ct, F.mul(cbeta, calpha)));
                            if (F.is_zero(scal)) continue;
                            auto dit = D.rc_pairs.find({l2, m1});
                            if (dit == D.rc_pairs.end()) continue;
                            for (const auto& [k, cp] : pit->second)
                                for (const auto& [w, cw] : dit->second) {
                                    auto tix = D.index.find({k, w});
                                    invariant(tix != D.index.end(),
                                              "double_product: component outside the basis");
                                    lin_add(F, res, tix->second, F.mul(scal, F.mul(cp, cw)));
                                }
                        }
                }
            }
        }
    }
    return res;
}

template <class K>
LinComb<K> double_product_lin(const DoubleAlgebra<K>& D, const LinComb<K>& x, const LinComb<K>& y) {
    LinComb<K> out;
    for (const auto& [i, cx] : x)
        for (const auto& [j, cy] : y)
            lin_axpy(D.field, out, D.field.mul(cx, cy), double_product(D, i, j));
    return out;
}

/* <a (x) alpha, b (x) beta> = <sigma a, beta><alpha, sigma b> */
template <class K>
typename K::elem double_form(const DoubleAlgebra<K>& D, std::size_t x, std::size_t y) {
    const K& F = D.field;
    const auto [ia, ja] = D.basis[x];
    const auto [ib, jb] = D.basis[y];
    const auto c1 = lin_coeff(F, D.sigma[ia], jb);
    if (F.is_zero(c1)) return F.zero();
    return F.mul(c1, lin_coeff(F, D.sigma[ib], ja));
}

/* Product table over a set of basis indices; entries are combinations over
 * the global basis of D.  Built in parallel when OpenMP is available. */
template <class K>
std::vector<std::vector<LinComb<K>>> double_product_table(const DoubleAlgebra<K>& D,
                                                          const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    std::vector<std::vector<LinComb<K>>> T(n, std::vector<LinComb<K>>(n));
#if defined(WB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long a = 0; a < static_cast<long long>(n * n); ++a) {
        const std::size_t i = static_cast<std::size_t>(a) / n;
        const std::size_t j = static_cast<std::size_t>(a) % n;
        T[i][j] = double_product(D, idx[i], idx[j]);
    }
    return T;
}

/* Two-sided unit of the piece D(r).  The search space is the bidegree-(0,0)
 * span: a unit, if one exists, equals its own bidegree-(0,0) component.
 * First candidate: e (x) u0* where e solves the identity equations inside
 * the subalgebra left(r). */
template <class K>
std::optional<LinComb<K>> find_unit(const DoubleAlgebra<K>& D, long r) {
    const K& F = D.field;
    const auto piece = D.piece(r);
    if (piece.empty()) return std::nullopt;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t t = 0; t < piece.size(); ++t) pos[piece[t]] = t;

    auto is_unit = [&](const LinComb<K>& cand) {
        for (std::size_t t : piece) {
            const LinComb<K> one{{t, F.one()}};
            if (!lin_equal(F, double_product_lin(D, cand, one), one)) return false;
            if (!lin_equal(F, double_product_lin(D, one, cand), one)) return false;
        }
        return true;
    };

    {
        const auto lp = D.left.piece(r);
        if (!lp.empty()) {
            std::map<std::size_t, std::size_t> lpos;
            for (std::size_t t = 0; t < lp.size(); ++t) lpos[lp[t]] = t;
            Matrix<K> A(lp.size() * lp.size(), lp.size(), F.zero());
            std::vector<typename K::elem> b(lp.size() * lp.size(), F.zero());
            for (std::size_t vi = 0; vi < lp.size(); ++vi) {
                for (std::size_t ui = 0; ui < lp.size(); ++ui)
                    for (const auto& [k, c] : D.left.mult(lp[ui], lp[vi])) {
                        auto it = lpos.find(k);
                        invariant(it != lpos.end(), "find_unit: product leaves the piece");
                        A(vi * lp.size() + it->second, ui) =
                            F.add(A(vi * lp.size() + it->second, ui), c);
                    }
                b[vi * lp.size() + vi] = F.one();
            }
            if (auto sol = solve(F, A, b)) {
                LinComb<K> cand;
                const std::size_t ju0 = D.right.unit_index();
                for (std::size_t ui = 0; ui < lp.size(); ++ui)
                    lin_add(F, cand, D.index.at({lp[ui], ju0}), (*sol)[ui]);
                if (is_unit(cand)) return cand;
            }
        }
    }

    /* fall back to a linear solve over the bidegree-(0,0) span */
    std::vector<std::size_t> cands;
    for (std::size_t t : piece)
        if (D.bidegree(t) == std::pair<long, long>{0, 0}) cands.push_back(t);
    if (cands.empty() || piece.size() > 150) return std::nullopt;
    Matrix<K> A(piece.size() * piece.size(), cands.size(), F.zero());
    std::vector<typename K::elem> b(piece.size() * piece.size(), F.zero());
    for (std::size_t vi = 0; vi < piece.size(); ++vi) {
        for (std::size_t ci = 0; ci < cands.size(); ++ci)
            for (const auto& [k, c] : double_product(D, cands[ci], piece[vi])) {
                auto it = pos.find(k);
                invariant(it != pos.end(), "find_unit: product leaves the piece");
                A(vi * piece.size() + it->second, ci) =
                    F.add(A(vi * piece.size() + it->second, ci), c);
            }
        b[vi * piece.size() + vi] = F.one();
    }
    if (auto sol = solve(F, A, b)) {
        LinComb<K> cand;
        for (std::size_t ci = 0; ci < cands.size(); ++ci) lin_add(F, cand, cands[ci], (*sol)[ci]);
        if (is_unit(cand)) return cand;
    }
    return std::nullopt;
}

/* ---- verification of the double --------------------------------------- */

template <class K>
void verify_double_piece(const DoubleAlgebra<K>& D, long r, VerifyReport& rep) {
    const K& F = D.field;
    const auto piece = D.piece(r);
    const std::string tag = "r=" + std::to_string(r) + " ";
    {
        std::string d = "dim D(" + std::to_string(r) + ") = " + std::to_string(piece.size());
        std::map<long, long> per;
        for (std::size_t t : piece) ++per[D.pair_degree(t)];
        d += " [";
        bool first = true;
        for (const auto& [dd, cnt] : per) {
            if (!first) d += ", ";
            first = false;
            d += "d=" + std::to_string(dd) + ": " + std::to_string(cnt);
        }
        d += "]";
        rep.add(tag + "dimension", true, d);
    }
    if (piece.empty()) return;

    const auto T = double_product_table(D, piece);
    const std::size_t n = piece.size();
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t t = 0; t < n; ++t) pos[piece[t]] = t;

    {
        std::vector<std::string> offender(n * n);
        std::vector<char> failed(n * n, 0);
#if defined(WB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long a = 0; a < static_cast<long long>(n * n); ++a) {
            const std::size_t i = static_cast<std::size_t>(a) / n;
            const std::size_t j = static_cast<std::size_t>(a) % n;
            for (std::size_t k = 0; k < n; ++k) {
                LinComb<K> lhs, rhs;
                for (const auto& [u, c] : T[i][j]) lin_axpy(F, lhs, c, T[pos.at(u)][k]);
                for (const auto& [u, c] : T[j][k]) lin_axpy(F, rhs, c, T[i][pos.at(u)]);
                if (!lin_equal(F, lhs, rhs)) {
                    failed[a] = 1;
                    offender[a] = D.label(piece[i]) + ", " + D.label(piece[j]) + ", " +
                                  D.label(piece[k]);
                    break;
                }
            }
        }
        bool ok = true;
        std::string bad;
        for (std::size_t a = 0; a < failed.size() && ok; ++a)
            if (failed[a]) {
                ok = false;
                bad = offender[a];
            }
        rep.add(tag + "associativity", ok, bad);
    }

    {
        auto unit = find_unit(D, r);
        std::string d;
        if (unit) {
            d = "unit = ";
            bool first = true;
            for (const auto& [t, c] : *unit) {
                if (!first) d += " + ";
                first = false;
                d += elem_str(F, c) + "*" + D.label(t);
            }
        } else {
            d = "no two-sided unit found in the bidegree-(0,0) span";
        }
        rep.add(tag + "unit", unit.has_value(), d);
    }

    {
        Matrix<K> G(n, n, F.zero());
        bool sym = true;
        std::string bad;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                G(i, j) = double_form(D, piece[i], piece[j]);
                if (j < i && !F.is_zero(F.sub(G(i, j), G(j, i)))) {
                    sym = false;
                    bad = D.label(piece[i]) + ", " + D.label(piece[j]);
                }
            }
        rep.add(tag + "form symmetric", sym, bad);

        bool assoc = true;
        bad.clear();
        for (std::size_t i = 0; i < n && assoc; ++i)
            for (std::size_t j = 0; j < n && assoc; ++j)
                for (std::size_t k = 0; k < n && assoc; ++k) {
                    typename K::elem lhs = F.zero(), rhs = F.zero();
                    for (const auto& [u, c] : T[i][j]) lhs = F.add(lhs, F.mul(c, G(pos.at(u), k)));
                    for (const auto& [u, c] : T[j][k]) rhs = F.add(rhs, F.mul(c, G(i, pos.at(u))));
                    if (!F.is_zero(F.sub(lhs, rhs))) {
                        assoc = false;
                        bad = D.label(piece[i]) + ", " + D.label(piece[j]) + ", " +
                              D.label(piece[k]);
                    }
                }
        rep.add(tag + "form associative", assoc, bad);

        const std::size_t rk = rank(F, G);
        rep.add(tag + "form nondegenerate", rk == n,
                "Gram rank " + std::to_string(rk) + " of " + std::to_string(n));
    }

    {
        /* N(r): the span of the pairs of positive pair degree */
        std::vector<std::size_t> nil;
        for (std::size_t t = 0; t < n; ++t)
            if (D.pair_degree(piece[t]) >= 1) nil.push_back(t);
        bool ideal = true;
        std::string bad;
        for (std::size_t t : nil)
            for (std::size_t u = 0; u < n && ideal; ++u)
                for (const auto* prod : {&T[t][u], &T[u][t]})
                    for (const auto& [k, c] : *prod) {
                        (void)c;
                        if (D.pair_degree(k) < 1) {
                            ideal = false;
                            bad = D.label(piece[t]) + ", " + D.label(piece[u]);
                        }
                    }
        rep.add(tag + "nilpotent part is an ideal", ideal, bad);

        /* power span ranks; N^{r+1} must vanish */
        Matrix<K> cur(nil.size(), n, F.zero());
        for (std::size_t t = 0; t < nil.size(); ++t) cur(t, nil[t]) = F.one();
        long power = 1;
        std::size_t rk = rank(F, cur);
        while (rk > 0 && power <= r + 1) {
            Matrix<K> next(cur.nrows * nil.size(), n, F.zero());
            for (std::size_t a = 0; a < cur.nrows; ++a)
                for (std::size_t b = 0; b < nil.size(); ++b)
                    for (std::size_t u = 0; u < n; ++u) {
                        if (F.is_zero(cur(a, u))) continue;
                        for (const auto& [k, c] : T[u][nil[b]])
                            next(a * nil.size() + b, pos.at(k)) =
                                F.add(next(a * nil.size() + b, pos.at(k)), F.mul(cur(a, u), c));
                    }
            rref_in_place(F, next);
            /* keep the nonzero rows as the new spanning set */
            std::size_t nz = 0;
            for (std::size_t i = 0; i < next.nrows; ++i) {
                bool zero = true;
                for (std::size_t j = 0; j < n; ++j)
                    if (!F.is_zero(next(i, j))) zero = false;
                if (!zero) ++nz;
            }
            Matrix<K> trimmed(nz, n, F.zero());
            std::size_t w = 0;
            for (std::size_t i = 0; i < next.nrows; ++i) {
                bool zero = true;
                for (std::size_t j = 0; j < n; ++j)
                    if (!F.is_zero(next(i, j))) zero = false;
                if (zero) continue;
                for (std::size_t j = 0; j < n; ++j) trimmed(w, j) = next(i, j);
                ++w;
            }
            cur = std::move(trimmed);
            rk = cur.nrows;
            ++power;
        }
        const bool nilp = rk == 0 && power <= r + 2;
        rep.add(tag + "nilpotency", nilp,
                "N^" + std::to_string(power) + (rk == 0 ? " = 0" : " still nonzero"));
    }

    {
        /* projection to pair degree 0 is an algebra map onto left(r) */
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                LinComb<K> quo;
                for (const auto& [k, c] : T[i][j])
                    if (D.pair_degree(k) == 0) lin_add(F, quo, D.basis[k].first, c);
                LinComb<K> expect;
                if (D.pair_degree(piece[i]) == 0 && D.pair_degree(piece[j]) == 0)
                    expect = D.left.mult(D.basis[piece[i]].first, D.basis[piece[j]].first);
                if (!lin_equal(F, quo, expect)) {
                    ok = false;
                    bad = D.label(piece[i]) + ", " + D.label(piece[j]);
                }
            }
        rep.add(tag + "degree-zero quotient matches the base algebra", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const auto bi = D.bidegree(piece[i]);
                const auto bj = D.bidegree(piece[j]);
                for (const auto& [k, c] : T[i][j]) {
                    (void)c;
                    const auto bk = D.bidegree(k);
                    if (bk.first != bi.first + bj.first || bk.second != bi.second + bj.second) {
                        ok = false;
                        bad = D.label(piece[i]) + ", " + D.label(piece[j]) + " -> " + D.label(k);
                    }
                }
            }
        rep.add(tag + "bigrading", ok, bad);
    }
}

template <class K>
VerifyReport verify_double_algebra(const DoubleAlgebra<K>& D) {
    VerifyReport rep;
    rep.subject = D.name;
    for (long r = 0; r <= D.rmax; ++r) verify_double_piece(D, r, rep);
    {
        /* products across distinct total degrees vanish */
        bool ok = true;
        std::string bad;
        for (std::size_t x = 0; x < D.dim() && ok; ++x)
            for (std::size_t y = 0; y < D.dim() && ok; ++y) {
                if (D.total_degree(x) == D.total_degree(y)) continue;
                if (!double_product(D, x, y).empty()) {
                    ok = false;
                    bad = D.label(x) + ", " + D.label(y);
                }
            }
        rep.add("cross-degree products vanish", ok, bad);
    }
    return rep;
}

template <class K>
VerifyReport verify_double(const FiniteBasisBialgebra<K>& B, long rmax) {
    VerifyReport base = verify_bialgebra(B);
    VerifyReport rep;
    rep.subject = "double of " + B.name + ", degrees 0.." + std::to_string(rmax);
    for (auto& c : base.checks) rep.checks.push_back({"B " + c.name, c.pass, c.detail});
    if (!base.all_pass()) return rep;
    if (!B.has_sigma()) {
        rep.add("sigma present", false, "the double needs an anti-homomorphism");
        return rep;
    }
    const DoubleAlgebra<K> D = make_double(B, rmax);
    VerifyReport inner = verify_double_algebra(D);
    for (auto& c : inner.checks) rep.checks.push_back(std::move(c));
    return rep;
}

/* ---- the coproduct maps out of the double ----------------------------- */

/* Elements of D (x) B and B (x) D are sparse maps keyed by the two indices. */
template <class K>
using PairComb = std::map<std::pair<std::size_t, std::size_t>, typename K::elem>;

template <class K>
void pair_add(const K& F, PairComb<K>& acc, std::size_t a, std::size_t b,
              const typename K::elem& c) {
    if (F.is_zero(c)) return;
    auto key = std::make_pair(a, b);
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, c);
        return;
    }
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) acc.erase(it);
}

template <class K>
void require_cocommutative(const DoubleAlgebra<K>& D) {
    require(is_cocommutative(D.left),
            "coproduct maps out of the double need a cocommutative coalgebra");
}

/* Delta_l(a (x) alpha) = sum (a1 (x) alpha) (x) a2   in D (x) B */
template <class K>
PairComb<K> delta_l(const DoubleAlgebra<K>& D, std::size_t x) {
    require_cocommutative(D);
    const auto [ia, ja] = D.basis[x];
    PairComb<K> out;
    for (const auto& [a12, c] : D.left.coproduct[ia]) {
        const auto [k1, k2] = a12;
        auto it = D.index.find({k1, ja});
        invariant(it != D.index.end(), "delta_l: component outside the basis");
        pair_add(D.field, out, it->second, k2, c);
    }
    return out;
}

/* Delta_r(a (x) alpha) = sum a1 (x) (a2 (x) alpha)   in B (x) D */
template <class K>
PairComb<K> delta_r(const DoubleAlgebra<K>& D, std::size_t x) {
    require_cocommutative(D);
    const auto [ia, ja] = D.basis[x];
    PairComb<K> out;
    for (const auto& [a12, c] : D.left.coproduct[ia]) {
        const auto [k1, k2] = a12;
        auto it = D.index.find({k2, ja});
        invariant(it != D.index.end(), "delta_r: component outside the basis");
        pair_add(D.field, out, k1, it->second, c);
    }
    return out;
}

/* products on D (x) B and B (x) D with the super interchange sign */
template <class K>
PairComb<K> mult_d_tensor_b(const DoubleAlgebra<K>& D, const PairComb<K>& X, const PairComb<K>& Y) {
    const K& F = D.field;
    PairComb<K> out;
    for (const auto& [ps, cx] : X)
        for (const auto& [qt, cy] : Y) {
            const auto [p, s] = ps;
            const auto [q, t] = qt;
            const long sg = static_cast<long>(D.left.parity(s)) * D.parity(q);
            const auto c = apply_sign(F, sg, F.mul(cx, cy));
            for (const auto& [u, cu] : double_product(D, p, q))
                for (const auto& [v, cv] : D.left.mult(s, t))
                    pair_add(F, out, u, v, F.mul(c, F.mul(cu, cv)));
        }
    return out;
}

template <class K>
PairComb<K> mult_b_tensor_d(const DoubleAlgebra<K>& D, const PairComb<K>& X, const PairComb<K>& Y) {
    const K& F = D.field;
    PairComb<K> out;
    for (const auto& [sp, cx] : X)
        for (const auto& [tq, cy] : Y) {
            const auto [s, p] = sp;
            const auto [t, q] = tq;
            const long sg = static_cast<long>(D.parity(p)) * D.left.parity(t);
            const auto c = apply_sign(F, sg, F.mul(cx, cy));
            for (const auto& [v, cv] : D.left.mult(s, t))
                for (const auto& [u, cu] : double_product(D, p, q))
                    pair_add(F, out, v, u, F.mul(c, F.mul(cv, cu)));
        }
    return out;
}

/* Multiplicativity sweep for both coproduct maps on the classical double. */
template <class K>
VerifyReport verify_delta_maps(const FiniteBasisBialgebra<K>& B, long rmax) {
    VerifyReport rep;
    rep.subject = "coproduct maps on double(" + B.name + "), degrees 0.." + std::to_string(rmax);
    const DoubleAlgebra<K> D = make_double(B, rmax);
    require_cocommutative(D);
    const K& F = B.field;
    bool okl = true, okr = true;
    std::string badl, badr;
    for (std::size_t x = 0; x < D.dim(); ++x)
        for (std::size_t y = 0; y < D.dim(); ++y) {
            PairComb<K> lhs_l, lhs_r;
            for (const auto& [u, c] : double_product(D, x, y)) {
                for (const auto& [ab, d] : delta_l(D, u)) pair_add(F, lhs_l, ab.first, ab.second, F.mul(c, d));
                for (const auto& [ab, d] : delta_r(D, u)) pair_add(F, lhs_r, ab.first, ab.second, F.mul(c, d));
            }
            const PairComb<K> rhs_l = mult_d_tensor_b(D, delta_l(D, x), delta_l(D, y));
            const PairComb<K> rhs_r = mult_b_tensor_d(D, delta_r(D, x), delta_r(D, y));
            if (okl && lhs_l != rhs_l) {
                okl = false;
                badl = D.label(x) + ", " + D.label(y);
            }
            if (okr && lhs_r != rhs_r) {
                okr = false;
                badr = D.label(x) + ", " + D.label(y);
            }
        }
    rep.add("Delta_l multiplicative", okl, badl);
    rep.add("Delta_r multiplicative", okr, badr);
    return rep;
}

/* ---- presets ---------------------------------------------------------- */

/* One even group-like letter per degree: g_r g_s = delta_{rs} g_r and
 * Delta g_r = sum g_i (x) g_j over i + j = r; sigma is the identity. */
template <class K>
FiniteBasisBialgebra<K> s1_bialgebra(const K& F, long rmax) {
    require(rmax >= 0, "s1_bialgebra: negative degree bound");
    FiniteBasisBialgebra<K> B(F, "s1");
    for (long r = 0; r <= rmax; ++r) B.add_basis("g" + std::to_string(r), r, 0);
    for (long r = 0; r <= rmax; ++r) {
        const auto gr = static_cast<std::size_t>(r);
        B.set_product(gr, gr, gr, F.one());
        for (long i = 0; i <= r; ++i)
            B.set_coproduct(gr, static_cast<std::size_t>(i), static_cast<std::size_t>(r - i),
                            F.one());
        B.sigma.push_back(LinComb<K>{{gr, F.one()}});
    }
    return B;
}

/* k in degree 0 plus the upper triangular matrices in degree 1; every
 * degree-1 element is primitive and sigma reflects along the antidiagonal. */
template <class K>
FiniteBasisBialgebra<K> tri_bialgebra(const K& F, long n) {
    require(n >= 1, "tri_bialgebra: n must be >= 1");
    FiniteBasisBialgebra<K> B(F, "tri:" + std::to_string(n));
    const std::size_t eps = B.add_basis("e", 0, 0);
    std::map<std::pair<long, long>, std::size_t> E;
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j)
            E[{i, j}] = B.add_basis("E" + std::to_string(i) + std::to_string(j), 1, 0);
    B.set_product(eps, eps, eps, F.one());
    B.set_coproduct(eps, eps, eps, F.one());
    B.sigma.resize(B.dim());
    B.sigma[eps] = LinComb<K>{{eps, F.one()}};
    for (const auto& [ij, idx] : E) {
        const auto [i, j] = ij;
        for (long k = j; k <= n; ++k) B.set_product(idx, E.at({j, k}), E.at({i, k}), F.one());
        B.set_coproduct(idx, idx, eps, F.one());
        B.set_coproduct(idx, eps, idx, F.one());
        B.sigma[idx] = LinComb<K>{{E.at({n + 1 - j, n + 1 - i}), F.one()}};
    }
    return B;
}

/* ---- serialization ---------------------------------------------------- */

std::string algebra_json(const FiniteBasisBialgebra<RationalField>& B);
std::string algebra_json(const FiniteBasisBialgebra<PrimeField>& B);
std::string algebra_json(const DoubleAlgebra<RationalField>& D);
std::string algebra_json(const DoubleAlgebra<PrimeField>& D);

}  // namespace wb
