#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "wb/bialgebra.hpp"

using namespace wb;

namespace {

std::size_t left_index(const FiniteBasisBialgebra<RationalField>& B, const std::string& lab) {
    for (std::size_t i = 0; i < B.dim(); ++i)
        if (B.label[i] == lab) return i;
    REQUIRE(false);
    return 0;
}

/* Divided-power tower g0, g1, g2 with Delta g2 = g2 (x) g0 + g1 (x) g1 +
 * g0 (x) g2, plus one nilpotent y in degree 1: g1 is the identity of
 * B(1) = k[y]/(y^2).  sigma fixes the tower and kills y, so every axiom
 * holds but sigma is not invertible in degree 1.  The doubles still have
 * units (g_r (x) g0^*), leaving the degenerate form as the only defect. */
FiniteBasisBialgebra<RationalField> degenerate_sigma_fixture() {
    RationalField F;
    FiniteBasisBialgebra<RationalField> B(F, "degenerate-sigma");
    const auto g0 = B.add_basis("g0", 0, 0);
    const auto g1 = B.add_basis("g1", 1, 0);
    const auto y = B.add_basis("y", 1, 0);
    const auto g2 = B.add_basis("g2", 2, 0);
    B.set_product(g0, g0, g0, F.one());
    B.set_product(g1, g1, g1, F.one());
    B.set_product(g1, y, y, F.one());
    B.set_product(y, g1, y, F.one());
    B.set_product(g2, g2, g2, F.one());
    B.set_coproduct(g0, g0, g0, F.one());
    for (auto t : {g1, y, g2}) {
        B.set_coproduct(t, t, g0, F.one());
        B.set_coproduct(t, g0, t, F.one());
    }
    B.set_coproduct(g2, g1, g1, F.one());
    B.sigma.resize(B.dim());
    B.sigma[g0] = {{g0, F.one()}};
    B.sigma[g1] = {{g1, F.one()}};
    B.sigma[g2] = {{g2, F.one()}};
    /* sigma[y] stays empty */
    return B;
}

/* Coassociative but not cocommutative: Delta z contains x (x) y and not
 * y (x) x.  sigma swaps x and y, which restores the anti-homomorphism
 * axioms, so the only defect is the missing cocommutativity. */
FiniteBasisBialgebra<RationalField> non_cocommutative_fixture() {
    RationalField F;
    FiniteBasisBialgebra<RationalField> B(F, "non-cocommutative");
    const auto e = B.add_basis("e", 0, 0);
    const auto x = B.add_basis("x", 1, 0);
    const auto y = B.add_basis("y", 1, 0);
    const auto z = B.add_basis("z", 2, 0);
    B.set_product(e, e, e, F.one());
    B.set_coproduct(e, e, e, F.one());
    for (auto t : {x, y, z}) {
        B.set_coproduct(t, t, e, F.one());
        B.set_coproduct(t, e, t, F.one());
    }
    B.set_coproduct(z, x, y, F.one());
    B.sigma.resize(B.dim());
    B.sigma[e] = {{e, F.one()}};
    B.sigma[x] = {{y, F.one()}};
    B.sigma[y] = {{x, F.one()}};
    B.sigma[z] = {{z, F.one()}};
    return B;
}

}  // namespace

TEST_CASE("preset bialgebras satisfy the axioms") {
    RationalField Q;
    CHECK(verify_bialgebra(s1_bialgebra(Q, 4)).all_pass());
    CHECK(verify_bialgebra(tri_bialgebra(Q, 3)).all_pass());
    PrimeField F2(2);
    CHECK(verify_bialgebra(s1_bialgebra(F2, 4)).all_pass());
    CHECK(verify_bialgebra(tri_bialgebra(F2, 3)).all_pass());
    CHECK(verify_bialgebra(non_cocommutative_fixture()).all_pass());
    CHECK(verify_bialgebra(degenerate_sigma_fixture()).all_pass());
}

TEST_CASE("double of the group-like line is uniserial") {
    RationalField Q;
    const auto B = s1_bialgebra(Q, 4);
    const auto rep = verify_double(B, 4);
    INFO(rep.summary());
    CHECK(rep.all_pass());

    const auto D = make_double(B, 4);
    for (long r = 0; r <= 4; ++r) {
        const auto piece = D.piece(r);
        CHECK(piece.size() == static_cast<std::size_t>(r) + 1);
        /* basis sorted by pair degree: piece[d] = g_{r-d} (x) g_d^* */
        for (std::size_t d = 0; d < piece.size(); ++d)
            CHECK(D.pair_degree(piece[d]) == static_cast<long>(d));
        /* u_d u_e = u_{d+e}, zero past the top: truncated polynomials */
        for (std::size_t d = 0; d < piece.size(); ++d)
            for (std::size_t e = 0; e < piece.size(); ++e) {
                const auto prod = double_product(D, piece[d], piece[e]);
                if (d + e <= static_cast<std::size_t>(r)) {
                    REQUIRE(prod.size() == 1);
                    CHECK(prod.count(piece[d + e]) == 1);
                    CHECK(prod.at(piece[d + e]) == 1);
                } else {
                    CHECK(prod.empty());
                }
            }
    }

    PrimeField F2(2);
    const auto rep2 = verify_double(s1_bialgebra(F2, 4), 4);
    INFO(rep2.summary());
    CHECK(rep2.all_pass());
}

TEST_CASE("triangular preset: full verification and dimension") {
    RationalField Q;
    const auto B = tri_bialgebra(Q, 3);
    const auto rep = verify_double(B, 1);
    INFO(rep.summary());
    CHECK(rep.all_pass());

    const auto D = make_double(B, 1);
    CHECK(D.piece(1).size() == 12);  // n(n+1) at n = 3

    /* the unit is the piece identity of the left factor against the counit */
    const auto unit = find_unit(D, 1);
    REQUIRE(unit.has_value());
    LinComb<RationalField> expect;
    const auto e = B.unit_index();
    for (const auto lab : {"E11", "E22", "E33"})
        lin_add(Q, expect, D.index.at({left_index(B, lab), e}), Q.one());
    CHECK(lin_equal(Q, *unit, expect));

    PrimeField F2(2);
    const auto rep2 = verify_double(tri_bialgebra(F2, 3), 1);
    INFO(rep2.summary());
    CHECK(rep2.all_pass());
}

TEST_CASE("triangular double is the cycle quiver algebra truncated past full turns") {
    RationalField Q;
    const long n = 3;
    const auto B = tri_bialgebra(Q, n);
    const auto D = make_double(B, 1);
    const auto piece = D.piece(1);
    const std::size_t N = piece.size();
    REQUIRE(N == static_cast<std::size_t>(n * (n + 1)));
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t t = 0; t < N; ++t) pos[piece[t]] = t;
    const auto T = double_product_table(D, piece);

    auto to_vec = [&](const LinComb<RationalField>& v) {
        std::vector<bigrat> out(N, 0);
        for (const auto& [i, c] : v) out[pos.at(i)] = c;
        return out;
    };
    auto span_rank = [&](const std::vector<std::vector<bigrat>>& rows) {
        Matrix<RationalField> M(rows.size(), N);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < N; ++j) M(i, j) = rows[i][j];
        return rank(Q, M);
    };
    auto mult_vec = [&](const std::vector<bigrat>& a, const std::vector<bigrat>& b) {
        LinComb<RationalField> out;
        for (std::size_t i = 0; i < N; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < N; ++j) {
                if (b[j] == 0) continue;
                lin_axpy(Q, out, Q.mul(a[i], b[j]), T[i][j]);
            }
        }
        return to_vec(out);
    };

    /* orthogonal idempotents from the diagonal matrix units */
    const auto eps = B.unit_index();
    std::vector<std::vector<bigrat>> f;
    for (long i = 1; i <= n; ++i) {
        LinComb<RationalField> fi{{D.index.at({left_index(B, "E" + std::to_string(i) + std::to_string(i)), eps}), Q.one()}};
        f.push_back(to_vec(fi));
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const auto p = mult_vec(f[i], f[j]);
            if (i == j)
                CHECK(p == f[i]);
            else
                CHECK(span_rank({p}) == 0);
        }

    /* radical: strict upper letters against the counit plus the whole dual slice */
    std::vector<std::vector<bigrat>> J;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            LinComb<RationalField> v{{D.index.at({left_index(B, "E" + std::to_string(i) + std::to_string(j)), eps}), Q.one()}};
            J.push_back(to_vec(v));
        }
    for (std::size_t t : piece)
        if (D.pair_degree(t) == 1) J.push_back(to_vec(LinComb<RationalField>{{t, Q.one()}}));
    REQUIRE(J.size() == static_cast<std::size_t>(n * n));
    CHECK(span_rank(J) == static_cast<std::size_t>(n * n));

    /* J is an ideal */
    for (std::size_t t = 0; t < N; ++t)
        for (const auto& v : J) {
            std::vector<bigrat> unitvec(N, 0);
            unitvec[t] = 1;
            auto Jplus = J;
            Jplus.push_back(mult_vec(unitvec, v));
            CHECK(span_rank(Jplus) == J.size());
            Jplus.back() = mult_vec(v, unitvec);
            CHECK(span_rank(Jplus) == J.size());
        }

    /* power series of the radical: dims n(n+1-l), so J^n != 0, J^{n+1} = 0 */
    std::vector<std::vector<std::vector<bigrat>>> powers{J};
    while (!powers.back().empty()) {
        std::vector<std::vector<bigrat>> nxt;
        for (const auto& v : powers.back())
            for (const auto& w : J) {
                auto p = mult_vec(v, w);
                bool zero = true;
                for (const auto& c : p) zero = zero && c == 0;
                if (!zero) nxt.push_back(p);
            }
        /* trim to an independent spanning set to keep the product count down */
        Matrix<RationalField> M(nxt.size(), N);
        for (std::size_t i = 0; i < nxt.size(); ++i)
            for (std::size_t j = 0; j < N; ++j) M(i, j) = nxt[i][j];
        rref_in_place(Q, M);
        std::vector<std::vector<bigrat>> basis;
        for (std::size_t i = 0; i < M.nrows; ++i) {
            bool zero = true;
            std::vector<bigrat> row(N);
            for (std::size_t j = 0; j < N; ++j) {
                row[j] = M(i, j);
                zero = zero && row[j] == 0;
            }
            if (!zero) basis.push_back(row);
        }
        powers.push_back(basis);
        REQUIRE(powers.size() <= 10);
    }
    REQUIRE(powers.size() == static_cast<std::size_t>(n) + 1);
    for (long l = 1; l <= n + 1; ++l)
        CHECK(span_rank(powers[static_cast<std::size_t>(l - 1)]) ==
              static_cast<std::size_t>(n * (n + 1 - l) > 0 ? n * (n + 1 - l) : 0));

    /* arrows: f_i (J/J^2) f_j is one-dimensional along a single n-cycle */
    const auto& J2 = powers[1];
    const std::size_t rk2 = span_rank(J2);
    std::vector<std::vector<int>> q(n, std::vector<int>(n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto rows = J2;
            for (const auto& v : J) rows.push_back(mult_vec(f[i], mult_vec(v, f[j])));
            q[i][j] = static_cast<int>(span_rank(rows) - rk2);
        }
    int total = 0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CHECK(q[i][j] >= 0);
            CHECK(q[i][j] <= 1);
            total += q[i][j];
        }
    CHECK(total == n);
    /* the arrow pattern is a permutation consisting of one n-cycle */
    std::vector<int> out_deg(n, 0), in_deg(n, 0), succ(n, -1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (q[i][j]) {
                ++out_deg[i];
                ++in_deg[j];
                succ[i] = static_cast<int>(j);
            }
    for (long i = 0; i < n; ++i) {
        CHECK(out_deg[i] == 1);
        CHECK(in_deg[i] == 1);
    }
    int cur = 0, steps = 0;
    do {
        cur = succ[cur];
        ++steps;
    } while (cur != 0 && steps <= n);
    CHECK(steps == n);
}

TEST_CASE("structure constants over Q reduce to the prime field constants") {
    RationalField Q;
    for (const long p : {2L, 3L}) {
        PrimeField Fp(p);
        {
            const auto Bq = s1_bialgebra(Q, 3);
            const auto Dq = make_double(Bq, 3);
            const auto Dp = make_double(reduce_mod_p(Bq, p), 3);
            REQUIRE(Dq.dim() == Dp.dim());
            for (std::size_t x = 0; x < Dq.dim(); ++x)
                for (std::size_t y = 0; y < Dq.dim(); ++y)
                    CHECK(lin_equal(Fp, reduce_lin(Fp, double_product(Dq, x, y)),
                                    double_product(Dp, x, y)));
        }
        {
            const auto Bq = tri_bialgebra(Q, 3);
            const auto Dq = make_double(Bq, 1);
            const auto Dp = make_double(reduce_mod_p(Bq, p), 1);
            REQUIRE(Dq.dim() == Dp.dim());
            for (std::size_t x = 0; x < Dq.dim(); ++x)
                for (std::size_t y = 0; y < Dq.dim(); ++y)
                    CHECK(lin_equal(Fp, reduce_lin(Fp, double_product(Dq, x, y)),
                                    double_product(Dp, x, y)));
        }
    }
    /* the preset built directly over F_p agrees with the reduction */
    PrimeField F2(2);
    const auto direct = s1_bialgebra(F2, 3);
    const auto reduced = reduce_mod_p(s1_bialgebra(Q, 3), 2);
    CHECK(direct.product == reduced.product);
    CHECK(direct.coproduct == reduced.coproduct);
}

TEST_CASE("sign bookkeeping: parity-zero inputs never produce a sign") {
    for (int m = 0; m < 64; ++m) {
        const long p[6] = {(m >> 0) & 1, (m >> 1) & 1, (m >> 2) & 1,
                           (m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1};
        const long e = double_sign_exponent(p[0], p[1], p[2], p[3], p[4], p[5]);
        if (m == 0) CHECK(!sign_is_minus(e));
        CHECK(sign_is_minus(e) == (((p[0] * (p[1] + p[2]) + p[2] * p[3] + p[4] * p[5]) % 2) != 0));
    }
    RationalField Q;
    CHECK(apply_sign(Q, 2, bigrat(5)) == 5);
    CHECK(apply_sign(Q, 3, bigrat(5)) == -5);
}

TEST_CASE("non-invertible sigma: only nondegeneracy fails") {
    const auto B = degenerate_sigma_fixture();
    const auto rep = verify_double(B, 2);
    INFO(rep.summary());
    CHECK(!rep.all_pass());
    for (const auto& c : rep.checks) {
        if (c.name == "r=1 form nondegenerate" || c.name == "r=2 form nondegenerate")
            CHECK(!c.pass);
        else
            CHECK(c.pass);
    }
}

TEST_CASE("coproduct maps out of the double") {
    RationalField Q;
    const auto B = s1_bialgebra(Q, 3);
    const auto rep = verify_delta_maps(B, 3);
    INFO(rep.summary());
    CHECK(rep.all_pass());

    /* the unit pair is group-like for the right map */
    const auto D = make_double(B, 3);
    const std::size_t one = D.index.at({B.unit_index(), B.unit_index()});
    const auto dr = delta_r(D, one);
    REQUIRE(dr.size() == 1);
    CHECK(dr.count({B.unit_index(), one}) == 1);

    const auto bad = non_cocommutative_fixture();
    const auto Dbad = make_double(bad, 2);
    CHECK_THROWS_AS((void)delta_l(Dbad, 0), validation_error);
    CHECK_THROWS_AS((void)delta_r(Dbad, 0), validation_error);
}

TEST_CASE("algebra dump is valid JSON with the advertised fields") {
    RationalField Q;
    const auto B = tri_bialgebra(Q, 2);
    const auto j = nlohmann::json::parse(algebra_json(B));
    CHECK(j["kind"] == "bialgebra");
    CHECK(j["dim"].get<std::size_t>() == B.dim());
    CHECK(j["basis"].size() == B.dim());
    for (const auto& t : j["product"]) REQUIRE(t.size() == 4);

    const auto D = make_double(B, 1);
    const auto jd = nlohmann::json::parse(algebra_json(D));
    CHECK(jd["kind"] == "double");
    CHECK(jd["dim"].get<std::size_t>() == D.dim());

    const auto jr = nlohmann::json::parse(report_json(verify_double(B, 1)));
    CHECK(jr["all_pass"].get<bool>());
}
