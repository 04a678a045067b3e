#include "wb/bialgebra.hpp"

#include <json.hpp>

/* JSON dump of algebras and verification reports.  The format is shared by
 * every module that exports an algebra: basis metadata plus sparse
 * structure-constant triples, coefficients rendered as exact strings. */

namespace wb {

namespace {

using nlohmann::json;

json field_json(const RationalField&) { return json{{"characteristic", 0}}; }
json field_json(const PrimeField& F) { return json{{"characteristic", F.p}}; }

template <class K>
json bial_json(const FiniteBasisBialgebra<K>& B) {
    json j;
    j["kind"] = "bialgebra";
    j["name"] = B.name;
    j["field"] = field_json(B.field);
    j["dim"] = B.dim();
    json basis = json::array();
    for (std::size_t i = 0; i < B.dim(); ++i)
        basis.push_back(json{{"label", B.label[i]},
                             {"degree", B.degree[i]},
                             {"odd_degree", B.odd_degree[i]},
                             {"parity", B.parity(i)}});
    j["basis"] = basis;
    json prod = json::array();
    for (const auto& [ij, v] : B.product)
        for (const auto& [k, c] : v)
            prod.push_back(json::array({ij.first, ij.second, k, elem_str(B.field, c)}));
    j["product"] = prod;
    json cop = json::array();
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (const auto& [jk, c] : B.coproduct[i])
            cop.push_back(json::array({i, jk.first, jk.second, elem_str(B.field, c)}));
    j["coproduct"] = cop;
    if (B.has_sigma()) {
        json sg = json::array();
        for (std::size_t i = 0; i < B.dim(); ++i)
            for (const auto& [k, c] : B.sigma[i])
                sg.push_back(json::array({i, k, elem_str(B.field, c)}));
        j["sigma"] = sg;
    }
    return j;
}

template <class K>
json dbl_json(const DoubleAlgebra<K>& D) {
    json j;
    j["kind"] = "double";
    j["name"] = D.name;
    j["field"] = field_json(D.field);
    j["rmax"] = D.rmax;
    j["dim"] = D.dim();
    json basis = json::array();
    for (std::size_t t = 0; t < D.dim(); ++t) {
        const auto bidef = D.bidegree(t);
        basis.push_back(json{{"label", D.label(t)},
                             {"left", D.basis[t].first},
                             {"right_dual", D.basis[t].second},
                             {"degree", D.total_degree(t)},
                             {"pair_degree", D.pair_degree(t)},
                             {"bidegree", json::array({bidef.first, bidef.second})},
                             {"parity", D.parity(t)}});
    }
    j["basis"] = basis;
    json prod = json::array();
    for (std::size_t x = 0; x < D.dim(); ++x)
        for (std::size_t y = 0; y < D.dim(); ++y)
            for (const auto& [z, c] : double_product(D, x, y))
                prod.push_back(json::array({x, y, z, elem_str(D.field, c)}));
    j["product"] = prod;
    return j;
}

}  // namespace

std::string algebra_json(const FiniteBasisBialgebra<RationalField>& B) { return bial_json(B).dump(2); }
std::string algebra_json(const FiniteBasisBialgebra<PrimeField>& B) { return bial_json(B).dump(2); }
std::string algebra_json(const DoubleAlgebra<RationalField>& D) { return dbl_json(D).dump(2); }
std::string algebra_json(const DoubleAlgebra<PrimeField>& D) { return dbl_json(D).dump(2); }

std::string report_json(const VerifyReport& rep) {
    json j;
    j["kind"] = "report";
    j["subject"] = rep.subject;
    j["all_pass"] = rep.all_pass();
    json arr = json::array();
    for (const auto& c : rep.checks)
        arr.push_back(json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = arr;
    return j.dump(2);
}

}  // namespace wb
