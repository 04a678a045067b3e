#include "wb/schiver.hpp"

#include <json.hpp>

namespace wb {

namespace {

using nlohmann::json;

json field_json(const RationalField&) { return json{{"characteristic", 0}}; }
json field_json(const PrimeField& F) { return json{{"characteristic", F.p}}; }

json quiver_json(const Quiver& Q) {
    json j;
    j["vertices"] = Q.vertex_name;
    json ed = json::array();
    for (std::size_t e = 0; e < Q.edges.size(); ++e)
        ed.push_back(json{{"name", Q.edge_name[e]},
                          {"source", Q.edges[e].first},
                          {"tail", Q.edges[e].second}});
    j["edges"] = ed;
    return j;
}

json report_obj(const VerifyReport& rep) { return json::parse(report_json(rep)); }

template <class K>
json matrix_json(const K& F, const Matrix<K>& M) {
    json j;
    j["rows"] = M.nrows;
    j["cols"] = M.ncols;
    json ent = json::array();
    for (std::size_t i = 0; i < M.nrows; ++i)
        for (std::size_t k = 0; k < M.ncols; ++k)
            if (!F.is_zero(M.a[i * M.ncols + k]))
                ent.push_back(json::array({i, k, elem_str(F, M.a[i * M.ncols + k])}));
    j["entries"] = ent;
    return j;
}

template <class K>
json complex_json(const K& F, const ModuleComplex<K>& C, const std::vector<long>& hom) {
    json j;
    j["name"] = C.name;
    j["terms"] = C.term_label;
    j["dims"] = C.term_dim;
    json ds = json::array();
    for (const auto& M : C.d) ds.push_back(matrix_json(F, M));
    j["differentials"] = ds;
    j["homology"] = hom;
    return j;
}

template <class K>
json schiver_obj(const SchiverDouble<K>& SD, const VerifyReport& rep) {
    json j;
    j["kind"] = "schiver";
    j["name"] = SD.D.name;
    j["field"] = field_json(SD.D.field);
    j["quiver"] = quiver_json(SD.Q);
    j["n"] = SD.n;
    j["r"] = SD.r;
    j["dim"] = SD.D.dim();
    json pieces = json::array();
    for (long d = 0; d <= SD.r; ++d) pieces.push_back(SD.D.piece(d).size());
    j["piece_dims"] = pieces;
    j["left_dim"] = SD.S.B.dim();
    j["right_dim"] = SD.Sop.B.dim();
    j["report"] = report_obj(rep);
    return j;
}

template <class K>
json walk_obj(const K& F, const WalkComplexes<K>& W) {
    json j;
    j["kind"] = "walk";
    j["field"] = field_json(F);
    j["n"] = W.n;
    j["r"] = W.r;
    j["window"] = W.window;
    j["fixed_point_complex"] = complex_json(F, W.schur_cx, W.schur_homology);
    j["double_complex"] = complex_json(F, W.double_cx, W.double_homology);
    j["bottom_block_dim"] = W.boundary_expected;
    j["report"] = report_obj(W.rep);
    return j;
}

}  // namespace

FiniteBasisBialgebra<RationalField> preset_bialgebra(const RationalField& F,
                                                     const std::string& name, long rmax) {
    if (name == "s1") return s1_bialgebra(F, rmax);
    if (name.rfind("tri:", 0) == 0) return tri_bialgebra(F, std::stol(name.substr(4)));
    if (name.rfind("schur:", 0) == 0) return schur_preset(F, std::stol(name.substr(6)), rmax);
    throw validation_error("unknown preset: " + name);
}

FiniteBasisBialgebra<PrimeField> preset_bialgebra(const PrimeField& F,
                                                  const std::string& name, long rmax) {
    if (name == "s1") return s1_bialgebra(F, rmax);
    if (name.rfind("tri:", 0) == 0) return tri_bialgebra(F, std::stol(name.substr(4)));
    if (name.rfind("schur:", 0) == 0) return schur_preset(F, std::stol(name.substr(6)), rmax);
    throw validation_error("unknown preset: " + name);
}

std::string schiver_json(const SchiverDouble<RationalField>& SD, const VerifyReport& rep) {
    return schiver_obj(SD, rep).dump(2);
}
std::string schiver_json(const SchiverDouble<PrimeField>& SD, const VerifyReport& rep) {
    return schiver_obj(SD, rep).dump(2);
}

std::string walk_json(const RationalField& F, const WalkComplexes<RationalField>& W) {
    return walk_obj(F, W).dump(2);
}
std::string walk_json(const PrimeField& F, const WalkComplexes<PrimeField>& W) {
    return walk_obj(F, W).dump(2);
}

std::string powersum_json(const PowerSumReport& R) {
    json j;
    j["kind"] = "powersum";
    j["n"] = R.n;
    j["r"] = R.r;
    json terms = json::array();
    for (const auto& t : R.terms)
        terms.push_back(json{{"arm", t.r1},
                             {"leg", t.r2},
                             {"dim_by_degree", t.dim_by_degree},
                             {"plain_dim_by_degree", t.a_dim_by_degree},
                             {"marked_dim_by_degree", t.c_dim_by_degree},
                             {"expected_by_degree", t.expected_by_degree},
                             {"homology_by_degree", t.homology_by_degree},
                             {"homology_total", t.homology_total},
                             {"expected_homology", t.expected_homology},
                             {"concentration_degree", t.concentration_degree}});
    j["terms"] = terms;
    j["report"] = report_obj(R.rep);
    return j.dump(2);
}

std::string wreath_json(const WreathReport& W) {
    json j;
    j["kind"] = "wreath";
    j["n"] = W.n;
    j["r"] = W.r;
    j["corner_rank"] = W.corner_rank;
    j["expected"] = W.expected;
    j["basis_confirmed"] = W.basis_confirmed;
    j["column_convention"] = W.column_convention;
    j["perm_convention"] = W.perm_convention;
    j["table_match"] = W.table_match;
    j["report"] = report_obj(W.rep);
    return j.dump(2);
}

}  // namespace wb
