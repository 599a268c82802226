#include "fdrm/json_io.hpp"

namespace fdrm {

using nlohmann::json;

json to_json(const Field& f) {
    return json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    int p = j.at("p").get<int>();
    int e = j.at("e").get<int>();
    if (j.contains("modulus"))
        return Field::with_modulus(p, e, j.at("modulus").get<std::vector<int>>());
    return Field::get(p, e);
}

json to_json(const Matrix& M) {
    std::vector<std::vector<int>> rows(M.rows());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) rows[i].push_back(M.at(i, j));
    return json{{"field", to_json(*M.field())}, {"k", M.rows()}, {"m", M.cols()}, {"rows", rows}};
}

Matrix matrix_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    int k = j.at("k").get<int>();
    int m = j.at("m").get<int>();
    if ((int)rows.size() != k) throw std::invalid_argument("row count mismatch");
    for (const auto& r : rows)
        if ((int)r.size() != m) throw std::invalid_argument("column count mismatch");
    return Matrix::from_rows(f, rows);
}

json to_json(const MatrixSpace& S) {
    json basis = json::array();
    for (const auto& b : S.basis()) basis.push_back(to_json(b));
    return json{
        {"field", to_json(*S.field())}, {"k", S.rows()}, {"m", S.cols()}, {"basis", basis}};
}

MatrixSpace space_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    int k = j.at("k").get<int>();
    int m = j.at("m").get<int>();
    std::vector<Matrix> gens;
    for (const auto& bj : j.at("basis")) {
        Matrix M = matrix_from_json(bj);
        if (!M.field()->same(*f)) throw std::invalid_argument("basis field mismatch");
        gens.push_back(std::move(M));
    }
    return MatrixSpace::span(f, k, m, gens);
}

json to_json(const ConstructionResult& r) {
    json j = to_json(r.space);
    j["method"] = r.method;
    j["tdelta"] = r.tdelta;
    j["attains_bound"] = r.attains_bound;
    j["transposed"] = r.transposed;
    return j;
}

json to_json(const Profile& P) {
    json cells = json::array();
    for (const auto& [i, j] : P.cells()) cells.push_back(json::array({i, j}));
    return json{{"k", P.k()}, {"m", P.m()}, {"cells", cells}};
}

Profile profile_from_json(const json& j) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) cells.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Profile(j.at("k").get<int>(), j.at("m").get<int>(), std::move(cells));
}

json to_json(const LineSelection& L) {
    return json{{"rows", L.rows}, {"cols", L.cols}};
}

json to_json(const AnticodeResult& r) {
    json j = to_json(r.space);
    j["lines"] = to_json(r.lines);
    j["tdelta"] = r.tdelta;
    return j;
}

json to_json(const VerifyReport& r) {
    json j{{"ok", r.ok}, {"checked", r.checked}, {"witness", nullptr}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.witness_coeffs) j["witness_coeffs"] = *r.witness_coeffs;
    return j;
}

json to_json(const SearchResult& r) {
    return json{{"maxdim", r.max_dim},
                {"certified", r.certified},
                {"nodes", r.nodes},
                {"witness", to_json(r.witness)}};
}

json code_summary_json(const SubspaceCode& C, const DistanceCertificate& cert) {
    json levels = json::array();
    for (const auto& lvl : C.levels)
        levels.push_back(json{{"pivot", lvl.pivot.bits()},
                              {"dim", lvl.space.dim()},
                              {"tdelta", lvl.tdelta},
                              {"method", lvl.method}});
    return json{{"n", C.n},
                {"k", C.k},
                {"q", C.field->q()},
                {"levels", levels},
                {"cardinality", C.cardinality.get_str()},
                {"min_distance_certificate", cert.value}};
}

}  // namespace fdrm
