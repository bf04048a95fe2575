#include "symrep/json_io.hpp"

#include <stdexcept>

namespace symrep {

namespace {

std::string int_str(const Int& v) { return v.str(); }

Json int_matrix_rows(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(int_str(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json matrix_to_json(const IntMatrix& m) { return int_matrix_rows(m); }

Json algebra_to_json(const IntAlgebra& x) {
    Json terms = Json::array();
    for (const auto& [perm, coeff] : x.terms()) {
        Json term;
        term["perm"] = perm.to_string();
        term["coeff"] = int_str(coeff);
        terms.push_back(std::move(term));
    }
    return terms;
}

IntAlgebra algebra_from_json(const Json& j, int n) {
    IntAlgebra out;
    for (const auto& term : j) {
        Permutation p = Permutation::parse(term.at("perm").get<std::string>());
        if (p.n() != n) throw std::invalid_argument("permutation degree mismatch in stored element");
        Int c(term.at("coeff").get<std::string>());
        out.add_term(p, c);
    }
    return out;
}

Json g_bundle_to_json(const IrrepBundle& b) {
    Json j;
    j["n"] = b.n();
    j["partition"] = b.shape.to_string();
    j["dim"] = b.dim;
    j["scale"] = int_str(b.scale);
    j["gPrime"] = int_matrix_rows(b.g_reduced);
    j["gPrimeInverse"] = int_matrix_rows(b.g_reduced_inverse);
    return j;
}

Json rep_dump_to_json(const IrrepBundle& b, const std::vector<RepMatrix>& mats) {
    Json j;
    j["n"] = b.n();
    j["partition"] = b.shape.to_string();
    j["gPrime"] = int_matrix_rows(b.g_reduced);
    Json list = Json::array();
    for (const auto& m : mats) {
        Json entry;
        entry["perm"] = m.perm.to_string();
        entry["x"] = int_matrix_rows(m.entries);
        list.push_back(std::move(entry));
    }
    j["matrices"] = std::move(list);
    return j;
}

Json character_table_to_json(const CharacterTable& t) {
    Json j;
    j["n"] = t.n;
    Json classes = Json::array();
    for (const auto& cls : t.classes) {
        Json c;
        c["cycleType"] = cls.type.to_string();
        c["size"] = int_str(cls.size);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    Json rows = Json::array();
    for (size_t i = 0; i < t.shapes.size(); ++i) {
        Json row;
        row["partition"] = t.shapes[i].to_string();
        Json chi = Json::array();
        for (const Int& v : t.values[i]) chi.push_back(int_str(v));
        row["chi"] = std::move(chi);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace symrep
