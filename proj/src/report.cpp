#include "lieloc/report.hpp"

#include <fstream>

namespace lieloc::report {

using exactfield::FieldTag;
using exactfield::Scalar;
using liealg::LieAlgebra;
using linalg::LinearMap;

namespace {

Json vector_terms(const LieAlgebra& l, const linalg::Vector& v) {
    Json out = Json::array();
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        Json t;
        t["basis"] = l.label(a);
        t["coeff"] = v[a].to_string();
        out.push_back(std::move(t));
    }
    return out;
}

std::string field_name(FieldTag f) { return std::string(exactfield::to_string(f)); }

}  // namespace

Json map_to_json(const LieAlgebra& l, const LinearMap& m) {
    Json images = Json::object();
    for (std::size_t b = 0; b < l.dim(); ++b) images[l.label(b)] = vector_terms(l, m.matrix().col(b));
    Json out;
    out["images"] = std::move(images);
    return out;
}

LinearMap map_from_json(const LieAlgebra& l, const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("map: expected an object");
    for (const auto& [k, _] : j.items()) {
        if (k != "images") throw ParseError("map: unknown key '" + k + "'");
    }
    if (!j.contains("images") || !j.at("images").is_object()) throw ParseError("map: 'images' must be an object");
    LinearMap m(l.dim(), l.field());
    for (const auto& [src, terms] : j.at("images").items()) {
        const auto b = l.find(src);
        if (!b) throw ParseError("map: unknown basis label '" + src + "'");
        if (!terms.is_array()) throw ParseError("map: image of '" + src + "' must be an array");
        for (const auto& t : terms) {
            if (!t.is_object()) throw ParseError("map: terms must be objects");
            for (const auto& [k, _] : t.items()) {
                if (k != "basis" && k != "coeff") throw ParseError("map: unknown key '" + k + "'");
            }
            if (!t.contains("basis") || !t.at("basis").is_string() || !t.contains("coeff") ||
                !t.at("coeff").is_string()) {
                throw ParseError("map: each term needs string 'basis' and 'coeff'");
            }
            const auto a = l.find(t.at("basis").get<std::string>());
            if (!a) throw ParseError("map: unknown basis label '" + t.at("basis").get<std::string>() + "'");
            const Scalar c = Scalar::parse(t.at("coeff").get<std::string>(), l.field());
            m.set(*a, *b, m(*a, *b) + c.value());
        }
    }
    return m;
}

LinearMap load_map(const LieAlgebra& l, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return map_from_json(l, j);
}

Json locder_report(const locder::LocderResult& r) {
    Json j;
    j["algebra"] = r.algebra;
    j["n"] = r.n;
    j["field"] = field_name(r.field);
    j["der_dim"] = r.der_dim;
    j["candidate_dim"] = r.candidate_dim;
    j["equal"] = r.equal;
    Json h = Json::array();
    for (const auto& e : r.history) {
        Json x;
        x["probe"] = e.probe;
        x["dim_before"] = e.dim_before;
        x["dim_after"] = e.dim_after;
        h.push_back(std::move(x));
    }
    j["history"] = std::move(h);
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    return j;
}

Json outer_report(const LieAlgebra& l, const dersolve::OuterReport& r) {
    Json j;
    j["algebra"] = l.name();
    j["n"] = r.n;
    j["field"] = field_name(l.field());
    j["der_dim"] = r.der_dim;
    j["inn_dim"] = r.inn_dim;
    j["sigma_dim"] = r.sigma_dim;
    j["sigmas_are_derivations"] = r.sigmas_are_derivations;
    j["tau_is_derivation"] = r.tau_is_derivation;
    j["sigma_meets_inner_trivially"] = r.sigma_meets_inner_trivially;
    j["tau_outside_inner_plus_sigma"] = r.tau_outside_inner_plus_sigma;
    j["direct_sum_is_der"] = r.direct_sum_is_der;
    j["ok"] = r.ok();
    return j;
}

Json derivation_report(const dersolve::DerivationSpace& der) {
    const LieAlgebra& l = der.algebra;
    Json j;
    j["algebra"] = l.name();
    j["field"] = field_name(l.field());
    j["dim"] = l.dim();
    j["der_dim"] = der.dim();
    const std::size_t inn = dersolve::inner_space(l).dim();
    j["inn_dim"] = inn;
    j["center_dim"] = liealg::center(l).dim();
    j["outer_dim"] = der.dim() - inn;
    Json basis = Json::array();
    for (const auto& m : der.basis) basis.push_back(map_to_json(l, m));
    j["basis"] = std::move(basis);
    return j;
}

Json decomposition_report(const LieAlgebra& l, const dersolve::DerDecomposition& d, bool reassembly_exact) {
    Json j;
    j["algebra"] = l.name();
    j["inner_part"] = d.inner_part.to_string();
    Json s = Json::array();
    for (const auto& c : d.sigma_coeffs) {
        Json x;
        x["l"] = c.l;
        x["k"] = c.k;
        x["coeff"] = c.coeff.to_string();
        s.push_back(std::move(x));
    }
    j["sigma"] = std::move(s);
    j["tau"] = d.tau_coeff.to_string();
    j["reassembly_exact"] = reassembly_exact;
    return j;
}

Json certificate_report(const LieAlgebra& l, const certify::Certificate& c) {
    Json j;
    j["algebra"] = l.name();
    j["verdict"] = certify::to_string(c.verdict);
    j["local"] = c.verdict == certify::Verdict::Local;
    j["in_der"] = c.in_der;
    j["generic_rank"] = c.generic_rank;
    Json rows = Json::array(), cols = Json::array();
    for (auto r : c.rank_minor_rows) rows.push_back(l.label(r));
    for (auto k : c.rank_minor_cols) cols.push_back(k);
    j["rank_minor_rows"] = std::move(rows);
    j["rank_minor_der_columns"] = std::move(cols);
    j["minors_checked"] = c.minors_checked;
    j["generic_ok"] = c.generic_ok;
    j["stratified_checked"] = c.stratified_checked;
    j["stratified_ok"] = c.stratified_ok;
    j["groebner_pairs"] = c.groebner_pairs;
    j["refuting_point"] =
        c.refuting_point ? Json(liealg::Element(l, *c.refuting_point).to_string()) : Json(nullptr);
    j["detail"] = c.detail;
    return j;
}

}  // namespace lieloc::report
