#pragma once

// JSON forms of maps and analysis results.

#include <json.hpp>

#include "lieloc/certify.hpp"
#include "lieloc/dersolve.hpp"
#include "lieloc/locder.hpp"

namespace lieloc::report {

using Json = nlohmann::ordered_json;

/// {"images": {label: [{"basis": label, "coeff": scalar}]}}; zero images are
/// written as empty lists.
Json map_to_json(const liealg::LieAlgebra& l, const linalg::LinearMap& m);
/// Labels absent from "images" map to zero. Throws ParseError.
linalg::LinearMap map_from_json(const liealg::LieAlgebra& l, const nlohmann::json& j);
linalg::LinearMap load_map(const liealg::LieAlgebra& l, const std::string& path);

/// {algebra, n, field, der_dim, candidate_dim, equal, history, seed}.
Json locder_report(const locder::LocderResult& r);
Json outer_report(const liealg::LieAlgebra& l, const dersolve::OuterReport& r);
Json derivation_report(const dersolve::DerivationSpace& der);
Json decomposition_report(const liealg::LieAlgebra& l, const dersolve::DerDecomposition& d, bool reassembly_exact);
Json certificate_report(const liealg::LieAlgebra& l, const certify::Certificate& c);

}  // namespace lieloc::report
