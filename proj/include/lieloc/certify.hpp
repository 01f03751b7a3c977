#pragma once

// Symbolic decision of "Delta(x) in W_x for every x" for small algebras over Q.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieloc/locder.hpp"
#include "lieloc/multipoly.hpp"

namespace lieloc::certify {

using dersolve::DerivationSpace;
using linalg::LinearMap;
using linalg::Vector;

struct CertifyOptions {
    std::size_t max_dim = 9;
    std::uint64_t seed = locder::kDefaultSeed;
    std::size_t rank_samples = 12;      // random points used to find the generic rank
    std::size_t search_points = 400;    // random points tried when looking for a refutation
    std::size_t groebner_budget = 20000;
};

enum class Verdict {
    Local,      // Delta(x) in W_x for every complex x
    NotLocal,   // some x violates it
    Undecided,  // Groebner budget exhausted
};

std::string to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Undecided;
    bool in_der = false;  // Delta is itself a derivation

    // Generic stage: rank r of [D_1(x) | ... | D_m(x)] at a generic x and
    // every (r+1)-minor of the augmented matrix containing the Delta column.
    std::size_t generic_rank = 0;
    std::vector<std::size_t> rank_minor_rows, rank_minor_cols;  // a nonzero r x r minor
    std::size_t minors_checked = 0;
    bool generic_ok = false;

    // Degenerate loci: phi^T Delta(x) lies in the radical of the ideal
    // generated by phi^T D_j(x), decided by a Groebner basis of the
    // ideal plus 1 - t * phi^T Delta(x).
    bool stratified_checked = false;
    bool stratified_ok = false;
    std::size_t groebner_pairs = 0;

    std::optional<Vector> refuting_point;  // rational x with Delta(x) outside W_x
    std::string detail;
};

/// Throws InvalidArgument if the algebra is over Q(i) or exceeds max_dim.
Certificate certify_local_symbolic(const DerivationSpace& der, const LinearMap& delta, const CertifyOptions& opts = {});

/// Matrix with entries D_i(x)_a (columns i < m) and Delta(x)_a (last column),
/// as linear polynomials in the coordinates of x.
multipoly::PolyMatrix orbit_poly_matrix(const DerivationSpace& der, const LinearMap& delta);

}  // namespace lieloc::certify
