#pragma once

// Derivations: the Leibniz system, Der(L), Inn(L), the outer maps of the
// Schrodinger algebra and decomposition of a derivation against them.

#include <cstddef>
#include <string>
#include <vector>

#include "lieloc/liealg.hpp"

namespace lieloc::dersolve {

using exactfield::FieldTag;
using exactfield::Scalar;
using liealg::Element;
using liealg::LieAlgebra;
using linalg::LinearMap;
using linalg::Matrix;
using linalg::Subspace;

/// One row per basis pair i<j and output coordinate k, in lexicographic
/// (i, j, k) order, zero rows included. Unknowns are the dim^2 entries of D
/// flattened column-major. D is a derivation iff its flattening is in the kernel.
Matrix leibniz_system(const LieAlgebra& l);

struct DerivationSpace {
    LieAlgebra algebra;
    std::vector<LinearMap> basis;  // canonical order (rows of as_subspace)
    Subspace as_subspace;          // in the dim^2 map space
    std::size_t dim() const { return basis.size(); }
};

/// Kernel of the Leibniz system; every basis map is re-checked with
/// is_derivation (InternalError on failure).
DerivationSpace derivation_space(const LieAlgebra& l);

/// Span of the flattened ad(b_i).
Subspace inner_space(const LieAlgebra& l);

struct LeibnizVerdict {
    bool ok = true;
    std::size_t i = 0, j = 0;  // first failing basis pair, i < j
    std::string describe(const LieAlgebra& l) const;
};

/// Direct check of D([b_i,b_j]) = [D b_i, b_j] + [b_i, D b_j] on all pairs.
LeibnizVerdict is_derivation(const LieAlgebra& l, const LinearMap& d);

/// On the Schrodinger algebra of rank n: u_l -> u_k, u_k -> -u_l,
/// v_l -> v_k, v_k -> -v_l, everything else to 0. Requires 1 <= l < k <= n.
LinearMap sigma(std::size_t l, std::size_t k, std::size_t n, FieldTag field = FieldTag::Q);
/// z -> z, u_j -> u_j/2, v_j -> v_j/2, e, h, f -> 0.
LinearMap tau(std::size_t n, FieldTag field = FieldTag::Q);

/// All sigma_lk for 1 <= l < k <= n, ordered by (l, k).
std::vector<LinearMap> sigmas(std::size_t n, FieldTag field = FieldTag::Q);

struct OuterReport {
    std::size_t n = 0;
    std::size_t der_dim = 0, inn_dim = 0, sigma_dim = 0;
    bool sigmas_are_derivations = false;
    bool tau_is_derivation = false;
    bool sigma_meets_inner_trivially = false;  // span{sigma} and Inn intersect in 0
    bool tau_outside_inner_plus_sigma = false;
    bool direct_sum_is_der = false;  // Inn + span{sigma} + span{tau} == Der, dims adding up
    bool ok() const {
        return sigmas_are_derivations && tau_is_derivation && sigma_meets_inner_trivially &&
               tau_outside_inner_plus_sigma && direct_sum_is_der;
    }
};

/// Throws InvalidArgument unless `l` is a generated Schrodinger algebra.
OuterReport outer_structure(const LieAlgebra& l);

struct SigmaCoeff {
    std::size_t l, k;
    Scalar coeff;
};

struct DerDecomposition {
    Element inner_part;  // z-coordinate fixed to 0
    std::vector<SigmaCoeff> sigma_coeffs;
    Scalar tau_coeff;
};

/// D = ad(inner_part) + sum mu_lk sigma_lk + lambda tau, solved exactly.
/// Throws InvalidArgument if `l` is not a generated Schrodinger algebra or D
/// is not a derivation.
DerDecomposition decompose(const LieAlgebra& l, const LinearMap& d);
LinearMap reassemble(const LieAlgebra& l, const DerDecomposition& dec);

}  // namespace lieloc::dersolve
