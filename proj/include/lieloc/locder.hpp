#pragma once

// Local derivations: orbit subspaces W_x = Der(L)·x, candidate spaces cut out
// by the conditions Delta(x) in W_x, probe schedules, and witnesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lieloc/dersolve.hpp"

namespace lieloc::locder {

using dersolve::DerivationSpace;
using exactfield::FieldTag;
using liealg::Element;
using liealg::LieAlgebra;
using linalg::LinearMap;
using linalg::Subspace;
using linalg::Vector;

struct Probe {
    Element element;
    std::string label;
    /// Throws InvalidArgument for the zero element.
    Probe(Element e, std::string label);
    /// Label taken from Element::to_string().
    explicit Probe(Element e);
};

/// {D(x) : D in Der(L)}.
Subspace orbit_subspace(const DerivationSpace& der, const Element& x);

struct HistoryEntry {
    std::string probe;
    std::size_t dim_before;
    std::size_t dim_after;
};

/// Intersection of the linear conditions Delta(x) in W_x over the probes seen
/// so far, inside the dim^2-dimensional space of linear maps. The
/// conditions are kept as an echelon basis of the annihilator; each new row
/// is checked against the Der basis, so Der stays contained at every stage.
class CandidateSpace {
public:
    explicit CandidateSpace(DerivationSpace der);

    const LieAlgebra& algebra() const { return der_.algebra; }
    const DerivationSpace& der() const { return der_; }
    std::size_t ambient_dim() const { return constraints_.cols(); }
    std::size_t dim() const { return ambient_dim() - constraints_.rank(); }
    const std::vector<HistoryEntry>& history() const { return history_; }
    /// Canonical subspace of all maps satisfying the conditions.
    Subspace space() const;
    /// Echelon rows of the accumulated linear conditions.
    const linalg::RowEchelon& constraints() const { return constraints_; }

    /// Adds the condition Delta(x) in W_x. Probes that are scalar multiples
    /// of an earlier probe are logged without further work. Throws
    /// InternalError if a new condition would exclude a derivation.
    void constrain(const Probe& p);
    /// Whether a probe on the same line was already applied.
    bool seen(const Element& x) const;
    bool contains(const LinearMap& m) const;

private:
    DerivationSpace der_;
    linalg::RowEchelon constraints_;
    std::vector<HistoryEntry> history_;
    std::set<std::vector<std::string>> seen_;  // probes normalized to first nonzero coordinate 1
};

/// Conditions from the basis elements alone.
CandidateSpace basis_probe_space(const DerivationSpace& der);

enum class Schedule {
    Repaired,   // default: sign-corrected f-1/2*z-v_j and extra u_j+v_j probes
    AsPrinted,  // literal probe elements: f+1/2*z-v_j, no u_j+v_j probes
};

/// Ordered probes for the Schrodinger algebra `l` (must be generated by
/// make_schrodinger): basis singletons, h+z, h+e, h+f, e+u_j, f+v_j, h+u_j,
/// h+v_j, e+f, per j the four z-shifted probes, per p<j the pair probes
/// u_p+i*u_j and v_p+i*v_j, and for Repaired also u_j+v_j.
/// Over Q the pair probes use u_p+t*u_j and v_p+t*v_j for t = 2 and t = 3.
std::vector<Probe> schrodinger_probe_schedule(const LieAlgebra& l, Schedule schedule = Schedule::Repaired);

struct LocderResult {
    std::string algebra;
    std::size_t n = 0;
    FieldTag field = FieldTag::Q;
    std::size_t der_dim = 0;
    std::size_t candidate_dim = 0;
    bool equal = false;
    std::vector<HistoryEntry> history;
    std::optional<std::uint64_t> seed;
};

LocderResult summarize(const CandidateSpace& c, std::size_t n, std::optional<std::uint64_t> seed);

struct Replay {
    LocderResult result;
    CandidateSpace space;
    std::vector<Probe> probes;
};

/// Folds the probe schedule from the full map space. `equal` means the
/// candidate space collapsed onto Der, which proves LocDer = Der for this n.
Replay replay_proof(std::size_t n, Schedule schedule = Schedule::Repaired, FieldTag field = FieldTag::Qi);
/// Same fold over an explicit probe list on the given derivation space.
CandidateSpace fold_probes(const DerivationSpace& der, const std::vector<Probe>& probes);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct RandomOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_probes = 200;
    std::size_t stall_limit = 20;
    long range = 10;  // coordinates drawn from [-range, range]
};

/// Starts from basis_probe_space and adds random probes with integer
/// coordinates until the dimension is unchanged for stall_limit consecutive
/// probes or max_probes random probes have been applied.
CandidateSpace random_probe_closure(const DerivationSpace& der, const RandomOptions& opts = {});

/// Deterministic integer draws in [-range, range] from a 64-bit Mersenne
/// twister (own rejection sampling, identical on every platform).
class ProbeSampler {
public:
    explicit ProbeSampler(std::uint64_t seed);
    long draw(long range);
    std::vector<long> draw_vector(std::size_t dim, long range);

private:
    std::mt19937_64 gen_;
};

struct Witness {
    std::string probe;
    Vector coefficients;  // over the Der basis
};

/// Coefficients c with sum c_i D_i(x) = Delta(x), or nullopt if x refutes
/// locality of Delta.
std::optional<Witness> witness(const DerivationSpace& der, const LinearMap& delta, const Element& x,
                               const std::string& label = "");

/// Free parameters of the general images of the basis elements. Setting
/// parameter k to 1 and the others to 0 gives maps[k].
struct AsosShape {
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<LinearMap> maps;
    /// Sum of params[k] * maps[k].
    LinearMap instantiate(const std::vector<exactfield::Scalar>& params) const;
};

AsosShape asos_shape(std::size_t n, FieldTag field = FieldTag::Q);

struct AsosCheck {
    std::size_t n = 0;
    std::size_t shape_dim = 0;       // dim of the span of the parameter maps
    std::size_t parameter_count = 0;
    std::size_t basis_space_dim = 0;
    bool equal = false;                       // span == basis_probe_space, canonically
    std::vector<std::string> outside;         // parameters whose map leaves the basis space
    bool z_images_central = false;            // every parameter map sends z into span{z}
};

AsosCheck asos_shape_check(std::size_t n, FieldTag field = FieldTag::Q);

}  // namespace lieloc::locder
