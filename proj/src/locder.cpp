#include "lieloc/locder.hpp"

#include <limits>

namespace lieloc::locder {

using exactfield::GaussianRational;
using exactfield::Rational;
using exactfield::Scalar;
using linalg::Matrix;

// ---------------------------------------------------------------------------
// Probe

Probe::Probe(Element e, std::string l) : element(std::move(e)), label(std::move(l)) {
    if (element.is_zero()) throw InvalidArgument("probe element must be nonzero");
}

Probe::Probe(Element e) : Probe(e, e.to_string()) {}

Subspace orbit_subspace(const DerivationSpace& der, const Element& x) {
    if (!(x.algebra() == der.algebra)) throw InvalidArgument("element is not in the derivation space's algebra");
    std::vector<Vector> rows;
    rows.reserve(der.dim());
    for (const auto& d : der.basis) rows.push_back(d.apply(x.coords()));
    return Subspace::span(rows, der.algebra.dim(), der.algebra.field());
}

// ---------------------------------------------------------------------------
// CandidateSpace

namespace {

std::vector<std::string> line_key(const Vector& x) {
    std::size_t k = 0;
    while (k < x.size() && x[k].is_zero()) ++k;
    std::vector<std::string> key;
    if (k == x.size()) return key;
    const GaussianRational inv = x[k].inv();
    for (std::size_t i = 0; i < x.size(); ++i) key.push_back((x[i] * inv).to_string());
    return key;
}

}  // namespace

CandidateSpace::CandidateSpace(DerivationSpace der)
    : der_(std::move(der)), constraints_(der_.algebra.dim() * der_.algebra.dim(), der_.algebra.field()) {}

Subspace CandidateSpace::space() const { return linalg::nullspace(constraints_.matrix()); }

bool CandidateSpace::seen(const Element& x) const { return seen_.count(line_key(x.coords())) > 0; }

bool CandidateSpace::contains(const LinearMap& m) const {
    const Vector flat = m.flatten();
    for (const auto& row : constraints_.rows()) {
        if (!linalg::dot(row, flat).is_zero()) return false;
    }
    return true;
}

void CandidateSpace::constrain(const Probe& p) {
    const LieAlgebra& l = algebra();
    if (!(p.element.algebra() == l)) throw InvalidArgument("probe '" + p.label + "' is not in " + l.name());
    const std::size_t before = dim();
    auto key = line_key(p.element.coords());
    if (!seen_.insert(std::move(key)).second) {
        history_.push_back({p.label, before, before});
        return;
    }

    const std::size_t d = l.dim();
    const Vector& x = p.element.coords();
    const Subspace w = orbit_subspace(der_, p.element);
    const Subspace ann = linalg::nullspace(w.basis().rows() == 0 ? Matrix(0, d, l.field()) : w.basis());

    std::vector<Vector> der_flat;
    for (const auto& m : der_.basis) der_flat.push_back(m.flatten());

    for (std::size_t k = 0; k < ann.dim(); ++k) {
        const Vector phi = ann.basis_vector(k);
        // phi^T Delta(x) = sum_{a,b} phi_a x_b Delta(a, b).
        Vector row(d * d, l.field());
        for (std::size_t b = 0; b < d; ++b) {
            if (x[b].is_zero()) continue;
            for (std::size_t a = 0; a < d; ++a) {
                if (!phi[a].is_zero()) row.set(a + d * b, phi[a] * x[b]);
            }
        }
        for (std::size_t i = 0; i < der_flat.size(); ++i) {
            if (!linalg::dot(row, der_flat[i]).is_zero()) {
                throw InternalError("condition from probe '" + p.label + "' excludes a derivation");
            }
        }
        constraints_.insert(std::move(row));
    }
    history_.push_back({p.label, before, dim()});
}

CandidateSpace basis_probe_space(const DerivationSpace& der) {
    CandidateSpace c(der);
    for (std::size_t b = 0; b < der.algebra.dim(); ++b) {
        c.constrain(Probe(Element::basis(der.algebra, b), der.algebra.label(b)));
    }
    return c;
}

CandidateSpace fold_probes(const DerivationSpace& der, const std::vector<Probe>& probes) {
    CandidateSpace c(der);
    for (const auto& p : probes) c.constrain(p);
    return c;
}

// ---------------------------------------------------------------------------
// Probe schedule

namespace {

using Combination = std::vector<std::pair<std::string, GaussianRational>>;

Probe make_probe(const LieAlgebra& l, const Combination& terms) {
    Vector v(l.dim(), l.field());
    for (const auto& [label, c] : terms) {
        const std::size_t k = l.index_of(label);
        v.set(k, v[k] + c);
    }
    return {Element(l, std::move(v)), liealg::format_combination(terms)};
}

std::string u(std::size_t j) { return "u_" + std::to_string(j); }
std::string v(std::size_t j) { return "v_" + std::to_string(j); }

}  // namespace

std::vector<Probe> schrodinger_probe_schedule(const LieAlgebra& l, Schedule schedule) {
    const auto rank = liealg::schrodinger_rank(l);
    if (!rank) throw InvalidArgument("probe schedule: '" + l.name() + "' is not a generated Schrodinger algebra");
    const std::size_t n = *rank;
    const GaussianRational one(1), minus(-1);
    const GaussianRational half(Rational(1, 2)), mhalf(Rational(-1, 2));

    std::vector<Probe> out;
    for (std::size_t b = 0; b < l.dim(); ++b) out.push_back(make_probe(l, {{l.label(b), one}}));
    out.push_back(make_probe(l, {{"h", one}, {"z", one}}));
    out.push_back(make_probe(l, {{"h", one}, {"e", one}}));
    out.push_back(make_probe(l, {{"h", one}, {"f", one}}));
    for (std::size_t j = 1; j <= n; ++j) out.push_back(make_probe(l, {{"e", one}, {u(j), one}}));
    for (std::size_t j = 1; j <= n; ++j) out.push_back(make_probe(l, {{"f", one}, {v(j), one}}));
    for (std::size_t j = 1; j <= n; ++j) out.push_back(make_probe(l, {{"h", one}, {u(j), one}}));
    for (std::size_t j = 1; j <= n; ++j) out.push_back(make_probe(l, {{"h", one}, {v(j), one}}));
    out.push_back(make_probe(l, {{"e", one}, {"f", one}}));
    for (std::size_t j = 1; j <= n; ++j) {
        out.push_back(make_probe(l, {{"f", one}, {"z", mhalf}, {v(j), one}}));
        if (schedule == Schedule::AsPrinted) {
            out.push_back(make_probe(l, {{"f", one}, {"z", half}, {v(j), minus}}));
        } else {
            out.push_back(make_probe(l, {{"f", one}, {"z", mhalf}, {v(j), minus}}));
        }
        out.push_back(make_probe(l, {{"e", one}, {"z", half}, {u(j), one}}));
        out.push_back(make_probe(l, {{"e", one}, {"z", half}, {u(j), minus}}));
    }
    std::vector<GaussianRational> mixers;
    if (l.field() == FieldTag::Qi) {
        mixers.push_back(GaussianRational::i());
    } else {
        mixers = {GaussianRational(2), GaussianRational(3)};
    }
    for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t j = p + 1; j <= n; ++j) {
            for (const auto& t : mixers) {
                out.push_back(make_probe(l, {{u(p), one}, {u(j), t}}));
                out.push_back(make_probe(l, {{v(p), one}, {v(j), t}}));
            }
        }
    }
    if (schedule == Schedule::Repaired) {
        for (std::size_t j = 1; j <= n; ++j) out.push_back(make_probe(l, {{u(j), one}, {v(j), one}}));
    }
    return out;
}

LocderResult summarize(const CandidateSpace& c, std::size_t n, std::optional<std::uint64_t> seed) {
    LocderResult r;
    r.algebra = c.algebra().name();
    r.n = n;
    r.field = c.algebra().field();
    r.der_dim = c.der().dim();
    r.candidate_dim = c.dim();
    r.equal = r.der_dim == r.candidate_dim;
    r.history = c.history();
    r.seed = seed;
    return r;
}

Replay replay_proof(std::size_t n, Schedule schedule, FieldTag field) {
    const LieAlgebra l = liealg::make_schrodinger(n, field);
    auto probes = schrodinger_probe_schedule(l, schedule);
    CandidateSpace c = fold_probes(dersolve::derivation_space(l), probes);
    LocderResult r = summarize(c, n, std::nullopt);
    return {std::move(r), std::move(c), std::move(probes)};
}

// ---------------------------------------------------------------------------
// Random route

ProbeSampler::ProbeSampler(std::uint64_t seed) : gen_(seed) {}

long ProbeSampler::draw(long range) {
    if (range < 0) throw InvalidArgument("sampler range must be non-negative");
    const std::uint64_t width = static_cast<std::uint64_t>(2 * range + 1);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % width);
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= limit);
    return static_cast<long>(r % width) - range;
}

std::vector<long> ProbeSampler::draw_vector(std::size_t dim, long range) {
    std::vector<long> out(dim);
    for (auto& x : out) x = draw(range);
    return out;
}

CandidateSpace random_probe_closure(const DerivationSpace& der, const RandomOptions& opts) {
    CandidateSpace c = basis_probe_space(der);
    const LieAlgebra& l = der.algebra;
    ProbeSampler sampler(opts.seed);
    std::size_t applied = 0, stall = 0, draws = 0;
    const std::size_t max_draws = 100 * (opts.max_probes + 1);
    while (applied < opts.max_probes && stall < opts.stall_limit && draws < max_draws) {
        ++draws;
        const auto coords = sampler.draw_vector(l.dim(), opts.range);
        Vector x(l.dim(), l.field());
        bool nonzero = false;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] != 0) {
                x.set(k, GaussianRational(coords[k]));
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        Element e(l, std::move(x));
        if (c.seen(e)) continue;
        const std::size_t before = c.dim();
        c.constrain(Probe(std::move(e)));
        ++applied;
        stall = c.dim() == before ? stall + 1 : 0;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Witness

std::optional<Witness> witness(const DerivationSpace& der, const LinearMap& delta, const Element& x,
                               const std::string& label) {
    const LieAlgebra& l = der.algebra;
    if (!(x.algebra() == l)) throw InvalidArgument("witness: element is not in the algebra");
    if (delta.dim() != l.dim()) throw DimensionMismatch("witness: map dimension does not match algebra");
    Matrix a(l.dim(), der.dim(), l.field());
    for (std::size_t i = 0; i < der.dim(); ++i) {
        const Vector col = der.basis[i].apply(x.coords());
        for (std::size_t r = 0; r < l.dim(); ++r) {
            if (!col[r].is_zero()) a.set(r, i, col[r]);
        }
    }
    auto sol = linalg::solve(a, delta.apply(x.coords()));
    if (!sol) return std::nullopt;
    return Witness{label.empty() ? x.to_string() : label, std::move(*sol)};
}

// ---------------------------------------------------------------------------
// General basis images

LinearMap AsosShape::instantiate(const std::vector<Scalar>& params) const {
    if (params.size() != maps.size()) throw DimensionMismatch("parameter count does not match shape");
    if (maps.empty()) throw InvalidArgument("empty shape");
    LinearMap out = LinearMap::zero(maps.front().dim(), maps.front().field());
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (!params[k].is_zero()) out += params[k] * maps[k];
    }
    return out;
}

AsosShape asos_shape(std::size_t n, FieldTag field) {
    if (n < 1) throw InvalidArgument("asos_shape: n must be at least 1");
    const std::size_t d = 2 * n + 4;
    const std::size_t E = 0, H = 1, F = 2, Z = 3;
    auto ui = [](std::size_t j) { return 4 + j - 1; };
    auto vi = [n](std::size_t j) { return 4 + n + j - 1; };
    auto js = [](std::size_t j) { return std::to_string(j); };

    AsosShape s;
    s.n = n;
    // One parameter: image of `source` gets coeff * b_target.
    auto param = [&](std::string name, std::size_t source, std::size_t target, long coeff) {
        LinearMap m(d, field);
        m.set(target, source, GaussianRational(coeff));
        s.names.push_back(std::move(name));
        s.maps.push_back(std::move(m));
    };

    param("alpha_f(e)", E, H, 1);
    param("alpha_h(e)", E, E, 2);
    for (std::size_t k = 1; k <= n; ++k) param("alpha_v_" + js(k) + "(e)", E, ui(k), -1);

    param("alpha_e(h)", H, E, -2);
    param("alpha_f(h)", H, F, 2);
    for (std::size_t k = 1; k <= n; ++k) param("alpha_u_" + js(k) + "(h)", H, ui(k), -1);
    for (std::size_t k = 1; k <= n; ++k) param("alpha_v_" + js(k) + "(h)", H, vi(k), -1);

    param("alpha_e(f)", F, H, 1);
    param("alpha_h(f)", F, F, -2);
    for (std::size_t k = 1; k <= n; ++k) param("alpha_u_" + js(k) + "(f)", F, vi(k), -1);

    for (std::size_t j = 1; j <= n; ++j) {
        const std::string at = "(u_" + js(j) + ")";
        param("alpha_f" + at, ui(j), vi(j), 1);
        param("alpha_h" + at + "+lambda" + at + "/2", ui(j), ui(j), 1);
        param("alpha_v_" + js(j) + at, ui(j), Z, -1);
        for (std::size_t k = 1; k < j; ++k) param("mu_" + js(k) + "," + js(j) + at, ui(j), ui(k), -1);
        for (std::size_t l = j + 1; l <= n; ++l) param("mu_" + js(j) + "," + js(l) + at, ui(j), ui(l), 1);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        const std::string at = "(v_" + js(j) + ")";
        param("lambda" + at + "/2-alpha_h" + at, vi(j), vi(j), 1);
        param("alpha_e" + at, vi(j), ui(j), 1);
        param("alpha_u_" + js(j) + at, vi(j), Z, 1);
        for (std::size_t k = 1; k < j; ++k) param("mu_" + js(k) + "," + js(j) + at, vi(j), vi(k), -1);
        for (std::size_t l = j + 1; l <= n; ++l) param("mu_" + js(j) + "," + js(l) + at, vi(j), vi(l), 1);
    }
    param("lambda(z)", Z, Z, 1);
    return s;
}

AsosCheck asos_shape_check(std::size_t n, FieldTag field) {
    const LieAlgebra l = liealg::make_schrodinger(n, field);
    const CandidateSpace basis = basis_probe_space(dersolve::derivation_space(l));
    const AsosShape s = asos_shape(n, field);

    AsosCheck r;
    r.n = n;
    r.parameter_count = s.maps.size();
    r.basis_space_dim = basis.dim();
    std::vector<Vector> rows;
    r.z_images_central = true;
    for (std::size_t k = 0; k < s.maps.size(); ++k) {
        rows.push_back(s.maps[k].flatten());
        if (!basis.contains(s.maps[k])) r.outside.push_back(s.names[k]);
        for (std::size_t a = 0; a < l.dim(); ++a) {
            if (a != 3 && !s.maps[k](a, 3).is_zero()) r.z_images_central = false;
        }
    }
    const Subspace span = Subspace::span(rows, l.dim() * l.dim(), field);
    r.shape_dim = span.dim();
    r.equal = span == basis.space();
    return r;
}

}  // namespace lieloc::locder
