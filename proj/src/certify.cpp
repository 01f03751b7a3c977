#include "lieloc/certify.hpp"

namespace lieloc::certify {

using exactfield::FieldTag;
using exactfield::GaussianRational;
using exactfield::Rational;
using liealg::Element;
using linalg::Matrix;
using multipoly::Monomial;
using multipoly::MultiPoly;
using multipoly::PolyMatrix;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Local:
            return "local";
        case Verdict::NotLocal:
            return "not-local";
        case Verdict::Undecided:
            return "undecided";
    }
    return "unknown";
}

namespace {

// Linear form sum_b m(a, b) x_b in `nvars` variables, x_b being variable
// x_offset + b, each term also multiplied by variable phi (if given).
MultiPoly row_form(const LinearMap& m, std::size_t a, std::size_t nvars, std::size_t x_offset,
                   std::optional<std::size_t> phi) {
    MultiPoly p(nvars);
    for (std::size_t b = 0; b < m.dim(); ++b) {
        const auto& c = m(a, b);
        if (c.is_zero()) continue;
        Monomial mono(nvars, 0);
        mono[x_offset + b] = 1;
        if (phi) mono[*phi] += 1;
        p.add_term(mono, c.re());
    }
    return p;
}

Matrix evaluate_block(const DerivationSpace& der, const Vector& x) {
    const std::size_t d = der.algebra.dim();
    Matrix a(d, der.dim(), x.field());
    for (std::size_t i = 0; i < der.dim(); ++i) {
        const Vector col = der.basis[i].apply(x);
        for (std::size_t r = 0; r < d; ++r) {
            if (!col[r].is_zero()) a.set(r, i, col[r]);
        }
    }
    return a;
}

Vector to_vector(const std::vector<long>& coords, FieldTag field) {
    Vector x(coords.size(), field);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] != 0) x.set(k, GaussianRational(coords[k]));
    }
    return x;
}

std::vector<Rational> to_rationals(const Vector& x) {
    std::vector<Rational> out;
    for (const auto& v : x.data()) out.push_back(v.re());
    return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool refutes(const DerivationSpace& der, const LinearMap& delta, const Vector& x) {
    if (x.is_zero()) return false;
    return !locder::witness(der, delta, Element(der.algebra, x)).has_value();
}

}  // namespace

PolyMatrix orbit_poly_matrix(const DerivationSpace& der, const LinearMap& delta) {
    const std::size_t d = der.algebra.dim();
    PolyMatrix m(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (const auto& dm : der.basis) m[a].push_back(row_form(dm, a, d, 0, std::nullopt));
        m[a].push_back(row_form(delta, a, d, 0, std::nullopt));
    }
    return m;
}

Certificate certify_local_symbolic(const DerivationSpace& der, const LinearMap& delta, const CertifyOptions& opts) {
    const auto& l = der.algebra;
    if (l.field() != FieldTag::Q) throw InvalidArgument("certify: only algebras over Q are supported");
    if (l.dim() > opts.max_dim) {
        throw InvalidArgument("certify: dimension " + std::to_string(l.dim()) + " exceeds the bound " +
                              std::to_string(opts.max_dim));
    }
    if (delta.dim() != l.dim()) throw DimensionMismatch("certify: map dimension does not match algebra");
    if (delta.field() != l.field()) throw FieldMismatch("certify: map field does not match algebra");

    const std::size_t d = l.dim();
    const std::size_t m = der.dim();
    Certificate cert;
    cert.in_der = der.as_subspace.contains(delta.flatten());
    const PolyMatrix poly = orbit_poly_matrix(der, delta);

    // Generic rank of the Der block from random points.
    locder::ProbeSampler sampler(opts.seed);
    Matrix best_block(d, m, l.field());
    for (std::size_t s = 0; s < opts.rank_samples; ++s) {
        const Vector x = to_vector(sampler.draw_vector(d, 10), l.field());
        Matrix a = evaluate_block(der, x);
        const std::size_t r = linalg::rank(a);
        if (r > cert.generic_rank || s == 0) {
            cert.generic_rank = r;
            best_block = std::move(a);
        }
    }
    const std::size_t r = cert.generic_rank;
    if (r > 0) {
        cert.rank_minor_cols = linalg::rref(best_block).pivots;
        Matrix sub(d, r, l.field());
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t k = 0; k < r; ++k) sub.set(a, k, best_block(a, cert.rank_minor_cols[k]));
        }
        cert.rank_minor_rows = linalg::rref(sub.transpose()).pivots;
        PolyMatrix minor(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k) minor[i].push_back(poly[cert.rank_minor_rows[i]][cert.rank_minor_cols[k]]);
        }
        if (multipoly::determinant(minor).is_zero()) {
            throw InternalError("certify: inconsistent rank profile (evaluated minor is nonzero, symbolic minor is zero)");
        }
    }

    if (cert.in_der) {
        cert.verdict = Verdict::Local;
        cert.generic_ok = true;
        cert.detail = "map is a derivation";
        return cert;
    }

    // Every (r+1)-minor through the Delta column.
    cert.generic_ok = true;
    if (r < d) {
        if (binomial(d, r + 1) * binomial(m, r) > 200000) {
            throw InvalidArgument("certify: too many minors to expand");
        }
        auto rows = first_combination(r + 1);
        do {
            auto cols = first_combination(r);
            do {
                PolyMatrix minor(r + 1);
                for (std::size_t i = 0; i <= r; ++i) {
                    for (auto c : cols) minor[i].push_back(poly[rows[i]][c]);
                    minor[i].push_back(poly[rows[i]][m]);
                }
                const MultiPoly det = multipoly::determinant(minor);
                ++cert.minors_checked;
                if (det.is_zero()) continue;
                cert.generic_ok = false;
                cert.verdict = Verdict::NotLocal;
                for (std::size_t s = 0; s < opts.search_points; ++s) {
                    const Vector x = to_vector(sampler.draw_vector(d, 10), l.field());
                    if (!det.evaluate(to_rationals(x)).is_zero() && refutes(der, delta, x)) {
                        cert.refuting_point = x;
                        break;
                    }
                }
                cert.detail = "nonzero generic minor";
                return cert;
            } while (r > 0 && next_combination(cols, m));
        } while (next_combination(rows, d));
    }

    // Degenerate loci, variables x_0..x_{d-1}, phi_0..phi_{d-1}, t.
    const std::size_t nv = 2 * d + 1;
    std::vector<MultiPoly> gens;
    auto incidence = [&](const LinearMap& map) {
        MultiPoly p(nv);
        for (std::size_t a = 0; a < d; ++a) p += row_form(map, a, nv, 0, d + a);
        return p;
    };
    for (const auto& dm : der.basis) gens.push_back(incidence(dm));
    const MultiPoly g = incidence(delta);
    Monomial tm(nv, 0);
    tm[2 * d] = 1;
    gens.push_back(MultiPoly::constant(nv, Rational(1)) - g.mul_term(tm, Rational(1)));
    const auto gb = multipoly::groebner_basis(gens, opts.groebner_budget);
    cert.stratified_checked = true;
    cert.groebner_pairs = gb.pairs_reduced;
    if (!gb.complete) {
        cert.verdict = Verdict::Undecided;
        cert.detail = "Groebner budget exhausted";
        return cert;
    }
    if (gb.is_unit()) {
        cert.stratified_ok = true;
        cert.verdict = Verdict::Local;
        cert.detail = "generic minors vanish and the condition holds on every degenerate locus";
        return cert;
    }
    cert.verdict = Verdict::NotLocal;
    cert.detail = "condition fails on a degenerate locus";

    // Look for a rational point on that locus: basis vectors, sums and
    // differences of two, then sparse random points.
    for (std::size_t k = 0; k < d && !cert.refuting_point; ++k) {
        const Vector x = Vector::unit(d, k, l.field());
        if (refutes(der, delta, x)) cert.refuting_point = x;
    }
    for (std::size_t i = 0; i < d && !cert.refuting_point; ++i) {
        for (std::size_t j = i + 1; j < d && !cert.refuting_point; ++j) {
            for (long sgn : {1L, -1L}) {
                std::vector<long> c(d, 0);
                c[i] = 1;
                c[j] = sgn;
                const Vector x = to_vector(c, l.field());
                if (refutes(der, delta, x)) {
                    cert.refuting_point = x;
                    break;
                }
            }
        }
    }
    for (std::size_t s = 0; s < opts.search_points && !cert.refuting_point; ++s) {
        std::vector<long> c(d);
        for (auto& v : c) v = sampler.draw(1) * sampler.draw(3);
        const Vector x = to_vector(c, l.field());
        if (refutes(der, delta, x)) cert.refuting_point = x;
    }
    if (!cert.refuting_point) cert.detail += " (no rational refuting point found)";
    return cert;
}

}  // namespace lieloc::certify
