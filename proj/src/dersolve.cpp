#include "lieloc/dersolve.hpp"

namespace lieloc::dersolve {

using exactfield::GaussianRational;
using exactfield::Rational;
using linalg::Vector;

Matrix leibniz_system(const LieAlgebra& l) {
    const std::size_t d = l.dim();
    const auto& c = l.constants();
    const std::size_t pairs = d * (d - (d > 0 ? 1 : 0)) / 2;
    Matrix m(pairs * d, d * d, l.field());
    auto var = [d](std::size_t a, std::size_t b) { return a + d * b; };

    // Accumulate into a dense scratch row, then copy out.
    std::vector<GaussianRational> row(d * d);
    std::vector<std::size_t> touched;
    auto add = [&](std::size_t idx, const GaussianRational& v) {
        if (row[idx].is_zero()) touched.push_back(idx);
        row[idx] += v;
    };

    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k, ++r) {
                // sum_m c_ij^m D(k, m)
                for (const auto& t : c.get(i, j)) add(var(k, t.basis), t.coeff);
                // - sum_a D(a, i) c_aj^k
                for (std::size_t a = 0; a < d; ++a) {
                    for (const auto& t : c.get(a, j)) {
                        if (t.basis == k) add(var(a, i), -t.coeff);
                    }
                }
                // - sum_a D(a, j) c_ia^k
                for (std::size_t a = 0; a < d; ++a) {
                    for (const auto& t : c.get(i, a)) {
                        if (t.basis == k) add(var(a, j), -t.coeff);
                    }
                }
                for (auto idx : touched) {
                    if (!row[idx].is_zero()) m.set(r, idx, row[idx]);
                    row[idx] = GaussianRational();
                }
                touched.clear();
            }
        }
    }
    return m;
}

std::string LeibnizVerdict::describe(const LieAlgebra& l) const {
    if (ok) return "ok";
    return "Leibniz rule fails at (" + l.label(i) + ", " + l.label(j) + ")";
}

LeibnizVerdict is_derivation(const LieAlgebra& l, const LinearMap& d) {
    if (d.dim() != l.dim()) throw DimensionMismatch("map dimension does not match algebra");
    if (d.field() != l.field()) throw FieldMismatch("map field does not match algebra field");
    std::vector<Element> images;
    for (std::size_t b = 0; b < l.dim(); ++b) images.emplace_back(l, d.matrix().col(b));
    for (std::size_t i = 0; i < l.dim(); ++i) {
        const Element bi = Element::basis(l, i);
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            const Element bj = Element::basis(l, j);
            const Vector lhs = d.apply(bracket(bi, bj).coords());
            const Element rhs = bracket(images[i], bj) + bracket(bi, images[j]);
            if (!(lhs == rhs.coords())) return {false, i, j};
        }
    }
    return {};
}

DerivationSpace derivation_space(const LieAlgebra& l) {
    Subspace ker = linalg::nullspace(leibniz_system(l));
    std::vector<LinearMap> basis;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
        LinearMap m = LinearMap::from_flat(ker.basis_vector(k), l.dim());
        const LeibnizVerdict v = is_derivation(l, m);
        if (!v.ok) throw InternalError("kernel vector of the Leibniz system is not a derivation: " + v.describe(l));
        basis.push_back(std::move(m));
    }
    return {l, std::move(basis), std::move(ker)};
}

Subspace inner_space(const LieAlgebra& l) {
    std::vector<Vector> rows;
    for (std::size_t b = 0; b < l.dim(); ++b) rows.push_back(liealg::ad(Element::basis(l, b)).flatten());
    return Subspace::span(rows, l.dim() * l.dim(), l.field());
}

namespace {

std::size_t u_index(std::size_t j, std::size_t /*n*/) { return 4 + j - 1; }
std::size_t v_index(std::size_t j, std::size_t n) { return 4 + n + j - 1; }

std::size_t require_schrodinger(const LieAlgebra& l, const char* what) {
    const auto n = liealg::schrodinger_rank(l);
    if (!n) throw InvalidArgument(std::string(what) + ": '" + l.name() + "' is not a generated Schrodinger algebra");
    return *n;
}

}  // namespace

LinearMap sigma(std::size_t l, std::size_t k, std::size_t n, FieldTag field) {
    if (n < 2) throw InvalidArgument("sigma: requires n >= 2");
    if (l < 1 || l >= k || k > n) {
        throw InvalidArgument("sigma: need 1 <= l < k <= n, got l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
    LinearMap m(2 * n + 4, field);
    m.set(u_index(k, n), u_index(l, n), 1);
    m.set(u_index(l, n), u_index(k, n), -1);
    m.set(v_index(k, n), v_index(l, n), 1);
    m.set(v_index(l, n), v_index(k, n), -1);
    return m;
}

LinearMap tau(std::size_t n, FieldTag field) {
    if (n < 1) throw InvalidArgument("tau: requires n >= 1");
    LinearMap m(2 * n + 4, field);
    m.set(3, 3, 1);
    const GaussianRational half(Rational(1, 2));
    for (std::size_t j = 1; j <= n; ++j) {
        m.set(u_index(j, n), u_index(j, n), half);
        m.set(v_index(j, n), v_index(j, n), half);
    }
    return m;
}

std::vector<LinearMap> sigmas(std::size_t n, FieldTag field) {
    std::vector<LinearMap> out;
    for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t k = l + 1; k <= n; ++k) out.push_back(sigma(l, k, n, field));
    }
    return out;
}

OuterReport outer_structure(const LieAlgebra& l) {
    const std::size_t n = require_schrodinger(l, "outer_structure");
    const std::size_t d2 = l.dim() * l.dim();
    OuterReport r;
    r.n = n;
    const DerivationSpace der = derivation_space(l);
    const Subspace inn = inner_space(l);
    r.der_dim = der.dim();
    r.inn_dim = inn.dim();

    const auto sig = sigmas(n, l.field());
    const LinearMap t = tau(n, l.field());
    r.sigmas_are_derivations = true;
    std::vector<Vector> sig_rows;
    for (const auto& s : sig) {
        r.sigmas_are_derivations = r.sigmas_are_derivations && is_derivation(l, s).ok;
        sig_rows.push_back(s.flatten());
    }
    r.tau_is_derivation = is_derivation(l, t).ok;

    const Subspace sspan = Subspace::span(sig_rows, d2, l.field());
    r.sigma_dim = sspan.dim();
    r.sigma_meets_inner_trivially = linalg::subspace_intersect(sspan, inn).dim() == 0;
    const Subspace inn_sig = linalg::subspace_sum(inn, sspan);
    r.tau_outside_inner_plus_sigma = !inn_sig.contains(t.flatten());
    const Subspace all = linalg::subspace_sum(inn_sig, Subspace::span({t.flatten()}, d2, l.field()));
    r.direct_sum_is_der = all == der.as_subspace && inn.dim() + sspan.dim() + 1 == der.dim() &&
                          sspan.dim() == n * (n - 1) / 2;
    return r;
}

DerDecomposition decompose(const LieAlgebra& l, const LinearMap& d) {
    const std::size_t n = require_schrodinger(l, "decompose");
    const LeibnizVerdict v = is_derivation(l, d);
    if (!v.ok) throw InvalidArgument("decompose: map is not a derivation (" + v.describe(l) + ")");

    // Columns: ad(b) for b != z, then sigma_lk, then tau.
    std::vector<std::size_t> inner_cols;
    std::vector<Vector> cols;
    for (std::size_t b = 0; b < l.dim(); ++b) {
        if (b == 3) continue;
        inner_cols.push_back(b);
        cols.push_back(liealg::ad(Element::basis(l, b)).flatten());
    }
    std::vector<std::pair<std::size_t, std::size_t>> sig_idx;
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = a + 1; b <= n; ++b) {
            sig_idx.emplace_back(a, b);
            cols.push_back(sigma(a, b, n, l.field()).flatten());
        }
    }
    cols.push_back(tau(n, l.field()).flatten());

    const Matrix a = Matrix::from_rows(cols, l.dim() * l.dim(), l.field()).transpose();
    const auto sol = linalg::solve(a, d.flatten());
    if (!sol) throw InternalError("derivation outside Inn + span{sigma} + span{tau}");

    Vector inner(l.dim(), l.field());
    for (std::size_t c = 0; c < inner_cols.size(); ++c) inner.set(inner_cols[c], (*sol)[c]);
    DerDecomposition out{Element(l, std::move(inner)), {}, sol->at(cols.size() - 1)};
    for (std::size_t s = 0; s < sig_idx.size(); ++s) {
        out.sigma_coeffs.push_back({sig_idx[s].first, sig_idx[s].second, sol->at(inner_cols.size() + s)});
    }
    return out;
}

LinearMap reassemble(const LieAlgebra& l, const DerDecomposition& dec) {
    const std::size_t n = require_schrodinger(l, "reassemble");
    LinearMap out = liealg::ad(dec.inner_part);
    for (const auto& s : dec.sigma_coeffs) out += s.coeff * sigma(s.l, s.k, n, l.field());
    out += dec.tau_coeff * tau(n, l.field());
    return out;
}

}  // namespace lieloc::dersolve
