#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>

#include "bridge.hpp"
#include "lieloc/certify.hpp"
#include "lieloc/multipoly.hpp"

using namespace lieloc;
using namespace lieloc::multipoly;
using certify::Verdict;
using exactfield::FieldTag;
using exactfield::Rational;
using linalg::LinearMap;

namespace {

MultiPoly x(std::size_t n, std::size_t k) { return MultiPoly::variable(n, k); }
MultiPoly c(std::size_t n, long v) { return MultiPoly::constant(n, Rational(v)); }

MultiPoly random_poly(oracle::Gen& g, std::size_t nvars, int terms, std::uint32_t maxdeg) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (auto& e : m) e = static_cast<std::uint32_t>(g.integer(0, maxdeg));
        p.add_term(m, bridge::rational(g, 0));
    }
    return p;
}

std::vector<Rational> random_point(oracle::Gen& g, std::size_t n) {
    std::vector<Rational> pt;
    for (std::size_t k = 0; k < n; ++k) pt.push_back(bridge::rational(g, 10));
    return pt;
}

// Leibniz expansion over permutations, as an independent determinant.
Rational det_by_permutations(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    Rational total(0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
        }
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("grevlex order") {
    GrevlexGreater gt;
    CHECK(gt({2, 0, 0}, {1, 0, 0}));   // degree first
    CHECK(gt({1, 1, 0}, {1, 0, 1}));   // smaller last exponent wins
    CHECK(gt({0, 2, 0}, {1, 0, 1}));
    CHECK_FALSE(gt({1, 0, 1}, {1, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
    const auto a = x(2, 0) + c(2, 1);
    const auto b = x(2, 0) - c(2, 1);
    const auto p = a * b;
    CHECK(p == x(2, 0) * x(2, 0) - c(2, 1));
    CHECK(p.to_string({"x", "y"}) == "x^2-1");
    CHECK((p - p).is_zero());
    CHECK(MultiPoly(2).to_string({"x", "y"}) == "0");
    CHECK((c(2, 3) * x(2, 1)).monic() == x(2, 1));
    CHECK(p.evaluate({Rational(3), Rational(7)}) == Rational(8));
}

TEST_CASE("ring laws and evaluation on random polynomials") {
    oracle::Gen g(601);
    for (int t = 0; t < 120; ++t) {
        const auto p = random_poly(g, 3, 4, 2), q = random_poly(g, 3, 3, 2), r = random_poly(g, 3, 3, 1);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        const auto pt = random_point(g, 3);
        CHECK((p * q + r).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt) + r.evaluate(pt));
        // multiples of a single divisor reduce to zero
        if (!q.is_zero()) {
            const auto rem = reduce(p * q, {q});
            CHECK(rem.is_zero());
        }
    }
}

TEST_CASE("determinant agrees with permutation expansion at random points") {
    oracle::Gen g(602);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(1, 4));
        PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(3)));
        for (auto& row : m) {
            for (auto& e : row) e = random_poly(g, 3, 2, 1);
        }
        const auto det = determinant(m);
        const auto pt = random_point(g, 3);
        std::vector<std::vector<Rational>> ev(n, std::vector<Rational>(n));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) ev[a][b] = m[a][b].evaluate(pt);
        }
        CHECK(det.evaluate(pt) == det_by_permutations(ev));
    }
}

TEST_CASE("Groebner bases") {
    // x*y - 1, x - 1  =>  y - 1 in the ideal
    const auto gb = groebner_basis({x(2, 0) * x(2, 1) - c(2, 1), x(2, 0) - c(2, 1)});
    CHECK(gb.complete);
    CHECK_FALSE(gb.is_unit());
    CHECK(reduce(x(2, 1) - c(2, 1), gb.basis).is_zero());
    // x, 1 - x  => unit
    CHECK(groebner_basis({x(1, 0), c(1, 1) - x(1, 0)}).is_unit());
    // x^2, y^2 has no constant
    CHECK_FALSE(groebner_basis({x(2, 0) * x(2, 0), x(2, 1) * x(2, 1)}).is_unit());
}

TEST_CASE("every reduced element of a Groebner basis ideal reduces to zero") {
    oracle::Gen g(603);
    for (int t = 0; t < 100; ++t) {
        const auto f1 = random_poly(g, 2, 2, 2), f2 = random_poly(g, 2, 2, 1);
        const auto gb = groebner_basis({f1, f2}, 5000);
        if (!gb.complete) continue;
        const auto a = random_poly(g, 2, 2, 1), b = random_poly(g, 2, 2, 1);
        CHECK(reduce(a * f1 + b * f2, gb.basis).is_zero());
    }
}

TEST_CASE("certifier on the Heisenberg algebra") {
    const auto h = liealg::make_heisenberg(1);
    const auto der = dersolve::derivation_space(h);
    LinearMap zz(3, FieldTag::Q);
    zz.set(0, 0, 1);
    const auto cert = certify::certify_local_symbolic(der, zz);
    CHECK(cert.verdict == Verdict::Local);
    CHECK_FALSE(cert.in_der);
    CHECK(cert.generic_rank == 3);
    CHECK(cert.generic_ok);
    CHECK(cert.stratified_ok);
    CHECK_FALSE(dersolve::is_derivation(h, zz).ok);

    LinearMap zu(3, FieldTag::Q);
    zu.set(1, 0, 1);
    const auto bad = certify::certify_local_symbolic(der, zu);
    CHECK(bad.verdict == Verdict::NotLocal);
    REQUIRE(bad.refuting_point);
    CHECK_FALSE(locder::witness(der, zu, liealg::Element(h, *bad.refuting_point)));
    CHECK(liealg::Element(h, *bad.refuting_point).to_string() == "z");
}

TEST_CASE("derivations certify as local") {
    oracle::Gen g(604);
    const auto s = liealg::make_schrodinger(1);
    const auto der = dersolve::derivation_space(s);
    for (int t = 0; t < 5; ++t) {
        LinearMap d = LinearMap::zero(s.dim(), FieldTag::Q);
        for (const auto& b : der.basis) d += exactfield::Scalar::rational(bridge::rational(g, 30)) * b;
        const auto cert = certify::certify_local_symbolic(der, d);
        CHECK(cert.verdict == Verdict::Local);
        CHECK(cert.in_der);
    }
}

TEST_CASE("generic minors alone miss the gap map of the printed schedule") {
    // the extra direction left by the as-printed schedule on S_1 passes every
    // generic minor but fails at a rational point on a degenerate locus
    const auto r = locder::replay_proof(1, locder::Schedule::AsPrinted, FieldTag::Q);
    REQUIRE(r.result.candidate_dim == 7);
    const auto& der = r.space.der();
    const auto cand = r.space.space();
    std::optional<LinearMap> extra;
    for (std::size_t k = 0; k < cand.dim() && !extra; ++k) {
        const auto m = LinearMap::from_flat(cand.basis_vector(k), der.algebra.dim());
        if (!der.as_subspace.contains(m.flatten())) extra = m;
    }
    REQUIRE(extra);
    const auto cert = certify::certify_local_symbolic(der, *extra);
    CHECK(cert.generic_ok);
    CHECK(cert.verdict == Verdict::NotLocal);
    REQUIRE(cert.refuting_point);
    CHECK_FALSE(locder::witness(der, *extra, liealg::Element(der.algebra, *cert.refuting_point)));
}

TEST_CASE("certifier preconditions") {
    const auto der = dersolve::derivation_space(liealg::make_heisenberg(1, FieldTag::Qi));
    CHECK_THROWS_AS(certify::certify_local_symbolic(der, LinearMap::zero(3, FieldTag::Qi)), InvalidArgument);
    const auto big = dersolve::derivation_space(liealg::make_schrodinger(4));
    CHECK_THROWS_AS(certify::certify_local_symbolic(big, LinearMap::zero(12, FieldTag::Q)), InvalidArgument);
}
