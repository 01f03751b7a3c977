#include "lieloc/multipoly.hpp"

#include <algorithm>

namespace lieloc::multipoly {

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da > db;
    // Equal degree: the smaller exponent in the last differing variable wins.
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
    return m;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = b[k] - a[k];
    return m;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
    if (k >= nvars) throw InvalidArgument("variable index out of range");
    Monomial m(nvars, 0);
    m[k] = 1;
    MultiPoly p(nvars);
    p.add_term(m, Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::uint32_t MultiPoly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw DimensionMismatch("monomial arity does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    MultiPoly p = *this;
    p *= leading_coeff().inv();
    return p;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
    MultiPoly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [mono, coeff] : terms_) {
        Monomial x(nvars_);
        for (std::size_t k = 0; k < nvars_; ++k) x[k] = mono[k] + m[k];
        // Multiplying by a monomial preserves the order, so hint at the end.
        p.terms_.emplace_hint(p.terms_.end(), std::move(x), coeff * c);
    }
    return p;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong arity");
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < nvars_; ++k) {
            for (std::uint32_t e = 0; e < m[k]; ++e) t *= point[k];
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < names.size() ? names[k] : "x" + std::to_string(k);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        std::string term;
        if (mono.empty()) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out;
}

void MultiPoly::require_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same(b);
    MultiPoly p(a.nvars_);
    Monomial x(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t k = 0; k < a.nvars_; ++k) x[k] = ma[k] + mb[k];
            p.add_term(x, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [m, v] : p.terms_) v = -v;
    return p;
}

// ---------------------------------------------------------------------------
// Determinant

MultiPoly determinant(const PolyMatrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m) {
        if (row.size() != k) throw DimensionMismatch("determinant of a non-square matrix");
    }
    if (k == 0) return MultiPoly::constant(0, Rational(1));
    if (k > 20) throw InvalidArgument("determinant: matrix too large for subset expansion");
    const std::size_t nv = m[0][0].nvars();
    // dp[S]: signed sum over injections of the first |S| rows onto column set S.
    std::vector<MultiPoly> dp(std::size_t{1} << k, MultiPoly(nv));
    dp[0] = MultiPoly::constant(nv, Rational(1));
    for (std::size_t s = 0; s < dp.size(); ++s) {
        if (dp[s].is_zero()) continue;
        const std::size_t r = static_cast<std::size_t>(__builtin_popcountll(s));
        if (r == k) continue;
        for (std::size_t c = 0; c < k; ++c) {
            if (s & (std::size_t{1} << c)) continue;
            if (m[r][c].is_zero()) continue;
            // Sign: parity of columns already used that lie to the right of c.
            const std::size_t above = static_cast<std::size_t>(__builtin_popcountll(s >> (c + 1)));
            MultiPoly t = dp[s] * m[r][c];
            if (above % 2 == 1) t = -t;
            dp[s | (std::size_t{1} << c)] += t;
        }
        if (r + 1 < k) dp[s] = MultiPoly(nv);  // no longer needed
    }
    return dp.back();
}

// ---------------------------------------------------------------------------
// Groebner bases

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors) {
    MultiPoly rem(p.nvars());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial();
        const Rational lc = work.leading_coeff();
        bool divided = false;
        for (const auto& g : divisors) {
            if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
            work -= g.mul_term(monomial_quotient(lm, g.leading_monomial()), lc / g.leading_coeff());
            divided = true;
            break;
        }
        if (!divided) {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

bool GroebnerResult::is_unit() const {
    return std::any_of(basis.begin(), basis.end(), [](const MultiPoly& p) { return !p.is_zero() && p.is_constant(); });
}

namespace {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    return f.mul_term(monomial_quotient(l, f.leading_monomial()), f.leading_coeff().inv()) -
           g.mul_term(monomial_quotient(l, g.leading_monomial()), g.leading_coeff().inv());
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > 0 && b[k] > 0) return false;
    }
    return true;
}

}  // namespace

GroebnerResult groebner_basis(const std::vector<MultiPoly>& generators, std::size_t pair_budget) {
    GroebnerResult out;
    std::vector<MultiPoly> g;
    for (const auto& p : generators) {
        MultiPoly r = reduce(p, g);
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            out.basis = {r.monic()};
            out.complete = true;
            return out;
        }
        g.push_back(r.monic());
    }
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.push_back({i, j, monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial())});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

    const GrevlexGreater greater;
    while (!pairs.empty()) {
        // Normal strategy: smallest lcm first.
        auto best = std::min_element(pairs.begin(), pairs.end(),
                                     [&](const Pair& a, const Pair& b) { return greater(b.lcm, a.lcm); });
        const Pair p = *best;
        pairs.erase(best);
        if (coprime(g[p.i].leading_monomial(), g[p.j].leading_monomial())) continue;
        if (out.pairs_reduced >= pair_budget) {
            out.basis = std::move(g);
            out.complete = false;
            return out;
        }
        ++out.pairs_reduced;
        MultiPoly r = reduce(s_polynomial(g[p.i], g[p.j]), g);
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            out.basis = {r.monic()};
            out.complete = true;
            return out;
        }
        g.push_back(r.monic());
        add_pairs(g.size() - 1);
    }
    out.basis = std::move(g);
    out.complete = true;
    return out;
}

}  // namespace lieloc::multipoly
