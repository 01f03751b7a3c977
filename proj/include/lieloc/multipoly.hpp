#pragma once

// Sparse multivariate polynomials over Q, determinants of polynomial
// matrices, and Buchberger's algorithm (graded reverse lexicographic order).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieloc/exactfield.hpp"

namespace lieloc::multipoly {

using exactfield::Rational;

using Monomial = std::vector<std::uint32_t>;  // exponent per variable

/// a > b in graded reverse lexicographic order.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::uint32_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, GrevlexGreater>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t k);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree() const;
    const Terms& terms() const { return terms_; }
    /// Leading term in grevlex; requires a nonzero polynomial.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);
    MultiPoly monic() const;
    /// c * m * this
    MultiPoly mul_term(const Monomial& m, const Rational& c) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Variables printed as names[k]; "0" for the zero polynomial.
    std::string to_string(const std::vector<std::string>& names) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    void require_same(const MultiPoly& o) const;
    std::size_t nvars_;
    Terms terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant of a square polynomial matrix by dynamic programming over
/// column subsets (rows taken in order), exact.
MultiPoly determinant(const PolyMatrix& m);

/// Remainder of p on division by the list `divisors` (leading terms in grevlex).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors);

struct GroebnerResult {
    bool complete = false;  // false when the pair budget ran out
    std::vector<MultiPoly> basis;
    std::size_t pairs_reduced = 0;
    /// The ideal is the whole ring (basis contains a nonzero constant).
    bool is_unit() const;
};

/// Buchberger with the coprime criterion, normal pair selection and early
/// exit once a constant appears. `pair_budget` bounds the number of
/// S-polynomial reductions.
GroebnerResult groebner_basis(const std::vector<MultiPoly>& generators, std::size_t pair_budget = 20000);

}  // namespace lieloc::multipoly
