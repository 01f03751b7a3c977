#pragma once

// Lie algebras given by structure constants over Q or Q(i).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieloc/linalg.hpp"

namespace lieloc::liealg {

using exactfield::FieldTag;
using exactfield::GaussianRational;
using exactfield::Scalar;
using linalg::LinearMap;
using linalg::Subspace;
using linalg::Vector;

struct Term {
    std::size_t basis;
    GaussianRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Raw table of brackets [b_i, b_j] = sum_k c_ij^k b_k, one slot per ordered
/// pair. Nothing is implied here, so defective tables can be represented.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(std::size_t dim, FieldTag field) : dim_(dim), field_(field), table_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    FieldTag field() const { return field_; }

    /// Overwrites slot (i, j). Terms are merged, sorted and zeros dropped.
    void set(std::size_t i, std::size_t j, std::vector<Term> terms);
    /// Sets (i, j) to `terms` and (j, i) to their negation.
    void set_antisymmetric(std::size_t i, std::size_t j, const std::vector<Term>& terms);
    const std::vector<Term>& get(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    /// Slot (i, j) as a dense coordinate vector.
    Vector bracket_vector(std::size_t i, std::size_t j) const;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t dim_ = 0;
    FieldTag field_ = FieldTag::Q;
    std::vector<std::vector<Term>> table_;
};

struct JacobiVerdict {
    enum class Failure { None, Antisymmetry, Jacobi };
    Failure failure = Failure::None;
    /// Failing pair (i, j) for antisymmetry, failing triple (i, j, k) for Jacobi.
    std::size_t i = 0, j = 0, k = 0;
    bool ok() const { return failure == Failure::None; }
    std::string describe(const std::vector<std::string>& labels) const;
};

/// Antisymmetry on all pairs, then [[a,b],c]+[[b,c],a]+[[c,a],b]=0 on all
/// basis triples a<b<c. Reports the first failure in lexicographic order.
JacobiVerdict check_jacobi(const StructureConstants& c);

class LieAlgebra {
public:
    /// Validates labels (unique, non-empty) and the Lie axioms.
    /// Throws InvalidAlgebra.
    static LieAlgebra create(std::string name, std::vector<std::string> labels, StructureConstants constants);

    const std::string& name() const { return d_->name; }
    std::size_t dim() const { return d_->constants.dim(); }
    FieldTag field() const { return d_->constants.field(); }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const StructureConstants& constants() const { return d_->constants; }
    const std::string& label(std::size_t i) const { return d_->labels.at(i); }
    std::optional<std::size_t> find(const std::string& label) const;
    /// Throws InvalidArgument for unknown labels.
    std::size_t index_of(const std::string& label) const;

    /// Same underlying object (not just structurally equal).
    bool same_as(const LieAlgebra& o) const { return d_ == o.d_; }
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

    /// Same algebra with coefficients viewed in Q(i); identity on Q(i) algebras.
    LieAlgebra embed() const;
    /// Sub-table on the given basis indices, relabelled in the given order.
    /// Throws InvalidArgument if the span is not closed under the bracket.
    LieAlgebra restrict(const std::vector<std::size_t>& indices, std::string name) const;

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
        StructureConstants constants;
    };
    explicit LieAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

class Element {
public:
    Element(LieAlgebra algebra, Vector coords);
    static Element zero(const LieAlgebra& l) { return {l, Vector(l.dim(), l.field())}; }
    static Element basis(const LieAlgebra& l, std::size_t i) { return {l, Vector::unit(l.dim(), i, l.field())}; }
    static Element basis(const LieAlgebra& l, const std::string& label) { return basis(l, l.index_of(label)); }

    const LieAlgebra& algebra() const { return algebra_; }
    const Vector& coords() const { return coords_; }
    bool is_zero() const { return coords_.is_zero(); }
    /// e.g. "f-1/2*z+v_1", "u_1+i*u_2", "0".
    std::string to_string() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element x);
    friend bool operator==(const Element& a, const Element& b);

private:
    LieAlgebra algebra_;
    Vector coords_;
};

/// Formats sum c_k * label_k in the given order: "f-1/2*z+v_1", "u_1+i*u_2".
/// Zero coefficients are skipped; an empty sum prints as "0".
std::string format_combination(const std::vector<std::pair<std::string, GaussianRational>>& terms);

/// Bilinear expansion through the structure constants. Throws InvalidArgument
/// when the elements belong to different algebras.
Element bracket(const Element& x, const Element& y);
/// Matrix of y -> [x, y].
LinearMap ad(const Element& x);
/// {x : [x, L] = 0}, as the nullspace of the stacked ad(b_i)^T rows.
Subspace center(const LieAlgebra& l);

LieAlgebra make_schrodinger(std::size_t n, FieldTag field = FieldTag::Q);
LieAlgebra make_heisenberg(std::size_t n, FieldTag field = FieldTag::Q);
LieAlgebra make_sl2(FieldTag field = FieldTag::Q);
/// All brackets zero; labels x_1..x_k.
LieAlgebra make_abelian(std::size_t k, FieldTag field = FieldTag::Q);

/// Recognizes a Schrodinger algebra by its generated labels and structure
/// constants; returns n, or nullopt if `l` is not exactly make_schrodinger(n).
std::optional<std::size_t> schrodinger_rank(const LieAlgebra& l);

/// Algebra file contents before the Lie axioms are checked.
struct AlgebraData {
    std::string name;
    std::vector<std::string> labels;
    StructureConstants constants;
};
/// Parses the file schema (unknown keys rejected, missing partners implied).
/// Throws ParseError; InvalidAlgebra for duplicate labels.
AlgebraData parse_algebra(const nlohmann::json& j);
AlgebraData read_algebra(const std::string& path);

nlohmann::ordered_json to_json(const LieAlgebra& l);
/// Throws ParseError for malformed input, InvalidAlgebra for axiom failures
/// or duplicate labels.
LieAlgebra from_json(const nlohmann::json& j);
LieAlgebra load(const std::string& path);
void save(const LieAlgebra& l, const std::string& path);

}  // namespace lieloc::liealg
