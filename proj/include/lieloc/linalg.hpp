#pragma once

// Exact dense linear algebra over Q or Q(i).

#include <cstddef>
#include <optional>
#include <vector>

#include "lieloc/exactfield.hpp"

namespace lieloc::linalg {

using exactfield::FieldTag;
using exactfield::GaussianRational;
using exactfield::Scalar;

class Vector {
public:
    Vector() = default;
    Vector(std::size_t size, FieldTag field) : field_(field), data_(size) {}
    Vector(FieldTag field, std::vector<GaussianRational> data);

    static Vector unit(std::size_t size, std::size_t index, FieldTag field);

    std::size_t size() const { return data_.size(); }
    FieldTag field() const { return field_; }
    const GaussianRational& operator[](std::size_t i) const { return data_[i]; }
    Scalar at(std::size_t i) const { return {field_, data_[i]}; }
    /// Throws FieldMismatch when `v` does not belong to the vector's field.
    void set(std::size_t i, GaussianRational v);
    void set(std::size_t i, const Scalar& v);
    bool is_zero() const;
    const std::vector<GaussianRational>& data() const { return data_; }

    /// Same values viewed in Q(i).
    Vector embed() const { return {FieldTag::Qi, data_}; }

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
    friend bool operator==(const Vector& a, const Vector& b) = default;

private:
    FieldTag field_ = FieldTag::Q;
    std::vector<GaussianRational> data_;
};

/// sum_i a_i * b_i (bilinear, no conjugation).
Scalar dot(const Vector& a, const Vector& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldTag field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

    static Matrix identity(std::size_t n, FieldTag field);
    /// Rows stacked in order; all must share size and field.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldTag field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldTag field() const { return field_; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar at(std::size_t r, std::size_t c) const { return {field_, (*this)(r, c)}; }
    void set(std::size_t r, std::size_t c, GaussianRational v);
    void set(std::size_t r, std::size_t c, const Scalar& v);

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix embed() const;
    Vector operator*(const Vector& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldTag field_ = FieldTag::Q;
    std::vector<GaussianRational> data_;
};

/// Square matrix acting on coordinate vectors: column b holds the image of
/// basis vector b. Flattening is column-major: entry (a, b) sits at a + dim*b.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t dim, FieldTag field) : m_(dim, dim, field) {}
    explicit LinearMap(Matrix m);

    static LinearMap zero(std::size_t dim, FieldTag field) { return {dim, field}; }
    static LinearMap identity(std::size_t dim, FieldTag field) { return LinearMap(Matrix::identity(dim, field)); }
    static LinearMap from_flat(const Vector& flat, std::size_t dim);

    std::size_t dim() const { return m_.rows(); }
    FieldTag field() const { return m_.field(); }
    const Matrix& matrix() const { return m_; }
    const GaussianRational& operator()(std::size_t a, std::size_t b) const { return m_(a, b); }
    void set(std::size_t a, std::size_t b, GaussianRational v) { m_.set(a, b, std::move(v)); }

    Vector apply(const Vector& x) const { return m_ * x; }
    Vector flatten() const;
    LinearMap embed() const { return LinearMap(m_.embed()); }

    LinearMap& operator+=(const LinearMap& o);
    LinearMap& operator-=(const LinearMap& o);
    LinearMap& operator*=(const Scalar& s);
    friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
    friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
    friend LinearMap operator*(const Scalar& s, LinearMap m) { return m *= s; }
    /// Composition: (a*b)(x) = a(b(x)).
    friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
    friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

private:
    Matrix m_;
};

struct Echelon {
    Matrix reduced;                   // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // pivot column of row k, strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Forward elimination is fraction-free over the
/// Gaussian integers (Bareiss: exact division by the previous pivot), followed
/// by a normalization pass that makes pivots 1 and clears the pivot columns.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Row space kept in reduced echelon form while rows are appended one at a
/// time (plain Gauss-Jordan over the field).
class RowEchelon {
public:
    RowEchelon(std::size_t cols, FieldTag field) : cols_(cols), field_(field) {}

    /// Reduces `v` and adds it when independent. Returns true if the rank grew.
    bool insert(Vector v);
    /// Remainder of `v` after reduction against the stored rows.
    Vector reduce(Vector v) const;

    std::size_t cols() const { return cols_; }
    FieldTag field() const { return field_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix matrix() const { return Matrix::from_rows(rows_, cols_, field_); }

private:
    std::size_t cols_;
    FieldTag field_;
    std::vector<Vector> rows_;  // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// Subspace of field^n stored by its canonical (RREF, full row rank) basis.
/// Equality of subspaces is equality of the stored bases.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient, FieldTag field);
    static Subspace full(std::size_t ambient, FieldTag field);
    /// Span of the rows of `m`.
    static Subspace span(const Matrix& m);
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, FieldTag field);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    FieldTag field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_vector(std::size_t k) const { return basis_.row(k); }

    bool contains(const Vector& v) const { return member(v).has_value(); }
    /// Coordinates of `v` in the canonical basis, or nullopt if v is outside.
    std::optional<Vector> member(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace embed() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: one echelon pass over [[A, A], [B, 0]].
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Sum and intersection from the same Zassenhaus pass.
std::pair<Subspace, Subspace> zassenhaus(const Subspace& a, const Subspace& b);

/// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace lieloc::linalg
