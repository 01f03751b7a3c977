#include "lieloc/linalg.hpp"

#include <algorithm>
#include <string>

namespace lieloc::linalg {

using exactfield::belongs_to;
using exactfield::Rational;

namespace {

void require_field(const GaussianRational& v, FieldTag f) {
    if (!belongs_to(v, f)) throw FieldMismatch("value " + v.to_string() + " is not in field Q");
}

void require_same_field(FieldTag a, FieldTag b, const char* what) {
    if (a != b) {
        throw FieldMismatch(std::string(what) + ": field mismatch (" + std::string(exactfield::to_string(a)) +
                            " vs " + std::string(exactfield::to_string(b)) + ")");
    }
}

void require_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": size " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(FieldTag field, std::vector<GaussianRational> data) : field_(field), data_(std::move(data)) {
    for (const auto& v : data_) require_field(v, field_);
}

Vector Vector::unit(std::size_t size, std::size_t index, FieldTag field) {
    Vector v(size, field);
    v.data_.at(index) = 1;
    return v;
}

void Vector::set(std::size_t i, GaussianRational v) {
    require_field(v, field_);
    data_.at(i) = std::move(v);
}

void Vector::set(std::size_t i, const Scalar& v) {
    require_same_field(field_, v.field(), "Vector::set");
    data_.at(i) = v.value();
}

bool Vector::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& v) { return v.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
    require_same_field(field_, o.field_, "vector add");
    require_size(size(), o.size(), "vector add");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_same_field(field_, o.field_, "vector sub");
    require_size(size(), o.size(), "vector sub");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    }
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    require_same_field(field_, s.field(), "vector scale");
    for (auto& v : data_) {
        if (!v.is_zero()) v *= s.value();
    }
    return *this;
}

Scalar dot(const Vector& a, const Vector& b) {
    require_same_field(a.field(), b.field(), "dot");
    require_size(a.size(), b.size(), "dot");
    GaussianRational acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    }
    return {a.field(), acc};
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n, FieldTag field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldTag field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_field(field, rows[r].field(), "Matrix::from_rows");
        require_size(rows[r].size(), cols, "Matrix::from_rows");
        std::copy(rows[r].data().begin(), rows[r].data().end(), m.data_.begin() + static_cast<long>(r * cols));
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, GaussianRational v) {
    require_field(v, field_);
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    data_[r * cols_ + c] = std::move(v);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    require_same_field(field_, v.field(), "Matrix::set");
    set(r, c, v.value());
}

Vector Matrix::row(std::size_t r) const {
    std::vector<GaussianRational> out(data_.begin() + static_cast<long>(r * cols_),
                                      data_.begin() + static_cast<long>((r + 1) * cols_));
    return {field_, std::move(out)};
}

Vector Matrix::col(std::size_t c) const {
    std::vector<GaussianRational> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return {field_, std::move(out)};
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& v) { return v.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::embed() const {
    Matrix m = *this;
    m.field_ = FieldTag::Qi;
    return m;
}

Vector Matrix::operator*(const Vector& v) const {
    require_same_field(field_, v.field(), "matrix-vector product");
    require_size(cols_, v.size(), "matrix-vector product");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return {field_, std::move(out)};
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix product");
    require_size(a.cols_, b.rows_, "matrix product");
    Matrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out.data_[i * b.cols_ + j] += aik * bkj;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("linear map must be square");
}

LinearMap LinearMap::from_flat(const Vector& flat, std::size_t dim) {
    require_size(flat.size(), dim * dim, "LinearMap::from_flat");
    LinearMap out(dim, flat.field());
    for (std::size_t b = 0; b < dim; ++b) {
        for (std::size_t a = 0; a < dim; ++a) out.m_.set(a, b, flat[a + dim * b]);
    }
    return out;
}

Vector LinearMap::flatten() const {
    const std::size_t d = dim();
    std::vector<GaussianRational> out(d * d);
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t a = 0; a < d; ++a) out[a + d * b] = m_(a, b);
    }
    return {field(), std::move(out)};
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
    require_same_field(field(), o.field(), "map add");
    require_size(dim(), o.dim(), "map add");
    for (std::size_t a = 0; a < dim(); ++a) {
        for (std::size_t b = 0; b < dim(); ++b) {
            if (!o(a, b).is_zero()) m_.set(a, b, m_(a, b) + o(a, b));
        }
    }
    return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
    require_same_field(field(), o.field(), "map sub");
    require_size(dim(), o.dim(), "map sub");
    for (std::size_t a = 0; a < dim(); ++a) {
        for (std::size_t b = 0; b < dim(); ++b) {
            if (!o(a, b).is_zero()) m_.set(a, b, m_(a, b) - o(a, b));
        }
    }
    return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& s) {
    require_same_field(field(), s.field(), "map scale");
    for (std::size_t a = 0; a < dim(); ++a) {
        for (std::size_t b = 0; b < dim(); ++b) {
            if (!m_(a, b).is_zero()) m_.set(a, b, m_(a, b) * s.value());
        }
    }
    return *this;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over Z[i]

namespace {

struct GaussInt {
    mpz_class re;
    mpz_class im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

using IntRow = std::vector<GaussInt>;

// Scale a Q(i) row by the lcm of all denominators so every entry is in Z[i].
IntRow to_integer_row(const Matrix& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& v = m(r, c);
        if (!v.re().is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().raw().get_den_mpz_t());
        if (!v.im().is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().raw().get_den_mpz_t());
    }
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& v = m(r, c);
        if (!v.re().is_zero()) {
            row[c].re = l / v.re().raw().get_den();
            row[c].re *= v.re().raw().get_num();
        }
        if (!v.im().is_zero()) {
            row[c].im = l / v.im().raw().get_den();
            row[c].im *= v.im().raw().get_num();
        }
    }
    return row;
}

// q <- q / d, exact in Z[i].
void divide_exact(GaussInt& q, const GaussInt& d, mpz_class& t1, mpz_class& t2) {
    if (sgn(d.im) == 0) {
        if (sgn(q.re) != 0) mpz_divexact(q.re.get_mpz_t(), q.re.get_mpz_t(), d.re.get_mpz_t());
        if (sgn(q.im) != 0) mpz_divexact(q.im.get_mpz_t(), q.im.get_mpz_t(), d.re.get_mpz_t());
        return;
    }
    // q * conj(d) / |d|^2
    const mpz_class norm = d.re * d.re + d.im * d.im;
    t1 = q.re * d.re + q.im * d.im;
    t2 = q.im * d.re - q.re * d.im;
    mpz_divexact(q.re.get_mpz_t(), t1.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), t2.get_mpz_t(), norm.get_mpz_t());
}

// Bareiss step: target <- (p * target - a * source) / prev on columns > c,
// where p = source[c] and a = target[c]. Entries stay minors of the input.
void eliminate(IntRow& target, const IntRow& source, std::size_t c, const GaussInt& prev) {
    const GaussInt p = source[c];
    const GaussInt a = target[c];
    const bool real = sgn(p.im) == 0 && sgn(a.im) == 0;
    const bool unit = sgn(prev.im) == 0 && prev.re == 1;
    mpz_class t1, t2;
    for (std::size_t j = c + 1; j < target.size(); ++j) {
        GaussInt& x = target[j];
        const GaussInt& s = source[j];
        const bool sz = a.is_zero() || s.is_zero();
        if (x.is_zero() && sz) continue;
        if (real && sgn(x.im) == 0 && sgn(s.im) == 0) {
            x.re *= p.re;
            if (!sz) {
                t1 = a.re * s.re;
                x.re -= t1;
            }
        } else {
            mpz_class re = p.re * x.re - p.im * x.im;
            mpz_class im = p.re * x.im + p.im * x.re;
            if (!sz) {
                re -= a.re * s.re - a.im * s.im;
                im -= a.re * s.im + a.im * s.re;
            }
            x.re = std::move(re);
            x.im = std::move(im);
        }
        if (!unit) divide_exact(x, prev, t1, t2);
    }
    target[c] = GaussInt{};
}

}  // namespace

Echelon rref(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<IntRow> work;
    work.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) work.push_back(to_integer_row(m, r));

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    GaussInt prev{1, 0};
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = next; r < rows; ++r) {
            if (!work[r][c].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(work[next], work[piv]);
        for (std::size_t r = next + 1; r < rows; ++r) eliminate(work[r], work[next], c, prev);
        prev = work[next][c];
        pivots.push_back(c);
        ++next;
    }

    // Normalization pass over Q(i).
    const std::size_t rank = pivots.size();
    std::vector<std::vector<GaussianRational>> red(rank, std::vector<GaussianRational>(cols));
    for (std::size_t k = 0; k < rank; ++k) {
        const GaussInt& p = work[k][pivots[k]];
        const GaussianRational pinv =
            GaussianRational(Rational(mpq_class(p.re)), Rational(mpq_class(p.im))).inv();
        for (std::size_t c = pivots[k]; c < cols; ++c) {
            const GaussInt& e = work[k][c];
            if (e.is_zero()) continue;
            red[k][c] = GaussianRational(Rational(mpq_class(e.re)), Rational(mpq_class(e.im))) * pinv;
        }
    }
    for (std::size_t k = rank; k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (red[i][pc].is_zero()) continue;
            const GaussianRational f = red[i][pc];
            for (std::size_t c = pc; c < cols; ++c) {
                if (!red[k][c].is_zero()) red[i][c].sub_mul(f, red[k][c]);
            }
        }
    }

    Echelon out{Matrix(rows, cols, m.field()), std::move(pivots)};
    for (std::size_t k = 0; k < rank; ++k) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!red[k][c].is_zero()) out.reduced.set(k, c, std::move(red[k][c]));
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

// ---------------------------------------------------------------------------
// RowEchelon

Vector RowEchelon::reduce(Vector v) const {
    require_same_field(field_, v.field(), "RowEchelon::reduce");
    require_size(v.size(), cols_, "RowEchelon::reduce");
    std::vector<GaussianRational> d = v.data();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t pc = pivots_[k];
        if (d[pc].is_zero()) continue;
        const GaussianRational f = d[pc];
        const auto& row = rows_[k].data();
        for (std::size_t c = pc; c < cols_; ++c) {
            if (!row[c].is_zero()) d[c].sub_mul(f, row[c]);
        }
    }
    return {field_, std::move(d)};
}

bool RowEchelon::insert(Vector v) {
    Vector r = reduce(std::move(v));
    std::size_t pc = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!r[c].is_zero()) {
            pc = c;
            break;
        }
    }
    if (pc == cols_) return false;
    std::vector<GaussianRational> d = r.data();
    const GaussianRational inv = d[pc].inv();
    for (std::size_t c = pc; c < cols_; ++c) {
        if (!d[c].is_zero()) d[c] *= inv;
    }
    // Clear the new pivot column from the existing rows.
    for (auto& row : rows_) {
        if (row[pc].is_zero()) continue;
        std::vector<GaussianRational> rd = row.data();
        const GaussianRational f = rd[pc];
        for (std::size_t c = pc; c < cols_; ++c) {
            if (!d[c].is_zero()) rd[c].sub_mul(f, d[c]);
        }
        row = Vector(field_, std::move(rd));
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pc);
    rows_.insert(rows_.begin() + pos, Vector(field_, std::move(d)));
    return true;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient, FieldTag field) {
    Subspace s;
    s.basis_ = Matrix(0, ambient, field);
    return s;
}

Subspace Subspace::full(std::size_t ambient, FieldTag field) {
    Subspace s;
    s.basis_ = Matrix::identity(ambient, field);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(const Matrix& m) {
    Echelon e = rref(m);
    Subspace s;
    s.basis_ = Matrix(e.rank(), m.cols(), m.field());
    for (std::size_t k = 0; k < e.rank(); ++k) {
        for (std::size_t c = e.pivots[k]; c < m.cols(); ++c) {
            if (!e.reduced(k, c).is_zero()) s.basis_.set(k, c, e.reduced(k, c));
        }
    }
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient, FieldTag field) {
    return span(Matrix::from_rows(vectors, ambient, field));
}

std::optional<Vector> Subspace::member(const Vector& v) const {
    require_same_field(field(), v.field(), "Subspace::member");
    require_size(v.size(), ambient_dim(), "Subspace::member");
    std::vector<GaussianRational> rem = v.data();
    std::vector<GaussianRational> coords(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        const std::size_t pc = pivots_[k];
        if (rem[pc].is_zero()) continue;
        coords[k] = rem[pc];
        for (std::size_t c = pc; c < ambient_dim(); ++c) {
            if (!basis_(k, c).is_zero()) rem[c].sub_mul(coords[k], basis_(k, c));
        }
    }
    for (const auto& x : rem) {
        if (!x.is_zero()) return std::nullopt;
    }
    return Vector(field(), std::move(coords));
}

bool Subspace::contains(const Subspace& other) const {
    require_same_field(field(), other.field(), "Subspace::contains");
    require_size(ambient_dim(), other.ambient_dim(), "Subspace::contains");
    for (std::size_t k = 0; k < other.dim(); ++k) {
        if (!contains(other.basis_vector(k))) return false;
    }
    return true;
}

Subspace Subspace::embed() const {
    Subspace s = *this;
    s.basis_ = basis_.embed();
    return s;
}

Subspace nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, m.field());
        v.set(f, GaussianRational(1));
        for (std::size_t k = 0; k < e.rank(); ++k) {
            const auto& x = e.reduced(k, f);
            if (!x.is_zero()) v.set(e.pivots[k], -x);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, n, m.field());
}

std::pair<Subspace, Subspace> zassenhaus(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field(), "zassenhaus");
    require_size(a.ambient_dim(), b.ambient_dim(), "zassenhaus");
    const std::size_t n = a.ambient_dim();
    Matrix z(a.dim() + b.dim(), 2 * n, a.field());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a.basis()(k, c).is_zero()) continue;
            z.set(k, c, a.basis()(k, c));
            z.set(k, n + c, a.basis()(k, c));
        }
    }
    for (std::size_t k = 0; k < b.dim(); ++k) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!b.basis()(k, c).is_zero()) z.set(a.dim() + k, c, b.basis()(k, c));
        }
    }
    const Echelon e = rref(z);
    std::vector<Vector> sum_rows;
    std::vector<Vector> meet_rows;
    for (std::size_t k = 0; k < e.rank(); ++k) {
        std::vector<GaussianRational> left(n), right(n);
        for (std::size_t c = 0; c < n; ++c) {
            left[c] = e.reduced(k, c);
            right[c] = e.reduced(k, n + c);
        }
        if (e.pivots[k] < n) {
            sum_rows.emplace_back(a.field(), std::move(left));
        } else {
            meet_rows.emplace_back(a.field(), std::move(right));
        }
    }
    return {Subspace::span(sum_rows, n, a.field()), Subspace::span(meet_rows, n, a.field())};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) { return zassenhaus(a, b).first; }

Subspace subspace_intersect(const Subspace& a, const Subspace& b) { return zassenhaus(a, b).second; }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    require_same_field(a.field(), b.field(), "solve");
    require_size(a.rows(), b.size(), "solve");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a(r, c).is_zero()) aug.set(r, c, a(r, c));
        }
        if (!b[r].is_zero()) aug.set(r, a.cols(), b[r]);
    }
    const Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols(), a.field());
    for (std::size_t k = 0; k < e.rank(); ++k) {
        x.set(e.pivots[k], e.reduced(k, a.cols()));
    }
    return x;
}

}  // namespace lieloc::linalg
