#include "lieloc/exactfield.hpp"

#include <cctype>

namespace lieloc::exactfield {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BigInt

BigInt BigInt::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!is_digits(body)) throw ParseError("malformed integer '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

BigInt BigInt::abs() const {
    mpz_class r;
    mpz_abs(r.get_mpz_t(), v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DivisionByZero();
    mpz_class r;
    mpz_tdiv_q(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DivisionByZero();
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DivisionByZero();
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Rational Rational::parse(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt::parse(text), BigInt(1));
    const std::string_view den = std::string_view(text).substr(slash + 1);
    if (!is_digits(den)) throw ParseError("malformed rational '" + text + "'");
    const BigInt d = BigInt::parse(den);
    if (d.is_zero()) throw ParseError("zero denominator in '" + text + "'");
    return Rational(BigInt::parse(std::string_view(text).substr(0, slash)), d);
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::parse(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return GaussianRational(Rational::parse(text));

    // Split "re(+|-)im*i" at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re;
    std::string imag = text;
    if (split != std::string::npos) {
        re = Rational::parse(std::string_view(text).substr(0, split));
        imag = text.substr(split);
    }
    imag.pop_back();  // trailing 'i'
    Rational im;
    if (imag.empty() || imag == "+") {
        im = 1;
    } else if (imag == "-") {
        im = -1;
    } else {
        if (imag.back() != '*') throw ParseError("malformed imaginary part in '" + text + "'");
        imag.pop_back();
        im = Rational::parse(imag);
    }
    return {re, im};
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_real()) return GaussianRational(re_.inv());
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) {
        mpq_class t = a.re_.raw() * b.re_.raw();
        re_.raw_mut() -= t;
        return;
    }
    *this -= a * b;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    const Rational mag = im_.sign() < 0 ? -im_ : im_;
    imag = mag.is_one() ? "i" : mag.to_string() + "*i";
    if (re_.is_zero()) return im_.sign() < 0 ? "-" + imag : imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational embed_rational(const Rational& a) { return GaussianRational(a); }

// ---------------------------------------------------------------------------
// FieldTag / Scalar

std::string_view to_string(FieldTag f) { return f == FieldTag::Q ? "Q" : "Qi"; }

FieldTag parse_field(std::string_view text) {
    if (text == "Q") return FieldTag::Q;
    if (text == "Qi") return FieldTag::Qi;
    throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Qi)");
}

Scalar::Scalar(FieldTag field, GaussianRational value) : field_(field), value_(std::move(value)) {
    if (!belongs_to(value_, field_)) {
        throw FieldMismatch("non-real value " + value_.to_string() + " in field Q");
    }
}

Scalar Scalar::parse(std::string_view text, FieldTag field) {
    GaussianRational v = GaussianRational::parse(text);
    if (!belongs_to(v, field)) {
        throw ParseError("scalar '" + std::string(text) + "' is not in field Q");
    }
    return {field, std::move(v)};
}

Scalar Scalar::inv() const { return {field_, value_.inv()}; }

namespace {
void require_same(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) {
        throw FieldMismatch("scalar field mismatch: " + std::string(to_string(a.field())) + " vs " +
                            std::string(to_string(b.field())));
    }
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return {a.field_, a.value_ + b.value_};
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return {a.field_, a.value_ - b.value_};
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return {a.field_, a.value_ * b.value_};
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return {a.field_, a.value_ / b.value_};
}

}  // namespace lieloc::exactfield
