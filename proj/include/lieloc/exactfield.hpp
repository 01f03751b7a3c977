#pragma once

// Exact scalars: arbitrary precision integers, rationals and Gaussian
// rationals Q(i), plus the field-tagged Scalar used at module boundaries.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lieloc/errors.hpp"

namespace lieloc::exactfield {

class BigInt {
public:
    BigInt() = default;
    BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Decimal literal with optional sign. Throws ParseError.
    static BigInt parse(std::string_view text);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
    /// Truncating division. Throws DivisionByZero.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    static BigInt gcd(const BigInt& a, const BigInt& b);
    std::string to_string() const { return v_.get_str(); }
    const mpz_class& raw() const { return v_; }

private:
    mpz_class v_;
};

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional leading sign. Throws ParseError.
    static Rational parse(std::string_view text);

    BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inv() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;
    const mpq_class& raw() const { return v_; }
    mpq_class& raw_mut() { return v_; }

private:
    mpq_class v_;
};

/// a + b*i with rational a, b.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Accepts the textual scalar syntax: "p/q", "p/q+r/s*i", "i", "-3*i", ...
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_.is_one(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |a+bi|^2 = a^2 + b^2.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inv() const;
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    /// this -= a * b, without temporaries when both factors are real.
    void sub_mul(const GaussianRational& a, const GaussianRational& b);

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

GaussianRational embed_rational(const Rational& a);

enum class FieldTag { Q, Qi };

std::string_view to_string(FieldTag f);
/// "Q" or "Qi". Throws ParseError.
FieldTag parse_field(std::string_view text);

/// True when `v` is an element of the field `f` (real for Q).
inline bool belongs_to(const GaussianRational& v, FieldTag f) {
    return f == FieldTag::Qi || v.is_real();
}

/// Field element tagged with the field it lives in. Arithmetic between
/// scalars of different fields throws FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(FieldTag field, GaussianRational value);
    static Scalar rational(Rational v) { return {FieldTag::Q, GaussianRational(std::move(v))}; }
    static Scalar gaussian(GaussianRational v) { return {FieldTag::Qi, std::move(v)}; }
    static Scalar parse(std::string_view text, FieldTag field);

    FieldTag field() const { return field_; }
    const GaussianRational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    Scalar inv() const;
    Scalar operator-() const { return {field_, -value_}; }
    /// Q -> Q(i); identity on Q(i) scalars.
    Scalar embed() const { return {FieldTag::Qi, value_}; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    std::string to_string() const { return value_.to_string(); }

private:
    FieldTag field_ = FieldTag::Q;
    GaussianRational value_;
};

}  // namespace lieloc::exactfield
