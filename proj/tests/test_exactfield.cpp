#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridge.hpp"
#include "lieloc/exactfield.hpp"

using namespace lieloc;
using namespace lieloc::exactfield;

namespace {

Rational q(long p, long d) { return {BigInt(p), BigInt(d)}; }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
    CHECK(q(4, -6).to_string() == "-2/3");
    CHECK(q(0, 7).to_string() == "0");
    CHECK(q(0, 7).den() == BigInt(1));
    CHECK(q(2, 3).inv() == q(3, 2));
    CHECK(Rational(1).inv() == Rational(1));
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(q(1, 0), DivisionByZero);
}

TEST_CASE("gaussian rationals") {
    const auto i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational(2, 1).inv() == GaussianRational(q(2, 5), q(-1, 5)));
    CHECK(GaussianRational(q(3, 2), q(-1, 4)).conj() == GaussianRational(q(3, 2), q(1, 4)));
    CHECK(GaussianRational(3, 4).norm() == Rational(25));
    CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZero);
}

TEST_CASE("scalar syntax parses and prints") {
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("3/4") == GaussianRational(q(3, 4)));
    CHECK(GaussianRational::parse("1/2+3/5*i") == GaussianRational(q(1, 2), q(3, 5)));
    CHECK(GaussianRational::parse("-3*i") == GaussianRational(0, -3));
    CHECK(GaussianRational::parse("2-i") == GaussianRational(2, -1));
    CHECK(GaussianRational::parse("0/1+1/1*i") == GaussianRational::i());
    CHECK_THROWS_AS(GaussianRational::parse(""), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("x"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), ParseError);
    CHECK(GaussianRational::i().to_string() == "i");
    CHECK(GaussianRational(q(1, 2), q(-3, 5)).to_string() == "1/2-3/5*i");
}

TEST_CASE("scalars check their field") {
    const auto a = Scalar::rational(q(1, 2));
    const auto b = Scalar::gaussian(GaussianRational::i());
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    CHECK_THROWS_AS(Scalar(FieldTag::Q, GaussianRational::i()), FieldMismatch);
    CHECK(a.embed() + b == Scalar::gaussian(GaussianRational(q(1, 2), 1)));
    CHECK_THROWS_AS(Scalar::parse("i", FieldTag::Q), ParseError);
    CHECK((Scalar::gaussian(GaussianRational(2, 1)).inv()).value() == GaussianRational(q(2, 5), q(-1, 5)));
    CHECK_THROWS_AS(Scalar::rational(0).inv(), DivisionByZero);
    CHECK(parse_field("Qi") == FieldTag::Qi);
    CHECK_THROWS_AS(parse_field("R"), ParseError);
}

TEST_CASE("field axioms on random triples") {
    oracle::Gen g(101);
    for (int t = 0; t < 300; ++t) {
        const auto a = bridge::scalar(g, FieldTag::Qi), b = bridge::scalar(g, FieldTag::Qi),
                   c = bridge::scalar(g, FieldTag::Qi);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GaussianRational(0) == a);
        CHECK(a * GaussianRational(1) == a);
        CHECK(a + (-a) == GaussianRational(0));
        if (!a.is_zero()) CHECK(a * a.inv() == GaussianRational(1));
        CHECK((a * a.conj()) == GaussianRational(a.norm()));
        CHECK((a.norm().is_zero()) == a.is_zero());
        // printing and parsing round-trip
        CHECK(GaussianRational::parse(a.to_string()) == a);
        // agrees with the oracle pair arithmetic
        const auto o = bridge::to_cq(a) * bridge::to_cq(b) + bridge::to_cq(c);
        CHECK(bridge::to_cq(a * b + c) == o);
    }
}

TEST_CASE("embedding of Q is an injective ring homomorphism") {
    oracle::Gen g(102);
    for (int t = 0; t < 200; ++t) {
        const auto a = bridge::rational(g), b = bridge::rational(g);
        CHECK(embed_rational(a + b) == embed_rational(a) + embed_rational(b));
        CHECK(embed_rational(a * b) == embed_rational(a) * embed_rational(b));
        CHECK((embed_rational(a) == embed_rational(b)) == (a == b));
        CHECK(embed_rational(a).re() == a);
        CHECK(embed_rational(a).im().is_zero());
    }
    CHECK(embed_rational(0).is_zero());
}

TEST_CASE("big integers") {
    const auto a = BigInt::parse("123456789012345678901234567890");
    CHECK((a * a).to_string() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), DivisionByZero);
    CHECK_THROWS_AS(BigInt::parse("12a"), ParseError);
}
