#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bihom/scalar.hpp"
#include "bihom/search.hpp"

using namespace bihom;

namespace {

const FieldDescriptor QQ = FieldDescriptor::rationals();
const FieldDescriptor GF3 = FieldDescriptor::gf(3);

Scalar q(long num, long den) { return Scalar::rational(num, den); }

// Random scalar from a splitmix stream; small numerators/denominators over QQ.
Scalar random_scalar(SplitMix64& rng, const FieldDescriptor& f) {
    if (f.is_prime_field()) return Scalar::of_int(static_cast<long>(rng.next_below(257)), f);
    long num = static_cast<long>(rng.next_below(21)) - 10;
    long den = static_cast<long>(rng.next_below(9)) + 1;
    return Scalar::rational(num, den);
}

}  // namespace

TEST_CASE("field descriptors") {
    CHECK(QQ.str() == "QQ");
    CHECK(FieldDescriptor::gf(257).str() == "GF(257)");
    CHECK(FieldDescriptor::parse("GF(7)") == FieldDescriptor::gf(7));
    CHECK(FieldDescriptor::parse("QQ") == QQ);
    CHECK_THROWS_AS(FieldDescriptor::gf(4), ValidationError);
    CHECK_THROWS_AS(FieldDescriptor::gf(263), ValidationError);
    CHECK_THROWS_AS(FieldDescriptor::gf(1), ValidationError);
    CHECK_THROWS_AS(FieldDescriptor::parse("GF(x)"), ParseError);
}

TEST_CASE("rational addition: 1/2 + 1/3 = 5/6") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
}

TEST_CASE("additive identity: 0 + x = x") {
    Scalar x = q(-7, 4);
    CHECK(Scalar::zero(QQ) + x == x);
    Scalar y = Scalar::gf(2, 5);
    CHECK(Scalar::zero(FieldDescriptor::gf(5)) + y == y);
}

TEST_CASE("GF(3): 2 + 2 = 1") {
    CHECK(Scalar::gf(2, 3) + Scalar::gf(2, 3) == Scalar::gf(1, 3));
}

TEST_CASE("rational product: 2/3 * 3/4 = 1/2") {
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
}

TEST_CASE("multiplicative identity: 1 * x = x") {
    Scalar x = q(9, 11);
    CHECK(Scalar::one(QQ) * x == x);
}

TEST_CASE("GF(5): 3 * 4 = 2") {
    CHECK(Scalar::gf(3, 5) * Scalar::gf(4, 5) == Scalar::gf(2, 5));
}

TEST_CASE("inverses") {
    CHECK(q(2, 3).inverse() == q(3, 2));
    CHECK(Scalar::gf(3, 7).inverse() == Scalar::gf(5, 7));
    CHECK(Scalar::one(QQ).inverse() == Scalar::one(QQ));
    CHECK_THROWS_AS(Scalar::zero(QQ).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::zero(GF3).inverse(), DivisionByZeroError);
}

TEST_CASE("field mismatch is an error") {
    CHECK_THROWS_AS(Scalar::one(QQ) + Scalar::one(GF3), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::gf(1, 3) * Scalar::gf(1, 5), FieldMismatchError);
    CHECK(Scalar::one(QQ) != Scalar::one(GF3));
}

TEST_CASE("normalization invariants") {
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(3, -6).str() == "-1/2");
    CHECK(Scalar::rational(-4, 2).str() == "-2");
    CHECK(Scalar::gf(-1, 7).str() == "6 mod 7");
    CHECK_THROWS_AS(Scalar::rational(1, 0), DivisionByZeroError);
}

TEST_CASE("field axioms on random triples, exactly") {
    for (const auto& f : {QQ, GF3, FieldDescriptor::gf(2), FieldDescriptor::gf(257)}) {
        SplitMix64 rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("textual round trip") {
    SplitMix64 rng(7);
    for (const auto& f : {QQ, GF3, FieldDescriptor::gf(251)}) {
        for (int trial = 0; trial < 100; ++trial) {
            Scalar s = random_scalar(rng, f);
            CHECK(Scalar::parse(s.str(), f) == s);
        }
    }
    CHECK(Scalar::parse("  5/6 ", QQ) == q(5, 6));
    CHECK(Scalar::parse("-3", QQ) == q(-3, 1));
    CHECK(Scalar::parse("7", GF3) == Scalar::gf(1, 3));
    CHECK(Scalar::parse("2 mod 3", GF3) == Scalar::gf(2, 3));
    CHECK_THROWS_AS(Scalar::parse("1/0", QQ), ParseError);
    CHECK_THROWS_AS(Scalar::parse("2 mod 5", GF3), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2", GF3), ParseError);
    CHECK_THROWS_AS(Scalar::parse("2 mod 3", QQ), ParseError);
    CHECK_THROWS_AS(Scalar::parse("zebra", QQ), ParseError);
}

TEST_CASE("arbitrary precision survives deep products") {
    Scalar s = Scalar::one(QQ);
    for (int i = 1; i <= 40; ++i) s *= Scalar::rational(1000003, i);
    for (int i = 1; i <= 40; ++i) s *= Scalar::rational(i, 1000003);
    CHECK(s == Scalar::one(QQ));
}
