#pragma once

// Exact field arithmetic over QQ (arbitrary-precision rationals) and GF(p)
// for prime p <= 257. Every scalar carries its field; combining scalars from
// different fields throws FieldMismatchError. There is no floating point
// anywhere in this library.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bihom/errors.hpp"

namespace bihom {

class FieldDescriptor {
public:
    // Default-constructs the rationals.
    FieldDescriptor() = default;

    static FieldDescriptor rationals() { return FieldDescriptor{}; }
    // p must be prime, 2 <= p <= 257.
    static FieldDescriptor gf(int p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    // 0 for the rationals.
    int modulus() const { return p_; }

    // "QQ" or "GF(p)". parse() accepts exactly these forms.
    std::string str() const;
    static FieldDescriptor parse(std::string_view text);

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    explicit FieldDescriptor(int p) : p_(p) {}
    int p_ = 0;
};

bool is_small_prime(int p);

class Scalar {
public:
    // Default is rational zero; prefer the named constructors.
    Scalar() = default;

    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);
    static Scalar of_int(long v, const FieldDescriptor& f);
    // Rational num/den in lowest terms with positive denominator.
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar gf(long v, int p);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    // Multiplicative inverse; DivisionByZeroError on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Scalars from different fields are never equal.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical textual form: rationals as "num/den" (or "num" when the
    // denominator is 1), prime-field elements as "v mod p".
    std::string str() const;
    // Accepts the canonical forms plus a bare integer for prime fields.
    static Scalar parse(std::string_view text, const FieldDescriptor& f);

    // Prime-field value in [0, p); only valid on prime-field scalars.
    long residue() const;
    const mpq_class& rational_value() const;

private:
    void require_same_field(const Scalar& o) const;

    FieldDescriptor field_{};
    long pf_ = 0;      // prime-field residue, in [0, p)
    mpq_class q_ = 0;  // rational value, canonical
};

}  // namespace bihom
