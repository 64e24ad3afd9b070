#include "bihom/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace bihom {

bool is_small_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::gf(int p) {
    if (p < 2 || p > 257 || !is_small_prime(p))
        throw ValidationError("field modulus must be a prime in [2, 257], got " + std::to_string(p));
    return FieldDescriptor(p);
}

std::string FieldDescriptor::str() const {
    return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    if (text == "QQ") return rationals();
    if (text.starts_with("GF(") && text.ends_with(")")) {
        std::string body(text.substr(3, text.size() - 4));
        if (!body.empty() && std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); }))
            return gf(std::stoi(body));
    }
    throw ParseError("unknown field descriptor '" + std::string(text) + "' (expected QQ or GF(p))");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view text) {
    std::string s(trim(text));
    if (s.empty()) throw ParseError("empty integer literal");
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad integer literal '" + s + "'");
    }
}

long reduce_mod(const mpz_class& v, int p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

long pf_inverse(long v, int p) {
    // Fermat: v^(p-2) mod p.
    long result = 1, base = v % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

}  // namespace

Scalar Scalar::zero(const FieldDescriptor& f) { return of_int(0, f); }

Scalar Scalar::one(const FieldDescriptor& f) { return of_int(1, f); }

Scalar Scalar::of_int(long v, const FieldDescriptor& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field())
        s.pf_ = ((v % f.modulus()) + f.modulus()) % f.modulus();
    else
        s.q_ = v;
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::gf(long v, int p) { return of_int(v, FieldDescriptor::gf(p)); }

bool Scalar::is_zero() const { return field_.is_prime_field() ? pf_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime_field() ? pf_ == 1 : q_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.pf_ = (pf_ + o.pf_) % field_.modulus();
    else
        r.q_ = q_ + o.q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.pf_ = pf_ * o.pf_ % field_.modulus();
    else
        r.q_ = q_ * o.q_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.pf_ = (field_.modulus() - pf_) % field_.modulus();
    else
        r.q_ = -q_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.str());
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.pf_ = pf_inverse(pf_, field_.modulus());
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? pf_ == o.pf_ : q_ == o.q_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field())
        return std::to_string(pf_) + " mod " + std::to_string(field_.modulus());
    return q_.get_str();
}

long Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatchError("residue() on a rational scalar");
    return pf_;
}

const mpq_class& Scalar::rational_value() const {
    if (field_.is_prime_field()) throw FieldMismatchError("rational_value() on a prime-field scalar");
    return q_;
}

Scalar Scalar::parse(std::string_view text, const FieldDescriptor& f) {
    std::string_view body = trim(text);
    auto mod_pos = body.find("mod");
    if (mod_pos != std::string_view::npos) {
        if (!f.is_prime_field())
            throw ParseError("prime-field literal '" + std::string(body) + "' in a " + f.str() + " document");
        mpz_class v = parse_integer(body.substr(0, mod_pos));
        mpz_class p = parse_integer(body.substr(mod_pos + 3));
        if (p != f.modulus())
            throw ParseError("literal modulus " + p.get_str() + " does not match field " + f.str());
        Scalar s;
        s.field_ = f;
        s.pf_ = reduce_mod(v, f.modulus());
        return s;
    }
    auto slash = body.find('/');
    if (slash != std::string_view::npos) {
        if (f.is_prime_field())
            throw ParseError("fraction literal '" + std::string(body) + "' in a " + f.str() + " document");
        mpz_class num = parse_integer(body.substr(0, slash));
        mpz_class den = parse_integer(body.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(body) + "'");
        return rational(num, den);
    }
    mpz_class v = parse_integer(body);
    if (f.is_prime_field()) {
        Scalar s;
        s.field_ = f;
        s.pf_ = reduce_mod(v, f.modulus());
        return s;
    }
    return rational(v, 1);
}

}  // namespace bihom
