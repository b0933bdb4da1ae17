// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ihopf/errors.hpp"

namespace ihopf {

enum class FieldKind { rational, prime, cyclotomic };

// Precomputed reduction data for Q(zeta_n): the n-th cyclotomic polynomial
// Phi_n and the coefficient rows of zeta^k mod Phi_n for k in
// [degree, 2*degree-2], which is everything a product of two reduced
// elements can spill into.
struct CyclotomicTable {
    unsigned order = 0;                            // n
    unsigned degree = 0;                           // phi(n) = deg Phi_n
    std::vector<mpz_class> modulus;                // Phi_n, monic, size degree+1
    std::vector<std::vector<mpq_class>> power_rows;  // zeta^(degree+r), r = 0..degree-2
};

// Euler totient and Phi_n with integer coefficients. Phi_n is computed the
// slow, certain way: divide x^n - 1 by Phi_d for every proper divisor d | n.
unsigned euler_phi(unsigned n);
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

bool is_prime_u64(std::uint64_t p);

class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(std::uint64_t p);  // throws DomainError unless p is prime
    static FieldSpec cyclotomic(unsigned n);        // throws DomainError if n == 0

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    bool is_prime() const { return kind_ == FieldKind::prime; }
    bool is_cyclotomic() const { return kind_ == FieldKind::cyclotomic; }

    std::uint64_t prime() const { return p_; }
    unsigned cyclotomic_order() const { return cyc_ ? cyc_->order : 0; }
    // Degree of the field over Q (1 for rationals; by convention also 1 for F_p).
    unsigned degree() const { return cyc_ ? cyc_->degree : 1; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }
    const CyclotomicTable& table() const;

    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;  // "rational", "prime 5", "cyclotomic 8"

private:
    FieldSpec() = default;
    FieldKind kind_ = FieldKind::rational;
    std::uint64_t p_ = 0;
    std::shared_ptr<const CyclotomicTable> cyc_;
};

// An exact field element. Immutable value type; every operation is pure.
// Canonical representation invariants:
//   rational    reduced fraction with positive denominator (GMP canonical)
//   prime       residue in [0, p)
//   cyclotomic  coefficient vector of length phi(n), entries reduced rationals
// Equal values always have identical representations.
class Scalar {
public:
    Scalar() : spec_(FieldSpec::rationals()), repr_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(const FieldSpec& f, const mpq_class& v);
    // Coefficient vector of length phi(n) in powers of zeta_n (already reduced
    // representatives; entries are canonicalized).
    static Scalar from_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs);

    const FieldSpec& field() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the element lies in the prime subfield Q (constant coefficient
    // vector for cyclotomic elements); always true for rational/prime kinds.
    bool is_rational_constant() const;
    mpq_class rational_value() const;  // requires is_rational_constant()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DomainError on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Text encoding used by the serialization format:
    //   rational    "a/b" or "a"
    //   prime       decimal residue
    //   cyclotomic  "[c0, c1, ..., c_{phi(n)-1}] @ zeta(n)"
    std::string to_text() const;
    static Scalar parse(const FieldSpec& f, std::string_view text);

    // Raw representation accessors (used by sqrt, serialization, tests).
    const mpq_class& rat_repr() const { return std::get<mpq_class>(repr_); }
    std::uint64_t prime_repr() const { return std::get<std::uint64_t>(repr_); }
    const std::vector<mpq_class>& cyc_repr() const {
        return std::get<std::vector<mpq_class>>(repr_);
    }

    // Re-canonicalizes the representation in place (used by tests to check
    // idempotence of the canonical form).
    void renormalize();

private:
    Scalar(FieldSpec f, mpq_class q) : spec_(std::move(f)), repr_(std::move(q)) {}
    Scalar(FieldSpec f, std::uint64_t r) : spec_(std::move(f)), repr_(r) {}
    Scalar(FieldSpec f, std::vector<mpq_class> c) : spec_(std::move(f)), repr_(std::move(c)) {}

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>> repr_;
};

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// zeta_n^k in Q(zeta_n); k may be any integer (taken mod n).
Scalar root_of_unity(const FieldSpec& f, long k);

// The k-th power of a fixed element of exact multiplicative order n.
//   cyclotomic m : requires n | m (uses zeta_m^{m/n})
//   rational     : requires n in {1, 2}
//   prime p      : requires n | p - 1; the base is the smallest residue of order n
// The result has multiplicative order n / gcd(n, k).
Scalar root_of_unity_of_order(const FieldSpec& f, unsigned n, long k = 1);

// Deliberately partial square root: rational perfect squares; r * zeta_n^k
// with r a rational perfect square and k even; (+-2) * s^2 in any Q(zeta_m)
// with 8 | m via sqrt(2) = zeta_8 + zeta_8^-1, sqrt(-2) = zeta_8 - zeta_8^-1;
// and square residues in F_p. Returns nullopt when the value is outside the
// table -- that is a normal outcome, not an error.
std::optional<Scalar> scalar_sqrt(const Scalar& a);

}  // namespace ihopf
