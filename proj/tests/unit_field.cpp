// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "ihopf/field.hpp"

using namespace ihopf;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class v(n, d);
    v.canonicalize();
    return v;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    switch (f.kind()) {
        case FieldKind::rational: return Scalar::from_rational(f, q(num(rng), den(rng)));
        case FieldKind::prime:
            return Scalar::from_int(f, num(rng) + 9);
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c(f.degree());
            for (auto& x : c) x = q(num(rng), den(rng));
            return Scalar::from_coeffs(f, std::move(c));
        }
    }
    return Scalar();
}

}  // namespace

TEST_CASE("field construction") {
    CHECK(FieldSpec::prime_field(5).prime() == 5);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::cyclotomic(0), DomainError);
    CHECK(FieldSpec::cyclotomic(8).degree() == 4);
    CHECK(FieldSpec::cyclotomic(1).degree() == 1);
    CHECK(FieldSpec::cyclotomic(2).degree() == 1);
    CHECK(FieldSpec::rationals() == FieldSpec::rationals());
    CHECK(FieldSpec::cyclotomic(8) == FieldSpec::cyclotomic(8));
    CHECK(FieldSpec::cyclotomic(8) != FieldSpec::cyclotomic(4));
    CHECK(FieldSpec::prime_field(5) != FieldSpec::prime_field(7));
}

TEST_CASE("cyclotomic polynomials by exact division") {
    // Phi_8 = x^4 + 1, obtained by dividing x^8 - 1 by Phi_1 Phi_2 Phi_4
    auto phi8 = cyclotomic_polynomial(8);
    CHECK(phi8 == std::vector<mpz_class>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(9) == 6);
}

TEST_CASE("scalar arithmetic basics") {
    auto Q = FieldSpec::rationals();
    // 1/2 + 1/3 = 5/6
    Scalar a = Scalar::from_rational(Q, q(1, 2));
    Scalar b = Scalar::from_rational(Q, q(1, 3));
    CHECK(scalar_arith(a, b, ArithOp::add) == Scalar::from_rational(Q, q(5, 6)));

    auto Q8 = FieldSpec::cyclotomic(8);
    Scalar z = root_of_unity(Q8, 1);
    // zeta_8^4 = -1
    CHECK(z * z * z * z == Scalar::from_int(Q8, -1));
    // (zeta_8 + zeta_8^7)^2 = 2
    Scalar w = z + root_of_unity(Q8, 7);
    CHECK(w * w == Scalar::from_int(Q8, 2));

    auto F5 = FieldSpec::prime_field(5);
    CHECK(Scalar::from_int(F5, 3) + Scalar::from_int(F5, 4) == Scalar::from_int(F5, 2));
    CHECK(Scalar::from_int(F5, 3) * Scalar::from_int(F5, 4) == Scalar::from_int(F5, 2));
    CHECK(Scalar::from_int(F5, 3) / Scalar::from_int(F5, 4) == Scalar::from_int(F5, 2));

    CHECK_THROWS_AS(a / Scalar::zero(Q), DomainError);
    CHECK_THROWS_AS(a + Scalar::one(F5), FieldMismatchError);
    CHECK_THROWS_AS((void)scalar_arith(z, z - z, ArithOp::div), DomainError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(7),
                               FieldSpec::cyclotomic(8), FieldSpec::cyclotomic(5)}) {
        for (int iter = 0; iter < 10000; ++iter) {
            Scalar a = random_scalar(f, rng);
            Scalar b = random_scalar(f, rng);
            Scalar c = random_scalar(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("canonical form idempotence") {
    std::mt19937_64 rng(7);
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(11), FieldSpec::cyclotomic(12)}) {
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = random_scalar(f, rng);
            Scalar b = a;
            b.renormalize();
            REQUIRE(a == b);
        }
    }
}

TEST_CASE("roots of unity") {
    auto Q2 = FieldSpec::cyclotomic(2);
    CHECK(root_of_unity(Q2, 1) == Scalar::from_int(Q2, -1));

    auto Q8 = FieldSpec::cyclotomic(8);
    Scalar i = root_of_unity(Q8, 2);
    CHECK(i * i == Scalar::from_int(Q8, -1));

    auto F5 = FieldSpec::prime_field(5);
    Scalar r = root_of_unity_of_order(F5, 4);
    CHECK(r == Scalar::from_int(F5, 2));  // 2^4 = 16 = 1 mod 5, 2^2 = 4 != 1
    CHECK(r.pow(4).is_one());
    CHECK(!r.pow(2).is_one());
    CHECK_THROWS_AS(root_of_unity_of_order(F5, 3), DomainError);
    CHECK_THROWS_AS(root_of_unity_of_order(FieldSpec::rationals(), 4), DomainError);

    // zeta_n has exact multiplicative order n in Q(zeta_n)
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
        auto f = FieldSpec::cyclotomic(n);
        Scalar z = root_of_unity(f, 1);
        Scalar acc = Scalar::one(f);
        for (unsigned k = 1; k < n; ++k) {
            acc *= z;
            REQUIRE(!acc.is_one());
        }
        acc *= z;
        REQUIRE(acc.is_one());
    }
}

TEST_CASE("square roots: the supported table") {
    auto Q = FieldSpec::rationals();
    CHECK(*scalar_sqrt(Scalar::from_int(Q, 4)) == Scalar::from_int(Q, 2));
    CHECK(!scalar_sqrt(Scalar::from_int(Q, 2)).has_value());
    CHECK(!scalar_sqrt(Scalar::from_int(Q, -4)).has_value());
    CHECK(*scalar_sqrt(Scalar::from_rational(Q, q(9, 4))) == Scalar::from_rational(Q, q(3, 2)));

    auto Q8 = FieldSpec::cyclotomic(8);
    // sqrt(-2) = zeta_8 - zeta_8^7, per the identity (zeta-zeta^7)^2 = -2
    Scalar m2 = Scalar::from_int(Q8, -2);
    auto r = scalar_sqrt(m2);
    REQUIRE(r.has_value());
    CHECK(*r * *r == m2);
    CHECK(*r == root_of_unity(Q8, 1) - root_of_unity(Q8, 7));

    Scalar two = Scalar::from_int(Q8, 2);
    auto r2 = scalar_sqrt(two);
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == two);

    // r * zeta^k with r a perfect square and k even
    Scalar v = Scalar::from_int(Q8, 9) * root_of_unity(Q8, 6);
    auto r3 = scalar_sqrt(v);
    REQUIRE(r3.has_value());
    CHECK(*r3 * *r3 == v);

    // -1 = zeta_4^2 has a root whenever 4 | n
    auto Q4 = FieldSpec::cyclotomic(4);
    auto r4 = scalar_sqrt(Scalar::from_int(Q4, -1));
    REQUIRE(r4.has_value());
    CHECK(*r4 * *r4 == Scalar::from_int(Q4, -1));

    auto F13 = FieldSpec::prime_field(13);
    auto r5 = scalar_sqrt(Scalar::from_int(F13, 10));
    REQUIRE(r5.has_value());
    CHECK(*r5 * *r5 == Scalar::from_int(F13, 10));
    CHECK(!scalar_sqrt(Scalar::from_int(F13, 5)).has_value());

    // prime fields: sqrt agrees with the Euler criterion for every residue
    for (std::uint64_t p : {3ull, 5ull, 13ull, 97ull, 193ull}) {
        auto Fp = FieldSpec::prime_field(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            Scalar s = Scalar::from_int(Fp, static_cast<long>(a));
            auto t = scalar_sqrt(s);
            bool is_residue = a == 0 || s.pow((p - 1) / 2).is_one();
            REQUIRE(t.has_value() == is_residue);
            if (t) REQUIRE(*t * *t == s);
        }
    }

    // every sqrt success squares back exactly (spec invariant), random sweep
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> small(-6, 6);
    for (int iter = 0; iter < 500; ++iter) {
        Scalar s = Scalar::from_rational(Q8, q(small(rng), 1 + std::abs(small(rng))));
        Scalar a = s * s * root_of_unity(Q8, 2 * (iter % 4));
        if (iter % 3 == 0) a *= Scalar::from_int(Q8, (iter % 2) ? 2 : -2);
        auto t = scalar_sqrt(a);
        REQUIRE(t.has_value());
        REQUIRE(*t * *t == a);
    }
}

TEST_CASE("scalar text round trip") {
    auto Q = FieldSpec::rationals();
    auto Q8 = FieldSpec::cyclotomic(8);
    auto F7 = FieldSpec::prime_field(7);
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        for (const FieldSpec& f : {Q, Q8, FieldSpec(F7)}) {
            Scalar a = random_scalar(f, rng);
            REQUIRE(Scalar::parse(f, a.to_text()) == a);
        }
    }
    CHECK(Scalar::parse(Q, "-3/4").to_text() == "-3/4");
    CHECK(Scalar::parse(Q, "2/4").to_text() == "1/2");  // canonicalized on read
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), DomainError);
    CHECK_THROWS_AS(Scalar::parse(Q, "a"), DomainError);
    CHECK_THROWS_AS(Scalar::parse(Q, "1 2"), DomainError);
    CHECK_THROWS_AS(Scalar::parse(F7, "9"), DomainError);
    CHECK_THROWS_AS(Scalar::parse(Q8, "[1, 2] @ zeta(8)"), DomainError);
    CHECK_THROWS_AS(Scalar::parse(Q8, "[1, 0, 0, 0] @ zeta(4)"), DomainError);
    CHECK(Scalar::parse(Q8, "[1, -1/2, 0, 3] @ zeta(8)").to_text() == "[1, -1/2, 0, 3] @ zeta(8)");
}
