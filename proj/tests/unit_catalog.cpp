// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "helpers.hpp"
#include "ihopf/axioms.hpp"
#include "ihopf/base_change.hpp"
#include "ihopf/catalog.hpp"
#include "ihopf/duality.hpp"
#include "ihopf/ihopf.hpp"

using namespace ihopf;
using namespace ihopf::testing;

namespace {

// Gaussian binomial via the q-Pascal recurrence, an oracle independent of
// the coproduct expansion inside taft()
Scalar q_binomial(const Scalar& q, unsigned n, unsigned k) {
    const FieldSpec& f = q.field();
    if (k > n) return Scalar::zero(f);
    std::vector<std::vector<Scalar>> pascal(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        pascal[r].assign(r + 1, Scalar::zero(f));
        pascal[r][0] = Scalar::one(f);
        pascal[r][r] = Scalar::one(f);
        for (unsigned c = 1; c < r; ++c)
            pascal[r][c] = pascal[r - 1][c - 1] + q.pow(c) * pascal[r - 1][c];
    }
    return pascal[n][k];
}

}  // namespace

TEST_CASE("group algebras") {
    auto Q = FieldSpec::rationals();
    auto Z2 = group_algebra(AbelianGroupSpec{{2}}, Q);
    CHECK(Z2.dim == 2);
    // g^2 = 1
    CHECK(multiply(Z2, basis_element(Q, 2, 1), basis_element(Q, 2, 1)) ==
          basis_element(Q, 2, 0));
    CHECK(all_hold(verify_all(Z2)));

    auto Q8 = FieldSpec::cyclotomic(8);
    auto Z4 = group_algebra(AbelianGroupSpec{{4}}, Q8);
    CHECK(Z4.dim == 4);
    CHECK(all_hold(verify_all(Z4)));

    auto klein = group_algebra(AbelianGroupSpec{{2, 2}}, Q);
    CHECK(klein.dim == 4);
    CHECK(all_hold(verify_all(klein)));
    // every non-identity element squares to the identity
    for (unsigned i = 0; i < 4; ++i)
        CHECK(multiply(klein, basis_element(Q, 4, i), basis_element(Q, 4, i)) ==
              basis_element(Q, 4, 0));

    auto F3 = FieldSpec::prime_field(3);
    CHECK_THROWS_AS(group_algebra(AbelianGroupSpec{{6}}, F3), DomainError);
}

TEST_CASE("group self-duality witnesses") {
    // Z/2 over Q: the witness is [[1,1],[1,-1]]
    auto Q = FieldSpec::rationals();
    auto W2 = group_selfdual_witness(AbelianGroupSpec{{2}}, Q);
    CHECK(W2.S.at(0, 0) == Scalar::one(Q));
    CHECK(W2.S.at(0, 1) == Scalar::one(Q));
    CHECK(W2.S.at(1, 0) == Scalar::one(Q));
    CHECK(W2.S.at(1, 1) == Scalar::from_int(Q, -1));

    // symmetric and passing both checks across several groups and fields
    struct Case {
        AbelianGroupSpec g;
        FieldSpec f;
    };
    std::vector<Case> cases{
        {AbelianGroupSpec{{1}}, Q},
        {AbelianGroupSpec{{2}}, Q},
        {AbelianGroupSpec{{3}}, FieldSpec::cyclotomic(3)},
        {AbelianGroupSpec{{4}}, FieldSpec::cyclotomic(4)},
        {AbelianGroupSpec{{5}}, FieldSpec::cyclotomic(5)},
        {AbelianGroupSpec{{2, 2}}, Q},
        {AbelianGroupSpec{{2, 4}}, FieldSpec::cyclotomic(4)},
        {AbelianGroupSpec{{4}}, FieldSpec::prime_field(5)},
    };
    for (const auto& c : cases) {
        auto P = group_algebra(c.g, c.f);
        auto W = group_selfdual_witness(c.g, c.f);
        CHECK(is_symmetric(W));
        CHECK(verify_selfdual_algebra(P, W).holds);
        CHECK(verify_selfdual_coalgebra(P, W).holds);
    }
    // Z/1 has the 1x1 witness (1)
    auto W1 = group_selfdual_witness(AbelianGroupSpec{{1}}, Q);
    CHECK(W1.S.at(0, 0) == Scalar::one(Q));

    // missing roots of unity
    CHECK_THROWS_AS(group_selfdual_witness(AbelianGroupSpec{{3}}, Q), DomainError);
}

TEST_CASE("the dim-4 Taft algebra matches its multiplication table") {
    auto Q = FieldSpec::rationals();
    auto P = taft(2, Q);
    CHECK(P.dim == 4);
    CHECK(P.basis_labels == std::vector<std::string>{"1", "g", "h", "gh"});
    // rows of the table: left factor times right factor
    const char* table[4][4] = {
        {"1", "g", "h", "gh"},
        {"g", "1", "gh", "h"},
        {"h", "-gh", "0", "0"},
        {"gh", "-h", "0", "0"},
    };
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) {
            Element got = multiply(P, basis_element(Q, 4, i), basis_element(Q, 4, j));
            std::string want = table[i][j];
            Element expect = zero_element(Q, 4);
            if (want != "0") {
                bool neg = want[0] == '-';
                std::string label = neg ? want.substr(1) : want;
                expect = basis_element(Q, 4, label_index(P, label));
                if (neg) expect = scale(Scalar::from_int(Q, -1), expect);
            }
            CHECK(got == expect);
        }
    CHECK(all_hold(verify_all(P)));
}

TEST_CASE("Taft coproducts carry Gaussian binomial coefficients") {
    for (unsigned n : {2u, 3u, 4u}) {
        auto f = n == 2 ? FieldSpec::rationals() : FieldSpec::cyclotomic(n);
        auto P = taft(n, f);
        Scalar q = root_of_unity_of_order(f, n);
        auto index_of = [n](unsigned a, unsigned b) -> unsigned {
            if (n == 2) return 2 * b + a;  // dim-4 order (1, g, h, gh)
            return a * n + b;
        };
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                unsigned k = index_of(a, b);
                // Delta(g^a h^b) = sum_r qbinom(b,r) g^a h^r (x) g^{a+r} h^{b-r}
                Matrix want(f, P.dim, P.dim);
                for (unsigned r = 0; r <= b; ++r)
                    want.at(index_of(a, r), index_of((a + r) % n, b - r)) = q_binomial(q, b, r);
                for (unsigned i = 0; i < P.dim; ++i)
                    for (unsigned j = 0; j < P.dim; ++j)
                        REQUIRE(P.G.at(i, j, k) == want.at(i, j));
            }
    }
}

TEST_CASE("taft(3) over Q(zeta_3) is a dim-9 Hopf presentation") {
    auto Q3 = FieldSpec::cyclotomic(3);
    auto P = taft(3, Q3);
    CHECK(P.dim == 9);
    CHECK(P.basis_labels ==
          std::vector<std::string>{"1", "h", "h^2", "g", "g h", "g h^2", "g^2", "g^2 h",
                                   "g^2 h^2"});
    CHECK(all_hold(verify_all(P)));
    // h g = q g h with q = zeta_3
    unsigned ig = label_index(P, "g"), ih = label_index(P, "h");
    Element hg = multiply(P, basis_element(Q3, 9, ih), basis_element(Q3, 9, ig));
    Element gh = multiply(P, basis_element(Q3, 9, ig), basis_element(Q3, 9, ih));
    CHECK(hg == scale(root_of_unity(Q3, 1), gh));
}

TEST_CASE("taft over a prime field") {
    // F_5 contains -1, the primitive square root of unity
    auto F5 = FieldSpec::prime_field(5);
    auto P = taft(2, F5);
    CHECK(all_hold(verify_all(P)));
    CHECK(verify_selfdual_algebra(P, taft2_witness(F5)).holds);
    IAlgebra I = i_construct_general(P, taft2_witness(F5));
    CHECK(is_commutative(I));
    // d2 <> d2 = -d1 = 4*d1 mod 5
    CHECK(I.iF.at(1, 1, 0) == Scalar::from_int(F5, 4));
}

TEST_CASE("taft rejects bad parameters") {
    CHECK_THROWS_AS(taft(3, FieldSpec::rationals()), DomainError);   // no zeta_3
    CHECK_THROWS_AS(taft(2, FieldSpec::prime_field(2)), DomainError);  // char | n
    CHECK_THROWS_AS(taft(1, FieldSpec::rationals()), DomainError);
}

TEST_CASE("taft2 witness matrix") {
    auto Q = FieldSpec::rationals();
    auto W = taft2_witness(Q);
    long want[4][4] = {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}};
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) CHECK(W.S.at(i, j) == Scalar::from_int(Q, want[i][j]));
    CHECK(is_symmetric(W));
    CHECK_THROWS_AS(taft2_witness(FieldSpec::prime_field(2)), DomainError);
}

TEST_CASE("tensor with dual") {
    auto Q = FieldSpec::rationals();
    // dim 1 stays dim 1
    auto one = group_algebra(AbelianGroupSpec{{1}}, Q);
    CHECK(tensor_with_dual(one).dim == 1);

    auto Z2 = group_algebra(AbelianGroupSpec{{2}}, Q);
    auto T = tensor_with_dual(Z2);
    CHECK(T.dim == 4);
    CHECK(all_hold(verify_all(T)));

    auto H2T = tensor_with_dual(taft(2, Q));
    CHECK(H2T.dim == 16);
    CHECK(all_hold(verify_all(H2T)));

    // dualize(T) equals T after the leg-swap permutation basis change
    for (const auto& P : {Z2, taft(2, Q)}) {
        auto TT = tensor_with_dual(P);
        auto D = dualize(TT);
        const unsigned n = P.dim;
        Matrix swap(Q, n * n, n * n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) swap.at(j * n + i, i * n + j) = Scalar::one(Q);
        auto back = transform_presentation(D, TransitionData{swap});
        CHECK(back.F == TT.F);
        CHECK(back.G == TT.G);
        CHECK(back.lambda == TT.lambda);
        CHECK(back.mu == TT.mu);
        CHECK(*back.antipode == *TT.antipode);
    }
}
