// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "helpers.hpp"
#include "ihopf/base_change.hpp"
#include "ihopf/catalog.hpp"
#include "ihopf/ihopf.hpp"
#include "ihopf/kernels.hpp"

using namespace ihopf;
using namespace ihopf::testing;

namespace {

// The 16-entry diamond table of the dim-4 Taft algebra in basis
// (d1,d2,d3,d4) = (1,g,h,gh): entry [i][j] is (k, sign) with
// d_i <> d_j = sign * d_k.
struct TableEntry {
    unsigned k;
    int sign;
};
constexpr TableEntry kITaftTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, -1}, {2, 1}},
    {{2, 1}, {3, -1}, {1, 1}, {0, 1}},
    {{3, 1}, {2, 1}, {0, 1}, {1, -1}},
};

void check_itaft_table(const IAlgebra& I) {
    const FieldSpec& f = I.field;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
            for (unsigned k = 0; k < 4; ++k) {
                Scalar want = Scalar::zero(f);
                if (kITaftTable[i][j].k == k) want = Scalar::from_int(f, kITaftTable[i][j].sign);
                REQUIRE(I.iF.at(i, j, k) == want);
            }
}

// an F = G fixture over Q(zeta_8), dim 2 or 4
BialgebraPresentation feqg_fixture(unsigned dim) {
    auto Q8 = FieldSpec::cyclotomic(8);
    if (dim == 2) {
        auto P = group_algebra(AbelianGroupSpec{{2}}, Q8);
        auto W = group_selfdual_witness(AbelianGroupSpec{{2}}, Q8);
        return std::get<NormalizedPresentation>(normalize_to_FeqG(P, W)).P;
    }
    if (dim == 4) {
        auto P = taft(2, Q8);
        auto W = taft2_witness(Q8);
        return std::get<NormalizedPresentation>(normalize_to_FeqG(P, W)).P;
    }
    throw DomainError("fixture dims are 2 and 4");
}

}  // namespace

TEST_CASE("simple construction on the one-dimensional algebra") {
    auto Q = FieldSpec::rationals();
    BialgebraPresentation P;
    P.dim = 1;
    P.field = Q;
    P.basis_labels = {"1"};
    P.F = StructureTensor(Q, 1);
    P.F.at(0, 0, 0) = Scalar::one(Q);
    P.G = P.F;
    P.lambda = {Scalar::one(Q)};
    P.mu = {Scalar::one(Q)};
    IAlgebra I = i_construct_simple(P);
    CHECK(I.iF.at(0, 0, 0) == Scalar::one(Q));
}

TEST_CASE("simple construction requires F = G") {
    auto Q = FieldSpec::rationals();
    CHECK_THROWS_AS(i_construct_simple(taft(2, Q)), DomainError);
}

TEST_CASE("the normalized dim-4 Taft algebra admits the simple construction") {
    auto P = feqg_fixture(4);
    IAlgebra I = i_construct_simple(P);  // post-checks associativity and unit
    CHECK(I.dim == 4);
    CHECK(verify_associativity(I.iF).holds);
    CHECK(verify_unit(I.iF, I.lambda).holds);
}

TEST_CASE("general construction reproduces the known dim-4 diamond table") {
    auto Q = FieldSpec::rationals();
    auto H2 = taft(2, Q);
    IAlgebra I = i_construct_general(H2, taft2_witness(Q));
    // d2 <> d3 = -d4 and d3 <> d4 = d1, then the whole table
    auto d = [&](unsigned i) { return basis_element(Q, 4, i); };
    CHECK(I.multiply(d(1), d(2)) == scale(Scalar::from_int(Q, -1), d(3)));
    CHECK(I.multiply(d(2), d(3)) == d(0));
    check_itaft_table(I);
    CHECK(is_commutative(I));
}

TEST_CASE("scaled construction: trivial scaling recovers the simple one") {
    auto P = feqg_fixture(2);
    std::vector<Scalar> ones(2, Scalar::one(P.field));
    IAlgebra simple = i_construct_simple(P);
    IAlgebra scaled = i_construct_scaled(P, ones);
    CHECK(simple.iF == scaled.iF);
}

TEST_CASE("scaled construction on a rescaled F = G presentation") {
    for (unsigned dim : {2u, 4u}) {
        auto base = feqg_fixture(dim);
        const FieldSpec& f = base.field;
        // rescale by diag(a) with a = (1, 2, 3, ...): scalars b_i = a_i^{-2}
        Matrix D(f, dim, dim);
        std::vector<Scalar> b;
        for (unsigned i = 0; i < dim; ++i) {
            Scalar ai = Scalar::from_int(f, static_cast<long>(i + 1));
            D.at(i, i) = ai;
            b.push_back((ai * ai).inverse());
        }
        TransitionData TD{D};
        auto scaled_p = transform_presentation(base, TD);
        IAlgebra scaled = i_construct_scaled(scaled_p, b);  // asserts assoc + unit
        // equals the transform of the simple construction under the F-rule
        IAlgebra simple = i_construct_simple(base);
        StructureTensor expected = kernels::transform_f_tensor(simple.iF, TD.T, TD.Tinv);
        CHECK(scaled.iF == expected);
        // wrong scaling vector is rejected
        std::vector<Scalar> wrong(dim, Scalar::from_int(f, 7));
        CHECK_THROWS_AS(i_construct_scaled(scaled_p, wrong), DomainError);
    }
}

TEST_CASE("reduction invariants: identity and diagonal witnesses") {
    // general with S = I equals simple, on F = G fixtures
    for (unsigned dim : {2u, 4u}) {
        auto P = feqg_fixture(dim);
        IAlgebra simple = i_construct_simple(P);
        IAlgebra general = i_construct_general(P, DualityWitness{Matrix::identity(P.field, dim)});
        CHECK(simple.iF == general.iF);
        CHECK(simple.lambda == general.lambda);
    }
    // general with S = diag(1/b) equals scaled with b, on scaled fixtures
    for (unsigned dim : {2u, 4u}) {
        auto base = feqg_fixture(dim);
        const FieldSpec& f = base.field;
        Matrix D(f, dim, dim);
        std::vector<Scalar> b;
        for (unsigned i = 0; i < dim; ++i) {
            Scalar ai = Scalar::from_int(f, static_cast<long>(2 * i + 1));
            D.at(i, i) = ai;
            b.push_back((ai * ai).inverse());
        }
        auto scaled_p = transform_presentation(base, TransitionData{D});
        IAlgebra scaled = i_construct_scaled(scaled_p, b);
        Matrix S(f, dim, dim);
        for (unsigned i = 0; i < dim; ++i) S.at(i, i) = b[i].inverse();
        IAlgebra general = i_construct_general(scaled_p, DualityWitness{S});
        CHECK(scaled.iF == general.iF);
    }
}

TEST_CASE("base-change equivariance of the general construction") {
    std::mt19937_64 rng(101);
    for (unsigned dim : {2u, 4u}) {
        auto P0 = feqg_fixture(dim);
        const FieldSpec& f = P0.field;
        IAlgebra simple = i_construct_simple(P0);
        for (int iter = 0; iter < 3; ++iter) {
            // rational invertible T embedded into Q(zeta_8)
            Matrix T(f, dim, dim);
            for (;;) {
                std::uniform_int_distribution<long> d(-3, 3);
                for (unsigned i = 0; i < dim; ++i)
                    for (unsigned j = 0; j < dim; ++j) T.at(i, j) = Scalar::from_int(f, d(rng));
                if (T.is_invertible()) break;
            }
            TransitionData TD{T};
            auto P1 = transform_presentation(P0, TD);
            DualityWitness W{T.transpose() * T};
            REQUIRE(is_symmetric(W));
            REQUIRE(verify_selfdual_algebra(P1, W).holds);
            IAlgebra general = i_construct_general(P1, W);
            StructureTensor expected = kernels::transform_f_tensor(simple.iF, TD.T, TD.Tinv);
            REQUIRE(general.iF == expected);
            REQUIRE(general.lambda == TD.Tinv.apply(simple.lambda));
        }
    }
}

TEST_CASE("closed form on grouplike coproducts") {
    // When G is grouplike, the general formula collapses to
    // iF(i,j,k) = S(i,j) * F(i,j,k); for the character witness on k(Z/n)
    // that is zeta^(i*j) on the group-law entry. An independent oracle for
    // the contraction kernel on a second family.
    for (unsigned n : {2u, 3u, 4u, 5u}) {
        auto f = n <= 2 ? FieldSpec::rationals() : FieldSpec::cyclotomic(n);
        auto P = group_algebra(AbelianGroupSpec{{n}}, f);
        auto W = group_selfdual_witness(AbelianGroupSpec{{n}}, f);
        IAlgebra I = i_construct_general(P, W);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = 0; k < n; ++k) {
                    Scalar want = Scalar::zero(f);
                    if ((i + j) % n == k)
                        want = root_of_unity_of_order(f, n, static_cast<long>(i) * j);
                    REQUIRE(I.iF.at(i, j, k) == want);
                }
    }
    // non-cyclic groups, via the witness matrix directly
    for (auto spec : {AbelianGroupSpec{{2, 2}}, AbelianGroupSpec{{2, 4}}}) {
        auto f = FieldSpec::cyclotomic(spec.exponent());
        auto P = group_algebra(spec, f);
        auto W = group_selfdual_witness(spec, f);
        IAlgebra I = i_construct_general(P, W);
        const unsigned n = P.dim;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = 0; k < n; ++k)
                    REQUIRE(I.iF.at(i, j, k) == W.S.at(i, j) * P.F.at(i, j, k));
    }
}

TEST_CASE("general construction rejects bad witnesses") {
    auto Q = FieldSpec::rationals();
    auto H2 = taft(2, Q);
    // symmetric but not a witness
    CHECK_THROWS_AS(i_construct_general(H2, DualityWitness{Matrix::identity(Q, 4)}), DomainError);
    // a witness that is not symmetric: permuted rows of the real one
    Matrix M = taft2_witness(Q).S;
    Matrix perm(Q, 4, 4);
    for (unsigned j = 0; j < 4; ++j) {
        perm.at(0, j) = M.at(1, j);
        perm.at(1, j) = M.at(0, j);
        perm.at(2, j) = M.at(2, j);
        perm.at(3, j) = M.at(3, j);
    }
    CHECK_THROWS_AS(i_construct_general(H2, DualityWitness{perm}), DomainError);
}

TEST_CASE("commutativity checks") {
    auto Q = FieldSpec::rationals();
    // diamond algebras of group algebras via character witnesses
    for (unsigned n : {2u, 3u, 4u}) {
        auto f = n == 2 ? FieldSpec::rationals() : FieldSpec::cyclotomic(n);
        auto P = group_algebra(AbelianGroupSpec{{n}}, f);
        auto W = group_selfdual_witness(AbelianGroupSpec{{n}}, f);
        IAlgebra I = i_construct_general(P, W);
        CHECK(is_commutative(I));
    }
    // a non-commutative associative tensor used as a fixture
    auto H2 = taft(2, Q);
    IAlgebra fixture;
    fixture.dim = 4;
    fixture.field = Q;
    fixture.basis_labels = H2.basis_labels;
    fixture.iF = H2.F;
    fixture.lambda = H2.lambda;
    CHECK(!is_commutative(fixture));
}

TEST_CASE("cyclic witness certification") {
    auto Q8 = FieldSpec::cyclotomic(8);
    auto H2 = taft(2, Q8);
    IAlgebra I = i_construct_general(H2, taft2_witness(Q8));
    Scalar v = root_of_unity(Q8, 1);  // v^4 = -1
    CHECK((v.pow(4)) == Scalar::from_int(Q8, -1));
    Element x = scale(v, basis_element(Q8, 4, 2));  // v * d3

    // the power chain of Prop 5.2: (v d3)^2 = v^2 d2, (v d3)^3 = -v^3 d4,
    // (v d3)^4 = d1
    Element x2 = I.power(x, 2);
    CHECK(x2 == scale(v * v, basis_element(Q8, 4, 1)));
    Element x3 = I.power(x, 3);
    CHECK(x3 == scale(-(v.pow(3)), basis_element(Q8, 4, 3)));
    Element x4 = I.power(x, 4);
    CHECK(x4 == basis_element(Q8, 4, 0));
    CHECK(I.power(x, 1) == x);

    CHECK(verify_cyclic_witness(I, x, 4).holds);

    // d2 generates only a 2-dimensional subalgebra: d2^2 = -d1
    AxiomReport bad = verify_cyclic_witness(I, basis_element(Q8, 4, 1), 4);
    CHECK(!bad.holds);

    // group algebra as a fixture: g generates and g^n = 1
    for (unsigned n : {2u, 5u}) {
        auto Q = FieldSpec::rationals();
        auto P = group_algebra(AbelianGroupSpec{{n}}, Q);
        IAlgebra fixture;
        fixture.dim = n;
        fixture.field = Q;
        fixture.basis_labels = P.basis_labels;
        fixture.iF = P.F;
        fixture.lambda = P.lambda;
        CHECK(verify_cyclic_witness(fixture, basis_element(Q, n, 1 % n), n).holds);
    }

    CHECK_THROWS_AS(verify_cyclic_witness(I, x, 3), DomainError);
}
