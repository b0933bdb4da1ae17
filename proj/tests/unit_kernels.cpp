// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "helpers.hpp"
#include "ihopf/axioms.hpp"
#include "ihopf/catalog.hpp"
#include "ihopf/duality.hpp"
#include "ihopf/kernels.hpp"

using namespace ihopf;
using namespace ihopf::testing;

namespace {

StructureTensor random_tensor(const FieldSpec& f, unsigned n, std::mt19937_64& rng) {
    StructureTensor T(f, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) T.at(i, j, k) = random_scalar(f, rng, true);
    return T;
}

}  // namespace

TEST_CASE("reordered Green RHS equals the naive oracle on dim <= 4 presentations") {
    auto Q = FieldSpec::rationals();
    std::vector<BialgebraPresentation> ps;
    ps.push_back(group_algebra(AbelianGroupSpec{{1}}, Q));
    ps.push_back(group_algebra(AbelianGroupSpec{{2}}, Q));
    ps.push_back(group_algebra(AbelianGroupSpec{{3}}, Q));
    ps.push_back(group_algebra(AbelianGroupSpec{{4}}, Q));
    ps.push_back(group_algebra(AbelianGroupSpec{{2, 2}}, Q));
    ps.push_back(taft(2, Q));
    ps.push_back(dualize(taft(2, Q)));
    ps.push_back(taft(2, FieldSpec::cyclotomic(8)));
    ps.push_back(group_algebra(AbelianGroupSpec{{4}}, FieldSpec::prime_field(5)));
    // perturbed variants exercise the failing entries too
    auto broken = taft(2, Q);
    broken.G.at(1, 2, 3) += Scalar::one(Q);
    ps.push_back(broken);
    std::mt19937_64 rng(31);
    for (const auto& P : ps) {
        CHECK(kernels::green_rhs_serial(P.F, P.G) == kernels::green_rhs_naive(P.F, P.G));
        CHECK(verify_green_compat(P).holds == verify_green_compat_naive(P).holds);
        AxiomReport a = verify_green_compat(P);
        AxiomReport b = verify_green_compat_naive(P);
        if (!a.holds) {
            CHECK(a.first_violation->tuple == b.first_violation->tuple);
            CHECK(a.first_violation->lhs == b.first_violation->lhs);
            CHECK(a.first_violation->rhs == b.first_violation->rhs);
        }
    }
    // random dense dim-3 tensors, where almost nothing is compatible
    for (int iter = 0; iter < 5; ++iter) {
        BialgebraPresentation R;
        R.dim = 3;
        R.field = Q;
        R.basis_labels = {"a", "b", "c"};
        R.F = random_tensor(Q, 3, rng);
        R.G = random_tensor(Q, 3, rng);
        R.lambda.assign(3, Scalar::zero(Q));
        R.mu.assign(3, Scalar::zero(Q));
        CHECK(kernels::green_rhs_serial(R.F, R.G) == kernels::green_rhs_naive(R.F, R.G));
    }
}

TEST_CASE("naive Green oracle is gated to dim <= 4") {
    auto Q3 = FieldSpec::cyclotomic(3);
    auto P = taft(3, Q3);  // dim 9
    CHECK_THROWS_AS(kernels::green_rhs_naive(P.F, P.G), DomainError);
}

TEST_CASE("parallel kernels reproduce the serial reference exactly") {
    auto Q = FieldSpec::rationals();
    std::mt19937_64 rng(47);
    StructureTensor F = random_tensor(Q, 5, rng);
    StructureTensor G = random_tensor(Q, 5, rng);
    for (int jobs : {2, 3, 8}) {
        CHECK(kernels::triple_constants_parallel(F, AssocSide::left, jobs) ==
              kernels::triple_constants_serial(F, AssocSide::left));
        CHECK(kernels::triple_constants_parallel(F, AssocSide::right, jobs) ==
              kernels::triple_constants_serial(F, AssocSide::right));
        CHECK(kernels::green_lhs_parallel(F, G, jobs) == kernels::green_lhs_serial(F, G));
        CHECK(kernels::green_rhs_parallel(F, G, jobs) == kernels::green_rhs_serial(F, G));
        CHECK(kernels::ihopf_simple_parallel(F, jobs) == kernels::ihopf_simple_serial(F));
        CHECK(kernels::ihopf_general_parallel(Matrix::identity(Q, 5), G, F, jobs) ==
              kernels::ihopf_general_serial(Matrix::identity(Q, 5), G, F));
        std::vector<Scalar> s(5, Scalar::from_int(Q, 2));
        CHECK(kernels::ihopf_scaled_parallel(G, F, s, jobs) ==
              kernels::ihopf_scaled_serial(G, F, s));
    }
    // and on a real catalog input
    auto P = taft(3, FieldSpec::cyclotomic(3));
    CHECK(kernels::green_rhs_parallel(P.F, P.G, 4) == kernels::green_rhs_serial(P.F, P.G));
    auto H2 = taft(2, Q);
    auto W = taft2_witness(Q);
    CHECK(kernels::ihopf_general_parallel(W.S, H2.G, H2.F, 4) ==
          kernels::ihopf_general_serial(W.S, H2.G, H2.F));
}

TEST_CASE("verify_green_compat gives identical reports for any job count") {
    auto Q = FieldSpec::rationals();
    auto broken = taft(2, Q);
    broken.G.at(2, 1, 3) += Scalar::one(Q);
    AxiomReport serial = verify_green_compat(broken, 1);
    AxiomReport par = verify_green_compat(broken, 4);
    CHECK(serial.holds == par.holds);
    REQUIRE(!serial.holds);
    CHECK(serial.first_violation->tuple == par.first_violation->tuple);
    CHECK(serial.first_violation->lhs == par.first_violation->lhs);
}
