// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

#include "ihopf/duality.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf {

// Structure constants in the basis d_a = sum_i T(i,a) c_i:
//   Fnew(a,b,c) = sum T(i,a) T(j,b) Tinv(c,k) F(i,j,k)
//   Gnew(a,b,c) = sum Tinv(a,i) Tinv(b,j) T(k,c) G(i,j,k)
//   lambda_new = Tinv lambda,  mu_new = mu^t T,  antipode_new = Tinv A T.
// The two tensors transform with opposite variance; this is encoded once
// here and pinned down by the round-trip and composition property tests.
// New basis labels are "e1", ..., "en".
BialgebraPresentation transform_presentation(const BialgebraPresentation& P,
                                             const TransitionData& TD);

// Congruence diagonalization of a symmetric matrix over a field of
// characteristic != 2: returns (P, D) with S = P^t D P, D diagonal.
// Symmetric Gaussian elimination with the standard char != 2 repair when no
// nonzero diagonal pivot remains.
struct CongruenceResult {
    Matrix P;
    Matrix D;
};
CongruenceResult congruence_diagonalize(const Matrix& S);

// Outcome of an attempted Gram factorization S = T^t T. When some diagonal
// entry of D admits no square root in the field, the factorization is not
// representable there; that is a value, not an error.
struct NotRepresentable {
    unsigned diagonal_index = 0;  // first non-square diagonal entry of D
    Scalar entry;
};
using GramResult = std::variant<Matrix, NotRepresentable>;
GramResult gram_factorize(const Matrix& S);

// Change to a basis in which F = G, via S = T^t T and the base change by
// T^{-1}. Requires W symmetric and passing verify_selfdual_algebra. On
// success the returned presentation satisfies F = G entrywise (asserted).
struct NormalizedPresentation {
    BialgebraPresentation P;
    TransitionData TD;  // the transition actually applied (columns = new basis)
};
using NormalizeResult = std::variant<NormalizedPresentation, NotRepresentable>;
NormalizeResult normalize_to_FeqG(const BialgebraPresentation& P, const DualityWitness& W);

}  // namespace ihopf
