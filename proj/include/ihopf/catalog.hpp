// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ihopf/duality.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf {

// A finite abelian group as a product of cyclic factors Z/n_1 x ... x Z/n_r.
struct AbelianGroupSpec {
    std::vector<unsigned> cyclic_factors;

    unsigned order() const;
    unsigned exponent() const;  // lcm of the factors
};

// The group algebra k G on the grouplike basis: F from the group law,
// G(i,j,k) = delta(i,k) delta(j,k), lambda = e_identity, mu = all ones,
// antipode = inversion permutation. Requires char(k) not dividing |G|.
BialgebraPresentation group_algebra(const AbelianGroupSpec& G, const FieldSpec& field);

// The character-table witness s(i,j) = zeta^<i,j> with zeta a primitive
// root of order exponent(G). Symmetric; verified against Prop 4.1 in tests,
// never assumed. Requires the field to contain the needed roots of unity.
DualityWitness group_selfdual_witness(const AbelianGroupSpec& G, const FieldSpec& field);

// The Taft algebra H_n(q) of dimension n^2 on the monomial basis g^a h^b:
//   g^n = 1, h^n = 0, hg = q g h, q a primitive n-th root of unity;
//   Delta(g) = g(x)g, Delta(h) = 1(x)h + h(x)g, eps(g) = 1, eps(h) = 0,
//   S(g) = g^{n-1}, S(h) = -q^{-1} g^{n-1} h.
// Basis order: (1, g, h, gh) for n = 2 (making the dim-4 tables literal),
// row-major (a,b) -> a*n + b for n >= 3.
// The comultiplication constants are derived by expanding
// Delta(g)^a Delta(h)^b inside A (x) A with the already-built F tensor.
BialgebraPresentation taft(unsigned n, const FieldSpec& field);

// The explicit symmetric witness for H_2 in basis (1, g, h, gh):
// [[1,1,0,0],[1,-1,0,0],[0,0,1,1],[0,0,1,-1]]. Requires char != 2.
DualityWitness taft2_witness(const FieldSpec& field);

// A (x) A* on the basis c_i (x) c*_j with the untwisted componentwise
// product and coproduct; unit lambda_i mu_j, counit mu_i lambda_j,
// antipode S (x) S*.
BialgebraPresentation tensor_with_dual(const BialgebraPresentation& P);

}  // namespace ihopf
