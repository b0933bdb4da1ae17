// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ihopf/axioms.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf {

// The matrix of a candidate isomorphism phi: A -> A* in a fixed basis.
// Column i holds the dual-basis coordinates of phi(c_i), matching the
// subscript order phi(c_i) = sum_j S(j,i) c*_j. Transposing this convention
// silently breaks the general diamond construction, so it is fixed here once.
struct DualityWitness {
    Matrix S;
    explicit DualityWitness(Matrix s);  // throws DomainError unless invertible
};

bool is_symmetric(const DualityWitness& W);

// The dual presentation on the dual basis: multiplication constants are G,
// comultiplication constants are F, unit and counit swap, the antipode
// transposes. Labels toggle a trailing "*" so that dualize is an involution.
BialgebraPresentation dualize(const BialgebraPresentation& P);

// phi is an algebra morphism at the structure-constant level:
//   sum_k F(i,j,k) S(l,k) = sum_{i1,j1} S(i1,i) S(j1,j) G(i1,j1,l)
// for all (i,j,l); the product on A* is governed by G.
AxiomReport verify_selfdual_algebra(const BialgebraPresentation& P, const DualityWitness& W);

// phi is a coalgebra morphism: (phi (x) phi) Delta = Delta_{A*} phi, i.e.
//   sum_{i,j} S(i1,i) S(j1,j) G(i,j,k) = sum_l S(l,k) F(i1,j1,l)
// for all (i1,j1,k).
AxiomReport verify_selfdual_coalgebra(const BialgebraPresentation& P, const DualityWitness& W);

// Optional third check (only meaningful when P carries an antipode):
// phi intertwines the antipodes, S_matrix * A = A^t * S_matrix.
std::optional<AxiomReport> verify_selfdual_antipode(const BialgebraPresentation& P,
                                                    const DualityWitness& W);

}  // namespace ihopf
