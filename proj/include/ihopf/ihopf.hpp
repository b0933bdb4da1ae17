// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ihopf/axioms.hpp"
#include "ihopf/duality.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf {

enum class IConstruction { simple, scaled, general };

// The diamond algebra (A^i, <>) built from a presentation. Construction
// always asserts associativity and the unit law on the result -- those are
// the theorems' claims and are never assumed; a failed assertion raises
// PostconditionError instead of returning a broken object.
struct IAlgebra {
    unsigned dim = 0;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> basis_labels;
    StructureTensor iF;
    std::vector<Scalar> lambda;
    IConstruction provenance = IConstruction::simple;
    std::string source;  // human-readable note about the inputs

    Element multiply(const Element& a, const Element& b) const {
        return multiply_by_tensor(iF, a, b);
    }
    Element power(const Element& a, unsigned m) const {
        return element_power_by_tensor(iF, lambda, a, m);
    }
    Element unit() const { return Element{lambda}; }
};

// iF(i,j,k) = sum F(a,c,j) F(c,b,i) F(b,a,k).
// Requires F = G entrywise (checked).
IAlgebra i_construct_simple(const BialgebraPresentation& P, int jobs = 1);

// iF(i,j,k) = sum G(a,c,j) G(c,b,i) F(b,a,k) / s_c.
// Requires the scaled relation F(i,j,k) = G(i,j,k) * s_k / (s_i s_j)
// entrywise for the given vector of nonzero scalars (checked).
IAlgebra i_construct_scaled(const BialgebraPresentation& P, const std::vector<Scalar>& s,
                            int jobs = 1);

// iF(i,j,k) = sum S(y1,y2) G(y1,x,i) G(z,y2,j) F(x,z,k).
// Requires W symmetric and passing verify_selfdual_algebra (checked).
// Uses S directly; no Gram factorization is involved.
IAlgebra i_construct_general(const BialgebraPresentation& P, const DualityWitness& W,
                             int jobs = 1);

// Exact check iF(i,j,k) = iF(j,i,k) for all tuples.
bool is_commutative(const IAlgebra& I);

// Certifies I ~ k(Z/m): the powers x^0, ..., x^{m-1} are linearly
// independent (exact rank) and x^m equals the unit. Requires m = dim(I).
AxiomReport verify_cyclic_witness(const IAlgebra& I, const Element& x, unsigned m);

}  // namespace ihopf
