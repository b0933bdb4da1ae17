// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihopf/presentation.hpp"

namespace ihopf {

// Outcome of one axiom check. When the axiom fails, first_violation holds the
// lexicographically least failing index tuple (0-based) and the two values
// that should have been equal.
struct AxiomViolation {
    std::vector<unsigned> tuple;
    Scalar lhs;
    Scalar rhs;
};

struct AxiomReport {
    std::string axiom_name;
    bool holds = false;
    std::optional<AxiomViolation> first_violation;

    // Rendering used by the CLI: "PASS name" or
    // "FAIL name at (i,j,...) lhs=... rhs=..." with 1-based indices.
    std::string to_line() const;
};

// All checks are exact and deterministic: same input, same first_violation.
// `jobs` parallelizes the heavy array construction; the violation scan is
// always a serial pass in lexicographic order, so results are identical for
// any job count.

// sum_s F(i,j,s) F(s,k,l) = sum_t F(i,t,l) F(j,k,t) for all (i,j,k,l)
AxiomReport verify_associativity(const StructureTensor& F, int jobs = 1);

// sum_i lambda_i F(i,j,k) = delta(j,k)  and  sum_j lambda_j F(i,j,k) = delta(i,k)
AxiomReport verify_unit(const StructureTensor& F, const std::vector<Scalar>& lambda);

// the same identities with G in place of F
AxiomReport verify_coassociativity(const StructureTensor& G, int jobs = 1);
AxiomReport verify_counit(const StructureTensor& G, const std::vector<Scalar>& mu);

// sum_k F(i,j,k) G(k1,k2,k) =
//   sum_{i1,i2,j1,j2} G(i1,i2,i) G(j1,j2,j) F(i1,j1,k1) F(i2,j2,k2)
// for all (i,j,k1,k2), computed via contraction reordering.
AxiomReport verify_green_compat(const BialgebraPresentation& P, int jobs = 1);

// Test oracle: the same identity evaluated by the naive 8-index sum.
// Gated to dim <= 4.
AxiomReport verify_green_compat_naive(const BialgebraPresentation& P);

// sum_k F(i,j,k) mu_k = mu_i mu_j
AxiomReport verify_counit_compat(const StructureTensor& F, const std::vector<Scalar>& mu);

// sum_k G(i,j,k) lambda_k = lambda_i lambda_j
AxiomReport verify_unit_compat(const StructureTensor& G, const std::vector<Scalar>& lambda);

// m(S (x) id)Delta = u eps = m(id (x) S)Delta on every basis element.
// Requires P.antipode.
AxiomReport verify_antipode(const BialgebraPresentation& P);

// Runs, in order: associativity, unit, coassociativity, counit, green_compat,
// counit_compat, unit_compat, and antipode when present.
std::vector<AxiomReport> verify_all(const BialgebraPresentation& P, int jobs = 1);

bool all_hold(const std::vector<AxiomReport>& reports);

}  // namespace ihopf
