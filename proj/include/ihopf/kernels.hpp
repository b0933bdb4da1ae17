// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ihopf/matrix.hpp"
#include "ihopf/presentation.hpp"
#include "ihopf/tensor.hpp"

// Contraction kernels behind the verifiers and the diamond-product
// constructions. Every kernel comes in two variants: a plain serial
// reference, and an OpenMP version parallelized over the outermost output
// index. Both produce identical arrays entry for entry; the unit tests and
// the benchmark target compare them.
namespace ihopf::kernels {

// ---- triple-product constants (associativity sides) ----------------------
Rank4 triple_constants_serial(const StructureTensor& T, AssocSide side);
Rank4 triple_constants_parallel(const StructureTensor& T, AssocSide side, int jobs);

// ---- Green-compatibility identity, both sides as rank-4 arrays -----------
// LHS(i,j,k1,k2) = sum_k F(i,j,k) G(k1,k2,k)            [Delta after m]
// RHS(i,j,k1,k2) = sum_{i1,i2,j1,j2} G(i1,i2,i) G(j1,j2,j) F(i1,j1,k1) F(i2,j2,k2)
// The RHS kernels use contraction reordering (three pairwise contractions,
// O(n^6) scalar multiplies); the naive kernel evaluates the 8-index sum
// directly and is a test oracle gated to dim <= 4.
Rank4 green_lhs_serial(const StructureTensor& F, const StructureTensor& G);
Rank4 green_lhs_parallel(const StructureTensor& F, const StructureTensor& G, int jobs);
Rank4 green_rhs_serial(const StructureTensor& F, const StructureTensor& G);
Rank4 green_rhs_parallel(const StructureTensor& F, const StructureTensor& G, int jobs);
Rank4 green_rhs_naive(const StructureTensor& F, const StructureTensor& G);

// ---- diamond-product structure constants ----------------------------------
// The three formulas use distinct index layouts and are implemented
// independently of one another; the reduction invariants cross-check them.

// iF(i,j,k) = sum_{a,b,c} F(a,c,j) F(c,b,i) F(b,a,k)
StructureTensor ihopf_simple_serial(const StructureTensor& F);
StructureTensor ihopf_simple_parallel(const StructureTensor& F, int jobs);

// iF(i,j,k) = sum_{a,b,c} G(a,c,j) G(c,b,i) F(b,a,k) / s[c]
// (s is the scaling vector of the hypothesis F = G * s_k/(s_i s_j); the
// divisor is indexed by the contraction index shared between the two G
// factors)
StructureTensor ihopf_scaled_serial(const StructureTensor& G, const StructureTensor& F,
                                    const std::vector<Scalar>& s);
StructureTensor ihopf_scaled_parallel(const StructureTensor& G, const StructureTensor& F,
                                      const std::vector<Scalar>& s, int jobs);

// iF(i,j,k) = sum_{y1,y2,x,z} S(y1,y2) G(y1,x,i) G(z,y2,j) F(x,z,k)
// evaluated as three successive pairwise contractions, O(n^5) multiplies.
StructureTensor ihopf_general_serial(const Matrix& S, const StructureTensor& G,
                                     const StructureTensor& F);
StructureTensor ihopf_general_parallel(const Matrix& S, const StructureTensor& G,
                                       const StructureTensor& F, int jobs);

// ---- base-change transport ------------------------------------------------
// Fnew(a,b,c) = sum_{i,j,k} T(i,a) T(j,b) Tinv(c,k) F(i,j,k)
// Gnew(a,b,c) = sum_{i,j,k} Tinv(a,i) Tinv(b,j) T(k,c) G(i,j,k)
StructureTensor transform_f_tensor(const StructureTensor& F, const Matrix& T, const Matrix& Tinv);
StructureTensor transform_g_tensor(const StructureTensor& G, const Matrix& T, const Matrix& Tinv);

}  // namespace ihopf::kernels
