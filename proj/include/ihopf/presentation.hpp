// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihopf/matrix.hpp"
#include "ihopf/tensor.hpp"

namespace ihopf {

// A structure-constant presentation of a (candidate) bialgebra or Hopf
// algebra on a fixed basis:
//   c_i * c_j    = sum_k F(i,j,k) c_k          u(1)    = sum_i lambda[i] c_i
//   Delta(c_k)   = sum_{i,j} G(i,j,k) c_i(x)c_j   eps(c_i) = mu[i]
// The optional antipode matrix stores the coordinates of S(c_i) in column i.
//
// Axiom validity is NOT an invariant of this type; unverified presentations
// are legal inputs, and the axioms module decides what holds.
struct BialgebraPresentation {
    unsigned dim = 0;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> basis_labels;
    StructureTensor F;
    StructureTensor G;
    std::vector<Scalar> lambda;
    std::vector<Scalar> mu;
    std::optional<Matrix> antipode;

    // Structural sanity (dims agree, labels unique); throws DomainError.
    void validate_shape() const;

    bool same_constants(const BialgebraPresentation& o) const;
};

// A vector in the span of the basis, as a coordinate list.
struct Element {
    std::vector<Scalar> coords;
};

Element zero_element(const FieldSpec& f, unsigned dim);
Element basis_element(const FieldSpec& f, unsigned dim, unsigned i);
Element unit_element(const BialgebraPresentation& P);

Element add(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
bool operator==(const Element& a, const Element& b);

// (a * b)_k = sum_{i,j} a_i b_j F(i,j,k)
Element multiply_by_tensor(const StructureTensor& F, const Element& a, const Element& b);
Element multiply(const BialgebraPresentation& P, const Element& a, const Element& b);

// Coordinates of Delta(a) in the basis {c_i (x) c_j}: out(i,j) = sum_k a_k G(i,j,k).
Matrix comultiply(const BialgebraPresentation& P, const Element& a);

// a^m with a^0 = u(1); products associate to the left.
Element element_power_by_tensor(const StructureTensor& F, const std::vector<Scalar>& lambda,
                                const Element& a, unsigned m);
Element element_power(const BialgebraPresentation& P, const Element& a, unsigned m);

// Elements of A (x) A as n x n coefficient matrices in the basis {c_i (x) c_j};
// the product is componentwise: (x1 (x) y1)(x2 (x) y2) = x1 x2 (x) y1 y2.
Matrix tensor_square_multiply(const StructureTensor& F, const Matrix& a, const Matrix& b);

enum class AssocSide { left, right };

// Triple-product constants of one association order:
//   left : T(i,j,k,l) = sum_s F(i,j,s) F(s,k,l)
//   right: T(i,j,k,l) = sum_t F(i,t,l) F(j,k,t)
// The two agree exactly iff the tensor is (co)associative.
Rank4 triple_constants(const StructureTensor& T, AssocSide side, int jobs = 1);

}  // namespace ihopf
