// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ihopf/field.hpp"

namespace ihopf {

// Dense matrix of exact scalars. Row-major storage, all entries share a field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, unsigned rows, unsigned cols)
        : field_(f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(unsigned i, unsigned j) { return a_[std::size_t(i) * cols_ + j]; }
    const Scalar& at(unsigned i, unsigned j) const { return a_[std::size_t(i) * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;        // M v
    std::vector<Scalar> apply_transposed(const std::vector<Scalar>& v) const;  // M^t v

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_symmetric() const;

    // Exact Gauss-Jordan elimination; throws DomainError when singular.
    Matrix inverse() const;
    bool is_invertible() const;
    unsigned rank() const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    unsigned rows_ = 0;
    unsigned cols_ = 0;
    std::vector<Scalar> a_;
};

// Exact rank of a list of coordinate vectors (rows).
unsigned row_rank(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows);

// An invertible transition matrix with its cached exact inverse.
// Column i of T holds the old-basis coordinates of the i-th new basis vector.
struct TransitionData {
    Matrix T;
    Matrix Tinv;

    explicit TransitionData(Matrix t);  // throws DomainError when singular
    static TransitionData identity(const FieldSpec& f, unsigned n);
    TransitionData inverted() const;
};

}  // namespace ihopf
