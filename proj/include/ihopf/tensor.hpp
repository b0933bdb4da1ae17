// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ihopf/field.hpp"

namespace ihopf {

// Rank-3 array of exact scalars. Reading conventions by role:
//   F-tensor: at(i, j, k) is the coefficient of c_k in c_i * c_j
//   G-tensor: at(i, j, k) is the coefficient of c_i (x) c_j in Delta(c_k)
class StructureTensor {
public:
    StructureTensor() = default;
    StructureTensor(const FieldSpec& f, unsigned dim)
        : field_(f), dim_(dim),
          e_(std::size_t(dim) * dim * dim, Scalar::zero(f)) {}

    unsigned dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(unsigned i, unsigned j, unsigned k) {
        return e_[(std::size_t(i) * dim_ + j) * dim_ + k];
    }
    const Scalar& at(unsigned i, unsigned j, unsigned k) const {
        return e_[(std::size_t(i) * dim_ + j) * dim_ + k];
    }

    bool operator==(const StructureTensor& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && e_ == o.e_;
    }
    bool operator!=(const StructureTensor& o) const { return !(*this == o); }

private:
    FieldSpec field_ = FieldSpec::rationals();
    unsigned dim_ = 0;
    std::vector<Scalar> e_;
};

// Rank-4 array, used for triple-product constants and the two sides of the
// Green-compatibility identity.
class Rank4 {
public:
    Rank4() = default;
    Rank4(const FieldSpec& f, unsigned dim)
        : field_(f), dim_(dim),
          e_(std::size_t(dim) * dim * dim * dim, Scalar::zero(f)) {}

    unsigned dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(unsigned a, unsigned b, unsigned c, unsigned d) {
        return e_[((std::size_t(a) * dim_ + b) * dim_ + c) * dim_ + d];
    }
    const Scalar& at(unsigned a, unsigned b, unsigned c, unsigned d) const {
        return e_[((std::size_t(a) * dim_ + b) * dim_ + c) * dim_ + d];
    }

    bool operator==(const Rank4& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && e_ == o.e_;
    }
    bool operator!=(const Rank4& o) const { return !(*this == o); }

private:
    FieldSpec field_ = FieldSpec::rationals();
    unsigned dim_ = 0;
    std::vector<Scalar> e_;
};

}  // namespace ihopf
