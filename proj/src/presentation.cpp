// SPDX-License-Identifier: Apache-2.0
#include "ihopf/presentation.hpp"

#include <set>

#include "ihopf/kernels.hpp"

namespace ihopf {

void BialgebraPresentation::validate_shape() const {
    if (dim == 0) throw DomainError("presentation dimension must be positive");
    if (basis_labels.size() != dim) throw DomainError("label count != dim");
    if (F.dim() != dim || G.dim() != dim) throw DomainError("tensor dim != presentation dim");
    if (F.field() != field || G.field() != field)
        throw FieldMismatchError("tensor field != presentation field");
    if (lambda.size() != dim || mu.size() != dim) throw DomainError("unit/counit vector length != dim");
    for (const Scalar& s : lambda)
        if (s.field() != field) throw FieldMismatchError("lambda entry field mismatch");
    for (const Scalar& s : mu)
        if (s.field() != field) throw FieldMismatchError("mu entry field mismatch");
    if (antipode) {
        if (antipode->rows() != dim || antipode->cols() != dim)
            throw DomainError("antipode shape != dim x dim");
        if (antipode->field() != field) throw FieldMismatchError("antipode field mismatch");
    }
    std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
    if (seen.size() != dim) throw DomainError("basis labels are not unique");
}

bool BialgebraPresentation::same_constants(const BialgebraPresentation& o) const {
    if (dim != o.dim || field != o.field) return false;
    if (F != o.F || G != o.G) return false;
    if (lambda != o.lambda || mu != o.mu) return false;
    if (antipode.has_value() != o.antipode.has_value()) return false;
    if (antipode && *antipode != *o.antipode) return false;
    return true;
}

Element zero_element(const FieldSpec& f, unsigned dim) {
    return Element{std::vector<Scalar>(dim, Scalar::zero(f))};
}

Element basis_element(const FieldSpec& f, unsigned dim, unsigned i) {
    Element e = zero_element(f, dim);
    e.coords.at(i) = Scalar::one(f);
    return e;
}

Element unit_element(const BialgebraPresentation& P) { return Element{P.lambda}; }

Element add(const Element& a, const Element& b) {
    if (a.coords.size() != b.coords.size()) throw DomainError("element dim mismatch");
    Element out = a;
    for (std::size_t i = 0; i < b.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Element scale(const Scalar& c, const Element& a) {
    Element out = a;
    for (auto& x : out.coords) x *= c;
    return out;
}

bool operator==(const Element& a, const Element& b) { return a.coords == b.coords; }

Element multiply_by_tensor(const StructureTensor& F, const Element& a, const Element& b) {
    const unsigned n = F.dim();
    if (a.coords.size() != n || b.coords.size() != n)
        throw DomainError("element dim != tensor dim");
    Element out = zero_element(F.field(), n);
    for (unsigned i = 0; i < n; ++i) {
        const Scalar& ai = a.coords[i];
        if (ai.is_zero()) continue;
        if (ai.field() != F.field()) throw FieldMismatchError("element field != tensor field");
        for (unsigned j = 0; j < n; ++j) {
            const Scalar& bj = b.coords[j];
            if (bj.is_zero()) continue;
            Scalar w = ai * bj;
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& f = F.at(i, j, k);
                if (f.is_zero()) continue;
                out.coords[k] += w * f;
            }
        }
    }
    return out;
}

Element multiply(const BialgebraPresentation& P, const Element& a, const Element& b) {
    return multiply_by_tensor(P.F, a, b);
}

Matrix comultiply(const BialgebraPresentation& P, const Element& a) {
    const unsigned n = P.dim;
    if (a.coords.size() != n) throw DomainError("element dim != presentation dim");
    Matrix out(P.field, n, n);
    for (unsigned k = 0; k < n; ++k) {
        const Scalar& ak = a.coords[k];
        if (ak.is_zero()) continue;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const Scalar& g = P.G.at(i, j, k);
                if (g.is_zero()) continue;
                out.at(i, j) += ak * g;
            }
    }
    return out;
}

Element element_power_by_tensor(const StructureTensor& F, const std::vector<Scalar>& lambda,
                                const Element& a, unsigned m) {
    Element acc{lambda};
    for (unsigned step = 0; step < m; ++step) acc = multiply_by_tensor(F, acc, a);
    return acc;
}

Element element_power(const BialgebraPresentation& P, const Element& a, unsigned m) {
    return element_power_by_tensor(P.F, P.lambda, a, m);
}

Matrix tensor_square_multiply(const StructureTensor& F, const Matrix& a, const Matrix& b) {
    const unsigned n = F.dim();
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
        throw DomainError("tensor-square element shape mismatch");
    Matrix out(F.field(), n, n);
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < n; ++j1) {
            const Scalar& x = a.at(i1, j1);
            if (x.is_zero()) continue;
            for (unsigned i2 = 0; i2 < n; ++i2)
                for (unsigned j2 = 0; j2 < n; ++j2) {
                    const Scalar& y = b.at(i2, j2);
                    if (y.is_zero()) continue;
                    Scalar w = x * y;
                    // (c_i1 (x) c_j1)(c_i2 (x) c_j2) = c_i1 c_i2 (x) c_j1 c_j2
                    for (unsigned k1 = 0; k1 < n; ++k1) {
                        const Scalar& f1 = F.at(i1, i2, k1);
                        if (f1.is_zero()) continue;
                        Scalar wf = w * f1;
                        for (unsigned k2 = 0; k2 < n; ++k2) {
                            const Scalar& f2 = F.at(j1, j2, k2);
                            if (f2.is_zero()) continue;
                            out.at(k1, k2) += wf * f2;
                        }
                    }
                }
        }
    return out;
}

Rank4 triple_constants(const StructureTensor& T, AssocSide side, int jobs) {
    if (jobs == 1) return kernels::triple_constants_serial(T, side);
    return kernels::triple_constants_parallel(T, side, jobs);
}

}  // namespace ihopf
