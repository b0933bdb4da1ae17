// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "ihopf/catalog.hpp"
#include "ihopf/matrix.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf::testing {

inline mpq_class frac(long n, long d = 1) {
    mpq_class v(n, d);
    v.canonicalize();
    return v;
}

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng, bool integer_only = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    switch (f.kind()) {
        case FieldKind::rational:
            return Scalar::from_rational(f, integer_only ? frac(num(rng)) : frac(num(rng), den(rng)));
        case FieldKind::prime: return Scalar::from_int(f, num(rng) + 9);
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c(f.degree());
            for (auto& x : c) x = integer_only ? frac(num(rng)) : frac(num(rng), den(rng));
            return Scalar::from_coeffs(f, std::move(c));
        }
    }
    return Scalar();
}

inline Scalar random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

inline Element random_element(const FieldSpec& f, unsigned dim, std::mt19937_64& rng) {
    Element e = zero_element(f, dim);
    for (auto& c : e.coords) c = random_scalar(f, rng);
    return e;
}

inline Matrix random_matrix(const FieldSpec& f, unsigned n, std::mt19937_64& rng,
                            long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = Scalar::from_int(f, d(rng));
    return m;
}

inline Matrix random_invertible(const FieldSpec& f, unsigned n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, rng);
        if (m.is_invertible()) return m;
    }
}

inline Matrix random_symmetric_invertible(const FieldSpec& f, unsigned n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, rng);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
        if (m.is_invertible()) return m;
    }
}

// index of a basis label, for readable table assertions
inline unsigned label_index(const BialgebraPresentation& P, const std::string& label) {
    for (unsigned i = 0; i < P.dim; ++i)
        if (P.basis_labels[i] == label) return i;
    throw DomainError("no basis label '" + label + "'");
}

}  // namespace ihopf::testing
