// SPDX-License-Identifier: Apache-2.0
#include "ihopf/catalog.hpp"

#include <numeric>

namespace ihopf {

unsigned AbelianGroupSpec::order() const {
    unsigned o = 1;
    for (unsigned f : cyclic_factors) {
        if (f == 0) throw DomainError("cyclic factor must be positive");
        o *= f;
    }
    return o;
}

unsigned AbelianGroupSpec::exponent() const {
    unsigned e = 1;
    for (unsigned f : cyclic_factors) e = std::lcm(e, f);
    return e;
}

namespace {

// mixed-radix index <-> tuple for the product of cyclic factors
std::vector<unsigned> group_tuple(const AbelianGroupSpec& G, unsigned index) {
    std::vector<unsigned> t(G.cyclic_factors.size());
    for (std::size_t d = G.cyclic_factors.size(); d-- > 0;) {
        t[d] = index % G.cyclic_factors[d];
        index /= G.cyclic_factors[d];
    }
    return t;
}

unsigned group_index(const AbelianGroupSpec& G, const std::vector<unsigned>& t) {
    unsigned idx = 0;
    for (std::size_t d = 0; d < t.size(); ++d) idx = idx * G.cyclic_factors[d] + t[d];
    return idx;
}

std::string group_label(const AbelianGroupSpec& G, unsigned index) {
    auto t = group_tuple(G, index);
    if (t.size() == 1) {
        if (t[0] == 0) return "1";
        if (t[0] == 1) return "g";
        return "g^" + std::to_string(t[0]);
    }
    std::string s = "(";
    for (std::size_t d = 0; d < t.size(); ++d) {
        if (d) s += ",";
        s += std::to_string(t[d]);
    }
    s += ")";
    return s;
}

}  // namespace

BialgebraPresentation group_algebra(const AbelianGroupSpec& G, const FieldSpec& field) {
    const unsigned n = G.order();
    if (field.characteristic() != 0 && n % field.characteristic() == 0)
        throw DomainError("field characteristic divides the group order");
    BialgebraPresentation P;
    P.dim = n;
    P.field = field;
    P.F = StructureTensor(field, n);
    P.G = StructureTensor(field, n);
    P.lambda.assign(n, Scalar::zero(field));
    P.mu.assign(n, Scalar::one(field));
    Matrix S(field, n, n);
    const Scalar one = Scalar::one(field);
    for (unsigned i = 0; i < n; ++i) {
        P.basis_labels.push_back(group_label(G, i));
        auto ti = group_tuple(G, i);
        for (unsigned j = 0; j < n; ++j) {
            auto tj = group_tuple(G, j);
            std::vector<unsigned> tk(ti.size());
            for (std::size_t d = 0; d < ti.size(); ++d)
                tk[d] = (ti[d] + tj[d]) % G.cyclic_factors[d];
            P.F.at(i, j, group_index(G, tk)) = one;
        }
        P.G.at(i, i, i) = one;
        std::vector<unsigned> tinv(ti.size());
        for (std::size_t d = 0; d < ti.size(); ++d)
            tinv[d] = (G.cyclic_factors[d] - ti[d]) % G.cyclic_factors[d];
        S.at(group_index(G, tinv), i) = one;
    }
    P.lambda[0] = one;
    P.antipode = std::move(S);
    return P;
}

DualityWitness group_selfdual_witness(const AbelianGroupSpec& G, const FieldSpec& field) {
    const unsigned n = G.order();
    const unsigned e = G.exponent();
    Matrix S(field, n, n);
    for (unsigned i = 0; i < n; ++i) {
        auto ti = group_tuple(G, i);
        for (unsigned j = 0; j < n; ++j) {
            auto tj = group_tuple(G, j);
            // <i,j> = sum_d i_d j_d e / n_d  (pairing into Z/e)
            unsigned long pairing = 0;
            for (std::size_t d = 0; d < ti.size(); ++d)
                pairing += static_cast<unsigned long>(ti[d]) * tj[d] * (e / G.cyclic_factors[d]);
            S.at(i, j) = root_of_unity_of_order(field, e, static_cast<long>(pairing % e));
        }
    }
    return DualityWitness(std::move(S));
}

// ---------------------------------------------------------------------------
// Taft algebras

namespace {

std::string taft_label(unsigned a, unsigned b) {
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a == 1)
        s += "g";
    else if (a > 1)
        s += "g^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += " ";
        if (b == 1)
            s += "h";
        else
            s += "h^" + std::to_string(b);
    }
    return s;
}

}  // namespace

BialgebraPresentation taft(unsigned n, const FieldSpec& field) {
    if (n < 2) throw DomainError("Taft algebra needs n >= 2");
    if (field.characteristic() != 0 && n % field.characteristic() == 0)
        throw DomainError("field characteristic divides n");
    const Scalar q = root_of_unity_of_order(field, n);  // primitive n-th root
    const unsigned dim = n * n;

    // basis order: (1, g, h, gh) for n = 2, row-major otherwise
    auto index_of = [n](unsigned a, unsigned b) -> unsigned {
        if (n == 2) {
            static const unsigned order2[2][2] = {{0, 2}, {1, 3}};  // [a][b]
            return order2[a][b];
        }
        return a * n + b;
    };

    BialgebraPresentation P;
    P.dim = dim;
    P.field = field;
    P.basis_labels.assign(dim, {});
    P.F = StructureTensor(field, dim);
    P.G = StructureTensor(field, dim);
    P.lambda.assign(dim, Scalar::zero(field));
    P.mu.assign(dim, Scalar::zero(field));

    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            P.basis_labels[index_of(a, b)] = taft_label(a, b);
            if (b == 0) P.mu[index_of(a, b)] = Scalar::one(field);
        }
    if (n == 2) P.basis_labels = {"1", "g", "h", "gh"};
    P.lambda[index_of(0, 0)] = Scalar::one(field);

    // multiplication by normal ordering: g^a h^b * g^c h^d = q^{bc} g^{a+c} h^{b+d}
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d) {
                    if (b + d >= n) continue;  // h^n = 0
                    unsigned i = index_of(a, b), j = index_of(c, d);
                    unsigned k = index_of((a + c) % n, b + d);
                    P.F.at(i, j, k) = q.pow(static_cast<unsigned long>(b) * c);
                }

    // comultiplication: expand Delta(g)^a Delta(h)^b inside A (x) A using the
    // F tensor just built, so the constants are forced by the generator data
    Matrix delta_g(field, dim, dim);  // g (x) g
    delta_g.at(index_of(1, 0), index_of(1, 0)) = Scalar::one(field);
    Matrix delta_h(field, dim, dim);  // 1 (x) h + h (x) g
    delta_h.at(index_of(0, 0), index_of(0, 1)) = Scalar::one(field);
    delta_h.at(index_of(0, 1), index_of(1, 0)) = Scalar::one(field);
    Matrix delta_unit(field, dim, dim);
    delta_unit.at(index_of(0, 0), index_of(0, 0)) = Scalar::one(field);

    std::vector<Matrix> delta_g_pow{delta_unit};
    for (unsigned a = 1; a < n; ++a)
        delta_g_pow.push_back(tensor_square_multiply(P.F, delta_g_pow.back(), delta_g));
    std::vector<Matrix> delta_h_pow{delta_unit};
    for (unsigned b = 1; b < n; ++b)
        delta_h_pow.push_back(tensor_square_multiply(P.F, delta_h_pow.back(), delta_h));

    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            Matrix d = tensor_square_multiply(P.F, delta_g_pow[a], delta_h_pow[b]);
            unsigned k = index_of(a, b);
            for (unsigned i = 0; i < dim; ++i)
                for (unsigned j = 0; j < dim; ++j) P.G.at(i, j, k) = d.at(i, j);
        }

    // antipode: S(g^a h^b) = S(h)^b S(g)^a with S(g) = g^{n-1},
    // S(h) = -q^{-1} g^{n-1} h, extended anti-multiplicatively
    Element sg = basis_element(field, dim, index_of(n - 1, 0));
    Element sh = scale(-q.inverse(), basis_element(field, dim, index_of(n - 1, 1)));
    Matrix A(field, dim, dim);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            Element img = element_power_by_tensor(P.F, P.lambda, sh, b);
            Element sga = element_power_by_tensor(P.F, P.lambda, sg, a);
            img = multiply_by_tensor(P.F, img, sga);
            unsigned col = index_of(a, b);
            for (unsigned r = 0; r < dim; ++r) A.at(r, col) = img.coords[r];
        }
    P.antipode = std::move(A);
    return P;
}

DualityWitness taft2_witness(const FieldSpec& field) {
    if (field.characteristic() == 2) throw DomainError("taft2 witness requires char != 2");
    Matrix S(field, 4, 4);
    const Scalar one = Scalar::one(field);
    S.at(0, 0) = one;
    S.at(0, 1) = one;
    S.at(1, 0) = one;
    S.at(1, 1) = -one;
    S.at(2, 2) = one;
    S.at(2, 3) = one;
    S.at(3, 2) = one;
    S.at(3, 3) = -one;
    return DualityWitness(std::move(S));
}

BialgebraPresentation tensor_with_dual(const BialgebraPresentation& P) {
    const unsigned n = P.dim;
    const unsigned dim = n * n;
    const FieldSpec& f = P.field;
    BialgebraPresentation T;
    T.dim = dim;
    T.field = f;
    T.F = StructureTensor(f, dim);
    T.G = StructureTensor(f, dim);
    T.lambda.assign(dim, Scalar::zero(f));
    T.mu.assign(dim, Scalar::zero(f));
    auto idx = [n](unsigned i, unsigned j) { return i * n + j; };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            T.basis_labels.push_back(P.basis_labels[i] + "(x)" + P.basis_labels[j] + "*");
            T.lambda[idx(i, j)] = P.lambda[i] * P.mu[j];
            T.mu[idx(i, j)] = P.mu[i] * P.lambda[j];
        }
    // componentwise product: A-leg by F, A*-leg by G (the dual product);
    // componentwise coproduct: A-leg by G, A*-leg by F
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < n; ++j1)
            for (unsigned i2 = 0; i2 < n; ++i2)
                for (unsigned j2 = 0; j2 < n; ++j2)
                    for (unsigned i3 = 0; i3 < n; ++i3)
                        for (unsigned j3 = 0; j3 < n; ++j3) {
                            const Scalar& fa = P.F.at(i1, i2, i3);
                            const Scalar& gb = P.G.at(j1, j2, j3);
                            if (!fa.is_zero() && !gb.is_zero())
                                T.F.at(idx(i1, j1), idx(i2, j2), idx(i3, j3)) = fa * gb;
                            const Scalar& ga = P.G.at(i1, i2, i3);
                            const Scalar& fb = P.F.at(j1, j2, j3);
                            if (!ga.is_zero() && !fb.is_zero())
                                T.G.at(idx(i1, j1), idx(i2, j2), idx(i3, j3)) = ga * fb;
                        }
    if (P.antipode) {
        Matrix A(f, dim, dim);
        const Matrix& S = *P.antipode;
        Matrix St = S.transpose();
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned a = 0; a < n; ++a)
                    for (unsigned b = 0; b < n; ++b) {
                        Scalar v = S.at(a, i) * St.at(b, j);
                        if (!v.is_zero()) A.at(idx(a, b), idx(i, j)) = v;
                    }
        T.antipode = std::move(A);
    }
    return T;
}

}  // namespace ihopf
