// SPDX-License-Identifier: Apache-2.0
#include "ihopf/ihopf.hpp"

#include "ihopf/kernels.hpp"

namespace ihopf {

namespace {

void post_check(IAlgebra& I, int jobs) {
    AxiomReport assoc = verify_associativity(I.iF, jobs);
    if (!assoc.holds)
        throw PostconditionError("constructed diamond product is not associative: " +
                                 assoc.to_line());
    AxiomReport unit = verify_unit(I.iF, I.lambda);
    if (!unit.holds)
        throw PostconditionError("u(1) is not a unit for the diamond product: " + unit.to_line());
}

}  // namespace

IAlgebra i_construct_simple(const BialgebraPresentation& P, int jobs) {
    if (P.F != P.G) throw DomainError("i_construct_simple requires F = G entrywise");
    IAlgebra I;
    I.dim = P.dim;
    I.field = P.field;
    I.basis_labels = P.basis_labels;
    I.lambda = P.lambda;
    I.provenance = IConstruction::simple;
    I.source = "simple construction (F = G)";
    I.iF = jobs == 1 ? kernels::ihopf_simple_serial(P.F)
                     : kernels::ihopf_simple_parallel(P.F, jobs);
    post_check(I, jobs);
    return I;
}

IAlgebra i_construct_scaled(const BialgebraPresentation& P, const std::vector<Scalar>& s,
                            int jobs) {
    const unsigned n = P.dim;
    if (s.size() != n) throw DomainError("scaling vector length != dim");
    for (const Scalar& v : s) {
        if (v.field() != P.field) throw FieldMismatchError("scaling vector field mismatch");
        if (v.is_zero()) throw DomainError("scaling vector entries must be nonzero");
    }
    // hypothesis: F(i,j,k) = G(i,j,k) * s_k / (s_i s_j) entrywise
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                Scalar want = P.G.at(i, j, k) * s[k] / (s[i] * s[j]);
                if (P.F.at(i, j, k) != want)
                    throw DomainError("scaled relation F = G*s_k/(s_i s_j) fails at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")");
            }
    IAlgebra I;
    I.dim = n;
    I.field = P.field;
    I.basis_labels = P.basis_labels;
    I.lambda = P.lambda;
    I.provenance = IConstruction::scaled;
    I.source = "scaled construction";
    I.iF = jobs == 1 ? kernels::ihopf_scaled_serial(P.G, P.F, s)
                     : kernels::ihopf_scaled_parallel(P.G, P.F, s, jobs);
    post_check(I, jobs);
    return I;
}

IAlgebra i_construct_general(const BialgebraPresentation& P, const DualityWitness& W, int jobs) {
    if (W.S.rows() != P.dim) throw DomainError("witness dim != presentation dim");
    if (!is_symmetric(W)) throw DomainError("general construction requires a symmetric witness");
    AxiomReport alg = verify_selfdual_algebra(P, W);
    if (!alg.holds)
        throw DomainError("witness does not define an algebra isomorphism onto the dual: " +
                          alg.to_line());
    IAlgebra I;
    I.dim = P.dim;
    I.field = P.field;
    I.basis_labels = P.basis_labels;
    I.lambda = P.lambda;
    I.provenance = IConstruction::general;
    I.source = "general construction";
    I.iF = jobs == 1 ? kernels::ihopf_general_serial(W.S, P.G, P.F)
                     : kernels::ihopf_general_parallel(W.S, P.G, P.F, jobs);
    post_check(I, jobs);
    return I;
}

bool is_commutative(const IAlgebra& I) {
    const unsigned n = I.dim;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                if (I.iF.at(i, j, k) != I.iF.at(j, i, k)) return false;
    return true;
}

AxiomReport verify_cyclic_witness(const IAlgebra& I, const Element& x, unsigned m) {
    if (m != I.dim) throw DomainError("cyclic witness order must equal the algebra dimension");
    std::vector<std::vector<Scalar>> powers;
    Element acc = I.unit();
    for (unsigned k = 0; k < m; ++k) {
        powers.push_back(acc.coords);
        acc = I.multiply(acc, x);
    }
    // rank of the m x n coordinate matrix of x^0 .. x^{m-1}
    unsigned r = row_rank(I.field, powers);
    if (r != m) {
        return AxiomReport{"cyclic_witness", false,
                           AxiomViolation{{r}, Scalar::from_int(I.field, static_cast<long>(r)),
                                          Scalar::from_int(I.field, static_cast<long>(m))}};
    }
    // acc now holds x^m; it must equal the unit
    for (unsigned k = 0; k < I.dim; ++k)
        if (acc.coords[k] != I.lambda[k])
            return AxiomReport{"cyclic_witness", false,
                               AxiomViolation{{m, k}, acc.coords[k], I.lambda[k]}};
    return AxiomReport{"cyclic_witness", true, std::nullopt};
}

}  // namespace ihopf
