// SPDX-License-Identifier: Apache-2.0
#include "ihopf/duality.hpp"

namespace ihopf {

DualityWitness::DualityWitness(Matrix s) : S(std::move(s)) {
    if (S.rows() != S.cols()) throw DomainError("duality witness must be square");
    if (!S.is_invertible()) throw DomainError("duality witness must be invertible");
}

bool is_symmetric(const DualityWitness& W) { return W.S.is_symmetric(); }

BialgebraPresentation dualize(const BialgebraPresentation& P) {
    BialgebraPresentation D;
    D.dim = P.dim;
    D.field = P.field;
    D.basis_labels.reserve(P.dim);
    for (const std::string& l : P.basis_labels) {
        if (!l.empty() && l.back() == '*')
            D.basis_labels.push_back(l.substr(0, l.size() - 1));
        else
            D.basis_labels.push_back(l + "*");
    }
    D.F = P.G;
    D.G = P.F;
    D.lambda = P.mu;
    D.mu = P.lambda;
    if (P.antipode) D.antipode = P.antipode->transpose();
    return D;
}

AxiomReport verify_selfdual_algebra(const BialgebraPresentation& P, const DualityWitness& W) {
    const unsigned n = P.dim;
    if (W.S.rows() != n) throw DomainError("witness dim != presentation dim");
    const Scalar zero = Scalar::zero(P.field);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned l = 0; l < n; ++l) {
                Scalar lhs = zero;
                for (unsigned k = 0; k < n; ++k)
                    if (!P.F.at(i, j, k).is_zero() && !W.S.at(l, k).is_zero())
                        lhs += P.F.at(i, j, k) * W.S.at(l, k);
                Scalar rhs = zero;
                for (unsigned i1 = 0; i1 < n; ++i1) {
                    if (W.S.at(i1, i).is_zero()) continue;
                    for (unsigned j1 = 0; j1 < n; ++j1) {
                        if (W.S.at(j1, j).is_zero() || P.G.at(i1, j1, l).is_zero()) continue;
                        rhs += W.S.at(i1, i) * W.S.at(j1, j) * P.G.at(i1, j1, l);
                    }
                }
                if (lhs != rhs)
                    return AxiomReport{"selfdual_algebra", false,
                                       AxiomViolation{{i, j, l}, lhs, rhs}};
            }
    return AxiomReport{"selfdual_algebra", true, std::nullopt};
}

AxiomReport verify_selfdual_coalgebra(const BialgebraPresentation& P, const DualityWitness& W) {
    const unsigned n = P.dim;
    if (W.S.rows() != n) throw DomainError("witness dim != presentation dim");
    const Scalar zero = Scalar::zero(P.field);
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < n; ++j1)
            for (unsigned k = 0; k < n; ++k) {
                Scalar lhs = zero;
                for (unsigned i = 0; i < n; ++i) {
                    if (W.S.at(i1, i).is_zero()) continue;
                    for (unsigned j = 0; j < n; ++j) {
                        if (W.S.at(j1, j).is_zero() || P.G.at(i, j, k).is_zero()) continue;
                        lhs += W.S.at(i1, i) * W.S.at(j1, j) * P.G.at(i, j, k);
                    }
                }
                Scalar rhs = zero;
                for (unsigned l = 0; l < n; ++l)
                    if (!W.S.at(l, k).is_zero() && !P.F.at(i1, j1, l).is_zero())
                        rhs += W.S.at(l, k) * P.F.at(i1, j1, l);
                if (lhs != rhs)
                    return AxiomReport{"selfdual_coalgebra", false,
                                       AxiomViolation{{i1, j1, k}, lhs, rhs}};
            }
    return AxiomReport{"selfdual_coalgebra", true, std::nullopt};
}

std::optional<AxiomReport> verify_selfdual_antipode(const BialgebraPresentation& P,
                                                    const DualityWitness& W) {
    if (!P.antipode) return std::nullopt;
    Matrix lhs = W.S * (*P.antipode);
    Matrix rhs = P.antipode->transpose() * W.S;
    const unsigned n = P.dim;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return AxiomReport{"selfdual_antipode", false,
                                   AxiomViolation{{i, j}, lhs.at(i, j), rhs.at(i, j)}};
    return AxiomReport{"selfdual_antipode", true, std::nullopt};
}

}  // namespace ihopf
