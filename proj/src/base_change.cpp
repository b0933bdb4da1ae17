// SPDX-License-Identifier: Apache-2.0
#include "ihopf/base_change.hpp"

#include "ihopf/kernels.hpp"

namespace ihopf {

BialgebraPresentation transform_presentation(const BialgebraPresentation& P,
                                             const TransitionData& TD) {
    if (TD.T.rows() != P.dim) throw DomainError("transition dim != presentation dim");
    if (TD.T.field() != P.field) throw FieldMismatchError("transition field mismatch");
    BialgebraPresentation out;
    out.dim = P.dim;
    out.field = P.field;
    out.basis_labels.reserve(P.dim);
    for (unsigned i = 0; i < P.dim; ++i) out.basis_labels.push_back("e" + std::to_string(i + 1));
    out.F = kernels::transform_f_tensor(P.F, TD.T, TD.Tinv);
    out.G = kernels::transform_g_tensor(P.G, TD.T, TD.Tinv);
    out.lambda = TD.Tinv.apply(P.lambda);
    out.mu = TD.T.apply_transposed(P.mu);
    if (P.antipode) out.antipode = TD.Tinv * (*P.antipode) * TD.T;
    return out;
}

CongruenceResult congruence_diagonalize(const Matrix& S) {
    if (!S.is_symmetric()) throw DomainError("congruence diagonalization needs a symmetric matrix");
    if (S.field().characteristic() == 2)
        throw DomainError("congruence diagonalization requires characteristic != 2");
    const unsigned n = S.rows();
    const FieldSpec& f = S.field();
    Matrix M = S;
    Matrix C = Matrix::identity(f, n);  // row operations applied so far: M = C S C^t

    auto add_row_col = [&](unsigned dst, unsigned src, const Scalar& c) {
        // row dst += c * row src, then col dst += c * col src (keeps symmetry)
        for (unsigned j = 0; j < n; ++j) {
            M.at(dst, j) += c * M.at(src, j);
            C.at(dst, j) += c * C.at(src, j);
        }
        for (unsigned i = 0; i < n; ++i) M.at(i, dst) += c * M.at(i, src);
    };
    auto swap_row_col = [&](unsigned a, unsigned b) {
        if (a == b) return;
        for (unsigned j = 0; j < n; ++j) {
            std::swap(M.at(a, j), M.at(b, j));
            std::swap(C.at(a, j), C.at(b, j));
        }
        for (unsigned i = 0; i < n; ++i) std::swap(M.at(i, a), M.at(i, b));
    };

    for (unsigned r = 0; r < n; ++r) {
        if (M.at(r, r).is_zero()) {
            unsigned pick = n;
            for (unsigned l = r + 1; l < n; ++l)
                if (!M.at(l, l).is_zero()) {
                    pick = l;
                    break;
                }
            if (pick < n) {
                swap_row_col(r, pick);
            } else {
                // all remaining diagonal entries vanish; look for an
                // off-diagonal M(i,j) != 0 and add row/col j into row/col i,
                // which creates the diagonal pivot 2 M(i,j)
                unsigned oi = n, oj = n;
                for (unsigned i = r; i < n && oi == n; ++i)
                    for (unsigned j = i + 1; j < n; ++j)
                        if (!M.at(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) break;  // remaining block is zero, already diagonal
                add_row_col(oi, oj, Scalar::one(f));
                swap_row_col(r, oi);
            }
        }
        Scalar pivot_inv = M.at(r, r).inverse();
        for (unsigned i = r + 1; i < n; ++i) {
            if (M.at(i, r).is_zero()) continue;
            Scalar c = -(M.at(i, r) * pivot_inv);
            add_row_col(i, r, c);
        }
    }

    CongruenceResult res{Matrix(f, n, n), Matrix(f, n, n)};
    // M = C S C^t is diagonal; with P := (C^{-1})^t we get S = P^t M P.
    res.P = C.inverse().transpose();
    for (unsigned i = 0; i < n; ++i) res.D.at(i, i) = M.at(i, i);
    return res;
}

GramResult gram_factorize(const Matrix& S) {
    CongruenceResult cd = congruence_diagonalize(S);
    const unsigned n = S.rows();
    Matrix rootD(S.field(), n, n);
    for (unsigned i = 0; i < n; ++i) {
        auto r = scalar_sqrt(cd.D.at(i, i));
        if (!r) return NotRepresentable{i, cd.D.at(i, i)};
        rootD.at(i, i) = *r;
    }
    return rootD * cd.P;
}

NormalizeResult normalize_to_FeqG(const BialgebraPresentation& P, const DualityWitness& W) {
    if (!is_symmetric(W)) throw DomainError("normalize_to_FeqG needs a symmetric witness");
    AxiomReport alg = verify_selfdual_algebra(P, W);
    if (!alg.holds)
        throw DomainError("witness does not define an algebra isomorphism onto the dual");
    GramResult gr = gram_factorize(W.S);
    if (std::holds_alternative<NotRepresentable>(gr))
        return std::get<NotRepresentable>(gr);
    const Matrix& T = std::get<Matrix>(gr);
    // columns of T^{-1} hold the coordinates of the new basis
    TransitionData TD{T.inverse()};
    BialgebraPresentation out = transform_presentation(P, TD);
    if (out.F != out.G)
        throw PostconditionError("normalize_to_FeqG produced F != G; index conventions broken");
    return NormalizedPresentation{std::move(out), std::move(TD)};
}

}  // namespace ihopf
