// SPDX-License-Identifier: Apache-2.0
#include "ihopf/axioms.hpp"

#include "ihopf/kernels.hpp"

namespace ihopf {

std::string AxiomReport::to_line() const {
    if (holds) return "PASS " + axiom_name;
    std::string s = "FAIL " + axiom_name + " at (";
    for (std::size_t i = 0; i < first_violation->tuple.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(first_violation->tuple[i] + 1);
    }
    s += ") lhs=" + first_violation->lhs.to_text() + " rhs=" + first_violation->rhs.to_text();
    return s;
}

namespace {

AxiomReport pass(std::string name) { return AxiomReport{std::move(name), true, std::nullopt}; }

AxiomReport fail(std::string name, std::vector<unsigned> tuple, Scalar lhs, Scalar rhs) {
    return AxiomReport{std::move(name), false,
                       AxiomViolation{std::move(tuple), std::move(lhs), std::move(rhs)}};
}

// Lexicographic scan comparing two rank-4 arrays.
AxiomReport compare_rank4(std::string name, const Rank4& lhs, const Rank4& rhs) {
    const unsigned n = lhs.dim();
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d)
                    if (lhs.at(a, b, c, d) != rhs.at(a, b, c, d))
                        return fail(std::move(name), {a, b, c, d}, lhs.at(a, b, c, d),
                                    rhs.at(a, b, c, d));
    return pass(std::move(name));
}

AxiomReport unit_check(std::string name, const StructureTensor& T, const std::vector<Scalar>& v) {
    const unsigned n = T.dim();
    if (v.size() != n) throw DomainError("vector length != tensor dim");
    const FieldSpec& f = T.field();
    const Scalar one = Scalar::one(f);
    const Scalar zero = Scalar::zero(f);
    // sum_i v_i T(i,j,k) = delta(j,k), scanned as tuples (0,j,k)
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k) {
            Scalar s = zero;
            for (unsigned i = 0; i < n; ++i)
                if (!v[i].is_zero() && !T.at(i, j, k).is_zero()) s += v[i] * T.at(i, j, k);
            const Scalar& want = (j == k) ? one : zero;
            if (s != want) return fail(std::move(name), {0, j, k}, s, want);
        }
    // sum_j v_j T(i,j,k) = delta(i,k), scanned as tuples (1,i,k)
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            Scalar s = zero;
            for (unsigned j = 0; j < n; ++j)
                if (!v[j].is_zero() && !T.at(i, j, k).is_zero()) s += v[j] * T.at(i, j, k);
            const Scalar& want = (i == k) ? one : zero;
            if (s != want) return fail(std::move(name), {1, i, k}, s, want);
        }
    return pass(std::move(name));
}

AxiomReport morphism_check(std::string name, const StructureTensor& T,
                           const std::vector<Scalar>& v) {
    // sum_k T(i,j,k) v_k = v_i v_j
    const unsigned n = T.dim();
    if (v.size() != n) throw DomainError("vector length != tensor dim");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(T.field());
            for (unsigned k = 0; k < n; ++k)
                if (!T.at(i, j, k).is_zero() && !v[k].is_zero()) s += T.at(i, j, k) * v[k];
            Scalar want = v[i] * v[j];
            if (s != want) return fail(std::move(name), {i, j}, s, want);
        }
    return pass(std::move(name));
}

}  // namespace

AxiomReport verify_associativity(const StructureTensor& F, int jobs) {
    Rank4 left = triple_constants(F, AssocSide::left, jobs);
    Rank4 right = triple_constants(F, AssocSide::right, jobs);
    return compare_rank4("associativity", left, right);
}

AxiomReport verify_unit(const StructureTensor& F, const std::vector<Scalar>& lambda) {
    return unit_check("unit", F, lambda);
}

AxiomReport verify_coassociativity(const StructureTensor& G, int jobs) {
    Rank4 left = triple_constants(G, AssocSide::left, jobs);
    Rank4 right = triple_constants(G, AssocSide::right, jobs);
    return compare_rank4("coassociativity", left, right);
}

AxiomReport verify_counit(const StructureTensor& G, const std::vector<Scalar>& mu) {
    return unit_check("counit", G, mu);
}

AxiomReport verify_green_compat(const BialgebraPresentation& P, int jobs) {
    Rank4 lhs = jobs == 1 ? kernels::green_lhs_serial(P.F, P.G)
                          : kernels::green_lhs_parallel(P.F, P.G, jobs);
    Rank4 rhs = jobs == 1 ? kernels::green_rhs_serial(P.F, P.G)
                          : kernels::green_rhs_parallel(P.F, P.G, jobs);
    return compare_rank4("green_compat", lhs, rhs);
}

AxiomReport verify_green_compat_naive(const BialgebraPresentation& P) {
    Rank4 lhs = kernels::green_lhs_serial(P.F, P.G);
    Rank4 rhs = kernels::green_rhs_naive(P.F, P.G);
    return compare_rank4("green_compat", lhs, rhs);
}

AxiomReport verify_counit_compat(const StructureTensor& F, const std::vector<Scalar>& mu) {
    return morphism_check("counit_compat", F, mu);
}

AxiomReport verify_unit_compat(const StructureTensor& G, const std::vector<Scalar>& lambda) {
    return morphism_check("unit_compat", G, lambda);
}

AxiomReport verify_antipode(const BialgebraPresentation& P) {
    if (!P.antipode) throw DomainError("presentation has no antipode");
    const unsigned n = P.dim;
    const Matrix& A = *P.antipode;
    const Scalar zero = Scalar::zero(P.field);
    // For each basis index k, both convolution identities, coordinates l:
    //   left : sum_{i,j,a} G(i,j,k) A(a,i) F(a,j,l) = mu_k lambda_l
    //   right: sum_{i,j,b} G(i,j,k) A(b,j) F(i,b,l) = mu_k lambda_l
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Scalar> left(n, zero), right(n, zero);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const Scalar& g = P.G.at(i, j, k);
                if (g.is_zero()) continue;
                for (unsigned a = 0; a < n; ++a) {
                    if (!A.at(a, i).is_zero()) {
                        Scalar w = g * A.at(a, i);
                        for (unsigned l = 0; l < n; ++l)
                            if (!P.F.at(a, j, l).is_zero()) left[l] += w * P.F.at(a, j, l);
                    }
                    if (!A.at(a, j).is_zero()) {
                        Scalar w = g * A.at(a, j);
                        for (unsigned l = 0; l < n; ++l)
                            if (!P.F.at(i, a, l).is_zero()) right[l] += w * P.F.at(i, a, l);
                    }
                }
            }
        for (unsigned l = 0; l < n; ++l) {
            Scalar want = P.mu[k] * P.lambda[l];
            if (left[l] != want) return fail("antipode", {k, l}, left[l], want);
            if (right[l] != want) return fail("antipode", {k, l}, right[l], want);
        }
    }
    return pass("antipode");
}

std::vector<AxiomReport> verify_all(const BialgebraPresentation& P, int jobs) {
    std::vector<AxiomReport> out;
    out.push_back(verify_associativity(P.F, jobs));
    out.push_back(verify_unit(P.F, P.lambda));
    out.push_back(verify_coassociativity(P.G, jobs));
    out.push_back(verify_counit(P.G, P.mu));
    out.push_back(verify_green_compat(P, jobs));
    out.push_back(verify_counit_compat(P.F, P.mu));
    out.push_back(verify_unit_compat(P.G, P.lambda));
    if (P.antipode) out.push_back(verify_antipode(P));
    return out;
}

bool all_hold(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds) return false;
    return true;
}

}  // namespace ihopf
