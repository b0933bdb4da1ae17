// SPDX-License-Identifier: Apache-2.0
#include "ihopf/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ihopf::kernels {

namespace {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0) return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

void check_pair(const StructureTensor& A, const StructureTensor& B) {
    if (A.dim() != B.dim()) throw DomainError("tensor dimension mismatch");
    if (A.field() != B.field()) throw FieldMismatchError("tensor field mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// triple constants

namespace {

inline void triple_row(const StructureTensor& T, AssocSide side, unsigned i, Rank4& out) {
    const unsigned n = T.dim();
    if (side == AssocSide::left) {
        // out(i,j,k,l) = sum_s T(i,j,s) T(s,k,l)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned s = 0; s < n; ++s) {
                const Scalar& a = T.at(i, j, s);
                if (a.is_zero()) continue;
                for (unsigned k = 0; k < n; ++k)
                    for (unsigned l = 0; l < n; ++l) {
                        const Scalar& b = T.at(s, k, l);
                        if (b.is_zero()) continue;
                        out.at(i, j, k, l) += a * b;
                    }
            }
    } else {
        // out(i,j,k,l) = sum_t T(i,t,l) T(j,k,t)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                for (unsigned t = 0; t < n; ++t) {
                    const Scalar& b = T.at(j, k, t);
                    if (b.is_zero()) continue;
                    for (unsigned l = 0; l < n; ++l) {
                        const Scalar& a = T.at(i, t, l);
                        if (a.is_zero()) continue;
                        out.at(i, j, k, l) += a * b;
                    }
                }
    }
}

}  // namespace

Rank4 triple_constants_serial(const StructureTensor& T, AssocSide side) {
    Rank4 out(T.field(), T.dim());
    for (unsigned i = 0; i < T.dim(); ++i) triple_row(T, side, i, out);
    return out;
}

Rank4 triple_constants_parallel(const StructureTensor& T, AssocSide side, int jobs) {
    Rank4 out(T.field(), T.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(T.dim());
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < n; ++i) triple_row(T, side, static_cast<unsigned>(i), out);
    return out;
}

// ---------------------------------------------------------------------------
// Green identity

namespace {

inline void green_lhs_row(const StructureTensor& F, const StructureTensor& G, unsigned i,
                          Rank4& out) {
    const unsigned n = F.dim();
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k) {
            const Scalar& f = F.at(i, j, k);
            if (f.is_zero()) continue;
            for (unsigned k1 = 0; k1 < n; ++k1)
                for (unsigned k2 = 0; k2 < n; ++k2) {
                    const Scalar& g = G.at(k1, k2, k);
                    if (g.is_zero()) continue;
                    out.at(i, j, k1, k2) += f * g;
                }
        }
}

// One (i, *) slab of the reordered right-hand side, using caller-provided
// scratch tensors t1 and t2 of shape n^3.
inline void green_rhs_slab(const StructureTensor& F, const StructureTensor& G, unsigned i,
                           StructureTensor& t1, StructureTensor& t2, Rank4& out) {
    const unsigned n = F.dim();
    const Scalar zero = Scalar::zero(F.field());
    // t1(i1, j2, k2) = sum_{i2} G(i1,i2,i) F(i2,j2,k2)
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j2 = 0; j2 < n; ++j2)
            for (unsigned k2 = 0; k2 < n; ++k2) t1.at(i1, j2, k2) = zero;
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned i2 = 0; i2 < n; ++i2) {
            const Scalar& g = G.at(i1, i2, i);
            if (g.is_zero()) continue;
            for (unsigned j2 = 0; j2 < n; ++j2)
                for (unsigned k2 = 0; k2 < n; ++k2) {
                    const Scalar& f = F.at(i2, j2, k2);
                    if (f.is_zero()) continue;
                    t1.at(i1, j2, k2) += g * f;
                }
        }
    for (unsigned j = 0; j < n; ++j) {
        // t2(i1, j1, k2) = sum_{j2} G(j1,j2,j) t1(i1, j2, k2)
        for (unsigned i1 = 0; i1 < n; ++i1)
            for (unsigned j1 = 0; j1 < n; ++j1)
                for (unsigned k2 = 0; k2 < n; ++k2) t2.at(i1, j1, k2) = zero;
        for (unsigned j1 = 0; j1 < n; ++j1)
            for (unsigned j2 = 0; j2 < n; ++j2) {
                const Scalar& g = G.at(j1, j2, j);
                if (g.is_zero()) continue;
                for (unsigned i1 = 0; i1 < n; ++i1)
                    for (unsigned k2 = 0; k2 < n; ++k2) {
                        const Scalar& t = t1.at(i1, j2, k2);
                        if (t.is_zero()) continue;
                        t2.at(i1, j1, k2) += g * t;
                    }
            }
        // out(i,j,k1,k2) = sum_{i1,j1} F(i1,j1,k1) t2(i1, j1, k2)
        for (unsigned i1 = 0; i1 < n; ++i1)
            for (unsigned j1 = 0; j1 < n; ++j1)
                for (unsigned k1 = 0; k1 < n; ++k1) {
                    const Scalar& f = F.at(i1, j1, k1);
                    if (f.is_zero()) continue;
                    for (unsigned k2 = 0; k2 < n; ++k2) {
                        const Scalar& t = t2.at(i1, j1, k2);
                        if (t.is_zero()) continue;
                        out.at(i, j, k1, k2) += f * t;
                    }
                }
    }
}

}  // namespace

Rank4 green_lhs_serial(const StructureTensor& F, const StructureTensor& G) {
    check_pair(F, G);
    Rank4 out(F.field(), F.dim());
    for (unsigned i = 0; i < F.dim(); ++i) green_lhs_row(F, G, i, out);
    return out;
}

Rank4 green_lhs_parallel(const StructureTensor& F, const StructureTensor& G, int jobs) {
    check_pair(F, G);
    Rank4 out(F.field(), F.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(F.dim());
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < n; ++i) green_lhs_row(F, G, static_cast<unsigned>(i), out);
    return out;
}

Rank4 green_rhs_serial(const StructureTensor& F, const StructureTensor& G) {
    check_pair(F, G);
    Rank4 out(F.field(), F.dim());
    StructureTensor t1(F.field(), F.dim()), t2(F.field(), F.dim());
    for (unsigned i = 0; i < F.dim(); ++i) green_rhs_slab(F, G, i, t1, t2, out);
    return out;
}

Rank4 green_rhs_parallel(const StructureTensor& F, const StructureTensor& G, int jobs) {
    check_pair(F, G);
    Rank4 out(F.field(), F.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(F.dim());
#pragma omp parallel num_threads(nt)
    {
        StructureTensor t1(F.field(), F.dim()), t2(F.field(), F.dim());
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) green_rhs_slab(F, G, static_cast<unsigned>(i), t1, t2, out);
    }
    return out;
}

Rank4 green_rhs_naive(const StructureTensor& F, const StructureTensor& G) {
    check_pair(F, G);
    const unsigned n = F.dim();
    if (n > 4) throw DomainError("naive Green oracle is gated to dim <= 4");
    Rank4 out(F.field(), n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k1 = 0; k1 < n; ++k1)
                for (unsigned k2 = 0; k2 < n; ++k2) {
                    Scalar sum = Scalar::zero(F.field());
                    for (unsigned i1 = 0; i1 < n; ++i1)
                        for (unsigned i2 = 0; i2 < n; ++i2)
                            for (unsigned j1 = 0; j1 < n; ++j1)
                                for (unsigned j2 = 0; j2 < n; ++j2)
                                    sum += G.at(i1, i2, i) * G.at(j1, j2, j) * F.at(i1, j1, k1) *
                                           F.at(i2, j2, k2);
                    out.at(i, j, k1, k2) = sum;
                }
    return out;
}

// ---------------------------------------------------------------------------
// diamond products

namespace {

// iF(i,j,k) = sum_{a,b,c} F(a,c,j) F(c,b,i) F(b,a,k), evaluated per output
// row i as two pairwise contractions.
inline void ihopf_simple_row(const StructureTensor& F, unsigned i, StructureTensor& out) {
    const unsigned n = F.dim();
    // contract over c first: p(a,b,j) = sum_c F(a,c,j) F(c,b,i)
    std::vector<Scalar> p(std::size_t(n) * n * n, Scalar::zero(F.field()));
    auto pat = [&](unsigned a, unsigned b, unsigned j) -> Scalar& {
        return p[(std::size_t(a) * n + b) * n + j];
    };
    for (unsigned c = 0; c < n; ++c)
        for (unsigned b = 0; b < n; ++b) {
            const Scalar& fcb = F.at(c, b, i);
            if (fcb.is_zero()) continue;
            for (unsigned a = 0; a < n; ++a)
                for (unsigned j = 0; j < n; ++j) {
                    const Scalar& fac = F.at(a, c, j);
                    if (fac.is_zero()) continue;
                    pat(a, b, j) += fac * fcb;
                }
        }
    // out(i,j,k) = sum_{a,b} p(a,b,j) F(b,a,k)
    for (unsigned b = 0; b < n; ++b)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& fba = F.at(b, a, k);
                if (fba.is_zero()) continue;
                for (unsigned j = 0; j < n; ++j) {
                    const Scalar& pv = pat(a, b, j);
                    if (pv.is_zero()) continue;
                    out.at(i, j, k) += pv * fba;
                }
            }
}

// iF(i,j,k) = sum_{a,b,c} G(a,c,j) G(c,b,i) F(b,a,k) / s[c]
inline void ihopf_scaled_row(const StructureTensor& G, const StructureTensor& F,
                             const std::vector<Scalar>& sinv, unsigned i, StructureTensor& out) {
    const unsigned n = G.dim();
    std::vector<Scalar> p(std::size_t(n) * n * n, Scalar::zero(G.field()));
    auto pat = [&](unsigned a, unsigned b, unsigned j) -> Scalar& {
        return p[(std::size_t(a) * n + b) * n + j];
    };
    // p(a,b,j) = sum_c G(a,c,j) G(c,b,i) / s[c]
    for (unsigned c = 0; c < n; ++c)
        for (unsigned b = 0; b < n; ++b) {
            const Scalar& gcb = G.at(c, b, i);
            if (gcb.is_zero()) continue;
            Scalar w = gcb * sinv[c];
            for (unsigned a = 0; a < n; ++a)
                for (unsigned j = 0; j < n; ++j) {
                    const Scalar& gac = G.at(a, c, j);
                    if (gac.is_zero()) continue;
                    pat(a, b, j) += gac * w;
                }
        }
    for (unsigned b = 0; b < n; ++b)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& fba = F.at(b, a, k);
                if (fba.is_zero()) continue;
                for (unsigned j = 0; j < n; ++j) {
                    const Scalar& pv = pat(a, b, j);
                    if (pv.is_zero()) continue;
                    out.at(i, j, k) += pv * fba;
                }
            }
}

// iF(i,j,k) = sum_{y1,y2,x,z} S(y1,y2) G(y1,x,i) G(z,y2,j) F(x,z,k)
// per output row i:
//   c1(y2, x)   = sum_{y1} S(y1,y2) G(y1,x,i)
//   c2(j, x, z) = sum_{y2} c1(y2,x) G(z,y2,j)
//   out(i,j,k)  = sum_{x,z} c2(j,x,z) F(x,z,k)
inline void ihopf_general_row(const Matrix& S, const StructureTensor& G, const StructureTensor& F,
                              unsigned i, StructureTensor& out) {
    const unsigned n = G.dim();
    const Scalar zero = Scalar::zero(G.field());
    std::vector<Scalar> c1(std::size_t(n) * n, zero);
    auto c1at = [&](unsigned y2, unsigned x) -> Scalar& { return c1[std::size_t(y2) * n + x]; };
    for (unsigned y1 = 0; y1 < n; ++y1)
        for (unsigned x = 0; x < n; ++x) {
            const Scalar& g = G.at(y1, x, i);
            if (g.is_zero()) continue;
            for (unsigned y2 = 0; y2 < n; ++y2) {
                const Scalar& s = S.at(y1, y2);
                if (s.is_zero()) continue;
                c1at(y2, x) += s * g;
            }
        }
    std::vector<Scalar> c2(std::size_t(n) * n * n, zero);
    auto c2at = [&](unsigned j, unsigned x, unsigned z) -> Scalar& {
        return c2[(std::size_t(j) * n + x) * n + z];
    };
    for (unsigned z = 0; z < n; ++z)
        for (unsigned y2 = 0; y2 < n; ++y2)
            for (unsigned j = 0; j < n; ++j) {
                const Scalar& g = G.at(z, y2, j);
                if (g.is_zero()) continue;
                for (unsigned x = 0; x < n; ++x) {
                    const Scalar& c = c1at(y2, x);
                    if (c.is_zero()) continue;
                    c2at(j, x, z) += c * g;
                }
            }
    for (unsigned x = 0; x < n; ++x)
        for (unsigned z = 0; z < n; ++z)
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& f = F.at(x, z, k);
                if (f.is_zero()) continue;
                for (unsigned j = 0; j < n; ++j) {
                    const Scalar& c = c2at(j, x, z);
                    if (c.is_zero()) continue;
                    out.at(i, j, k) += c * f;
                }
            }
}

}  // namespace

StructureTensor ihopf_simple_serial(const StructureTensor& F) {
    StructureTensor out(F.field(), F.dim());
    for (unsigned i = 0; i < F.dim(); ++i) ihopf_simple_row(F, i, out);
    return out;
}

StructureTensor ihopf_simple_parallel(const StructureTensor& F, int jobs) {
    StructureTensor out(F.field(), F.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(F.dim());
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < n; ++i) ihopf_simple_row(F, static_cast<unsigned>(i), out);
    return out;
}

StructureTensor ihopf_scaled_serial(const StructureTensor& G, const StructureTensor& F,
                                    const std::vector<Scalar>& s) {
    check_pair(G, F);
    std::vector<Scalar> sinv;
    sinv.reserve(s.size());
    for (const Scalar& v : s) sinv.push_back(v.inverse());
    StructureTensor out(G.field(), G.dim());
    for (unsigned i = 0; i < G.dim(); ++i) ihopf_scaled_row(G, F, sinv, i, out);
    return out;
}

StructureTensor ihopf_scaled_parallel(const StructureTensor& G, const StructureTensor& F,
                                      const std::vector<Scalar>& s, int jobs) {
    check_pair(G, F);
    std::vector<Scalar> sinv;
    sinv.reserve(s.size());
    for (const Scalar& v : s) sinv.push_back(v.inverse());
    StructureTensor out(G.field(), G.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(G.dim());
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < n; ++i) ihopf_scaled_row(G, F, sinv, static_cast<unsigned>(i), out);
    return out;
}

StructureTensor ihopf_general_serial(const Matrix& S, const StructureTensor& G,
                                     const StructureTensor& F) {
    check_pair(G, F);
    StructureTensor out(G.field(), G.dim());
    for (unsigned i = 0; i < G.dim(); ++i) ihopf_general_row(S, G, F, i, out);
    return out;
}

StructureTensor ihopf_general_parallel(const Matrix& S, const StructureTensor& G,
                                       const StructureTensor& F, int jobs) {
    check_pair(G, F);
    StructureTensor out(G.field(), G.dim());
    const int nt = resolve_jobs(jobs);
    const int n = static_cast<int>(G.dim());
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < n; ++i) ihopf_general_row(S, G, F, static_cast<unsigned>(i), out);
    return out;
}

// ---------------------------------------------------------------------------
// base-change transport

StructureTensor transform_f_tensor(const StructureTensor& F, const Matrix& T, const Matrix& Tinv) {
    const unsigned n = F.dim();
    const FieldSpec& fl = F.field();
    // step 1: contract the output leg with Tinv: s1(i,j,c) = sum_k Tinv(c,k) F(i,j,k)
    StructureTensor s1(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& f = F.at(i, j, k);
                if (f.is_zero()) continue;
                for (unsigned c = 0; c < n; ++c) {
                    const Scalar& t = Tinv.at(c, k);
                    if (t.is_zero()) continue;
                    s1.at(i, j, c) += t * f;
                }
            }
    // step 2: s2(i,b,c) = sum_j T(j,b) s1(i,j,c)
    StructureTensor s2(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned c = 0; c < n; ++c) {
                const Scalar& v = s1.at(i, j, c);
                if (v.is_zero()) continue;
                for (unsigned b = 0; b < n; ++b) {
                    const Scalar& t = T.at(j, b);
                    if (t.is_zero()) continue;
                    s2.at(i, b, c) += t * v;
                }
            }
    // step 3: out(a,b,c) = sum_i T(i,a) s2(i,b,c)
    StructureTensor out(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c) {
                const Scalar& v = s2.at(i, b, c);
                if (v.is_zero()) continue;
                for (unsigned a = 0; a < n; ++a) {
                    const Scalar& t = T.at(i, a);
                    if (t.is_zero()) continue;
                    out.at(a, b, c) += t * v;
                }
            }
    return out;
}

StructureTensor transform_g_tensor(const StructureTensor& G, const Matrix& T, const Matrix& Tinv) {
    const unsigned n = G.dim();
    const FieldSpec& fl = G.field();
    // Gnew(a,b,c) = sum_{i,j,k} Tinv(a,i) Tinv(b,j) T(k,c) G(i,j,k)
    StructureTensor s1(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                const Scalar& g = G.at(i, j, k);
                if (g.is_zero()) continue;
                for (unsigned c = 0; c < n; ++c) {
                    const Scalar& t = T.at(k, c);
                    if (t.is_zero()) continue;
                    s1.at(i, j, c) += t * g;
                }
            }
    StructureTensor s2(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned c = 0; c < n; ++c) {
                const Scalar& v = s1.at(i, j, c);
                if (v.is_zero()) continue;
                for (unsigned b = 0; b < n; ++b) {
                    const Scalar& t = Tinv.at(b, j);
                    if (t.is_zero()) continue;
                    s2.at(i, b, c) += t * v;
                }
            }
    StructureTensor out(fl, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c) {
                const Scalar& v = s2.at(i, b, c);
                if (v.is_zero()) continue;
                for (unsigned a = 0; a < n; ++a) {
                    const Scalar& t = Tinv.at(a, i);
                    if (t.is_zero()) continue;
                    out.at(a, b, c) += t * v;
                }
            }
    return out;
}

}  // namespace ihopf::kernels
