// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference kernels against their OpenMP variants and
// checks that both produce identical arrays. Dense random tensors give the
// worst case; the Taft inputs show the sparse structured case.
//
// Usage: bench_kernels [jobs]   (default: all hardware threads)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ihopf/catalog.hpp"
#include "ihopf/kernels.hpp"

using namespace ihopf;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

StructureTensor random_tensor(const FieldSpec& f, unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-4, 4);
    StructureTensor T(f, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) T.at(i, j, k) = Scalar::from_int(f, d(rng));
    return T;
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-34s %10.4fs %10.4fs %7.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    if (argc > 1) jobs = std::atoi(argv[1]);
#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    jobs = 1;
    std::printf("built without OpenMP; parallel variants run serially\n");
#endif
    std::printf("kernel benchmark, %d worker threads\n", jobs);
    std::printf("%-34s %11s %11s %8s\n", "case", "serial", "parallel", "speedup");

    std::mt19937_64 rng(12345);
    auto Q = FieldSpec::rationals();

    for (unsigned n : {6u, 8u, 10u}) {
        StructureTensor F = random_tensor(Q, n, rng);
        StructureTensor G = random_tensor(Q, n, rng);
        Rank4 r1, r2;
        double s = time_of([&] { r1 = kernels::green_rhs_serial(F, G); });
        double p = time_of([&] { r2 = kernels::green_rhs_parallel(F, G, jobs); });
        row(("green RHS, dense random n=" + std::to_string(n)).c_str(), s, p, r1 == r2);
    }

    for (unsigned n : {8u, 10u}) {
        StructureTensor F = random_tensor(Q, n, rng);
        Rank4 r1, r2;
        double s = time_of([&] { r1 = kernels::triple_constants_serial(F, AssocSide::left); });
        double p = time_of(
            [&] { r2 = kernels::triple_constants_parallel(F, AssocSide::left, jobs); });
        row(("triple constants, dense n=" + std::to_string(n)).c_str(), s, p, r1 == r2);
    }

    {
        unsigned n = 8;
        StructureTensor F = random_tensor(Q, n, rng);
        StructureTensor G = random_tensor(Q, n, rng);
        Matrix S(Q, n, n);
        std::uniform_int_distribution<long> d(-4, 4);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                S.at(i, j) = Scalar::from_int(Q, d(rng));
                S.at(j, i) = S.at(i, j);
            }
        StructureTensor t1, t2;
        double s = time_of([&] { t1 = kernels::ihopf_general_serial(S, G, F); });
        double p = time_of([&] { t2 = kernels::ihopf_general_parallel(S, G, F, jobs); });
        row("diamond general, dense n=8", s, p, t1 == t2);
    }

    for (unsigned n : {3u, 4u}) {
        auto P = taft(n, n == 3 ? FieldSpec::cyclotomic(3) : FieldSpec::cyclotomic(4));
        Rank4 r1, r2;
        double s = time_of([&] { r1 = kernels::green_rhs_serial(P.F, P.G); });
        double p = time_of([&] { r2 = kernels::green_rhs_parallel(P.F, P.G, jobs); });
        row(("green RHS, taft(" + std::to_string(n) + ") dim " + std::to_string(n * n)).c_str(),
            s, p, r1 == r2);
    }

    return 0;
}
