// Compares the serial reference kernels against the OpenMP ones and reports
// speedups; every row also checks that both paths produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bkit/action.hpp"
#include "bkit/kernels.hpp"
#include "bkit/oracles.hpp"
#include "bkit/theorems.hpp"

using namespace bkit;

namespace {

int g_reps = 3;

template <class F>
double time_ms(F&& f) {
    double best = 1e300;
    for (int rep = 0; rep < g_reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void set_threads(int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.2f ms %10.2f ms %7.2fx  %s\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_reps = std::atoi(argv[1]);
    const int threads = kernels::max_threads();
    std::printf("threads: %d, reps: %d (best-of)\n", threads, g_reps);
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    const index_t size = 4'000'000;
    std::mt19937_64 rng(42);
    Table perm = kernels::identity_table(size);
    std::shuffle(perm.begin(), perm.end(), rng);

    {
        Table a, b;
        const double s = time_ms([&] { a = kernels::serial::compose(perm, perm); });
        const double p = time_ms([&] { b = kernels::compose(perm, perm); });
        row("compose (4M)", s, p, a == b);
    }
    {
        Table a, b;
        const double s = time_ms([&] { a = kernels::serial::power(perm, 1023); });
        const double p = time_ms([&] { b = kernels::power(perm, 1023); });
        row("power^1023 (4M)", s, p, a == b);
    }

    // A permutation with plenty of fixed points: an order-dividing generator.
    const Table gen = make_random_action(12, size, 7).generator_image;
    const Table squared = kernels::power(gen, 4);
    {
        index_t a = 0, b = 0;
        const double s = time_ms([&] { a = kernels::serial::count_fixed(squared); });
        const double p = time_ms([&] { b = kernels::count_fixed(squared); });
        row("count_fixed (4M)", s, p, a == b);
    }
    {
        std::vector<index_t> a, b;
        const double s = time_ms([&] { a = kernels::serial::fixed_indices(squared); });
        const double p = time_ms([&] { b = kernels::fixed_indices(squared); });
        row("fixed_indices (4M)", s, p, a == b);
    }
    {
        // The words generator map, over 4^10 = 1048576 indices.
        const std::uint64_t a10 = 1'048'576, msd = a10 / 4;
        auto shift = [msd](index_t i) { return i % 4 * msd + i / 4; };
        Table a, b;
        const double s = time_ms([&] { a = kernels::serial::build_table(a10, shift); });
        const double p = time_ms([&] { b = kernels::build_table(a10, shift); });
        row("build_table words(4,10)", s, p, a == b);
    }

    // Whole-oracle builds and the block-subset fixed-point sum: same code,
    // one thread against all of them.
    const std::uint64_t big = 1'000'000'000;
    {
        CyclicAction a, b;
        set_threads(1);
        const double s = time_ms([&] { a = subsets_action(3, 22, 11, big); });
        set_threads(threads);
        const double p = time_ms([&] { b = subsets_action(3, 22, 11, big); });
        row("subsets_action(3,22,11)", s, p, a.generator_image == b.generator_image);
    }
    {
        CyclicAction a, b;
        set_threads(1);
        const double s = time_ms([&] { a = cycles_action(10, big); });
        set_threads(threads);
        const double p = time_ms([&] { b = cycles_action(10, big); });
        row("cycles_action(10)", s, p, a.generator_image == b.generator_image);
    }
    {
        const LucasParams params = lucas_params(8, 48, 20);
        Natural a, b;
        set_threads(1);
        const double s = time_ms([&] { a = lucas_inner_sum(params, 8); });
        set_threads(threads);
        const double p = time_ms([&] { b = lucas_inner_sum(params, 8); });
        row("lucas_inner_sum(8,48,20)@d=8", s, p, a == b);
    }
    {
        // Literal reference against the pruned path at a size the literal
        // enumeration can still handle.
        const LucasParams params = lucas_params(4, 30, 13);
        Natural a, b;
        const double s = time_ms([&] { a = lucas_inner_sum_literal(params, 4); });
        const double p = time_ms([&] { b = lucas_inner_sum(params, 4); });
        row("lucas inner literal vs pruned", s, p, a == b);
    }
    return 0;
}
