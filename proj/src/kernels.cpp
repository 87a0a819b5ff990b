#include "bkit/kernels.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bkit::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int thread_num() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

Table identity_table(index_t size) {
    Table t(size);
    std::iota(t.begin(), t.end(), index_t{0});
    return t;
}

bool is_permutation(std::span<const index_t> table) {
    const index_t size = table.size();
    std::vector<char> seen(size, 0);
    for (index_t v : table) {
        if (v >= size || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Table compose(std::span<const index_t> a, std::span<const index_t> b) {
    Table c(b.size());
    const auto len = static_cast<std::int64_t>(b.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i) {
        c[static_cast<index_t>(i)] = a[b[static_cast<index_t>(i)]];
    }
    return c;
}

// Square-and-multiply over table composition: O(size * log e).
Table power(std::span<const index_t> table, std::uint64_t e) {
    Table result = identity_table(table.size());
    Table base(table.begin(), table.end());
    while (e > 0) {
        if (e & 1) result = compose(base, result);
        e >>= 1;
        if (e > 0) base = compose(base, base);
    }
    return result;
}

index_t count_fixed(std::span<const index_t> table) {
    const auto len = static_cast<std::int64_t>(table.size());
    index_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t i = 0; i < len; ++i) {
        if (table[static_cast<index_t>(i)] == static_cast<index_t>(i)) ++count;
    }
    return count;
}

// Contiguous per-thread chunks concatenated in chunk order keep the result
// ascending and deterministic.
std::vector<index_t> fixed_indices(std::span<const index_t> table) {
    const index_t size = table.size();
    const int nthreads = max_threads();
    std::vector<std::vector<index_t>> chunks(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        const auto t = static_cast<index_t>(thread_num());
        const auto nt = static_cast<index_t>(nthreads);
        const index_t lo = size / nt * t + std::min<index_t>(t, size % nt);
        const index_t hi = lo + size / nt + (t < size % nt ? 1 : 0);
        auto& mine = chunks[static_cast<std::size_t>(t)];
        for (index_t i = lo; i < hi; ++i) {
            if (table[i] == i) mine.push_back(i);
        }
    }
    std::vector<index_t> out;
    for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

namespace serial {

Table compose(std::span<const index_t> a, std::span<const index_t> b) {
    Table c(b.size());
    for (index_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Table power(std::span<const index_t> table, std::uint64_t e) {
    Table result = identity_table(table.size());
    Table base(table.begin(), table.end());
    while (e > 0) {
        if (e & 1) result = serial::compose(base, result);
        e >>= 1;
        if (e > 0) base = serial::compose(base, base);
    }
    return result;
}

index_t count_fixed(std::span<const index_t> table) {
    index_t count = 0;
    for (index_t i = 0; i < table.size(); ++i) {
        if (table[i] == i) ++count;
    }
    return count;
}

std::vector<index_t> fixed_indices(std::span<const index_t> table) {
    std::vector<index_t> out;
    for (index_t i = 0; i < table.size(); ++i) {
        if (table[i] == i) out.push_back(i);
    }
    return out;
}

}  // namespace serial
}  // namespace bkit::kernels
