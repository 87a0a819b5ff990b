#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bkit {

// Action sets are indexed extensionally: a permutation of {0,...,size-1} is
// stored as its image table.
using index_t = std::uint64_t;
using Table = std::vector<index_t>;

namespace kernels {

int max_threads();
int thread_num();

Table identity_table(index_t size);
bool is_permutation(std::span<const index_t> table);

// Data-parallel kernels over index tables. Each has a serial twin under
// kernels::serial used as the reference implementation in tests and in the
// benchmark; both compute identical results.
Table compose(std::span<const index_t> a, std::span<const index_t> b);  // c[i] = a[b[i]]
Table power(std::span<const index_t> table, std::uint64_t e);           // e-fold self-composition
index_t count_fixed(std::span<const index_t> table);
std::vector<index_t> fixed_indices(std::span<const index_t> table);     // ascending

namespace serial {
Table compose(std::span<const index_t> a, std::span<const index_t> b);
Table power(std::span<const index_t> table, std::uint64_t e);
index_t count_fixed(std::span<const index_t> table);
std::vector<index_t> fixed_indices(std::span<const index_t> table);
}  // namespace serial

// table[i] = f(i); f must be independent per index.
template <class F>
Table build_table(index_t size, F&& f) {
    Table t(size);
    const auto len = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i) {
        t[static_cast<index_t>(i)] = f(static_cast<index_t>(i));
    }
    return t;
}

namespace serial {
template <class F>
Table build_table(index_t size, F&& f) {
    Table t(size);
    for (index_t i = 0; i < size; ++i) t[i] = f(i);
    return t;
}
}  // namespace serial

// Exact sum of f(i) over [0, count). Per-thread partials, combined once;
// the combination order is irrelevant for exact integer types.
template <class T, class F>
T parallel_sum(std::uint64_t count, F&& f) {
    std::vector<T> partial(static_cast<std::size_t>(max_threads()));
    const auto len = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < len; ++i) {
        partial[static_cast<std::size_t>(thread_num())] += f(static_cast<std::uint64_t>(i));
    }
    T total{};
    for (auto& p : partial) total += p;
    return total;
}

}  // namespace kernels
}  // namespace bkit
