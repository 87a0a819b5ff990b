#pragma once

// Independent brute-force oracles used to check the library. These
// deliberately avoid the library's index codecs and kernels: words and
// cycles are materialized as plain sequences and compared by value.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace testutil {

using Seq = std::vector<std::uint64_t>;

inline std::vector<Seq> all_words(std::uint64_t a, std::uint64_t n) {
    std::vector<Seq> words;
    Seq w(n, 1);
    for (;;) {
        words.push_back(w);
        std::uint64_t pos = n;
        while (pos > 0 && w[pos - 1] == a) w[--pos] = 1;
        if (pos == 0) break;
        ++w[pos - 1];
    }
    if (a == 0) words.clear();
    return words;
}

// One application of the generator: the entry at position t moves to t+1.
inline Seq rotate_word(const Seq& w) {
    Seq out(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) out[(t + 1) % w.size()] = w[t];
    return out;
}

inline std::uint64_t naive_word_fixed_count(std::uint64_t a, std::uint64_t n, std::uint64_t g) {
    std::uint64_t count = 0;
    for (const Seq& w : all_words(a, n)) {
        Seq shifted = w;
        for (std::uint64_t s = 0; s < g; ++s) shifted = rotate_word(shifted);
        if (shifted == w) ++count;
    }
    return count;
}

inline std::uint64_t naive_necklace_count(std::uint64_t a, std::uint64_t n) {
    std::set<Seq> classes;
    for (const Seq& w : all_words(a, n)) {
        Seq best = w, cur = w;
        for (std::uint64_t s = 1; s < n; ++s) {
            cur = rotate_word(cur);
            best = std::min(best, cur);
        }
        classes.insert(best);
    }
    return classes.size();
}

// All length-n cycles in canonical form: leading 0, remaining entries a
// permutation of {1,...,n-1}.
inline std::vector<Seq> all_canonical_cycles(std::uint64_t n) {
    Seq rest;
    for (std::uint64_t v = 1; v < n; ++v) rest.push_back(v);
    std::vector<Seq> cycles;
    do {
        Seq c{0};
        c.insert(c.end(), rest.begin(), rest.end());
        cycles.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return cycles;
}

inline Seq naive_translate_cycle(const Seq& c, std::uint64_t g, std::uint64_t n) {
    Seq shifted(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) shifted[i] = (c[i] + g) % n;
    auto zero = std::find(shifted.begin(), shifted.end(), std::uint64_t{0});
    std::rotate(shifted.begin(), zero, shifted.end());
    return shifted;
}

inline std::uint64_t naive_cycle_fixed_count(std::uint64_t n, std::uint64_t g) {
    std::uint64_t count = 0;
    for (const Seq& c : all_canonical_cycles(n)) {
        if (naive_translate_cycle(c, g, n) == c) ++count;
    }
    return count;
}

}  // namespace testutil
