#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "bkit/oracles.hpp"
#include "bkit/theorems.hpp"
#include "testutil.hpp"

using namespace bkit;

// ----------------------------------- words ----------------------------------

TEST_CASE("word codec round trip and validation") {
    CHECK(word_of_index(2, 3, 2) == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(index_of_word(2, std::vector<std::uint64_t>{1, 2, 1}) == 2);
    for (index_t i = 0; i < 81; ++i) {
        CHECK(index_of_word(3, word_of_index(3, 4, i)) == i);
    }
    CHECK_THROWS_AS(word_of_index(2, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(index_of_word(2, std::vector<std::uint64_t>{0}), std::invalid_argument);
    CHECK_THROWS_AS(index_of_word(2, std::vector<std::uint64_t>{3}), std::invalid_argument);
}

TEST_CASE("words action golden tables pin the rotation direction") {
    CHECK(words_action(2, 2).generator_image == Table{0, 2, 1, 3});
    CHECK(words_action(2, 3).generator_image == Table{0, 4, 1, 5, 2, 6, 3, 7});
}

TEST_CASE("words action edge cases") {
    const CyclicAction one = words_action(1, 5);
    CHECK(one.size() == 1);
    CHECK(orbit_count_direct(one) == 1);
    CHECK(words_action(0, 3).size() == 0);

    const CyclicAction words = words_action(2, 4);
    CHECK(words.size() == 16);
    CHECK(orbit_count_direct(words) == 6);
    CHECK(fixed_point_count(words, 1) == 2);
    CHECK(fixed_point_count(words, 3) == 2);
}

TEST_CASE("words fixed-count law |X^d| = a^d") {
    for (std::uint64_t a = 0; a <= 3; ++a) {
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const CyclicAction action = words_action(a, n);
            for (std::uint64_t d : divisors(n).divisors) {
                CHECK(Natural(brute_fixed_count(action, d)) == pow_nat(a, d));
            }
        }
    }
}

// ---------------------------------- cycles ----------------------------------

TEST_CASE("canonicalize and translate cycles") {
    CHECK(canonicalize_cycle({2, 0, 1}).entries == std::vector<std::uint64_t>{0, 1, 2});
    CHECK_THROWS_AS(canonicalize_cycle({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_cycle({0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_cycle({}), std::invalid_argument);

    const CanonicalCycle c = canonicalize_cycle({0, 2, 1, 3});
    CHECK(translate_cycle(c, 0, 4) == c);
    CHECK(translate_cycle(c, 1, 4).entries == std::vector<std::uint64_t>{0, 1, 3, 2});
}

TEST_CASE("cycle codec enumerates canonical cycles in lexicographic order") {
    for (std::uint64_t n = 1; n <= 7; ++n) {
        const auto naive = testutil::all_canonical_cycles(n);
        for (index_t i = 0; i < naive.size(); ++i) {
            const CanonicalCycle c = cycle_of_index(n, i);
            CHECK(c.entries == naive[i]);
            CHECK(index_of_cycle(c) == i);
        }
        CHECK_THROWS_AS(cycle_of_index(n, naive.size()), std::invalid_argument);
    }
}

TEST_CASE("cycles action basics") {
    const CyclicAction two = cycles_action(2);
    CHECK(two.size() == 1);
    CHECK(fixed_point_count(two, 0) == 1);
    CHECK(fixed_point_count(two, 1) == 1);

    CHECK(cycles_action(9).size() == 40320);

    const CyclicAction six = cycles_action(6);
    CHECK(fixed_point_count(six, 3) == 8);  // phi(2) * 2^2 * 2!
    CHECK(fixed_point_count(six, 3) == testutil::naive_cycle_fixed_count(6, 3));
}

TEST_CASE("cycles fixed-count law matches the closed form") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const CyclicAction action = cycles_action(n);
        for (std::uint64_t d : divisors(n).divisors) {
            CHECK(Natural(brute_fixed_count(action, d)) == cycle_fixed_count(n, d));
            CHECK(brute_fixed_count(action, d) == testutil::naive_cycle_fixed_count(n, d % n));
        }
    }
}

TEST_CASE("periodic cycle reproduces the worked 12-cycle") {
    const std::vector<std::uint64_t> reps{9, 6, 3};
    const CanonicalCycle pi = periodic_cycle(12, 4, 8, reps);
    CHECK(pi.entries == std::vector<std::uint64_t>{0, 9, 6, 3, 8, 5, 2, 11, 4, 1, 10, 7});
    CHECK(cycle_stabilizer(pi, 12) == std::vector<std::uint64_t>{0, 4, 8});
}

TEST_CASE("periodic cycle degenerate block structure at d = n") {
    for (std::uint64_t n : {1, 2, 5, 8}) {
        std::vector<std::uint64_t> reps;
        for (std::uint64_t v = 1; v < n; ++v) reps.push_back(v);
        const CanonicalCycle c = periodic_cycle(n, n, 0, reps);
        std::vector<std::uint64_t> expect;
        for (std::uint64_t v = 0; v < n; ++v) expect.push_back(v);
        CHECK(c.entries == expect);
    }
}

TEST_CASE("periodic cycle validation") {
    CHECK_THROWS_AS(periodic_cycle(12, 4, 6, std::vector<std::uint64_t>{9, 6, 3}),
                    std::invalid_argument);  // gcd(6,12) = 6, not 4
    CHECK_THROWS_AS(periodic_cycle(12, 4, 8, std::vector<std::uint64_t>{9, 6}),
                    std::invalid_argument);  // wrong arity
    CHECK_THROWS_AS(periodic_cycle(12, 4, 8, std::vector<std::uint64_t>{9, 5, 3}),
                    std::invalid_argument);  // 9 and 5 collide mod 4
    CHECK_THROWS_AS(periodic_cycle(12, 4, 8, std::vector<std::uint64_t>{8, 6, 3}),
                    std::invalid_argument);  // 8 lies in the coset of 0
    CHECK_THROWS_AS(periodic_cycle(12, 4, 8, std::vector<std::uint64_t>{21, 6, 3}),
                    std::invalid_argument);  // 21 out of range
}

namespace {

// All ordered representative tuples (a_2,...,a_d): entries in [0,n) with
// pairwise distinct residues mod d, none in the residue class of 0.
void enumerate_rep_tuples(std::uint64_t n, std::uint64_t d,
                          std::vector<std::uint64_t>& tuple, std::vector<char>& used,
                          const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    if (tuple.size() + 1 == d) {
        fn(tuple);
        return;
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        if (v % d == 0 || used[v % d]) continue;
        used[v % d] = 1;
        tuple.push_back(v);
        enumerate_rep_tuples(n, d, tuple, used, fn);
        tuple.pop_back();
        used[v % d] = 0;
    }
}

}  // namespace

TEST_CASE("periodic cycles are exactly the fixed cycles, with the counted multiplicity") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const CyclicAction action = cycles_action(n);
        for (std::uint64_t d : divisors(n).divisors) {
            std::set<std::vector<std::uint64_t>> constructed;
            std::uint64_t produced = 0;
            for (std::uint64_t g = 0; g < n; ++g) {
                if (gcd(g, n) != d) continue;
                std::vector<std::uint64_t> tuple;
                std::vector<char> used(d, 0);
                enumerate_rep_tuples(n, d, tuple, used,
                                     [&](const std::vector<std::uint64_t>& reps) {
                                         constructed.insert(periodic_cycle(n, d, g, reps).entries);
                                         ++produced;
                                     });
            }
            std::set<std::vector<std::uint64_t>> fixed;
            for (index_t i : fixed_points(action, d % n).indices) {
                fixed.insert(cycle_of_index(n, i).entries);
            }
            const Natural expected = cycle_fixed_count(n, d);
            CHECK(Natural(produced) == expected);
            CHECK(Natural(constructed.size()) == expected);  // no two tuples collide
            CHECK(constructed == fixed);
        }
    }
}

// ---------------------------------- subsets ---------------------------------

TEST_CASE("block universe layout and rotation") {
    const BlockUniverse u = block_universe(2, 5);
    CHECK(u.M == 2);
    CHECK(u.m0 == 1);
    CHECK(u.total() == 5);
    CHECK(element_of_id(u, 0) == std::pair<std::uint64_t, std::uint64_t>{0, 1});
    CHECK(element_of_id(u, 1) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(element_of_id(u, 4) == std::pair<std::uint64_t, std::uint64_t>{2, 2});
    for (std::uint64_t id = 0; id < 5; ++id) {
        const auto [k, x] = element_of_id(u, id);
        CHECK(id_of_element(u, k, x) == id);
    }
    CHECK(rotate_element(u, 0) == 0);
    CHECK(rotate_element(u, 1) == 3);  // (1,1) -> (2,1)
    CHECK(rotate_element(u, 3) == 1);  // (2,1) -> (1,1)
    CHECK_THROWS_AS(element_of_id(u, 5), std::invalid_argument);
    CHECK_THROWS_AS(id_of_element(u, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(id_of_element(u, 0, 2), std::invalid_argument);
}

TEST_CASE("subset codec is the lexicographic order on sorted id lists") {
    for (std::uint64_t m = 0; m <= 8; ++m) {
        for (std::uint64_t r = 0; r <= m; ++r) {
            // enumerate r-subsets of [0,m) in lexicographic order directly
            std::vector<std::uint64_t> cur;
            for (std::uint64_t v = 0; v < r; ++v) cur.push_back(v);
            index_t rank = 0;
            for (;;) {
                CHECK(subset_of_index(m, r, rank) == cur);
                CHECK(index_of_subset(m, r, cur) == rank);
                ++rank;
                // advance to the next combination
                std::size_t i = r;
                while (i > 0 && cur[i - 1] == m - r + i - 1) --i;
                if (i == 0) break;
                ++cur[i - 1];
                for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
            }
            CHECK(Natural(rank) == binomial(m, static_cast<std::int64_t>(r)));
            CHECK_THROWS_AS(subset_of_index(m, r, rank), std::invalid_argument);
        }
    }
    CHECK_THROWS_AS(subset_of_index(3, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(index_of_subset(4, 2, std::vector<std::uint64_t>{2, 1}),
                    std::invalid_argument);
}

TEST_CASE("subsets action for (2,5,2)") {
    const CyclicAction action = subsets_action(2, 5, 2);
    CHECK(action.size() == 10);
    const FixedSet fixed = fixed_points(action, 1);
    CHECK(fixed.indices == std::vector<index_t>{5, 8});

    // the two fixed subsets pair equal heights across the two blocks
    const BlockUniverse u = block_universe(2, 5);
    using Elem = std::pair<std::uint64_t, std::uint64_t>;
    std::vector<std::vector<Elem>> decoded;
    for (index_t i : fixed.indices) {
        std::vector<Elem> subset;
        for (std::uint64_t id : subset_of_index(5, 2, i)) subset.push_back(element_of_id(u, id));
        decoded.push_back(subset);
    }
    CHECK(decoded[0] == std::vector<Elem>{{1, 1}, {2, 1}});
    CHECK(decoded[1] == std::vector<Elem>{{1, 2}, {2, 2}});

    CHECK(orbit_count_burnside(action) == 6);  // (2 + 10) / 2
    CHECK(orbit_count_direct(action) == 6);
}

TEST_CASE("subsets action edge cases") {
    const CyclicAction empty_subset = subsets_action(3, 7, 0);
    CHECK(empty_subset.size() == 1);
    for (std::uint64_t g = 0; g < 3; ++g) CHECK(fixed_point_count(empty_subset, g) == 1);

    CHECK(subsets_action(2, 3, 5).size() == 0);  // r > m
    CHECK(subsets_action(4, 3, 2).size() == 3);  // m < n: only the fixed block
}

TEST_CASE("subsets fixed counts equal the composition sums") {
    for (std::uint64_t n = 1; n <= 4; ++n) {
        for (std::uint64_t m = 0; m <= 10; ++m) {
            for (std::uint64_t r = 0; r <= m; ++r) {
                const CyclicAction action = subsets_action(n, m, r);
                const LucasParams params = lucas_params(n, m, r);
                for (std::uint64_t d : divisors(n).divisors) {
                    CHECK(Natural(brute_fixed_count(action, d)) == lucas_inner_sum(params, d));
                }
            }
        }
    }
}

// --------------------------------- plumbing ---------------------------------

TEST_CASE("brute_fixed_count validates the divisor and hits the identity at d=n") {
    const CyclicAction words = words_action(2, 4);
    CHECK(brute_fixed_count(words, 4) == words.size());
    CHECK(brute_fixed_count(words, 2) == 4);
    CHECK_THROWS_AS(brute_fixed_count(words, 3), std::invalid_argument);
    CHECK_THROWS_AS(brute_fixed_count(words, 0), std::invalid_argument);

    const CyclicAction cycles = cycles_action(6);
    CHECK(Natural(brute_fixed_count(cycles, 2)) == cycle_fixed_count(6, 2));
    CHECK(brute_fixed_count(cycles, 2) == 6);
}

TEST_CASE("all three oracle actions validate and collapse") {
    for (std::uint64_t n = 1; n <= 6; ++n) {
        CHECK(gcd_collapse_check(words_action(2, n)));
        CHECK(gcd_collapse_check(cycles_action(n)));
        CHECK(gcd_collapse_check(subsets_action(n, 7, 3)));
    }
}

TEST_CASE("size budget violations") {
    CHECK_THROWS_AS(words_action(2, 30), std::invalid_argument);
    CHECK_THROWS_AS(cycles_action(12), std::invalid_argument);
    CHECK_THROWS_AS(subsets_action(2, 30, 15), std::invalid_argument);
    CHECK_THROWS_AS(words_action(2, 3, 7), std::invalid_argument);
    CHECK_NOTHROW(words_action(2, 3, 8));
}

TEST_CASE("action table dump format") {
    std::ostringstream os;
    dump_action(words_action(2, 2), os);
    CHECK(os.str() == "n=2 size=4\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n");
}
