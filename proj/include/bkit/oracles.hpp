#pragma once

#include <iosfwd>
#include <span>
#include <utility>

#include "bkit/action.hpp"

namespace bkit {

// ---------------------------------------------------------------------------
// Words: Z_n acting on X = A^n, A = {1,...,a}, by cyclic coordinate shifts.
// Index codec: base-a digits of the index, position 1 most significant,
// entry = digit + 1. The generator moves the entry at position t to
// position t+1 (mod n); fixed counts are direction-invariant, the direction
// is pinned for golden tests.
// ---------------------------------------------------------------------------

std::vector<std::uint64_t> word_of_index(std::uint64_t a, std::uint64_t n, index_t i);
index_t index_of_word(std::uint64_t a, std::span<const std::uint64_t> entries);

CyclicAction words_action(std::uint64_t a, std::uint64_t n,
                          std::uint64_t budget = default_action_budget());

// ---------------------------------------------------------------------------
// Cycles: Z_n acting on the (n-1)! cycles of length n by entrywise addition,
// g(a_1,...,a_n) = (a_1+g,...,a_n+g) mod n. A cycle is stored canonically as
// a sequence of all residues mod n rotated so the leading entry is 0; the
// remaining entries form a permutation of {1,...,n-1} whose lexicographic
// rank is the action index.
// ---------------------------------------------------------------------------

struct CanonicalCycle {
    std::vector<std::uint64_t> entries;  // permutation of {0,...,n-1}, entries[0] == 0

    bool operator==(const CanonicalCycle&) const = default;
};

// Validates that entries are a permutation of {0,...,n-1} and rotates the
// sequence so the leading entry is 0.
CanonicalCycle canonicalize_cycle(std::vector<std::uint64_t> entries);

// Entrywise +g mod n, re-canonicalized.
CanonicalCycle translate_cycle(const CanonicalCycle& c, std::uint64_t g, std::uint64_t n);

index_t index_of_cycle(const CanonicalCycle& c);
CanonicalCycle cycle_of_index(std::uint64_t n, index_t i);

CyclicAction cycles_action(std::uint64_t n, std::uint64_t budget = default_action_budget());

// The block-structured cycle (0, a_2,..., a_d, g, a_2+g,..., a_d+g, ...,
// ((n/d)-1)g, ..., a_d+((n/d)-1)g), arithmetic mod n. Requires gcd(g,n) = d
// and that {0, a_2, ..., a_d} hit pairwise distinct residues mod d (a
// complete set of coset representatives of Z_n/<d>). These cycles are
// exactly the ones fixed by the elements of the subgroup <d>.
CanonicalCycle periodic_cycle(std::uint64_t n, std::uint64_t d, std::uint64_t g,
                              std::span<const std::uint64_t> reps);

// The elements of Z_n fixing c under translation, ascending.
std::vector<std::uint64_t> cycle_stabilizer(const CanonicalCycle& c, std::uint64_t n);

// ---------------------------------------------------------------------------
// Subsets: Z_n acting on the r-subsets of the block universe
//   A = A_1 u ... u A_n u B,  A_k = {(k,1),...,(k,M)},  B = {(0,1),...,(0,m0)}
// where m = M*n + m0. The generator rotates blocks A_1 -> A_2 -> ... -> A_n
// -> A_1 and fixes B pointwise. Elements are numbered B first, then A_1..A_n;
// subsets are indexed by lexicographic rank of their sorted element lists.
// ---------------------------------------------------------------------------

struct BlockUniverse {
    std::uint64_t n = 1;  // number of rotating blocks
    std::uint64_t M = 0;  // block height
    std::uint64_t m0 = 0; // size of the fixed block B

    std::uint64_t total() const { return n * M + m0; }
};

BlockUniverse block_universe(std::uint64_t n, std::uint64_t m);

std::pair<std::uint64_t, std::uint64_t> element_of_id(const BlockUniverse& u, std::uint64_t id);
std::uint64_t id_of_element(const BlockUniverse& u, std::uint64_t k, std::uint64_t x);
std::uint64_t rotate_element(const BlockUniverse& u, std::uint64_t id);

std::vector<std::uint64_t> subset_of_index(std::uint64_t m, std::uint64_t r, index_t rank);
index_t index_of_subset(std::uint64_t m, std::uint64_t r, std::span<const std::uint64_t> ids);

CyclicAction subsets_action(std::uint64_t n, std::uint64_t m, std::uint64_t r,
                            std::uint64_t budget = default_action_budget());

// ---------------------------------------------------------------------------

// |fixed_points(action, d)| for a divisor element d of Z_n; rejects d not
// dividing n. d = n addresses the identity (gcd(0,n) = n convention).
index_t brute_fixed_count(const CyclicAction& action, std::uint64_t d);

// Table dump for cross-language differential testing:
//   n=<n> size=<size>
//   i -> j          (one line per index)
void dump_action(const CyclicAction& action, std::ostream& os);

}  // namespace bkit
