#pragma once

#include <cstdint>
#include <vector>

#include "bkit/arith.hpp"
#include "bkit/kernels.hpp"

namespace bkit {

// Default element-count cap for extensional actions; oracle enumeration is
// exponential in its parameters, so the cap makes failure modes explicit.
// Overridable through the BURNSIDE_KIT_BUDGET environment variable
// (decimal element count).
std::uint64_t default_action_budget();

// An action of Z_n on a finite indexed set, stored extensionally as the
// image table of the generator 1. Valid instances satisfy:
//   - generator_image is a permutation of {0,...,size-1}
//   - its n-th power is the identity (the map Z_n -> Aut(X) is well defined)
// Construct through make_action, which enforces both; immutable afterwards
// and safe to share across threads.
struct CyclicAction {
    std::uint64_t n = 1;
    Table generator_image;

    index_t size() const { return generator_image.size(); }
};

struct FixedSet {
    std::uint64_t g = 0;
    std::vector<index_t> indices;  // ascending
};

// Validates and wraps a generator table; rejects non-permutations and
// permutations whose n-th power is not the identity ("not a Z_n action"),
// and sizes beyond the budget.
CyclicAction make_action(std::uint64_t n, Table generator_image,
                         std::uint64_t budget = default_action_budget());

// The permutation induced by g, i.e. the generator image iterated g times.
Table element_permutation(const CyclicAction& action, std::uint64_t g);

// Exact fixed set X^g; rejects g >= n.
FixedSet fixed_points(const CyclicAction& action, std::uint64_t g);
index_t fixed_point_count(const CyclicAction& action, std::uint64_t g);

// Orbit count by traversal and marking; makes no use of the counting formula.
index_t orbit_count_direct(const CyclicAction& action);

// Orbit count as (1/n) * sum over d|n of phi(n/d) * |X^d|. The division must
// be exact; an inexact division throws consistency_error (it would falsify
// the counting identity and indicates a broken action or an engine bug).
index_t orbit_count_burnside(const CyclicAction& action);

// True iff X^g = X^gcd(g,n) as sets for every g. This is a theorem for any
// valid action; the engine keeps the naive per-g path so the check does not
// assume what it verifies.
bool gcd_collapse_check(const CyclicAction& action);

// Pseudorandom valid action: a product of cycles whose lengths divide n,
// conjugated by a random permutation. Deterministic in the seed.
CyclicAction make_random_action(std::uint64_t n, index_t size, std::uint64_t seed);

}  // namespace bkit
