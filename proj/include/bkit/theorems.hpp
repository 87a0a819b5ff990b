#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bkit/arith.hpp"

namespace bkit {

// ---------------------------------------------------------------------------
// Fermat: sum over d|n of phi(n/d) * a^d is divisible by n; dividing by n
// counts the orbits of cyclic word rotation (necklaces).
// ---------------------------------------------------------------------------

Natural fermat_sum(std::uint64_t a, std::uint64_t n);
Natural necklace_count(std::uint64_t a, std::uint64_t n);  // fermat_sum / n, exact
bool fermat_check(std::uint64_t a, std::uint64_t n);

// Prime specialization a^p = a (mod p); rejects composite p. Also checks the
// two-divisor form (p-1)a + a^p = 0 (mod p).
bool corollary_fermat_check(std::uint64_t a, std::uint64_t p);

// ---------------------------------------------------------------------------
// Wilson: the element d of Z_n fixes exactly phi(n/d) (n/d)^(d-1) (d-1)!
// length-n cycles, and sum over d|n of phi(n/d)^2 (n/d)^(d-1) (d-1)! is
// divisible by n.
// ---------------------------------------------------------------------------

Natural cycle_fixed_count(std::uint64_t n, std::uint64_t d);  // rejects d not dividing n
Natural wilson_sum(std::uint64_t n);
bool wilson_check(std::uint64_t n);

// (p-1)! = -1 (mod p); rejects composite p. Also checks the two-divisor form
// wilson_sum(p) = (p-1)^2 + (p-1)!.
bool corollary_wilson_check(std::uint64_t p);

// ---------------------------------------------------------------------------
// Lucas: with m = M*n + m0 and r = R*n + r0 (division algorithm), the element
// of Z_n with gcd d fixes
//   |X^d| = sum_{j=-(d-1)}^{d-1} sum_{alpha in N^d, sum(alpha) = d*R - j}
//             C(M,alpha_1) ... C(M,alpha_d) * C(m0, r0 + (n/d) j)
// r-subsets of the block universe, and sum over d|n of phi(n/d) |X^d| is
// divisible by n. At d = n the inner sum collapses to C(m,r).
// ---------------------------------------------------------------------------

struct LucasParams {
    std::uint64_t n = 1;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    std::uint64_t M = 0, m0 = 0;  // m = M*n + m0, 0 <= m0 < n
    std::uint64_t R = 0, r0 = 0;  // r = R*n + r0, 0 <= r0 < n
};

LucasParams lucas_params(std::uint64_t n, std::uint64_t m, std::uint64_t r);

// Enumerates the compositions alpha in N^count with sum(alpha) = total and
// every part <= part_cap, in lexicographic order on (alpha_1,...,alpha_count).
// fn receives each tuple as a span valid only during the call.
template <class F>
void for_each_composition(std::uint64_t total, std::uint64_t count, std::uint64_t part_cap,
                          F&& fn) {
    if (count == 0) {
        if (total == 0) fn(std::span<const std::uint64_t>{});
        return;
    }
    std::vector<std::uint64_t> parts(count, 0);
    auto rec = [&](auto&& self, std::uint64_t pos, std::uint64_t rem) -> void {
        if (pos + 1 == count) {
            if (rem <= part_cap) {
                parts[pos] = rem;
                fn(std::span<const std::uint64_t>(parts));
            }
            return;
        }
        const std::uint64_t hi = std::min(rem, part_cap);
        for (std::uint64_t v = 0; v <= hi; ++v) {
            parts[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, total);
}

// |X^d| as above. Infeasible terms vanish through the binomial conventions;
// the default path prunes parts above M (their binomial factor is zero) and
// evaluates the j terms in parallel.
Natural lucas_inner_sum(const LucasParams& p, std::uint64_t d);

// Serial reference: the double sum taken literally, every composition of
// d*R - j enumerated with no pre-filtering. Must agree with lucas_inner_sum.
Natural lucas_inner_sum_literal(const LucasParams& p, std::uint64_t d);

Natural lucas_sum(std::uint64_t n, std::uint64_t m, std::uint64_t r);

// n | lucas_sum(n,m,r); additionally asserts the identity-element collapse
// lucas_inner_sum(params, n) == C(m,r), whose failure would be an engine bug
// (consistency_error).
bool lucas_check(std::uint64_t n, std::uint64_t m, std::uint64_t r);

// Product of digitwise binomials of the base-p digit expansions of m and r,
// mod p: iterates the single-step reduction C(m,r) = C(M,R) C(m0,r0) (mod p).
// Rejects composite p.
std::uint64_t lucas_prime_reduce(std::uint64_t p, std::uint64_t m, std::uint64_t r);

}  // namespace bkit
