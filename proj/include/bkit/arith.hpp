#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bkit {

// All theorem sums, factorials and binomials are computed exactly in Natural;
// values are reduced mod n only at the final divisibility check.
using Natural = boost::multiprecision::cpp_int;

// Thrown when an identity that must hold by theorem fails at runtime
// (e.g. an inexact orbit-count division).  Indicates a broken action
// or an engine bug, never bad user input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// gcd with the convention gcd(0,n) = n, so the identity of Z_n is handled
// uniformly as the element with divisor d = n.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Trial division. Only used to validate inputs of the prime-case corollaries.
bool is_prime(std::uint64_t n);

// Euler totient via trial-division factorization; rejects n = 0.
std::uint64_t euler_phi(std::uint64_t n);

struct DivisorList {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> divisors;  // ascending, starts at 1, ends at n
};

// All positive divisors of n, ascending; rejects n = 0.
DivisorList divisors(std::uint64_t n);

// Exact k!; factorial(0) = 1.
Natural factorial(std::uint64_t k);

// Exact base^exp over Natural.
Natural pow_nat(const Natural& base, std::uint64_t exp);

// Exact binomial coefficient, with binomial(m,r) = 0 when r < 0 or r > m.
// The r < 0 extension matters: block-count arguments of the form
// r0 + (n/d)*j can go negative and those terms must vanish.
Natural binomial(std::uint64_t m, std::int64_t r);

}  // namespace bkit
