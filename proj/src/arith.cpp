#include "bkit/arith.hpp"

#include <algorithm>
#include <numeric>

namespace bkit {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);  // std::gcd(0,n) == n, matching our convention
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t phi = n;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        phi -= phi / p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) phi -= phi / rest;
    return phi;
}

DivisorList divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return DivisorList{n, std::move(lo)};
}

Natural factorial(std::uint64_t k) {
    Natural f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
}

Natural pow_nat(const Natural& base, std::uint64_t exp) {
    Natural result = 1;
    Natural b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

Natural binomial(std::uint64_t m, std::int64_t r) {
    if (r < 0 || static_cast<std::uint64_t>(r) > m) return 0;
    std::uint64_t k = static_cast<std::uint64_t>(r);
    k = std::min(k, m - k);
    Natural result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= m - k + i;
        result /= i;  // exact: result is a binomial of the prefix
    }
    return result;
}

}  // namespace bkit
