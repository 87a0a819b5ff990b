#include "bkit/theorems.hpp"

#include <string>

#include "bkit/kernels.hpp"

namespace bkit {

// --------------------------------- fermat ----------------------------------

Natural fermat_sum(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("fermat_sum: n must be positive");
    Natural sum = 0;
    for (std::uint64_t d : divisors(n).divisors) {
        sum += Natural(euler_phi(n / d)) * pow_nat(a, d);
    }
    return sum;
}

Natural necklace_count(std::uint64_t a, std::uint64_t n) {
    const Natural sum = fermat_sum(a, n);
    if (sum % n != 0) {
        throw consistency_error("necklace_count: sum " + sum.str() +
                                " not divisible by n=" + std::to_string(n));
    }
    return sum / n;
}

bool fermat_check(std::uint64_t a, std::uint64_t n) { return fermat_sum(a, n) % n == 0; }

bool corollary_fermat_check(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("corollary_fermat_check: p must be prime");
    const Natural ap = pow_nat(a, p);
    return (ap - a) % p == 0 && fermat_sum(a, p) % p == 0 &&
           (Natural(p - 1) * a + ap) % p == 0;
}

// --------------------------------- wilson ----------------------------------

Natural cycle_fixed_count(std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0 || n % d != 0) {
        throw std::invalid_argument("cycle_fixed_count: d must divide n");
    }
    const std::uint64_t q = n / d;
    return Natural(euler_phi(q)) * pow_nat(q, d - 1) * factorial(d - 1);
}

Natural wilson_sum(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("wilson_sum: n must be positive");
    Natural sum = 0;
    for (std::uint64_t d : divisors(n).divisors) {
        sum += euler_phi(n / d) * cycle_fixed_count(n, d);
    }
    return sum;
}

bool wilson_check(std::uint64_t n) { return wilson_sum(n) % n == 0; }

bool corollary_wilson_check(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("corollary_wilson_check: p must be prime");
    const Natural fact = factorial(p - 1);
    return (fact + 1) % p == 0 && wilson_sum(p) == Natural(p - 1) * (p - 1) + fact;
}

// ---------------------------------- lucas ----------------------------------

LucasParams lucas_params(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    if (n == 0) throw std::invalid_argument("lucas_params: n must be positive");
    return LucasParams{n, m, r, m / n, m % n, r / n, r % n};
}

namespace {

// C(m0, r0 + (n/d) j), with negative or too-large block counts giving 0.
Natural fixed_block_binomial(const LucasParams& p, std::uint64_t d, std::int64_t j) {
    const std::uint64_t step = p.n / d;
    if (j >= 0) {
        const std::uint64_t c = p.r0 + step * static_cast<std::uint64_t>(j);
        return c > p.m0 ? Natural(0) : binomial(p.m0, static_cast<std::int64_t>(c));
    }
    const std::uint64_t down = step * static_cast<std::uint64_t>(-j);
    if (down > p.r0) return 0;
    return binomial(p.m0, static_cast<std::int64_t>(p.r0 - down));
}

// Sum over alpha in N^d with sum(alpha) = s of prod_k C(M, alpha_k), parts
// capped at M (larger parts have binomial factor 0). Lexicographic descent
// with a running product.
Natural capped_product_sum(std::uint64_t M, std::uint64_t d, std::uint64_t s) {
    if (M == 0) return s == 0 ? 1 : 0;
    if (s / M > d || (s / M == d && s % M != 0)) return 0;  // s > M*d, overflow-safe
    std::vector<Natural> row(std::min(M, s) + 1);
    for (std::uint64_t t = 0; t < row.size(); ++t) row[t] = binomial(M, static_cast<std::int64_t>(t));
    Natural total = 0;
    auto rec = [&](auto&& self, std::uint64_t pos, std::uint64_t rem, const Natural& prod) -> void {
        if (pos + 1 == d) {
            if (rem <= M) total += prod * row[rem];
            return;
        }
        // Parts still to place can absorb at most (d - pos - 1) * M.
        const std::uint64_t tail = d - pos - 1;
        const std::uint64_t lo = rem / M > tail || (rem / M == tail && rem % M != 0)
                                     ? rem - tail * M
                                     : 0;
        for (std::uint64_t v = lo; v <= std::min(rem, M); ++v) {
            self(self, pos + 1, rem - v, Natural(prod * row[v]));
        }
    };
    rec(rec, 0, s, Natural(1));
    return total;
}

}  // namespace

Natural lucas_inner_sum(const LucasParams& p, std::uint64_t d) {
    if (d == 0 || p.n % d != 0) throw std::invalid_argument("lucas_inner_sum: d must divide n");
    // j ranges over -(d-1), ..., d-1.
    return kernels::parallel_sum<Natural>(2 * d - 1, [&](std::uint64_t jx) -> Natural {
        const auto j = static_cast<std::int64_t>(jx) - static_cast<std::int64_t>(d - 1);
        const Natural blocks = fixed_block_binomial(p, d, j);
        if (blocks == 0) return 0;
        if (j > 0 && p.R * d < static_cast<std::uint64_t>(j)) return 0;  // d*R - j < 0
        const std::uint64_t s =
            j >= 0 ? p.R * d - static_cast<std::uint64_t>(j) : p.R * d + static_cast<std::uint64_t>(-j);
        return capped_product_sum(p.M, d, s) * blocks;
    });
}

Natural lucas_inner_sum_literal(const LucasParams& p, std::uint64_t d) {
    if (d == 0 || p.n % d != 0) {
        throw std::invalid_argument("lucas_inner_sum_literal: d must divide n");
    }
    Natural total = 0;
    for (std::int64_t j = -static_cast<std::int64_t>(d - 1);
         j <= static_cast<std::int64_t>(d - 1); ++j) {
        const Natural blocks = fixed_block_binomial(p, d, j);
        if (j > 0 && p.R * d < static_cast<std::uint64_t>(j)) continue;  // no compositions of a negative sum
        const std::uint64_t s = j >= 0 ? p.R * d - static_cast<std::uint64_t>(j)
                                       : p.R * d + static_cast<std::uint64_t>(-j);
        Natural inner = 0;
        for_each_composition(s, d, s, [&](std::span<const std::uint64_t> parts) {
            Natural prod = 1;
            for (std::uint64_t part : parts) {
                prod *= binomial(p.M, static_cast<std::int64_t>(part));
            }
            inner += prod;
        });
        total += inner * blocks;
    }
    return total;
}

Natural lucas_sum(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    const LucasParams p = lucas_params(n, m, r);
    Natural sum = 0;
    for (std::uint64_t d : divisors(n).divisors) {
        sum += euler_phi(n / d) * lucas_inner_sum(p, d);
    }
    return sum;
}

bool lucas_check(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    const LucasParams p = lucas_params(n, m, r);
    const Natural whole = lucas_inner_sum(p, n);
    const Natural direct = binomial(m, static_cast<std::int64_t>(r));
    if (whole != direct) {
        throw consistency_error("lucas_check: inner sum at d=n is " + whole.str() +
                                " but C(m,r)=" + direct.str());
    }
    return lucas_sum(n, m, r) % n == 0;
}

std::uint64_t lucas_prime_reduce(std::uint64_t p, std::uint64_t m, std::uint64_t r) {
    if (!is_prime(p)) throw std::invalid_argument("lucas_prime_reduce: p must be prime");
    Natural res = 1;
    while (m > 0 || r > 0) {
        res = res * binomial(m % p, static_cast<std::int64_t>(r % p)) % p;
        m /= p;
        r /= p;
    }
    return static_cast<std::uint64_t>(res);
}

}  // namespace bkit
