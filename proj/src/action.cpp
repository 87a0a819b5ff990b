#include "bkit/action.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

namespace bkit {

std::uint64_t default_action_budget() {
    if (const char* env = std::getenv("BURNSIDE_KIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

CyclicAction make_action(std::uint64_t n, Table generator_image, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("make_action: n must be positive");
    if (generator_image.size() > budget) {
        throw std::invalid_argument(
            "make_action: action size " + std::to_string(generator_image.size()) +
            " exceeds budget " + std::to_string(budget) +
            " (override with BURNSIDE_KIT_BUDGET)");
    }
    if (!kernels::is_permutation(generator_image)) {
        throw std::invalid_argument("make_action: generator image is not a permutation");
    }
    if (kernels::power(generator_image, n) != kernels::identity_table(generator_image.size())) {
        throw std::invalid_argument(
            "make_action: generator order does not divide n; not a Z_n action");
    }
    return CyclicAction{n, std::move(generator_image)};
}

Table element_permutation(const CyclicAction& action, std::uint64_t g) {
    if (g >= action.n) throw std::invalid_argument("element_permutation: g out of range");
    return kernels::power(action.generator_image, g);
}

FixedSet fixed_points(const CyclicAction& action, std::uint64_t g) {
    return FixedSet{g, kernels::fixed_indices(element_permutation(action, g))};
}

index_t fixed_point_count(const CyclicAction& action, std::uint64_t g) {
    return kernels::count_fixed(element_permutation(action, g));
}

index_t orbit_count_direct(const CyclicAction& action) {
    // Z_n is generated by 1, so orbits are exactly the cycles of the
    // generator permutation. Mark-and-sweep over cycles.
    const Table& gen = action.generator_image;
    std::vector<char> visited(gen.size(), 0);
    index_t orbits = 0;
    for (index_t i = 0; i < gen.size(); ++i) {
        if (visited[i]) continue;
        ++orbits;
        for (index_t j = i; !visited[j]; j = gen[j]) visited[j] = 1;
    }
    return orbits;
}

index_t orbit_count_burnside(const CyclicAction& action) {
    // |X^g| depends only on d = gcd(g,n); phi(n/d) elements share each d.
    Natural sum = 0;
    for (std::uint64_t d : divisors(action.n).divisors) {
        sum += Natural(euler_phi(action.n / d)) *
               kernels::count_fixed(kernels::power(action.generator_image, d));
    }
    if (sum % action.n != 0) {
        throw consistency_error(
            "orbit_count_burnside: fixed-point sum not divisible by n=" +
            std::to_string(action.n) + " (sum=" + sum.str() + ")");
    }
    return static_cast<index_t>(Natural(sum / action.n));
}

bool gcd_collapse_check(const CyclicAction& action) {
    for (std::uint64_t g = 0; g < action.n; ++g) {
        if (fixed_points(action, g).indices !=
            fixed_points(action, gcd(g, action.n) % action.n).indices) {
            return false;
        }
    }
    return true;
}

CyclicAction make_random_action(std::uint64_t n, index_t size, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("make_random_action: n must be positive");
    std::mt19937_64 rng(seed);
    const auto divs = divisors(n).divisors;

    // Cycle structure: consecutive blocks, each a cycle whose length is a
    // divisor of n no larger than the remaining space.
    Table base(size);
    index_t at = 0;
    while (at < size) {
        std::vector<std::uint64_t> usable;
        for (std::uint64_t d : divs) {
            if (d <= size - at) usable.push_back(d);
        }
        const auto len = static_cast<index_t>(
            usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)]);
        for (index_t i = 0; i < len; ++i) base[at + i] = at + (i + 1) % len;
        at += len;
    }

    // Conjugate by a random relabeling; the cycle type (hence the order) is
    // preserved.
    Table relabel = kernels::identity_table(size);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Table gen(size);
    for (index_t i = 0; i < size; ++i) gen[relabel[i]] = relabel[base[i]];
    return make_action(n, std::move(gen), std::max<std::uint64_t>(size, 1));
}

}  // namespace bkit
