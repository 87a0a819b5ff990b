#include "bkit/oracles.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace bkit {

namespace {

// Checked conversion of an exact Natural size against the action budget.
index_t checked_size(const Natural& size, std::uint64_t budget, const char* who) {
    if (size > budget) {
        throw std::invalid_argument(std::string(who) + ": action size " + size.str() +
                                    " exceeds budget " + std::to_string(budget) +
                                    " (override with BURNSIDE_KIT_BUDGET)");
    }
    return static_cast<index_t>(size);
}

}  // namespace

// --------------------------------- words ----------------------------------

std::vector<std::uint64_t> word_of_index(std::uint64_t a, std::uint64_t n, index_t i) {
    if (a == 0) throw std::invalid_argument("word_of_index: empty alphabet");
    std::vector<std::uint64_t> entries(n);
    for (std::uint64_t t = n; t-- > 0;) {
        entries[t] = i % a + 1;
        i /= a;
    }
    if (i != 0) throw std::invalid_argument("word_of_index: index out of range");
    return entries;
}

index_t index_of_word(std::uint64_t a, std::span<const std::uint64_t> entries) {
    index_t i = 0;
    for (std::uint64_t e : entries) {
        if (e < 1 || e > a) throw std::invalid_argument("index_of_word: entry out of alphabet");
        i = i * a + (e - 1);
    }
    return i;
}

CyclicAction words_action(std::uint64_t a, std::uint64_t n, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("words_action: n must be positive");
    const index_t size = checked_size(pow_nat(a, n), budget, "words_action");
    if (size == 0) return make_action(n, Table{}, budget);
    // Moving entry t to position t+1 rotates the digit string right:
    // the least significant digit becomes the most significant one.
    const index_t msd = size / a;
    return make_action(
        n, kernels::build_table(size, [a, msd](index_t i) { return i % a * msd + i / a; }),
        budget);
}

// --------------------------------- cycles ---------------------------------

CanonicalCycle canonicalize_cycle(std::vector<std::uint64_t> entries) {
    const std::uint64_t n = entries.size();
    if (n == 0) throw std::invalid_argument("canonicalize_cycle: empty cycle");
    std::vector<char> seen(n, 0);
    for (std::uint64_t e : entries) {
        if (e >= n || seen[e]) {
            throw std::invalid_argument("canonicalize_cycle: entries are not a permutation of residues");
        }
        seen[e] = 1;
    }
    auto zero = std::find(entries.begin(), entries.end(), 0);
    std::rotate(entries.begin(), zero, entries.end());
    return CanonicalCycle{std::move(entries)};
}

CanonicalCycle translate_cycle(const CanonicalCycle& c, std::uint64_t g, std::uint64_t n) {
    std::vector<std::uint64_t> entries(c.entries);
    for (auto& e : entries) e = (e + g) % n;
    auto zero = std::find(entries.begin(), entries.end(), 0);
    std::rotate(entries.begin(), zero, entries.end());
    return CanonicalCycle{std::move(entries)};
}

index_t index_of_cycle(const CanonicalCycle& c) {
    // Lexicographic rank of (a_2,...,a_n) among permutations of {1,...,n-1}.
    const std::uint64_t n = c.entries.size();
    index_t rank = 0;
    Natural place = factorial(n >= 2 ? n - 2 : 0);
    std::vector<std::uint64_t> remaining;
    for (std::uint64_t v = 1; v < n; ++v) remaining.push_back(v);
    for (std::uint64_t pos = 1; pos < n; ++pos) {
        auto it = std::find(remaining.begin(), remaining.end(), c.entries[pos]);
        rank += static_cast<index_t>(it - remaining.begin()) * static_cast<index_t>(place);
        remaining.erase(it);
        if (!remaining.empty()) place /= remaining.size();
    }
    return rank;
}

CanonicalCycle cycle_of_index(std::uint64_t n, index_t i) {
    std::vector<std::uint64_t> entries{0};
    std::vector<std::uint64_t> remaining;
    for (std::uint64_t v = 1; v < n; ++v) remaining.push_back(v);
    Natural place = factorial(n >= 2 ? n - 2 : 0);
    while (!remaining.empty()) {
        const auto p = static_cast<index_t>(place);
        const std::size_t pick = i / p;
        if (pick >= remaining.size()) throw std::invalid_argument("cycle_of_index: index out of range");
        entries.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        i %= p;
        if (!remaining.empty()) place /= remaining.size();
    }
    if (i != 0) throw std::invalid_argument("cycle_of_index: index out of range");
    return CanonicalCycle{std::move(entries)};
}

CyclicAction cycles_action(std::uint64_t n, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("cycles_action: n must be positive");
    const index_t size = checked_size(factorial(n - 1), budget, "cycles_action");
    return make_action(n,
                       kernels::build_table(size,
                                            [n](index_t i) {
                                                return index_of_cycle(
                                                    translate_cycle(cycle_of_index(n, i), 1, n));
                                            }),
                       budget);
}

CanonicalCycle periodic_cycle(std::uint64_t n, std::uint64_t d, std::uint64_t g,
                              std::span<const std::uint64_t> reps) {
    if (n == 0 || g >= n) throw std::invalid_argument("periodic_cycle: g out of range");
    if (gcd(g, n) != d) throw std::invalid_argument("periodic_cycle: gcd(g,n) != d");
    if (reps.size() + 1 != d) throw std::invalid_argument("periodic_cycle: needs d-1 representatives");
    // 0, a_2, ..., a_d must represent pairwise distinct residues mod d.
    std::vector<char> used(d, 0);
    used[0] = 1;
    for (std::uint64_t a : reps) {
        if (a >= n || used[a % d]) {
            throw std::invalid_argument("periodic_cycle: not a complete set of coset representatives");
        }
        used[a % d] = 1;
    }
    std::vector<std::uint64_t> entries;
    entries.reserve(n);
    std::uint64_t jg = 0;
    for (std::uint64_t j = 0; j < n / d; ++j) {
        entries.push_back(jg);
        for (std::uint64_t a : reps) entries.push_back((a + jg) % n);
        jg = (jg + g) % n;
    }
    auto cycle = canonicalize_cycle(std::move(entries));
    if (cycle.entries[0] != 0) throw consistency_error("periodic_cycle: block construction broke canonical form");
    return cycle;
}

std::vector<std::uint64_t> cycle_stabilizer(const CanonicalCycle& c, std::uint64_t n) {
    std::vector<std::uint64_t> fixers;
    for (std::uint64_t g = 0; g < n; ++g) {
        if (translate_cycle(c, g, n) == c) fixers.push_back(g);
    }
    return fixers;
}

// --------------------------------- subsets --------------------------------

BlockUniverse block_universe(std::uint64_t n, std::uint64_t m) {
    if (n == 0) throw std::invalid_argument("block_universe: n must be positive");
    return BlockUniverse{n, m / n, m % n};
}

std::pair<std::uint64_t, std::uint64_t> element_of_id(const BlockUniverse& u, std::uint64_t id) {
    if (id >= u.total()) throw std::invalid_argument("element_of_id: id out of range");
    if (id < u.m0) return {0, id + 1};
    return {(id - u.m0) / u.M + 1, (id - u.m0) % u.M + 1};
}

std::uint64_t id_of_element(const BlockUniverse& u, std::uint64_t k, std::uint64_t x) {
    if (k > u.n || x == 0 || x > (k == 0 ? u.m0 : u.M)) {
        throw std::invalid_argument("id_of_element: no such element");
    }
    return k == 0 ? x - 1 : u.m0 + (k - 1) * u.M + (x - 1);
}

std::uint64_t rotate_element(const BlockUniverse& u, std::uint64_t id) {
    if (id < u.m0) return id;                    // B is fixed pointwise
    const std::uint64_t k = (id - u.m0) / u.M;   // block A_{k+1}, zero-based k
    return k + 1 < u.n ? id + u.M : id - (u.n - 1) * u.M;
}

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;

// Saturating Pascal table with clipped column range. Subset rank/unrank only
// ever evaluates C(k,j) with min(j, k-j) <= min(r-1, m-r), and every such
// value counts a class of subsets below the total C(m,r), so clipped and
// saturated entries are never touched for in-budget actions.
class BinomTable {
public:
    BinomTable(std::uint64_t m, std::uint64_t r)
        : cap_(std::min(r == 0 ? 0 : r - 1, m - r) + 1), t_((m + 1) * (cap_ + 1), 0) {
        for (std::uint64_t k = 0; k <= m; ++k) {
            at_mut(k, 0) = 1;
            for (std::uint64_t j = 1; j <= std::min(k, cap_); ++j) {
                const std::uint64_t s = at(k - 1, j - 1) + (j <= k - 1 ? at_raw(k - 1, j) : 0);
                at_mut(k, j) = std::min(s, kSaturated);
            }
        }
    }

    std::uint64_t at(std::uint64_t k, std::uint64_t j) const {
        if (j > k) return 0;
        j = std::min(j, k - j);
        return at_raw(k, j);
    }

private:
    std::uint64_t at_raw(std::uint64_t k, std::uint64_t j) const {
        return j > cap_ ? kSaturated : t_[k * (cap_ + 1) + j];
    }
    std::uint64_t& at_mut(std::uint64_t k, std::uint64_t j) { return t_[k * (cap_ + 1) + j]; }

    std::uint64_t cap_;
    std::vector<std::uint64_t> t_;
};

std::vector<std::uint64_t> unrank_subset(const BinomTable& bt, std::uint64_t m, std::uint64_t r,
                                         index_t rank) {
    std::vector<std::uint64_t> ids;
    ids.reserve(r);
    std::uint64_t v = 0;
    for (std::uint64_t i = 0; i < r; ++i) {
        for (;; ++v) {
            if (v >= m) throw std::invalid_argument("subset_of_index: rank out of range");
            const std::uint64_t c = bt.at(m - 1 - v, r - 1 - i);
            if (rank < c) break;
            rank -= c;
        }
        ids.push_back(v++);
    }
    if (rank != 0) throw std::invalid_argument("subset_of_index: rank out of range");
    return ids;
}

index_t rank_subset(const BinomTable& bt, std::uint64_t m, std::uint64_t r,
                    std::span<const std::uint64_t> ids) {
    index_t rank = 0;
    std::uint64_t lo = 0;
    for (std::uint64_t i = 0; i < r; ++i) {
        for (std::uint64_t v = lo; v < ids[i]; ++v) rank += bt.at(m - 1 - v, r - 1 - i);
        lo = ids[i] + 1;
    }
    return rank;
}

void validate_subset(std::uint64_t m, std::uint64_t r, std::span<const std::uint64_t> ids) {
    if (ids.size() != r) throw std::invalid_argument("index_of_subset: wrong subset size");
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= m || (i > 0 && ids[i] <= ids[i - 1])) {
            throw std::invalid_argument("index_of_subset: ids must be ascending and in range");
        }
    }
}

}  // namespace

std::vector<std::uint64_t> subset_of_index(std::uint64_t m, std::uint64_t r, index_t rank) {
    if (r > m) throw std::invalid_argument("subset_of_index: r > m, no subsets exist");
    return unrank_subset(BinomTable(m, r), m, r, rank);
}

index_t index_of_subset(std::uint64_t m, std::uint64_t r, std::span<const std::uint64_t> ids) {
    if (r > m) throw std::invalid_argument("index_of_subset: r > m, no subsets exist");
    validate_subset(m, r, ids);
    return rank_subset(BinomTable(m, r), m, r, ids);
}

CyclicAction subsets_action(std::uint64_t n, std::uint64_t m, std::uint64_t r,
                            std::uint64_t budget) {
    const BlockUniverse u = block_universe(n, m);
    const index_t size = checked_size(binomial(m, static_cast<std::int64_t>(r)), budget,
                                      "subsets_action");
    if (size == 0) return make_action(n, Table{}, budget);
    const BinomTable bt(m, r);
    return make_action(n,
                       kernels::build_table(size,
                                            [&](index_t i) {
                                                auto ids = unrank_subset(bt, m, r, i);
                                                for (auto& id : ids) id = rotate_element(u, id);
                                                std::sort(ids.begin(), ids.end());
                                                return rank_subset(bt, m, r, ids);
                                            }),
                       budget);
}

// ---------------------------------------------------------------------------

index_t brute_fixed_count(const CyclicAction& action, std::uint64_t d) {
    if (d == 0 || d > action.n || action.n % d != 0) {
        throw std::invalid_argument("brute_fixed_count: d does not divide n");
    }
    return fixed_point_count(action, d % action.n);
}

void dump_action(const CyclicAction& action, std::ostream& os) {
    os << "n=" << action.n << " size=" << action.size() << '\n';
    for (index_t i = 0; i < action.size(); ++i) {
        os << i << " -> " << action.generator_image[i] << '\n';
    }
}

}  // namespace bkit
